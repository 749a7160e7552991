import pytest

from pascal_rays.errors import DomainError, InvariantViolation, UsageError
from pascal_rays.lattice import (
    Path,
    enumerate_paths,
    horizontal_distance,
    injection_phi,
    vertical_distance,
    verify_injectivity,
)

from oracles import C


def valid_instances(nmax=8, delta_max=3):
    for n in range(0, nmax + 1):
        for k in range(0, n + 1):
            for delta in range(1, delta_max + 1):
                for d in range(0, delta):
                    if 0 <= k - delta <= n - d and k + delta <= n + d:
                        yield n, k, d, delta


def test_enumerate_paths_examples():
    assert sorted(p.steps for p in enumerate_paths(2, 1)) == ["ES", "SE"]
    assert [p.steps for p in enumerate_paths(3, 0)] == ["SSS"]
    assert len(enumerate_paths(5, 2)) == 10
    assert enumerate_paths(2, 3) == []


def test_enumerate_paths_counts():
    for n in range(0, 13):
        for k in range(0, n + 1):
            paths = enumerate_paths(n, k)
            assert len(paths) == C(n, k)
            assert len({p.steps for p in paths}) == len(paths)


def test_path_endpoints():
    for p in enumerate_paths(6, 2):
        pts = p.points()
        assert pts[0] == (0, 4) and pts[-1] == (2, 0)


def test_path_rejects_bad_steps():
    with pytest.raises(DomainError):
        Path(3, 1, "EES")
    with pytest.raises(DomainError):
        Path(2, 1, "EX")


def test_distances():
    assert vertical_distance((2, 5), (2, 3)) == 2
    assert horizontal_distance((1, 4), (3, 4)) == -2
    with pytest.raises(UsageError):
        vertical_distance((1, 5), (2, 3))
    with pytest.raises(UsageError):
        horizontal_distance((1, 4), (3, 5))


def test_injection_small_case():
    # P(3, 2) x P(3, 0) into P(3, 1)^2
    res = verify_injectivity(3, 1, 0, 1)
    assert res.ok and res.domain_size == 3 == res.image_size
    assert res.codomain_size == 9


def test_injection_images_are_valid_paths():
    n, k, d, delta = 6, 3, 1, 2
    for p in enumerate_paths(n + d, k + delta):
        for q in enumerate_paths(n - d, k - delta):
            img = injection_phi(p, q, n, k, d, delta)
            for path in (img.first, img.second):
                assert (path.n, path.k) == (n, k)
                assert path.points()[0] == (0, n - k)


@pytest.mark.parametrize("inst,size", [
    ((4, 2, 1, 2), 5),
    ((6, 3, 1, 2), 105),
    ((8, 4, 2, 3), 720),
])
def test_injection_named_instances(inst, size):
    res = verify_injectivity(*inst)
    assert res and res.domain_size == res.image_size == size
    assert size == C(inst[0] + inst[2], inst[1] + inst[3]) * C(inst[0] - inst[2], inst[1] - inst[3])
    assert size <= res.codomain_size


def test_injection_grid():
    count = 0
    for inst in valid_instances():
        res = verify_injectivity(*inst)
        assert res.ok, (inst, res.witness)
        count += 1
    assert count == 95


def test_injection_domain_errors():
    with pytest.raises(DomainError):
        verify_injectivity(4, 2, 2, 1)
    with pytest.raises(DomainError):
        verify_injectivity(4, 1, 0, 2)
    p = enumerate_paths(5, 4)[0]
    with pytest.raises(DomainError):
        injection_phi(p, p, 4, 2, 1, 2)


def test_invariant_violation_is_an_exception_type():
    assert issubclass(InvariantViolation, Exception)
