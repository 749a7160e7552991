# coding: utf-8

# # Lattice paths and an injection
#
# P(n, k) holds the paths from (0, n - k) to (k, 0) with East and South
# steps. Log-concavity on transversals follows from an injection of
# P(n+d, k+delta) x P(n-d, k-delta) into P(n, k) x P(n, k).

from pascal_rays import enumerate_paths, injection_phi, verify_injectivity

print([p.steps for p in enumerate_paths(4, 2)])

n, k, d, delta = 4, 2, 1, 2
for p in enumerate_paths(n + d, k + delta):
    for q in enumerate_paths(n - d, k - delta):
        img = injection_phi(p, q, n, k, d, delta)
        print(p.steps, q.steps, "->", img.first.steps, img.second.steps)

# Brute force over the whole domain confirms there are no collisions.

res = verify_injectivity(8, 4, 2, 3)
print(res.ok, res.domain_size, res.image_size, res.codomain_size)
