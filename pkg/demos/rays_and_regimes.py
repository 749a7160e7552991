# coding: utf-8

# # Rays through the Pascal triangle
#
# A ray starts at C(n0, k0) and moves d rows down and delta columns right at
# every step. Everything here is exact integer arithmetic.

from pascal_rays import RayParams, generate, normalize, regime, subsequence

# The central binomial coefficients sit on the ray (0, 0, 2, 1).

central = generate(RayParams(0, 0, 2, 1), 0, 10)
print(central.values)

# Rows further down grow fast. Python ints just keep going.

print(generate(RayParams(0, 0, 2, 1), 150, 1).values[0])

# Negative differences are folded back into the canonical form d, delta >= 0.
# C(6 + 2i, 2 - i) is the same sequence as C(6 + 2i, 4 + 3i) by symmetry.

p = normalize(6, 2, 2, -1)
print(p, generate(p, 0, 3).values)

# A negative d needs a window: the window is read backwards.

q = normalize(10, 0, -1, 1, window=6)
print(q, generate(q, 0, 6).values)

# The regime depends on d and delta only.

for d, delta in [(3, 3), (4, 0), (1, 2), (2, 1)]:
    r = regime(RayParams(5, 2, d, delta))
    print((d, delta), r.tag.value, sorted(r.predicted))

# Every second term of a ray is again a ray.

print(subsequence(central, 1, 2).values[:4])
