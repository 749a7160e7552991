# coding: utf-8

# # The polynomial behind steep rays
#
# For d > delta > 0 the sign of C_{i+1} C_{i-1} - C_i^2 agrees with a
# polynomial P(i) of degree 2d - 2 whose top coefficient is 1/2.

from pascal_rays import RayParams, build_P, delta_value, first_positive_tail
from pascal_rays import interleaving_check, q_value

ray = RayParams(3, 1, 3, 1)
P = build_P(ray)
print(P.degree, P.coeff(4), [str(c) for c in P.coefficients])

for i in range(1, 8):
    print(i, delta_value(ray, i), P(i))

# Eventually the second difference stays positive.

print("positive from", first_positive_tail(ray, 60))

# Rays through the apex, C(i d, i delta), are log-convex from the start.
# Q(i) >= 0 is the certificate, and it rests on an interleaving of fractions.

print([str(q_value(5, 2, i)) for i in range(1, 5)])
print(all(interleaving_check(d, t) for d in range(2, 30) for t in range(1, d)))
