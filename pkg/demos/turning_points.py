# coding: utf-8

# # Where log-concave turns into log-convex
#
# On the vertical ray C(n0 + 2i, i) the ratios C_{i+1}/C_i first fall and
# then rise. The place where they turn has a closed form.

from pascal_rays import (RayParams, generate, predicted_turning_point_vertical,
                         tanny_zuker_mode, turning_point, argmax_scan, shallow_diagonal)

for n0 in range(2, 9):
    m = predicted_turning_point_vertical(n0)
    V = generate(RayParams(n0, 0, 2, 1), 0, 2 * m + 10).values
    print(n0, m, turning_point(V))

# n0 = 12 needs terms up to C(300, 144), no trouble for exact ints.

V = generate(RayParams(12, 0, 2, 1), 0, 286).values
print(turning_point(V), len(str(V[-1])), "digits in the last term")

# The mode of C(n0 - i, i) also has a closed form; compare with a scan.

for n0 in (10, 20, 100, 500):
    print(n0, tanny_zuker_mode(n0), argmax_scan(shallow_diagonal(n0)))
