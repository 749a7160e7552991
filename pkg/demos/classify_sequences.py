# coding: utf-8

# # Checking shape properties
#
# classify looks at a finite window and reports monotonicity, convexity,
# log-concavity, log-convexity and unimodality, all with weak inequalities.

from pascal_rays import RayParams, classify, generate

rep = classify([1, 4, 6, 4, 1])
print(rep.as_dict())

# Zeros at the end of a transversal do not spoil log-concavity, which is
# judged on the positive part.

tail = generate(RayParams(3, 0, 0, 1), 0, 7).values
print(tail, classify(tail).is_log_concave)

# The shallow diagonal C(10 - i, i) peaks once.

diag = [1, 9, 28, 35, 15, 1]
print(classify(diag).modes)

# Central binomials are log-convex and the ratio sequence never dips.

rep = classify(generate(RayParams(0, 0, 2, 1), 0, 15).values)
print(rep.is_log_convex, rep.ratio_trough)

# A sweep over small rays: how many windows are log-concave?

count = total = 0
for n0 in range(8):
    for k0 in range(n0 + 1):
        for d in range(4):
            for delta in range(4):
                total += 1
                count += bool(classify(generate(RayParams(n0, k0, d, delta), 0, 30).values).is_log_concave)
print(f"{count} of {total} windows are log-concave")
