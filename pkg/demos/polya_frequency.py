# coding: utf-8

# # Polya frequency sequences
#
# A positive sequence is PF when its generating polynomial has only real
# roots. Real-rootedness is decided exactly with Sturm chains.

from pascal_rays import darroch_bounds, is_pf, newton_check, pf_report
from pascal_rays.algebra import RationalPolynomial, count_real_roots

row = [1, 5, 10, 10, 5, 1]
print(is_pf(row), newton_check(row), darroch_bounds(row))

print(is_pf([1, 1, 1]), count_real_roots(RationalPolynomial([1, 1, 1])))

# Shallow diagonals of the triangle are PF as well.

diag = [1, 9, 28, 35, 15, 1]
print(pf_report(diag).as_dict())
