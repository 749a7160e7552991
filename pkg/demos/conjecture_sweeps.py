# coding: utf-8

# # Sweeping open questions over a grid
#
# Each sweep walks a parameter grid and reports counterexamples together
# with the windows it looked at. A pass says nothing beyond those windows.

from pascal_rays import Grid, RayParams
from pascal_rays import sweep_conjecture_pf, sweep_conjecture_ray_unimodal, sweep_conjecture_turning

out = sweep_conjecture_ray_unimodal(Grid(max_n0=8, max_d=4), window=50)
print(out.checked_count, out.counterexamples)

# PF along transversals. By default the whole line through each origin is
# used. Cutting the line at the origin gives 10, 6, 1, which is not PF.

print(sweep_conjecture_pf(Grid(max_n0=8, max_d=4)).holds)
cut = sweep_conjecture_pf([RayParams(5, 3, 1, 2)], whole_line=False)
print(cut.counterexamples)

# Steep rays turn once from log-concave to log-convex, at least up to the
# horizon that was examined.

turn = sweep_conjecture_turning(Grid(max_n0=5, max_d=4), window=60, jobs=2)
for obs in turn.observations[:5]:
    print(obs)
print(turn.notes)

# The same record is what the command line writes with --json.

print(turn.to_json()[:200])
