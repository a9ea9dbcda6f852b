"""
Generalized pyramids and bulls
==============================

Closed-form expansions for GP(r,s,t) and GB(r,s,t), checked against the
census pipeline.
"""

from chromsym import build_gb, build_gp, csf_e, csf_m
from chromsym.theorems import (
    d_groups,
    gb_e_closed,
    gb_m_closed,
    gp_e_closed,
    gp_m_closed,
    gp_mtilde_closed,
    verify_sweep,
)

g = build_gp(1, 1, 1)
print(g.n, "vertices,", g.num_edges, "edges")

# five terms in augmented monomials
print(gp_mtilde_closed(1, 1, 1).render())

# the e-expansion comes with named coefficients A..E
coeffs, f = gp_e_closed(1, 1, 1)
print(coeffs)
print(f.render())
assert f == csf_e(g)

# D is a sum of grouped summands, each nonnegative on its own
print(d_groups(2, 1, 3))

# bigger parameters, same story
coeffs, f = gp_e_closed(3, 2, 1)
assert f == csf_e(build_gp(3, 2, 1))
assert gp_m_closed(3, 2, 1) == csf_m(build_gp(3, 2, 1))
print(f.render())

# generalized bulls
bull = build_gb(2, 1, 2)
print(gb_e_closed(2, 1, 2).render())
assert gb_e_closed(2, 1, 2) == csf_e(bull)
assert gb_m_closed(2, 1, 2) == csf_m(bull)

# or sweep a whole box of parameters at once
for entry in verify_sweep("GB", 2):
    print(entry.family, (entry.r, entry.s, entry.t), "pass" if entry.passed else "FAIL", f"{entry.millis:.1f}ms")
