"""An ideal through a line over QQ(w): tangent cone, residue field, initial
ideal, Hilbert-Samuel polynomial and a lifted free resolution.

Run with ``python demos/twisted.py``.
"""

import pathlib

from graal import (
    build_presentation,
    build_tower,
    compress_residue_field,
    gr_presentation,
    hilbert_samuel,
    initial_ideal,
    lift_resolution,
    verify_resolution,
)
from graal.cli import parse_problem

path = pathlib.Path(__file__).resolve().parent.parent / "data" / "twisted.graal"
pf = parse_problem(path.read_text())
I = pf.ideal_I()
print("I =", I)

tower = build_tower(pf.variables, pf.H, pf.J)
local = build_presentation(tower)
gr = gr_presentation(local)
print("U =", tower.U, " V =", tower.V)
print("graded ring: K[%s] / %s" % (", ".join(gr.ring.names), gr.I_in_gb))

# K = QQ(w)[x, y, z] / <z, x - 1, y^2 - 3> is a quadratic extension of QQ(w)
for seed in (0, 1):
    cf = compress_residue_field(tower, seed=seed)
    print("seed %d: K = QQ(w)[T]/<%s>, T = %s" % (seed, cf.minpoly, cf.transform))

print("in(I) + I_in =", initial_ideal(local, gr, I))

hd = hilbert_samuel(local, gr, I)
print("Hilbert function", hd.hilbert_values[:6], "...")
print("Hilbert-Samuel polynomial: a =", hd.a_coeffs, " c =", hd.constant_c, " valid from n =", hd.threshold_l)

res = lift_resolution(local, gr, I)
print("ranks", res.ranks, "shifts", res.shifts)
for k, (gm, am) in enumerate(zip(res.gr_maps, res.al_maps), 1):
    print("step %d" % k)
    for g, a in zip(gm, am):
        print("  graded", g.components())
        print("  lifted", a.components())
print("checks", verify_resolution(local, gr, res))
