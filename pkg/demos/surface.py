"""Local rings of the surface y^2 + x^3 - x^2 z^2 = 0 along two curves.

Along the z-axis (x = y = 0) the surface is singular, along the parabola
x = z^2, y = 0 it is smooth.  Run with ``python demos/surface.py``.
"""

from graal import (
    PolyRing,
    build_presentation,
    build_tower,
    gr_presentation,
    is_regular,
    local_dim,
    system_of_parameters,
    valuation_initial,
)
from graal.apps import embedding_dimension, validate_sop

R = PolyRing(["x", "y", "z"])
x, y, z = R.gens
F = y**2 + x**3 - x**2 * z**2


def show(title, J):
    print("==", title)
    tower = build_tower(R.names, [F], J)
    local = build_presentation(tower)
    gr = gr_presentation(local)
    print("independent variables U =", tower.U, " s =", tower.s)
    print("relations of the tangent cone:", gr.I_in_gb)
    print("dim =", local_dim(gr), " embedding dim =", embedding_dimension(gr), " regular:", is_regular(gr))
    return local, gr


local, gr = show("along the z-axis", [x, y])

# orders of a few elements; x^3 has order 3 and its initial form is Y1^3,
# written here in the normal form of the tangent cone
for f in (x, y, x * y, x**3):
    nu, ini = valuation_initial(local, f, gr)
    print("  nu(%s) = %d, initial form %s" % (f, nu, ini))

Y1, Y2 = gr.ring.gens
print("  {y} is a system of parameters:", validate_sop(gr, [Y2]))
sop = system_of_parameters(gr, seed=1)
print("  random system of parameters:", sop.elements, "after", sop.attempts, "attempt(s)")

show("along the parabola x = z^2", [x - z**2, y])
