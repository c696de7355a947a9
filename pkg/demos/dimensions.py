"""Compare the local dimension with dim Q/H - dim Q/J on random towers.

Run with ``python demos/dimensions.py [count]``.
"""

import sys

from graal import PolyRing, build_presentation, build_tower, dim_and_indep_set, gr_presentation, leading_ideal, local_dim
from graal.engine import groebner

sys.path.insert(0, str(__import__("pathlib").Path(__file__).resolve().parent.parent / "tests"))
from towers import random_tower  # noqa: E402


def affine_dim(names, gens):
    if not gens:
        return len(names)
    R = PolyRing(names)
    gb = groebner([R(g) for g in gens])
    return dim_and_indep_set(leading_ideal(gb), len(names))[0]


count = int(sys.argv[1]) if len(sys.argv) > 1 else 10
for seed in range(count):
    names, H, J = random_tower(seed)
    gr = gr_presentation(build_presentation(build_tower(names, H, J)))
    d = local_dim(gr)
    e = affine_dim(names, H) - affine_dim(names, J)
    print("%2d  H=%-40s J=%-40s  %d %d %s" % (seed, H, J, d, e, "ok" if d == e else "MISMATCH"))
