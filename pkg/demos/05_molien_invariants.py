"""
Invariants of finite groups
===========================

A Molien function ``N(t) / prod (1 - t^d)`` turns invariant counting into a
short convolution with restricted partition functions.
"""
from sylvester import catalog, invariant_count
from sylvester.molien import CATALOG_NAMES
from sylvester.oracle import rational_series

for name in CATALOG_NAMES:
    spec = catalog(name, 4)
    counts = [invariant_count(spec, s) for s in range(13)]
    assert counts == rational_series(spec.numerator_map, spec.degrees, 12)
    print(f"{spec.name:18s} |G|={spec.group_order:3d}  {counts}")

###############################################################################
# The shortcut W(s, {1,1})/2 for the quaternion group Q8 does not match the
# series (1 + t^6)/(1 - t^4)^2: at s = 4 it gives 5/2, the series gives 2.
q8 = catalog("quaternion", 2)
print([invariant_count(q8, s) for s in range(13)])
