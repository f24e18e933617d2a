"""
Partitions into parts 1..21 and the polynomial approximation
============================================================

For ``{1, ..., 21}`` the period is lcm(1..21) = 232792560, yet the wave
decomposition is small.  The polynomial wave ``W_1`` approximates ``W``
well both for large ``s`` and in the zero range ``[-231, 0]``.  Writes
``natural21.png`` when matplotlib is installed.
"""
from fractions import Fraction

import numpy as np

from sylvester import count_partitions, eval_real, natural_set, wave
from sylvester.waves import eval_polynomial_part_real

ps = natural_set(21)
w1 = wave(ps, 1)
counts = count_partitions(ps, 4000)
for s in (500, 1000, 2000, 4000):
    print(s, float(Fraction(counts[s]) / w1(s) - 1))

# The maximal-period wave is a Ramanujan sum over 21^2
print([str(wave(ps, 21)(s)) for s in range(8)])

###############################################################################
# Real-argument curve with the trigonometric extension
xs = np.arange(-241, 40, 0.25)
W = np.array([eval_real(ps, x) for x in xs])
W1 = np.array([eval_polynomial_part_real(ps, x) for x in xs])
sign_changes = xs[:-1][np.sign(W[:-1]) != np.sign(W[1:])]
print("sign changes between", sign_changes.min(), "and", sign_changes.max())

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(xs, W, "k", lw=1, label="W(s, {1..21})")
    ax.plot(xs, W1, "r--", lw=1, label="W_1")
    ax.set_yscale("symlog", linthresh=1e-6)
    ax.legend()
    fig.savefig("natural21.png", dpi=120)
