"""
Sylvester waves
===============

Every ``j`` dividing some part contributes a wave ``W_j``: a polynomial of
degree ``omega_j - 1`` (``omega_j`` = number of parts divisible by ``j``)
times a ``j``-periodic factor.
"""
from sylvester import make_partset, wave, wave_recursion_residual
from sylvester.waves import FORMS

ps = make_partset([2, 4, 3, 6])
for j in ps.divisor_set:
    w = wave(ps, j)
    print(f"W_{j}: omega = {w.omega}")
    for r, p in enumerate(w.residue_polys):
        print(f"    s = {r} mod {j}: {str(p).replace('x', 's')}")

###############################################################################
# The same wave can be written three ways: higher Bernoulli polynomials with
# generalized Euler numbers, a shifted variant, or higher Bernoulli numbers
# with generalized Euler polynomials.  They agree exactly.
for j in ps.divisor_set:
    assert len({wave(ps, j, form).residue_polys for form in FORMS}) == 1

###############################################################################
# Each wave on its own obeys the recursion that W obeys:
# W_j(s, d^m) - W_j(s - d_m, d^m) = W_j(s, d^(m-1)).
print(max(abs(wave_recursion_residual(ps, j, s)) for j in ps.divisor_set for s in range(-20, 40)))
