"""
Counting restricted partitions in closed form
=============================================

W(s, d) is the number of ways to pay ``s`` with coins of denominations
``d_1, ..., d_m``.  The closed form is a quasi-polynomial: one polynomial per
residue class of ``s`` modulo lcm(d).
"""
from sylvester import count_partitions, eval_exact, make_partset, partition_quasipoly

ps = make_partset([2, 3, 5])
print("parts", ps.parts, "period", ps.period, "divisor set", ps.divisor_set)

# The quasi-polynomial, residue class by residue class
q = partition_quasipoly(ps)
for r, poly in enumerate(q.residue_polys):
    print(f"s = {r:2d} mod {q.period}:  W = {str(poly).replace('x', 's')}")

###############################################################################
# Cross-check against the generating-function oracle.  The closed form is
# evaluated directly at s, without building any table.
table = count_partitions(ps, 200)
assert all(eval_exact(ps, s) == table[s] for s in range(201))
print("W(10**6, {2,3,5}) =", eval_exact(ps, 10**6))
