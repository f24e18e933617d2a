"""
Two primes
==========

For distinct primes ``p1, p2`` the function is the line
``(s + (p1 + p2)/2) / (p1 p2)`` plus two purely periodic waves, so
``W(a p1 p2 + b) = a + W(b)``.
"""
from sylvester import eval_exact, two_prime_closed_form, wave

p1, p2 = 3, 5
print([two_prime_closed_form(p1, p2, s) for s in range(2 * p1 * p2)])
print("W_3 at s = 0 mod 15:", wave([p1, p2], p1)(0), " W_5:", wave([p1, p2], p2)(0))
for a in range(4):
    assert all(eval_exact([p1, p2], a * 15 + b) == a + eval_exact([p1, p2], b) for b in range(15))
