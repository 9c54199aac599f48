"""Dirichlet coefficients from inverted local factors.

For ``pi`` at weight 12 these are Ramanujan's tau values.  The unitary view
rescales every Satake pair to have product 1, where classical identities
such as lambda(p)^2 = lambda_sym2(p) + 1 hold.
"""

from symlift import dirichlet_coefficients

tau = dirichlet_coefficients("pi", 12, 12)
print("tau(1..12):", [tau[n] for n in range(1, 13)])

lam = dirichlet_coefficients("pi", 12, 50).unitary
s2 = dirichlet_coefficients("sym^2(pi)", 12, 50).unitary
for p in (2, 3, 5, 47):
    print(f"p={p}: lambda^2={lam[p] ** 2:.12f}  lambda_sym2+1={s2[p] + 1:.12f}")
