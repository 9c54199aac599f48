"""Exact local factors and the two-route identity check.

The left side expands prod(1 - alpha^i beta^j T) over the monomials of the
tensor product; the right side multiplies factors of each constituent
computed on their own.  Both are exact integers in arithmetic normalization.
"""

from symlift import satake, tensor_local_factor, verify_local_identity

sd = satake(12, 2)
print(f"p=2, weight 12: a_p={sd.a_p}, q_p={sd.q_p}")
print("sym^2 factor:", tensor_local_factor("sym^2(pi)", sd).coefficients)

for p in (2, 3, 5, 7):
    out = verify_local_identity("sym^2(pi)*sym^3(pi)", 12, p)
    print(f"p={p}: {'pass' if out.passed else 'FAIL'}, degree {out.degree}, T^1 coefficient {out.lhs[1]}")
