"""Tensor products of symmetric powers split into twisted symmetric powers.

Characters of GL(2) are symmetric Laurent polynomials in x, y.  Multiplying
two of them and peeling off leading terms recovers the decomposition.
"""

from symlift import decompose, dimension, sym_char, tensor, unitary_specialize

for n1, n2 in [(1, 1), (2, 3), (4, 4)]:
    c = tensor(sym_char(n1), sym_char(n2))
    d = decompose(c)
    pieces = " + ".join(f"sym^{a} det^{b}" for a, b, _ in d.as_tuples())
    print(f"sym^{n1} x sym^{n2}  (dim {dimension(c)})  =  {pieces}")

# The det twists vanish once x*y = 1 (unitary normalization).
print(unitary_specialize(decompose(tensor(sym_char(2), sym_char(3)))))
