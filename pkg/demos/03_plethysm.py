"""Symmetric powers of composite representations via Adams operations."""

from symlift import adams, decompose, plethysm_sym, sym_char

print("psi^2(sym^2):", dict(adams(sym_char(2), 2).items()))
for m in range(1, 5):
    d = decompose(plethysm_sym(sym_char(2), m))
    print(f"Sym^{m}(sym^2) =", d.as_tuples())
