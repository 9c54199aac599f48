"""Archimedean gamma factors, computed two ways.

Gamma_C shifts come from off-diagonal monomials (or from each sym^n piece);
Gamma_R factors with a parity come from the middle of even symmetric powers.
"""

from symlift import gamma_shifts, verify_gamma_identity

for src in ["pi", "sym^2(pi)", "pi*pi", "sym^2(pi)*sym^3(pi)"]:
    g = gamma_shifts(src, 12)
    shifts = ", ".join(str(s) for s in g.complex_shifts)
    print(f"{src:22s} Gamma_C [{shifts}]  Gamma_R parities {list(g.real_parities)}  degree {g.degree}")
    assert verify_gamma_identity(src, 12).passed
