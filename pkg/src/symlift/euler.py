"""Local Euler factors, Dirichlet coefficients and gamma factors.

Everything is in the arithmetic normalization: at a prime ``p`` the
eigenvalues satisfy ``alpha + beta = a_p`` and ``alpha * beta = p**(k-1)``.
A character then determines the inverse local factor
``prod (1 - alpha**i beta**j T)`` over its monomials.  The coefficients of
that polynomial are symmetric in ``alpha, beta``; they are rewritten in
``e1 = alpha + beta``, ``e2 = alpha * beta`` once per character and then
evaluated exactly at each prime.

Characters involving duals have negative exponents, so ``e2`` may appear
with a negative power and the coefficients become exact fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .char_ring import (
    Character,
    SchurDecomposition,
    VirtualCharacter,
    decompose,
    det_twist,
    dimension,
    sym_char,
    unitary_specialize,
)
from .eigenforms import SatakeData, primes_up_to, satake, _check_weight
from .rep_expr import RepExpr, as_expr, eval_char, render

__all__ = [
    "NotSymmetric",
    "SymPolyAB",
    "LocalFactor",
    "DirichletCoefficients",
    "GammaShifts",
    "VerificationOutcome",
    "to_elementary",
    "reduce_symmetric",
    "local_factor",
    "unitary_local_factor",
    "tensor_local_factor",
    "verify_local_identity",
    "dirichlet_coefficients",
    "gamma_shifts",
    "gamma_shifts_from_character",
    "verify_gamma_identity",
]

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = None

Number = Union[int, Fraction]


class NotSymmetric(ValueError):
    pass


class SymPolyAB:
    """Integer Laurent polynomial in ``alpha, beta`` invariant under swapping them."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int]):
        clean = {(int(u), int(v)): int(c) for (u, v), c in terms.items() if c}
        for (u, v), c in clean.items():
            if clean.get((v, u)) != c:
                raise NotSymmetric(f"coefficient of alpha^{u} beta^{v} has no mirror")
        self.terms = clean

    def __eq__(self, other):
        return isinstance(other, SymPolyAB) and self.terms == other.terms

    def __repr__(self):
        return f"SymPolyAB({self.terms})"


def to_elementary(s: SymPolyAB) -> dict[tuple[int, int], int]:
    """Rewrite ``s`` as ``sum c * e1**r * e2**t``; returns ``{(r, t): c}``.

    Repeatedly takes the lexicographically largest monomial
    ``alpha**u beta**v`` with ``u >= v`` and subtracts the matching
    multiple of ``e1**(u - v) e2**v``.  ``t`` is negative for Laurent input.
    """
    rest = dict(s.terms)
    out: dict[tuple[int, int], int] = {}
    while rest:
        u, v = max(k for k in rest if k[0] >= k[1])
        c = rest[(u, v)]
        r = u - v
        out[(r, v)] = c
        # e1**r e2**v = sum_k binom(r, k) alpha**(r - k + v) beta**(k + v)
        for k in range(r + 1):
            key = (r - k + v, k + v)
            left = rest.get(key, 0) - c * math.comb(r, k)
            if left:
                rest[key] = left
            else:
                rest.pop(key, None)
    return out


def _evaluate_elementary(form: Mapping[tuple[int, int], int], e1, e2):
    if not form:
        return 0
    r_max = max(r for r, _ in form)
    # shift e2 exponents to be nonnegative; divide by e2**shift at the end
    shift = max(0, -min(t for _, t in form))
    t_max = max(shift, max(t for _, t in form) + shift)
    if _mpz is not None and isinstance(e1, int) and isinstance(e2, int):
        e1, e2 = _mpz(e1), _mpz(e2)
    pow1 = [1]
    for _ in range(r_max):
        pow1.append(pow1[-1] * e1)
    pow2 = [1]
    for _ in range(t_max):
        pow2.append(pow2[-1] * e2)
    total = int(sum(c * pow1[r] * pow2[t + shift] for (r, t), c in form.items()))
    return Fraction(total, int(pow2[shift])) if shift else total


def reduce_symmetric(s: SymPolyAB, a: int, q: int) -> Number:
    """Value of ``s`` at the roots of ``X**2 - a X + q``, computed exactly."""
    value = _evaluate_elementary(to_elementary(s), a, q)
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


@lru_cache(maxsize=4096)
def _factor_forms(c: Character) -> tuple[dict[tuple[int, int], int], ...]:
    # prime-independent part of local_factor: the T-coefficients in e1, e2
    monos = c.monomials()
    coeffs: list[dict[tuple[int, int], int]] = [{(0, 0): 1}]
    for (i, j) in monos:
        nxt = [dict(d) for d in coeffs] + [{}]
        for k, poly in enumerate(coeffs):
            target = nxt[k + 1]
            for (u, v), m in poly.items():
                key = (u + i, v + j)
                val = target.get(key, 0) - m
                if val:
                    target[key] = val
                else:
                    target.pop(key, None)
        coeffs = nxt
    return tuple(to_elementary(SymPolyAB(poly)) for poly in coeffs)


def _normalize(x) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class LocalFactor:
    """Inverse local factor ``sum coefficients[i] T**i`` at ``p``, with ``T = p**-s``."""

    p: int
    coefficients: tuple[Number, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: LocalFactor) -> LocalFactor:
        if self.p != other.p:
            raise ValueError("local factors at different primes")
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return LocalFactor(self.p, tuple(_normalize(x) for x in out))

    def inverse_series(self, depth: int) -> list[Number]:
        """First ``depth + 1`` coefficients of ``1 / (sum c_i T**i)``."""
        c = self.coefficients
        b: list[Number] = [1]
        for n in range(1, depth + 1):
            b.append(_normalize(-sum(c[i] * b[n - i] for i in range(1, min(n, len(c) - 1) + 1))))
        return b


def local_factor(c: Character, sd: SatakeData) -> LocalFactor:
    """Expand ``prod (1 - alpha**i beta**j T)`` over the monomials of ``c``."""
    if any(m < 0 for _, m in c.items()):
        raise VirtualCharacter("local factor of a virtual character is not a polynomial")
    forms = _factor_forms(c)
    coeffs = tuple(_normalize(_evaluate_elementary(f, sd.a_p, sd.q_p)) for f in forms)
    return LocalFactor(sd.p, coeffs)


def unitary_local_factor(c: Character, sd: SatakeData) -> tuple[float, ...]:
    """Float coefficients in the unitary normalization ``alpha * beta = 1``."""
    forms = _factor_forms(c)
    lam = sd.unitary
    return tuple(float(sum(v * lam**r for (r, _), v in f.items())) for f in forms)


def tensor_local_factor(e: RepExpr | str, sd: SatakeData) -> LocalFactor:
    return local_factor(eval_char(as_expr(e)), sd)


@dataclass(frozen=True)
class VerificationOutcome:
    passed: bool
    lhs: tuple = ()
    rhs: tuple = ()
    p: int | None = None
    degree: int = 0
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _constituent_product(d: SchurDecomposition, sd: SatakeData) -> LocalFactor:
    acc = LocalFactor(sd.p, (1,))
    for con in d:
        piece = local_factor(det_twist(sym_char(con.a), con.b), sd)
        for _ in range(con.mult):
            acc = acc * piece
    return acc


def verify_local_identity(e: RepExpr | str, weight: int, p: int) -> VerificationOutcome:
    """Compare the local factor of ``e`` with the product over its Schur constituents.

    The right-hand side expands every constituent ``sym^a det^b`` on its own
    and multiplies the resulting polynomials, so both sides share only the
    Satake data.
    """
    e = as_expr(e)
    sd = satake(weight, p)
    chi = eval_char(e)
    d = decompose(chi)
    if not d.genuine:
        raise VirtualCharacter(f"{render(e)} is not a genuine representation")
    lhs = local_factor(chi, sd)
    rhs = _constituent_product(d, sd)
    return VerificationOutcome(
        passed=lhs.coefficients == rhs.coefficients,
        lhs=lhs.coefficients,
        rhs=rhs.coefficients,
        p=p,
        degree=lhs.degree,
    )


@dataclass(frozen=True)
class DirichletCoefficients:
    """Coefficients ``v(n)``, ``n <= bound``, of ``L(s, e)`` for the eigenform of ``weight``.

    ``values`` is in the arithmetic normalization (exact), ``unitary`` is
    the float view with ``alpha * beta = 1``.
    """

    weight: int
    expression: RepExpr
    bound: int
    values: dict[int, Number] = field(repr=False)
    unitary: dict[int, float] = field(repr=False)

    def __getitem__(self, n: int) -> Number:
        return self.values[n]


def _float_inverse_series(c: Sequence[float], depth: int) -> list[float]:
    b = [1.0]
    for n in range(1, depth + 1):
        b.append(-sum(c[i] * b[n - i] for i in range(1, min(n, len(c) - 1) + 1)))
    return b


def _smallest_prime_factors(n: int) -> list[int]:
    spf = list(range(n + 1))
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == i:
            for m in range(i * i, n + 1, i):
                if spf[m] == m:
                    spf[m] = i
    return spf


def dirichlet_coefficients(e: RepExpr | str, weight: int, bound: int) -> DirichletCoefficients:
    """Dirichlet coefficients up to ``bound`` via per-prime series inversion."""
    e = as_expr(e)
    _check_weight(weight)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    chi = eval_char(e)
    exact: dict[int, Number] = {1: 1}
    approx: dict[int, float] = {1: 1.0}
    for p in primes_up_to(bound):
        depth, pk = 0, 1
        while pk * p <= bound:
            depth, pk = depth + 1, pk * p
        sd = satake(weight, p)
        series = local_factor(chi, sd).inverse_series(depth)
        useries = _float_inverse_series(unitary_local_factor(chi, sd), depth)
        for r in range(1, depth + 1):
            exact[p**r] = series[r]
            approx[p**r] = useries[r]
    spf = _smallest_prime_factors(bound)
    for n in range(2, bound + 1):
        if n in exact:
            continue
        p = spf[n]
        pe = p
        while (n // pe) % p == 0:
            pe *= p
        exact[n] = _normalize(exact[pe] * exact[n // pe])
        approx[n] = approx[pe] * approx[n // pe]
    return DirichletCoefficients(
        weight=weight,
        expression=e,
        bound=bound,
        values=dict(sorted(exact.items())),
        unitary=dict(sorted(approx.items())),
    )


@dataclass(frozen=True)
class GammaShifts:
    """Archimedean factor ``prod Gamma_C(s + w) * prod Gamma_R(s + eps)``."""

    complex_shifts: tuple[Fraction, ...]
    real_parities: tuple[int, ...]

    @property
    def degree(self) -> int:
        return 2 * len(self.complex_shifts) + len(self.real_parities)


def _sym_gamma(n: int, weight: int) -> tuple[list[Fraction], list[int]]:
    # Gamma_C shifts (n - 2j)(k - 1)/2 for the pairs with n - 2j > 0; even n
    # leaves one Gamma_R of parity (n/2)(k - 1) mod 2
    shifts = [Fraction((n - 2 * j) * (weight - 1), 2) for j in range((n + 1) // 2)]
    parities = [(n // 2) * (weight - 1) % 2] if n % 2 == 0 else []
    return shifts, parities


def _gamma_from_unitary(unitary: Mapping[int, int], weight: int) -> GammaShifts:
    shifts: list[Fraction] = []
    parities: list[int] = []
    for n, mult in unitary.items():
        if mult < 0:
            raise VirtualCharacter("gamma factors need a genuine representation")
        s, r = _sym_gamma(n, weight)
        shifts += s * mult
        parities += r * mult
    return GammaShifts(tuple(sorted(shifts)), tuple(sorted(parities)))


def gamma_shifts(e: RepExpr | str, weight: int) -> GammaShifts:
    """Gamma factors of ``e``, summed over its unitary Schur constituents."""
    e = as_expr(e)
    _check_weight(weight)
    d = decompose(eval_char(e))
    if not d.genuine:
        raise VirtualCharacter(f"{render(e)} is not a genuine representation")
    return _gamma_from_unitary(unitary_specialize(d), weight)


def gamma_shifts_from_character(c: Character, weight: int) -> GammaShifts:
    """Gamma factors read off the monomials of ``c`` without decomposing.

    An off-diagonal pair ``x**i y**j``, ``i > j``, contributes
    ``Gamma_C(s + (i - j)(k - 1)/2)``; each diagonal monomial contributes a
    ``Gamma_R``.  The parities come from the value of the character at
    ``(i, -i)`` (a unit-determinant element), which equals the number of
    even-parity minus odd-parity ``Gamma_R`` factors when ``k`` is even.
    """
    if weight % 2:
        raise ValueError("level-1 weights are even")
    shifts: list[Fraction] = []
    n_real = 0
    for (i, j), m in c.items():
        if m < 0:
            raise VirtualCharacter("gamma factors need a genuine representation")
        if i > j:
            shifts += [Fraction((i - j) * (weight - 1), 2)] * m
        elif i == j:
            n_real += m
    # x**i y**j at (sqrt(-1), -sqrt(-1)) is sqrt(-1)**(i + j) * (-1)**j
    signed = 0
    for (i, j), m in c.items():
        s = i + j
        if s % 2 == 0:
            signed += -m if (s // 2 + j) % 2 else m
    n_odd, rem = divmod(n_real - signed, 2)
    if rem or not 0 <= n_odd <= n_real:
        raise ArithmeticError("inconsistent parity count")
    return GammaShifts(tuple(sorted(shifts)), tuple([0] * (n_real - n_odd) + [1] * n_odd))


def verify_gamma_identity(
    e: RepExpr | str, weight: int, expected: Mapping[int, int] | None = None
) -> VerificationOutcome:
    """Check the gamma factors of ``e`` against its decomposition.

    Route one sums the per-``sym^n`` rule over the Schur constituents;
    route two reads the monomials of the undecomposed character.  If
    ``expected`` (``{sym degree: multiplicity}``) is given it is a third
    route.  The degree ``2 |Gamma_C| + |Gamma_R|`` must equal the dimension.
    """
    e = as_expr(e)
    chi = eval_char(e)
    via_constituents = gamma_shifts(e, weight)
    via_monomials = gamma_shifts_from_character(chi, weight)
    ok = via_constituents == via_monomials and via_constituents.degree == dimension(chi)
    detail = ""
    if expected is not None:
        via_expected = _gamma_from_unitary(expected, weight)
        if via_expected != via_constituents:
            ok = False
            detail = "expected decomposition gives different gamma factors"
    if not ok and not detail:
        detail = "gamma factor routes disagree"
    return VerificationOutcome(
        passed=ok,
        lhs=(via_monomials.complex_shifts, via_monomials.real_parities),
        rhs=(via_constituents.complex_shifts, via_constituents.real_parities),
        degree=via_constituents.degree,
        detail=detail,
    )
