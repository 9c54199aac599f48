"""Exact character ring of finite-dimensional GL(2, C) representations.

A character is a finitely supported, Weyl-symmetric map from monomials
``x**i * y**j`` to integer multiplicities.  ``x`` and ``y`` stand for the
two eigenvalues (Satake parameters) of a group element.  Negative exponents
are allowed so that duals and negative determinant twists stay inside the
ring, and negative multiplicities are allowed so that virtual characters
can be represented.

The Schur basis used throughout is ``sym^a (x) det^b``, whose leading
monomial is ``x**(a + b) * y**b``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

__all__ = [
    "Character",
    "SchurConstituent",
    "SchurDecomposition",
    "NonIntegralPlethysm",
    "VirtualCharacter",
    "sym_char",
    "tensor",
    "direct_sum",
    "dual",
    "det_twist",
    "adams",
    "plethysm_sym",
    "decompose",
    "recombine",
    "dimension",
    "unitary_specialize",
]


class NonIntegralPlethysm(ArithmeticError):
    """Newton's recursion left a non-integral multiplicity."""


class VirtualCharacter(ValueError):
    """An operation needing a genuine representation got a virtual one."""


Monomial = tuple[int, int]


class Character:
    """Immutable symmetric Laurent polynomial in ``x, y`` with integer coefficients.

    Parameters
    ----------
    support : mapping or iterable of ((i, j), mult) pairs
        Multiplicity of each monomial ``x**i y**j``.  Zero entries are
        dropped.  Repeated monomials in an iterable are accumulated.

    Raises
    ------
    ValueError
        If the multiplicities are not symmetric under ``x <-> y``.
    """

    __slots__ = ("_support", "_hash")

    def __init__(self, support: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = support.items() if isinstance(support, Mapping) else support
        acc: dict[Monomial, int] = defaultdict(int)
        for (i, j), m in items:
            acc[(int(i), int(j))] += int(m)
        clean = {k: v for k, v in acc.items() if v}
        for (i, j), m in clean.items():
            if clean.get((j, i)) != m:
                raise ValueError(f"character is not symmetric at x^{i} y^{j}")
        self._support = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, support: dict[Monomial, int]) -> Character:
        # skips the symmetry check; support must already be clean and symmetric
        obj = cls.__new__(cls)
        obj._support = support
        obj._hash = None
        return obj

    @property
    def support(self) -> dict[Monomial, int]:
        return dict(self._support)

    def __getitem__(self, mono: Monomial) -> int:
        return self._support.get(mono, 0)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self._support, reverse=True))

    def items(self) -> list[tuple[Monomial, int]]:
        return sorted(self._support.items(), reverse=True)

    def __len__(self) -> int:
        return len(self._support)

    def __bool__(self) -> bool:
        return bool(self._support)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self._support == other._support

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._support.items()))
        return self._hash

    def __repr__(self) -> str:
        terms = ", ".join(f"({i}, {j}): {m}" for (i, j), m in self.items())
        return f"Character({{{terms}}})"

    def __mul__(self, other: Character) -> Character:
        return tensor(self, other)

    def __add__(self, other: Character) -> Character:
        return direct_sum(self, other)

    def __neg__(self) -> Character:
        return Character._trusted({k: -v for k, v in self._support.items()})

    def __sub__(self, other: Character) -> Character:
        return direct_sum(self, -other)

    def scale(self, k: int) -> Character:
        if k == 0:
            return Character()
        return Character._trusted({key: k * v for key, v in self._support.items()})

    def monomials(self) -> list[Monomial]:
        """Monomials repeated by multiplicity (genuine multiplicities only)."""
        out = []
        for mono, m in self.items():
            if m < 0:
                raise VirtualCharacter("negative monomial multiplicity")
            out.extend([mono] * m)
        return out

    def evaluate(self, x, y):
        """Value of the Laurent polynomial at ``(x, y)``."""
        return sum(m * x**i * y**j for (i, j), m in self._support.items())


ZERO = Character()


def sym_char(n: int) -> Character:
    """Character of ``Sym^n`` of the standard representation."""
    if n < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    return Character._trusted({(n - j, j): 1 for j in range(n + 1)})


def tensor(c1: Character, c2: Character) -> Character:
    acc: dict[Monomial, int] = defaultdict(int)
    for (i1, j1), m1 in c1._support.items():
        for (i2, j2), m2 in c2._support.items():
            acc[(i1 + i2, j1 + j2)] += m1 * m2
    return Character._trusted({k: v for k, v in acc.items() if v})


def direct_sum(c1: Character, c2: Character) -> Character:
    acc = dict(c1._support)
    for k, v in c2._support.items():
        acc[k] = acc.get(k, 0) + v
    return Character._trusted({k: v for k, v in acc.items() if v})


def dual(c: Character) -> Character:
    return Character._trusted({(-i, -j): m for (i, j), m in c._support.items()})


def det_twist(c: Character, b: int) -> Character:
    return Character._trusted({(i + b, j + b): m for (i, j), m in c._support.items()})


def adams(c: Character, r: int) -> Character:
    """Adams operation ``psi^r``: substitute ``x -> x**r, y -> y**r``."""
    if r < 1:
        raise ValueError("Adams operation index must be positive")
    return Character._trusted({(r * i, r * j): m for (i, j), m in c._support.items()})


def plethysm_sym(c: Character, m: int, *, check: bool = True) -> Character:
    """Character of ``Sym^m(V)`` where ``V`` has character ``c``.

    Uses Newton's identity ``h_m = (1/m) sum_{r=1}^m p_r h_{m-r}`` with
    ``p_r = adams(c, r)``, carried out over the rationals.

    Parameters
    ----------
    c : Character
    m : int
        Symmetric power degree, ``m >= 0``.
    check : bool
        Reject virtual ``c`` with :class:`VirtualCharacter`.  Pass ``False``
        to compute the lambda-ring symmetric power of a virtual character.

    Raises
    ------
    NonIntegralPlethysm
        If the final multiplicities are not integers.
    """
    if m < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    if check and not decompose(c).genuine:
        raise VirtualCharacter("plethysm_sym needs a genuine character")
    h: list[dict[Monomial, Fraction]] = [{(0, 0): Fraction(1)}]
    powers = [adams(c, r)._support for r in range(1, m + 1)]
    for k in range(1, m + 1):
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for r in range(1, k + 1):
            for (i1, j1), m1 in powers[r - 1].items():
                for (i2, j2), m2 in h[k - r].items():
                    acc[(i1 + i2, j1 + j2)] += m1 * m2
        h.append({key: v / k for key, v in acc.items() if v})
    result = {}
    for key, v in h[m].items():
        if v.denominator != 1:
            raise NonIntegralPlethysm(f"multiplicity {v} at {key} in Sym^{m}")
        result[key] = int(v)
    return Character(result)


class SchurConstituent(NamedTuple):
    """``mult`` copies of ``sym^a (x) det^b``."""

    a: int
    b: int
    mult: int

    @property
    def dim(self) -> int:
        return self.a + 1

    def character(self) -> Character:
        return det_twist(sym_char(self.a), self.b).scale(self.mult)


@dataclass(frozen=True)
class SchurDecomposition:
    """Signed multiset of Schur constituents, sorted by ``(a, b)`` descending."""

    constituents: tuple[SchurConstituent, ...]

    def __post_init__(self):
        cons = tuple(sorted((SchurConstituent(*c) for c in self.constituents),
                            key=lambda c: (c.a, c.b), reverse=True))
        seen = set()
        for c in cons:
            if c.a < 0 or c.mult == 0:
                raise ValueError(f"invalid constituent {c}")
            if (c.a, c.b) in seen:
                raise ValueError(f"duplicate constituent sym^{c.a} det^{c.b}")
            seen.add((c.a, c.b))
        object.__setattr__(self, "constituents", cons)

    def __iter__(self) -> Iterator[SchurConstituent]:
        return iter(self.constituents)

    def __len__(self) -> int:
        return len(self.constituents)

    @property
    def genuine(self) -> bool:
        return all(c.mult > 0 for c in self.constituents)

    @property
    def dimension(self) -> int:
        return sum(c.mult * c.dim for c in self.constituents)

    def as_tuples(self) -> list[tuple[int, int, int]]:
        return [tuple(c) for c in self.constituents]


def decompose(c: Character) -> SchurDecomposition:
    """Write ``c`` in the basis ``sym^a (x) det^b``.

    Greedy leading-term extraction: take the lexicographically largest
    monomial ``x**u y**v`` with ``u >= v``, record ``(u - v, v, mult)`` and
    subtract that many copies of ``det^v sym^(u - v)``.  Signed
    multiplicities come out for virtual characters.

    >>> decompose(tensor(sym_char(1), sym_char(1))).as_tuples()
    [(2, 0, 1), (0, 1, 1)]
    """
    rest = dict(c._support)
    out = []
    while rest:
        u, v = max(k for k in rest if k[0] >= k[1])
        mult = rest[(u, v)]
        a = u - v
        out.append(SchurConstituent(a, v, mult))
        for j in range(a + 1):
            key = (u - j, v + j)
            left = rest.get(key, 0) - mult
            if left:
                rest[key] = left
            else:
                rest.pop(key, None)
    return SchurDecomposition(tuple(out))


def recombine(d: SchurDecomposition) -> Character:
    """Inverse of :func:`decompose`."""
    acc = ZERO
    for con in d:
        acc = acc + con.character()
    return acc


def dimension(c: Character) -> int:
    return sum(c._support.values())


def unitary_specialize(d: SchurDecomposition) -> dict[int, int]:
    """Forget determinant twists, as happens when ``xy = 1``.

    Returns ``{a: total multiplicity}`` with cancelled entries removed.
    """
    acc: dict[int, int] = defaultdict(int)
    for con in d:
        acc[con.a] += con.mult
    return {a: m for a, m in sorted(acc.items(), reverse=True) if m}
