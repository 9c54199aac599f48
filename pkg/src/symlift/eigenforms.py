"""Level-1 Hecke eigenforms in the six weights with a one-dimensional cusp space.

Each form is built from Eisenstein series with exact integer arithmetic:
``Delta = (E4**3 - E6**2) / 1728`` and ``Delta * E4**i * E6**j`` for the
remaining weights.  Because the spaces are one-dimensional, the normalized
q-coefficients are the Hecke eigenvalues.

Memory: a q-expansion of precision ``N`` holds ``N`` integers of roughly
``(k/2) * log2(N)`` bits; ``N = 10**6`` at weight 26 is a few hundred MB
during the products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from sympy import isprime, primerange

__all__ = [
    "WEIGHTS",
    "MAX_PRECISION",
    "InexactDivision",
    "NotPrime",
    "QExpansion",
    "SatakeData",
    "eisenstein",
    "eigenform_qexp",
    "hecke_a",
    "satake",
    "primes_up_to",
    "write_qexp",
    "read_qexp",
    "series_mul",
]

WEIGHTS = (12, 16, 18, 20, 22, 26)
MAX_PRECISION = 10**6

# weight -> (powers of E4, E6) multiplying Delta
_EISENSTEIN_FACTORS = {12: (0, 0), 16: (1, 0), 18: (0, 1), 20: (2, 0), 22: (1, 1), 26: (2, 1)}


class InexactDivision(ArithmeticError):
    pass


class NotPrime(ValueError):
    pass


@dataclass(frozen=True)
class QExpansion:
    """Truncated q-expansion ``sum_{n < precision} coefficients[n] q**n``."""

    coefficients: tuple[int, ...]
    weight: int | None = None

    @property
    def precision(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class SatakeData:
    """Local data at ``p``: ``alpha + beta = a_p`` and ``alpha * beta = q_p``."""

    p: int
    a_p: int
    q_p: int
    weight: int | None = None

    @property
    def unitary(self) -> float:
        """Normalized eigenvalue ``a_p / sqrt(q_p)``."""
        return self.a_p / math.sqrt(self.q_p)


def _check_weight(weight: int) -> int:
    if weight not in _EISENSTEIN_FACTORS:
        raise ValueError(f"weight must be one of {WEIGHTS}, got {weight}")
    return weight


def _pack(coeffs, width: int) -> int:
    # little-endian base 2**(8*width) evaluation of a nonnegative sequence
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in coeffs), "little")


def series_mul(a, b, n: int | None = None) -> list[int]:
    """Exact product of integer sequences, truncated (or zero-padded) to ``n`` terms.

    Kronecker substitution: both series are packed into big integers, a
    single big-integer product is formed, and the digits are read back.
    """
    full = len(a) + len(b) - 1 if a and b else 0
    if n is None:
        n = full
    if n > full:
        return series_mul(a, b, full) + [0] * (n - full) if full else [0] * n
    if n <= 0:
        return []
    a, b = list(a[:n]), list(b[:n])
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    width = (bound.bit_length() + 2) // 8 + 1

    def signed_pack(seq):
        return _pack([c if c > 0 else 0 for c in seq], width) - _pack([-c if c < 0 else 0 for c in seq], width)

    prod = signed_pack(a) * signed_pack(b)
    half = 1 << (8 * width - 1)
    # shift every digit into [0, 2**(8w)) so the packed integer is nonnegative
    offset = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * n, "little")
    shifted = (prod + offset) & ((1 << (8 * width * n)) - 1)
    raw = shifted.to_bytes(width * n, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(n)]


def _divisor_power_sums(k: int, n: int) -> list[int]:
    sig = [0] * n
    for d in range(1, n):
        dk = d**k
        for m in range(d, n, d):
            sig[m] += dk
    return sig


def eisenstein(k: int, precision: int) -> QExpansion:
    """``E4 = 1 + 240 sum sigma_3(n) q^n`` or ``E6 = 1 - 504 sum sigma_5(n) q^n``."""
    if k not in (4, 6):
        raise ValueError("only E4 and E6 are provided")
    if precision < 1:
        raise ValueError("precision must be positive")
    scale, power = (240, 3) if k == 4 else (-504, 5)
    sig = _divisor_power_sums(power, precision)
    return QExpansion((1,) + tuple(scale * s for s in sig[1:]), weight=k)


def _cache_file(cache_dir, weight: int, precision: int) -> Path:
    return Path(cache_dir) / f"weight{weight}_prec{precision}.txt"


def write_qexp(path, qexp: QExpansion) -> None:
    """Write ``qexp`` as a header line then one decimal integer per line."""
    lines = [f"weight={qexp.weight} precision={qexp.precision}"]
    lines.extend(str(c) for c in qexp.coefficients)
    Path(path).write_text("\n".join(lines) + "\n")


def read_qexp(path) -> QExpansion:
    lines = Path(path).read_text().split()
    header = dict(field.split("=") for field in lines[:2])
    weight, precision = int(header["weight"]), int(header["precision"])
    coeffs = tuple(int(x) for x in lines[2:])
    if len(coeffs) != precision:
        raise ValueError(f"{path}: header says {precision} coefficients, found {len(coeffs)}")
    return QExpansion(coeffs, weight=weight)


# longest expansion computed so far per weight; shorter requests are sliced
# from it.  Plain dict writes are atomic, and any entry gives the same values.
_longest: dict[int, QExpansion] = {}


@lru_cache(maxsize=32)
def _compute_qexp(weight: int, precision: int) -> QExpansion:
    e4 = eisenstein(4, precision).coefficients
    e6 = eisenstein(6, precision).coefficients
    e4_cubed = series_mul(series_mul(e4, e4, precision), e4, precision)
    e6_sq = series_mul(e6, e6, precision)
    delta = []
    for x, y in zip(e4_cubed, e6_sq):
        d, r = divmod(x - y, 1728)
        if r:
            raise InexactDivision("E4^3 - E6^2 not divisible by 1728")
        delta.append(d)
    i, j = _EISENSTEIN_FACTORS[weight]
    f = delta
    for _ in range(i):
        f = series_mul(f, e4, precision)
    for _ in range(j):
        f = series_mul(f, e6, precision)
    return QExpansion(tuple(f), weight=weight)


def eigenform_qexp(weight: int, precision: int, cache_dir=None) -> QExpansion:
    """Normalized eigenform of ``weight`` to ``precision`` coefficients.

    With ``cache_dir`` the expansion is read from / written to a text file
    ``weight{k}_prec{N}.txt`` in that directory.
    """
    _check_weight(weight)
    if not 2 <= precision <= MAX_PRECISION:
        raise ValueError(f"precision must lie in [2, {MAX_PRECISION}]")
    if cache_dir is not None:
        path = _cache_file(cache_dir, weight, precision)
        if path.exists():
            return read_qexp(path)
    best = _longest.get(weight)
    if best is not None and best.precision >= precision:
        qexp = QExpansion(best.coefficients[:precision], weight=weight)
    else:
        qexp = _compute_qexp(weight, precision)
        _longest[weight] = qexp
    if cache_dir is not None:
        Path(cache_dir).mkdir(parents=True, exist_ok=True)
        write_qexp(path, qexp)
    return qexp


def hecke_a(weight: int, n: int) -> int:
    """Hecke eigenvalue ``a(n)``, the n-th coefficient of the eigenform."""
    _check_weight(weight)
    if n < 1:
        raise ValueError("n must be positive")
    best = _longest.get(weight)
    if best is None or best.precision <= n:
        best = eigenform_qexp(weight, max(64, 1 << n.bit_length()))
    return best[n]


def satake(weight: int, p: int) -> SatakeData:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    return SatakeData(p=p, a_p=hecke_a(weight, p), q_p=p ** (weight - 1), weight=weight)


def primes_up_to(bound: int) -> list[int]:
    return list(primerange(2, bound + 1))
