import random
from math import gcd

import pytest

from oracles import sieve_primes, tau_product_oracle
from symlift.eigenforms import (
    WEIGHTS,
    NotPrime,
    eigenform_qexp,
    eisenstein,
    hecke_a,
    read_qexp,
    satake,
    series_mul,
    write_qexp,
)


def naive_mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("seed", range(20))
def test_series_mul_matches_schoolbook(seed):
    rng = random.Random(seed)
    la, lb = rng.randint(1, 40), rng.randint(1, 40)
    size = rng.choice([1, 10, 10**6, 10**40])
    a = [rng.randint(-size, size) for _ in range(la)]
    b = [rng.randint(-size, size) for _ in range(lb)]
    n = rng.randint(1, la + lb)
    assert series_mul(a, b, n) == naive_mul(a, b, n)
    assert series_mul(a, b) == naive_mul(a, b, la + lb - 1)


def test_series_mul_zeros():
    assert series_mul([0, 0], [0, 5], 3) == [0, 0, 0]
    assert series_mul([], [1]) == []


def test_eisenstein_examples():
    assert eisenstein(4, 3).coefficients == (1, 240, 2160)
    assert eisenstein(6, 2).coefficients == (1, -504)
    assert eisenstein(4, 1).coefficients == (1,)
    with pytest.raises(ValueError):
        eisenstein(8, 3)


def test_eigenform_examples():
    assert eigenform_qexp(12, 4).coefficients == (0, 1, -24, 252)
    assert eigenform_qexp(16, 3).coefficients == (0, 1, 216)
    for k in WEIGHTS:
        q = eigenform_qexp(k, 10)
        assert q[0] == 0 and q[1] == 1
    with pytest.raises(ValueError):
        eigenform_qexp(14, 10)
    with pytest.raises(ValueError):
        eigenform_qexp(12, 1)


def test_tau_matches_product_oracle():
    tau = tau_product_oracle(600)
    q = eigenform_qexp(12, 601)
    assert [q[n] for n in range(1, 601)] == [tau[n] for n in range(1, 601)]


def test_hecke_a_examples():
    assert hecke_a(12, 6) == hecke_a(12, 2) * hecke_a(12, 3) == -6048
    assert hecke_a(12, 4) == hecke_a(12, 2) ** 2 - 2**11 == -1472
    for k in WEIGHTS:
        assert hecke_a(k, 1) == 1


def test_satake_examples():
    sd = satake(12, 2)
    assert (sd.a_p, sd.q_p) == (-24, 2048)
    sd = satake(12, 3)
    assert (sd.a_p, sd.q_p) == (252, 177147)
    with pytest.raises(NotPrime):
        satake(12, 9)
    with pytest.raises(NotPrime):
        satake(12, 1)


@pytest.mark.parametrize("k", WEIGHTS)
def test_hecke_laws_small(k):
    N = 600
    a = eigenform_qexp(k, N).coefficients
    for m in range(1, N):
        for n in range(m + 1, (N - 1) // m + 1):
            if gcd(m, n) == 1:
                assert a[m * n] == a[m] * a[n]
    for p in sieve_primes(N):
        pr, r = p, 1
        while pr * p < N:
            prev = a[pr // p]
            assert a[pr * p] == a[p] * a[pr] - p ** (k - 1) * prev
            pr, r = pr * p, r + 1


@pytest.mark.parametrize("k", WEIGHTS)
def test_deligne_bound_small(k):
    for p in sieve_primes(500):
        sd = satake(k, p)
        assert sd.a_p**2 <= 4 * sd.q_p
        assert abs(sd.unitary) <= 2


def test_cache_file_round_trip(tmp_path):
    q = eigenform_qexp(18, 30, cache_dir=tmp_path)
    path = tmp_path / "weight18_prec30.txt"
    lines = path.read_text().splitlines()
    assert lines[0] == "weight=18 precision=30"
    assert [int(x) for x in lines[1:]] == list(q.coefficients)
    assert read_qexp(path) == q
    # a second call is served from the file: tamper with it to prove it
    lines[3] = "12345"
    path.write_text("\n".join(lines) + "\n")
    assert eigenform_qexp(18, 30, cache_dir=tmp_path)[2] == 12345


def test_read_qexp_rejects_short_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("weight=12 precision=5\n0\n1\n")
    with pytest.raises(ValueError):
        read_qexp(path)


def test_write_qexp(tmp_path):
    q = eigenform_qexp(12, 5)
    write_qexp(tmp_path / "x.txt", q)
    assert (tmp_path / "x.txt").read_text() == "weight=12 precision=5\n0\n1\n-24\n252\n-1472\n"


def test_shorter_requests_reuse_longer_expansion():
    long = eigenform_qexp(20, 300)
    short = eigenform_qexp(20, 50)
    assert short.coefficients == long.coefficients[:50]
