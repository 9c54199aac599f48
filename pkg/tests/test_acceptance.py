"""Acceptance gate: ten criteria, each printed as a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the summary section lists every
criterion) or ``python tests/test_acceptance.py``.
"""

import json
import math
import random
import subprocess
import sys
import time
from itertools import combinations_with_replacement
from math import gcd

import jsonschema
import pytest

import symlift.euler as euler
import symlift.rep_expr as rep_expr
from oracles import brute_sym_power, schur_support, sieve_primes, tau_product_oracle
from symlift.char_ring import Character, SchurDecomposition, decompose, dimension, plethysm_sym, sym_char, tensor
from symlift.cli import main, report_schema
from symlift.eigenforms import WEIGHTS, eigenform_qexp, satake
from symlift.euler import dirichlet_coefficients, gamma_shifts, verify_gamma_identity, verify_local_identity
from symlift.rep_expr import Det, Dual, IsobaricSum, Pi, Sym, Tensor, eval_char, lift, render


def test_criterion_01_clebsch_gordan(criterion):
    with criterion(1, "Clebsch-Gordan matrix 0 <= n1 <= n2 <= 20, under 1 s"):
        start = time.perf_counter()
        for n2 in range(21):
            for n1 in range(n2 + 1):
                got = decompose(tensor(sym_char(n1), sym_char(n2))).as_tuples()
                assert got == [(n1 + n2 - 2 * j, j, 1) for j in range(n1 + 1)], (n1, n2)
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"{elapsed:.2f} s"


PAIRS = [(n1, n2) for n1 in range(1, 36) for n2 in range(n1, 36) if (n1 + 1) * (n2 + 1) <= 36]


def test_criterion_02_main_local_identity(criterion):
    with criterion(2, "local identity, six weights, (n1+1)(n2+1) <= 36, p <= 100, under 60 s"):
        # start cold so the timing covers the symbolic expansion too
        euler._factor_forms.cache_clear()
        rep_expr.eval_char.cache_clear()
        primes = sieve_primes(100)
        start = time.perf_counter()
        checked = 0
        for k in WEIGHTS:
            for n1, n2 in PAIRS:
                src = f"sym^{n1}(pi)*sym^{n2}(pi)"
                for p in primes:
                    out = verify_local_identity(src, k, p)
                    assert out.passed, (k, n1, n2, p)
                    assert out.lhs == out.rhs and all(isinstance(c, int) for c in out.lhs)
                    assert out.degree == (n1 + 1) * (n2 + 1)
                    checked += 1
        elapsed = time.perf_counter() - start
        assert checked == len(WEIGHTS) * len(PAIRS) * len(primes)
        assert elapsed < 60.0, f"{elapsed:.1f} s"


TRIPLES = [
    t for t in combinations_with_replacement(range(1, 16), 3) if math.prod(n + 1 for n in t) <= 32
]


def test_criterion_03_iterated_lifts(criterion):
    with criterion(3, "triple products with prod(n_i+1) <= 32, p <= 50"):
        assert len(TRIPLES) == 12
        for t in TRIPLES:
            src = "*".join(f"sym^{n}(pi)" for n in t)
            d = lift(src)
            deg = math.prod(n + 1 for n in t)
            assert d.total_degree == deg
            assert sum(d.levi_blocks) == deg
            for p in sieve_primes(50):
                out = verify_local_identity(src, 12, p)
                assert out.passed and out.degree == deg, (t, p)


def test_criterion_04_tau_oracle(criterion):
    with criterion(4, "weight-12 coefficients of pi equal q*prod(1-q^n)^24 for n <= 10^4"):
        N = 10_000
        oracle = tau_product_oracle(N)
        dc = dirichlet_coefficients("pi", 12, N)
        mismatches = [n for n in range(1, N + 1) if dc[n] != oracle[n]]
        assert not mismatches, mismatches[:5]


@pytest.mark.parametrize("k", WEIGHTS)
def test_criterion_05_hecke_laws(k, criterion):
    with criterion(5, "Hecke multiplicativity and prime-power recursion to 10^4, all weights"):
        N = 10_000
        a = eigenform_qexp(k, N + 1).coefficients
        assert a[1] == 1
        for m in range(2, N + 1):
            for n in range(m + 1, N // m + 1):
                if gcd(m, n) == 1:
                    assert a[m * n] == a[m] * a[n], (m, n)
        for p in sieve_primes(N):
            pr = p
            while pr * p <= N:
                assert a[pr * p] == a[p] * a[pr] - p ** (k - 1) * a[pr // p], (p, pr)
                pr *= p


def genuine_small_characters(max_dim=5, twists=(-1, 0, 1)):
    """Every sum of ``sym^a det^b`` with ``b`` in ``twists`` and total dimension <= max_dim."""
    irreducibles = [(a, b) for a in range(max_dim) for b in twists]
    found = []

    def extend(start, dim, chosen):
        if chosen:
            found.append(Character(schur_support([(a, b, 1) for a, b in chosen])))
        for idx in range(start, len(irreducibles)):
            a, b = irreducibles[idx]
            if dim + a + 1 <= max_dim:
                extend(idx, dim + a + 1, chosen + [(a, b)])

    extend(0, 0, [])
    return found


def test_criterion_06_plethysm_oracle(criterion):
    with criterion(6, "plethysm vs multiset enumeration, genuine dim <= 5, m <= 4; Sym^2(sym^2)"):
        chars = genuine_small_characters()
        # independent count: coefficients 1..5 of prod_w (1 - x^w)^-3
        series = [1] + [0] * 5
        for w in range(1, 6):
            for _ in range(3):
                for i in range(w, 6):
                    series[i] += series[i - w]
        assert len(chars) == len(set(chars)) == sum(series[1:])
        for c in chars:
            for m in range(5):
                got = plethysm_sym(c, m)
                if m == 0:
                    assert got == sym_char(0)
                else:
                    assert got.support == brute_sym_power(c.support, m), (c, m)
        s22 = eval_char(Sym(2, Sym(2, Pi())))
        assert decompose(s22).as_tuples() == [(4, 0, 1), (0, 2, 1)]
        assert dimension(s22) == 6


def test_criterion_07_unitary_identities(criterion):
    with criterion(7, "lambda^2 = lambda_sym2 + 1 and lambda^3 = lambda_sym3 + 2 lambda, p <= 1000"):
        X = 1000
        lam = dirichlet_coefficients("pi", 12, X).unitary
        s2 = dirichlet_coefficients("sym^2(pi)", 12, X).unitary
        s3 = dirichlet_coefficients("sym^3(pi)", 12, X).unitary
        for p in sieve_primes(X):
            ref = satake(12, p).unitary
            assert abs(lam[p] - ref) <= 1e-12
            assert abs(lam[p] ** 2 - (s2[p] + 1)) <= 1e-9, p
            assert abs(lam[p] ** 3 - (s3[p] + 2 * lam[p])) <= 1e-9, p


def random_expression(rng, depth=3):
    if depth == 0 or rng.random() < 0.3:
        return Pi() if rng.random() < 0.85 else Det(rng.randint(-2, 2))
    kind = rng.choice(["sym", "sym", "tensor", "sum", "dual"])
    if kind == "sym":
        return Sym(rng.randint(0, 4), random_expression(rng, depth - 1))
    if kind == "tensor":
        return Tensor(random_expression(rng, depth - 1), random_expression(rng, depth - 1))
    if kind == "sum":
        return IsobaricSum(random_expression(rng, depth - 1), random_expression(rng, depth - 1))
    return Dual(random_expression(rng, depth - 1))


def test_criterion_08_gamma_bookkeeping(criterion):
    with criterion(8, "2|Gamma_C| + |Gamma_R| = dimension for 100 random expressions; sym^2 at 12"):
        rng = random.Random(20240608)
        seen = set()
        while len(seen) < 100:
            e = random_expression(rng)
            if dimension(eval_char(e)) > 40 or render(e) in seen:
                continue
            seen.add(render(e))
            k = rng.choice(WEIGHTS)
            g = gamma_shifts(e, k)
            assert 2 * len(g.complex_shifts) + len(g.real_parities) == dimension(eval_char(e)), render(e)
            assert verify_gamma_identity(e, k).passed, render(e)
        g = gamma_shifts("sym^2(pi)", 12)
        assert list(g.complex_shifts) == [11] and list(g.real_parities) == [1]


@pytest.mark.parametrize("k", WEIGHTS)
def test_criterion_09_deligne_bound(k, criterion):
    with criterion(9, "|a_p| <= 2 p^((k-1)/2) (1 + 1e-9) for p <= 10^4, all weights"):
        eigenform_qexp(k, 10_001)
        for p in sieve_primes(10_000):
            sd = satake(k, p)
            assert abs(sd.a_p) <= 2 * p ** ((k - 1) / 2) * (1 + 1e-9), p
            assert sd.a_p**2 <= 4 * sd.q_p, p


def _cli_json(argv, capsys):
    code = main(argv)
    out, _ = capsys.readouterr()
    return code, out


def test_criterion_10_cli_contract(criterion, monkeypatch, capsys, tmp_path):
    with criterion(10, "CLI exit codes 0/1/2, schema-valid reports, --jobs 8 identical to --jobs 1"):
        schema = report_schema()
        code, out = _cli_json(["verify", "pi*pi", "--weight", "12", "--primes-up-to", "100"], capsys)
        assert code == 0
        jsonschema.validate(json.loads(out), schema)

        assert main(["decompose", "sym^2(pi"]) == 2
        with pytest.raises(SystemExit) as info:
            main(["verify", "pi", "--weight", "14"])
        assert info.value.code == 2
        capsys.readouterr()

        outs = []
        for jobs in ("1", "8"):
            path = tmp_path / f"r{jobs}.json"
            proc = subprocess.run(
                [sys.executable, "-m", "symlift", "verify", "sym^3(pi)*sym^3(pi)", "--weight", "16",
                 "--primes-up-to", "100", "--jobs", jobs, "--no-timing", "--output", str(path)],
                capture_output=True,
            )
            assert proc.returncode == 0, proc.stderr
            outs.append(path.read_bytes())
            jsonschema.validate(json.loads(outs[-1]), schema)
        assert outs[0] == outs[1]

        real = euler.decompose

        def shifted(c):
            d = real(c)
            return SchurDecomposition(tuple((a, b + 1, m) for a, b, m in d))

        monkeypatch.setattr(euler, "decompose", shifted)
        code, out = _cli_json(["verify", "pi*pi", "--primes-up-to", "20"], capsys)
        assert code == 1
        report = json.loads(out)
        jsonschema.validate(report, schema)
        assert report["status"] == "fail"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
