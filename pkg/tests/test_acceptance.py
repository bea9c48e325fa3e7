"""Acceptance suite: one test per criterion, exact equality throughout.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion.
"""

import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import prod

from apolar.annihilator import (
    GradedIdeal,
    catalecticant,
    hilbert_function,
    ideal_graded_dimension,
    minimal_generators,
    scheme_degree,
    verify_apolar_ideal,
)
from apolar.fields import QQ, PrimeField
from apolar.poly import (
    RING_S,
    Form,
    ProjectivePoint,
    contract,
    monomial_basis,
    parse_form,
)
from apolar.ranks import (
    ci_degree,
    generator_degree_bound,
    monomial_apolar_ci,
    monomial_form,
    monomial_rank,
    monomial_rank_certificate,
    waring_fit,
)

GF101 = PrimeField(101)


def _suite_monomials():
    for n in (1, 2, 3):
        for exps in itertools.product((1, 2, 3), repeat=n + 1):
            yield exps


def _power_ideal(exps, field):
    nvars = len(exps)
    gens = [
        Form.monomial(nvars, field, tuple(d + 1 if j == i else 0 for j in range(nvars)), ring=RING_S)
        for i, d in enumerate(exps)
    ]
    return GradedIdeal(nvars, field, gens)


def test_criterion_1_monomial_exhaustive_suite():
    start = time.time()
    cases = 0
    for exps in _suite_monomials():
        F = monomial_form(exps, QQ)
        e = sum(exps)
        expected_length = prod(d + 1 for d in exps)

        hilbert = hilbert_function(F)
        assert hilbert.length == expected_length

        I = minimal_generators(F)
        powers = _power_ideal(tuple(sorted(exps)), QQ)
        for k in range(e + 2):
            assert ideal_graded_dimension(I, k) == ideal_graded_dimension(powers, k)
        assert verify_apolar_ideal(powers, F)

        report = generator_degree_bound(F)
        expected_bound = Fraction(expected_length, max(exps) + 1)
        assert report.bound_exact == expected_bound
        assert report.bound_exact == monomial_rank(exps).cactus_rank
        cases += 1
    elapsed = time.time() - start
    assert elapsed < 60
    print(f"\nACCEPTANCE 1: PASS - {cases} monomials, generators/length/bound exact ({elapsed:.1f}s)")


def test_criterion_2_gorenstein_symmetry():
    start = time.time()
    rng = random.Random(20260823)

    def random_dense_form(field, qq=False):
        nvars = rng.randint(2, 4)  # n in {1, 2, 3}
        e = rng.randint(1, 6)
        terms = {}
        for exps in monomial_basis(nvars, e):
            if qq:
                terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            else:
                terms[exps] = rng.randrange(101)
        F = Form(nvars, field, terms)
        return F if not F.is_zero else random_dense_form(field, qq)

    checked = 0
    for field, qq, count in ((GF101, False, 100), (QQ, True, 20)):
        for _ in range(count):
            F = random_dense_form(field, qq)
            e = F.degree
            h = hilbert_function(F)
            assert h.values[0] == 1
            assert h.values == tuple(reversed(h.values))
            for k in range(e + 1):
                direct = catalecticant(F, k).matrix.rank()
                via_transpose = catalecticant(F, e - k).matrix.transpose().rank()
                assert h.values[k] == direct == via_transpose
            checked += 1
    elapsed = time.time() - start
    assert elapsed < 120
    print(f"ACCEPTANCE 2: PASS - {checked} random forms, h_k = h_(e-k) and transpose ranks exact ({elapsed:.1f}s)")


def test_criterion_3_rank_certificates():
    start = time.time()
    cases = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
    smallest_prime = {1: None, 2: 7, 3: 5, 4: 11}
    for n, d in cases:
        field = QQ if d == 1 else PrimeField(smallest_prime[d])
        certificate = monomial_rank_certificate(n, d, field)
        target = (d + 1) ** n
        assert certificate.rank == target
        assert certificate.lower_bound.bound_exact == target
        assert len(certificate.decomposition.points) == target
        assert certificate.decomposition.expand() == certificate.form
    elapsed = time.time() - start
    assert elapsed < 300
    print(f"ACCEPTANCE 3: PASS - {len(cases)} certificates, decompositions re-expand exactly ({elapsed:.1f}s)")


def test_criterion_4_complete_intersection_degree_consistency():
    start = time.time()
    for exps in _suite_monomials():
        sorted_exps = tuple(sorted(exps))
        e = sum(exps)
        ci = monomial_apolar_ci(sorted_exps, QQ)
        bezout = ci_degree(ci)
        stabilized = scheme_degree(ci, e + 5)
        expected = monomial_rank(exps).cactus_rank
        assert stabilized == bezout.degree == expected
        assert bezout.flag == "finite"
    elapsed = time.time() - start
    print(f"ACCEPTANCE 4: PASS - scheme degree = Bezout degree = cactus rank on all monomials ({elapsed:.1f}s)")


def test_criterion_5_quadric():
    F = parse_form("x0^2 + x1^2 + x2^2", 3, QQ)
    report = generator_degree_bound(F)
    assert report.length == 5
    assert report.bound_exact == Fraction(5, 2)
    assert report.bound_ceiling == 3
    points = [
        ProjectivePoint(QQ, [Fraction(1), Fraction(0), Fraction(0)]),
        ProjectivePoint(QQ, [Fraction(0), Fraction(1), Fraction(0)]),
        ProjectivePoint(QQ, [Fraction(0), Fraction(0), Fraction(1)]),
    ]
    decomposition = waring_fit(F, points)
    assert decomposition is not None
    assert decomposition.expand() == F
    print("ACCEPTANCE 5: PASS - quadric: length 5, bound 5/2 (ceiling 3), rank 3 decomposition exact")


def test_criterion_6_apolarity_action_laws():
    start = time.time()
    rng = random.Random(6)

    def random_dual(nvars, degree):
        terms = {exps: rng.randrange(101) for exps in monomial_basis(nvars, degree)}
        return Form(nvars, GF101, terms, RING_S)

    def random_form(nvars, degree):
        terms = {exps: rng.randrange(101) for exps in monomial_basis(nvars, degree)}
        return Form(nvars, GF101, terms)

    triples = 0
    while triples < 500:
        nvars = rng.randint(2, 3)
        k = rng.randint(1, 2)
        g1 = random_dual(nvars, k)
        g2 = random_dual(nvars, rng.randint(1, 2))
        F = random_form(nvars, rng.randint(2, 5))
        g1b = random_dual(nvars, k)
        assert contract(g1 + g1b, F) == contract(g1, F) + contract(g1b, F)
        assert contract(g1, contract(g2, F)) == contract(g1 * g2, F)
        triples += 1
    elapsed = time.time() - start
    print(f"ACCEPTANCE 6: PASS - bilinearity and module law on {triples} random triples ({elapsed:.1f}s)")


def test_criterion_7_cli_contract(tmp_path):
    start = time.time()
    points_file = tmp_path / "points.txt"
    points_file.write_text("1:1\n1:-1\n")
    invocations = [
        (["annihilator", "--form", "x0*x1^2*x2^3", "--field", "QQ"], 0),
        (["annihilator", "--form", "x0^3", "--nvars", "1"], 0),
        (["annihilator", "--form", "x0 + x1^2"], 3),
        (["rank-bound", "--form", "x0*x1^2*x2^3"], 0),
        (["rank-bound", "--form", "x0^2+x1^2+x2^2"], 0),
        (["rank-bound", "--form", "x0^5"], 0),
        (["monomial", "--exponents", "1,2,3"], 0),
        (["monomial", "--exponents", "2,2,2"], 0),
        (["monomial", "--exponents", "0,3"], 0),
        (["certify", "-n", "2", "-d", "2", "--field", "Fp:7"], 0),
        (["certify", "-n", "1", "-d", "1", "--field", "QQ"], 0),
        (["certify", "-n", "2", "-d", "2", "--field", "QQ"], 3),
        (["verify", "--form", "x0*x1^2", "--ideal", "y0^2;y1^3"], 0),
        (["verify", "--form", "x0*x1", "--points", str(points_file)], 0),
        (["verify", "--form", "x0*x1", "--ideal", "y0"], 0),
    ]
    for args, expected_code in invocations:
        first = subprocess.run(
            [sys.executable, "-m", "apolar", *args, "--json", "-"],
            capture_output=True,
            text=True,
        )
        second = subprocess.run(
            [sys.executable, "-m", "apolar", *args, "--json", "-"],
            capture_output=True,
            text=True,
        )
        assert first.returncode == expected_code, (args, first.returncode, first.stdout)
        assert first.stdout == second.stdout and first.returncode == second.returncode
        report = json.loads(first.stdout)
        assert (first.returncode == 0) == ("error" not in report)
    elapsed = time.time() - start
    print(f"ACCEPTANCE 7: PASS - {len(invocations)} CLI invocations, exit codes and byte-stable JSON ({elapsed:.1f}s)")
