"""Cardinality bounds, membership criteria, and the quadratic sweep."""

import pytest

from algdigits import (
    F2Verdict,
    PrecisionError,
    UnsupportedBaseError,
    all_conjugates_gt,
    classify_f_index,
    f2_analysis,
    kovacs_sufficient,
    m1_obstruction,
    make_base,
    quadratic_cns,
    sweep_quadratic,
)


class TestQuadraticCriterion:
    def test_table(self):
        assert quadratic_cns(-1, 2)
        assert quadratic_cns(0, 2)
        assert quadratic_cns(2, 2)
        assert quadratic_cns(3, 3)
        assert not quadratic_cns(3, 2)
        assert not quadratic_cns(-2, 3)
        assert not quadratic_cns(0, 1)
        assert not quadratic_cns(-2, 2)


class TestChainCriterion:
    def test_holds(self):
        assert kovacs_sufficient("x^3 + x^2 + x + 2")
        assert kovacs_sufficient("x^2 + 2x + 2")
        assert kovacs_sufficient("x^4 + x^3 + 2x^2 + 3x + 3")

    def test_fails(self):
        assert not kovacs_sufficient("x^2 + 3x + 2")   # chain decreases
        assert not kovacs_sufficient("x^2 + 2x + 1")   # a_d < 2
        assert not kovacs_sufficient("x^2 + 2")        # a_1 = 0
        assert not kovacs_sufficient("x - 2")          # degree 1

    def test_non_monic(self):
        with pytest.raises(UnsupportedBaseError):
            kovacs_sufficient("2x^2 + 2x + 2")


class TestUnitEvaluation:
    def test_obstruction(self):
        assert m1_obstruction(make_base("x - 2"))
        assert m1_obstruction(make_base("x^2 - 2"))
        assert m1_obstruction(make_base("2x^2 - 3x + 2"))
        assert not m1_obstruction(make_base("x^2 + 2x + 2"))
        assert not m1_obstruction(make_base("x + 2"))


class TestConjugateComparison:
    def test_linear_exact(self):
        base = make_base("x - 2")
        assert all_conjugates_gt(base, 1)
        assert not all_conjugates_gt(base, 2)
        assert all_conjugates_gt(base, "3/2")  # Fraction-parseable thresholds

    def test_quadratic(self):
        assert all_conjugates_gt(make_base("x^2 + 6"), 2)
        assert not all_conjugates_gt(make_base("x^2 + 2"), 2)

    def test_exact_boundary_resolves(self):
        # both moduli equal 2 exactly and the enclosures collapse
        assert not all_conjugates_gt(make_base("x^2 + 4"), 2)

    def test_irrational_boundary_raises(self):
        # moduli equal 2 exactly but the enclosures never collapse
        with pytest.raises(PrecisionError):
            all_conjugates_gt(make_base("x^2 + x + 4"), 2)


CLASSIFY_CASES = [
    ("x - 2", 3, 3, 3),
    ([-3, 2], 4, 5, 5),
    ("x - 5", 5, 5, 5),
    ("x + 2", 2, 2, 2),
    ("2x^2 - 3x + 2", 3, None, None),
    ("x^2 + 2x + 2", 2, 3, None),
    ("x^2 + x + 1", 2, 2, 2),
    ("x^2 + 6", 6, 6, 6),
]


class TestClassify:
    @pytest.mark.parametrize("poly,lower,upper,exact", CLASSIFY_CASES)
    def test_bounds(self, poly, lower, upper, exact):
        report = classify_f_index(make_base(poly))
        assert report.lower == lower
        assert report.upper == upper
        assert report.exact == exact

    def test_certificates(self):
        report = classify_f_index(make_base("x - 2"))
        names = [c[0] for c in report.certificates]
        assert names[0] == "residue-cardinality"
        assert "unit-evaluation-obstruction" in names
        assert "rational-degenerate" in names
        for cert in report.certificates:
            assert len(cert) == 3
            assert all(isinstance(part, str) for part in cert)

    def test_deep_expansion_certificate(self):
        report = classify_f_index(make_base("x^2 + 6"))
        assert any(c[0] == "deep-expansion" for c in report.certificates)

    def test_unimodular_certificate(self):
        report = classify_f_index(make_base("2x^2 - 3x + 2"))
        assert any(c[0] == "nonintegral-digits" for c in report.certificates)

    def test_json_round(self):
        payload = classify_f_index(make_base("x + 2")).to_json_dict()
        assert payload["lower"] == payload["upper"] == payload["exact"] == 2
        assert isinstance(payload["certificates"], list)


F2_CASES = [
    ("x + 1", F2Verdict.IN_F2),
    ("x^2 + x + 1", F2Verdict.IN_F2),
    ("x + 2", F2Verdict.IN_F2),
    ("x - 2", F2Verdict.EXCLUDED_BY_M1),
    ("x - 3", F2Verdict.EXCLUDED_BY_NECESSARY),
    ([-3, 2], F2Verdict.EXCLUDED_BY_NECESSARY),
    ("x^2 - 2", F2Verdict.EXCLUDED_BY_M1),
    ("2x^2 - 3x + 2", F2Verdict.EXCLUDED_BY_M1),
    ("2x^2 + x + 2", F2Verdict.POSSIBLY_IN_F2),
    ("x^3 + 2", F2Verdict.POSSIBLY_IN_F2),
    ("x^2 + 3", F2Verdict.EXCLUDED_BY_NECESSARY),
    ("x^2 - x - 1", F2Verdict.EXCLUDED_BY_NECESSARY),
]


class TestF2:
    @pytest.mark.parametrize("poly,verdict", F2_CASES)
    def test_verdicts(self, poly, verdict):
        analysis = f2_analysis(make_base(poly))
        assert analysis.verdict is verdict
        assert analysis.reason

    def test_witness_digits(self):
        analysis = f2_analysis(make_base("x + 2"))
        assert analysis.witness_digits == (0, 1)
        assert f2_analysis(make_base("x - 2")).witness_digits is None

    def test_value_is_string(self):
        assert f2_analysis(make_base("x + 1")).verdict.value == "InF2"


class TestSweep:
    def test_small_sweep(self):
        rows = sweep_quadratic(3)
        assert len(rows) == 12
        assert all(row.agree for row in rows)
        pairs = {(row.a1, row.a2) for row in rows}
        assert (3, 2) not in pairs      # reducible, skipped
        assert (4, 2) not in pairs      # mixed, skipped
        by_pair = {(row.a1, row.a2): row for row in rows}
        assert by_pair[(-2, 2)].criterion is False
        assert by_pair[(-2, 2)].brute_force is False
        assert by_pair[(2, 2)].criterion is True
        assert by_pair[(2, 2)].brute_force is True

    def test_jobs_agree(self):
        assert sweep_quadratic(2) == sweep_quadratic(2, jobs=2)
