"""
Tests for the theorem checks and the verification report
"""

from fractions import Fraction

import pytest

from config import Config
from src.errors import HyperjacError
from src.series_core import TruncatedSeries
from src.verify import (
    MODE_EXACT,
    MODE_POINTWISE,
    MODE_SERIES,
    ODD_POLAR_NOTE,
    N_EQUALS_ONE_NOTE,
    TheoremCheck,
    Tolerances,
    VerificationReport,
    check_case2_series,
    check_case3_series,
    check_delta_chebyshev,
    check_odd_supplements,
    check_polar_arithmetic,
    check_sig3_sig4_closed_forms,
    check_simple_zero_values,
    check_square_odes,
    check_structure,
    check_thm1,
    check_thm2,
    check_thm3_even,
    check_thm4_thm5_even,
    check_thm7_8_9_odd,
    check_zero_free_obstruction,
    exact_checks_for_n,
    grid_point_checks,
    run_suite,
    sample_points,
    series_residual,
)

EVEN_A = ['1/4', '1/6', '1/8', '1/10']
ODD_A = ['1/3', '1/5', '1/7']


def _all_pass(checks):
    failed = [(c.id, c.max_residual) for c in checks if not c.passed]
    assert not failed


def test_series_residual_is_normalized():
    lhs = TruncatedSeries([100.0, 0.0, 1.0])
    rhs = TruncatedSeries([100.0, 0.0, 1.5])
    assert series_residual(lhs, rhs) == pytest.approx(0.5 / 100.0)
    assert series_residual(TruncatedSeries([0.0, 0.1]), TruncatedSeries([0.0, 0.3])) == pytest.approx(0.2)


def test_sample_points_fill_the_disk():
    points = sample_points(0.4)
    assert len(points) == 20
    assert max(abs(u) for u in points) == pytest.approx(0.4)
    assert min(abs(u) for u in points) > 0
    assert points == sample_points(0.4)


def test_theorem_check_pass_rule():
    ok = TheoremCheck.from_residual('x', None, None, MODE_SERIES, 1e-12, 1e-10)
    bad = TheoremCheck.from_residual('x', None, None, MODE_SERIES, 1e-8, 1e-10)
    nan = TheoremCheck.from_residual('x', None, None, MODE_SERIES, float('nan'), 1e-10)
    assert ok.passed and not bad.passed and not nan.passed
    assert nan.max_residual is None


def test_exact_check_requires_zero():
    assert TheoremCheck.exact('x', None, None, Fraction(0)).passed
    tiny = TheoremCheck.exact('x', None, None, Fraction(1, 10 ** 400))
    assert not tiny.passed
    assert tiny.max_residual > 0


@pytest.mark.parametrize("a", EVEN_A + ODD_A + ['0'])
def test_general_identities(analogue_set, a):
    S = analogue_set(a, 0.95)
    _all_pass(check_thm1(S) + check_thm2(S) + check_structure(S) + check_square_odes(S))


@pytest.mark.parametrize("a", EVEN_A)
@pytest.mark.parametrize("kappa", [0.3, 0.95])
def test_even_case_equations(analogue_set, a, kappa):
    S = analogue_set(a, kappa)
    _all_pass([check_thm3_even(S)] + check_thm4_thm5_even(S))


@pytest.mark.parametrize("a", ODD_A + ['1'])
@pytest.mark.parametrize("kappa", [0.3, 0.95])
def test_odd_case_equations(analogue_set, a, kappa):
    S = analogue_set(a, kappa)
    checks = check_thm7_8_9_odd(S) + check_odd_supplements(S)
    assert [c.id for c in checks[:3]] == ['thm7_cos2psi', 'thm8_partial_ode', 'thm9_nabla_ode']
    _all_pass(checks)


def test_case_guards(sig4_set, odd_set):
    with pytest.raises(HyperjacError):
        check_thm3_even(odd_set)
    with pytest.raises(HyperjacError):
        check_thm7_8_9_odd(sig4_set)
    with pytest.raises(HyperjacError):
        check_delta_chebyshev(sig4_set)
    with pytest.raises(HyperjacError):
        check_case3_series(sig4_set)


def test_delta_chebyshev_when_n_is_odd(analogue_set):
    _all_pass([check_delta_chebyshev(analogue_set('1/6', 0.6)),
               check_delta_chebyshev(analogue_set('1/10', 0.6))])


def test_signature_series_relations(sig4_set, sig3_set):
    checks = check_case2_series(sig4_set) + check_case3_series(sig3_set)
    assert {'case2_d_ode', 'case2_nabla_linear', 'sig4_delta_squared', 'case3_d_squared',
            'case3_nabla_ode'} <= {c.id for c in checks}
    _all_pass(checks)


@pytest.mark.parametrize("kappa", [0.3, 0.6, 0.8])
def test_closed_forms(kappa):
    checks = check_sig3_sig4_closed_forms(kappa)
    modes = {c.id: c.mode for c in checks}
    assert modes['sig4_d_closed'] == MODE_POINTWISE
    assert modes['sig3_discriminant'] == MODE_EXACT
    assert modes['sig4_midpoint_exact'] == MODE_EXACT
    _all_pass(checks)


@pytest.mark.parametrize("n", range(2, 9))
def test_simple_zero_values(n):
    for lam_sq in (Fraction(1, 4), Fraction(9, 25), Fraction(1, 1000)):
        check = check_simple_zero_values(n, lam_sq)
        assert check.passed and check.max_residual == 0 and check.mode == MODE_EXACT


def test_simple_zero_values_needs_n_of_two():
    with pytest.raises(HyperjacError):
        check_simple_zero_values(1, Fraction(1, 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_zero_free_obstruction(n):
    assert check_zero_free_obstruction(n).passed


def test_polar_arithmetic():
    check = check_polar_arithmetic()
    assert check.passed and check.max_residual == 0
    assert not check_polar_arithmetic(limit=2).passed


@pytest.mark.parametrize("n", range(1, 8))
def test_exact_polynomial_checks(n):
    even = exact_checks_for_n(n, odd_case=False)
    odd = exact_checks_for_n(n, odd_case=True)
    _all_pass(even + odd)
    assert ('odd_factorization' in {c.id for c in even}) == (n % 2 == 1)
    assert 'q_poly_origin' in {c.id for c in odd}


def test_builder_failure_becomes_failed_check():
    checks = grid_point_checks(Fraction(1, 4), 0.8, order=2)
    assert [c.id for c in checks] == ['build']
    assert not checks[0].passed and 'order' in checks[0].note


def test_report_validation():
    check = TheoremCheck.from_residual('x', Fraction(1, 4), 0.8, MODE_SERIES, 0.0, 1e-10)
    with pytest.raises(HyperjacError):
        VerificationReport(checks=(), grid={}, timestamp='', version='1')
    with pytest.raises(HyperjacError):
        VerificationReport(checks=(check, check), grid={}, timestamp='', version='1')


def test_report_ordering_and_schema():
    report = run_suite(['1/3', '1/4'], [0.8, 0.3])
    keys = [c.sort_key() for c in report.checks]
    assert keys == sorted(keys)
    assert report.passed
    data = report.to_dict()
    assert list(data) == ['version', 'grid', 'checks', 'notes']
    assert list(data['checks'][0]) == ['id', 'a', 'kappa', 'mode', 'max_residual', 'tolerance', 'pass']
    assert ODD_POLAR_NOTE in data['notes']
    assert data['grid']['a'] == ['1/3', '1/4']
    frame = report.to_frame()
    assert len(frame) == len(report.checks)
    assert frame['pass'].all()


def test_exact_rows_have_no_kappa():
    report = run_suite(['1/6'], [0.6])
    exact = {c.id: c for c in report.checks if c.kappa is None}
    assert {'s_n_identity', 'odd_factorization', 'chebyshev_nesting', 'polar_arithmetic'} <= set(exact)
    assert exact['polar_arithmetic'].a is None
    assert all(c.max_residual == 0 for c in exact.values())


def test_zero_tolerance_forces_failure():
    report = run_suite(['1/4'], [0.8], tol=Tolerances(series=0.0, pointwise=0.0))
    assert not report.passed
    failing = {c.mode for c in report.failures()}
    assert MODE_EXACT not in failing


def test_classical_anchor_in_suite():
    report = run_suite(['0'], [0.3, 0.8])
    ids = {c.id for c in report.checks}
    assert {'classical_s', 'classical_c', 'classical_d', 'classical_amplitude'} <= ids
    assert report.passed


def test_n_equals_one_is_flagged():
    report = run_suite(['1'], [0.6])
    assert N_EQUALS_ONE_NOTE in report.notes
    assert report.passed


def test_parallel_matches_serial():
    serial = run_suite(['1/5', '1/8'], [0.6, 0.95], n_jobs=1)
    threaded = run_suite(['1/5', '1/8'], [0.6, 0.95], n_jobs=2)
    assert serial.to_dict() == threaded.to_dict()


def test_default_grid_passes():
    report = run_suite()
    assert len(report.grid['a']) == len(Config.DEFAULT_A_GRID)
    assert report.passed, [(c.id, str(c.a), c.kappa, c.max_residual) for c in report.failures()]
