import pytest

from monadica.calculus import (
    MonadRule,
    PiecewiseExtension,
    ode_verify,
    pw_derivative_at,
    pw_eval,
)
from monadica.core import make
from monadica.errors import DomainError, ProvisoViolated, RegionMismatch
from monadica.expr import Const, Neg, Var, pow_int

X = Var()


def vee_solution():
    # matches |t| on the reals; flat on the central monad apart from its slope
    return PiecewiseExtension((0.0,), (Neg(X), X), (MonadRule(0.0, 1.0),))


def vee_rhs():
    return PiecewiseExtension((0.0,), (Const(-1.0), Const(1.0)), (MonadRule(1.0, 0.0),))


def step_solution():
    return PiecewiseExtension((0.0,), (Const(0.0), Const(1.0)), (MonadRule(1.0, 1.0),))


def step_rhs():
    return PiecewiseExtension((0.0,), (Const(0.0), Const(0.0)), (MonadRule(1.0, 0.0),))


class TestConstruction:
    def test_region_counts_must_match(self):
        with pytest.raises(DomainError):
            PiecewiseExtension((0.0,), (X,), (MonadRule(0.0, 1.0),))
        with pytest.raises(DomainError):
            PiecewiseExtension((0.0,), (X, X), ())

    def test_breakpoints_strictly_increasing(self):
        with pytest.raises(DomainError):
            PiecewiseExtension(
                (1.0, 1.0), (X, X, X), (MonadRule(1.0, 0.0), MonadRule(1.0, 0.0))
            )


class TestEvaluation:
    def test_dispatch_between_gaps_and_monads(self):
        p = vee_solution()
        assert pw_eval(p, make(-2, {"e:1": 1})) == make(2, {"e:1": -1})
        assert pw_eval(p, make(3)) == make(3)
        assert pw_eval(p, make(0, {"e:1": 2})) == make(0, {"e:1": 2})

    def test_monad_rule_is_affine_in_the_differential(self):
        p = step_solution()
        assert pw_eval(p, make(0, {"h": 3})) == make(1, {"h": 3})
        assert pw_eval(p, make(-1)) == make(0)


class TestDerivativeProviso:
    def test_absolute_value_extension_has_derivative_zero(self):
        p = PiecewiseExtension((0.0,), (Neg(X), X), (MonadRule(0.0, 0.0),))
        assert pw_derivative_at(p, 0.0) == 0.0
        probe = p.limit_probe(0.0)
        assert not probe.exists
        assert "classical limit absent" in probe.detail

    def test_declared_slope_matching_the_classical_limit(self):
        square = pow_int(X, 2)
        p = PiecewiseExtension((3.0,), (square, square), (MonadRule(9.0, 6.0),))
        assert pw_derivative_at(p, 3.0) == 6.0

    def test_proviso_violation(self):
        square = pow_int(X, 2)
        p = PiecewiseExtension((0.0,), (square, square), (MonadRule(0.0, 1.0),))
        with pytest.raises(ProvisoViolated):
            pw_derivative_at(p, 0.0)

    def test_off_breakpoint_derivative_is_classical(self):
        p = vee_solution()
        assert pw_derivative_at(p, -2.0) == -1.0
        assert pw_derivative_at(p, 5.0) == 1.0


class TestOdeVerification:
    def test_vee_solves_the_sign_equation(self):
        reports = ode_verify(vee_solution(), vee_rhs())
        assert all(r.passed for r in reports)
        monad_report = [r for r in reports if r.region.startswith("monad")][0]
        assert "classical limit absent" in monad_report.detail

    def test_step_solves_the_pulse_equation(self):
        reports = ode_verify(step_solution(), step_rhs())
        assert all(r.passed for r in reports)

    def test_wrong_solution_fails_on_the_left_gap(self):
        wrong = PiecewiseExtension((0.0,), (X, X), (MonadRule(0.0, 1.0),))
        reports = ode_verify(wrong, vee_rhs())
        assert not reports[0].passed
        assert reports[1].passed

    def test_region_structures_must_match(self):
        other = PiecewiseExtension(
            (1.0,), (Const(-1.0), Const(1.0)), (MonadRule(1.0, 0.0),)
        )
        with pytest.raises(RegionMismatch):
            ode_verify(vee_solution(), other)

    def test_reports_serialize(self):
        reports = ode_verify(vee_solution(), vee_rhs())
        doc = reports[0].to_dict()
        assert set(doc) == {"region", "status", "detail"}
        assert doc["status"] in ("pass", "fail")
