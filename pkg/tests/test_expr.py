import math

import pytest

from monadica.errors import DomainError, OutOfDomain
from monadica.expr import (
    Compose,
    Const,
    Cos,
    Exp,
    Log,
    PowReal,
    Root,
    Sin,
    Var,
    differentiate,
    parse,
    pow_int,
)

X = Var()


class TestEvaluation:
    def test_polynomial(self):
        e = pow_int(X, 2) + 3 * X
        assert e.eval_real(2.0) == 10.0

    def test_division_by_zero(self):
        with pytest.raises(OutOfDomain):
            (Const(1.0) / X).eval_real(0.0)

    def test_log_and_root_domains(self):
        with pytest.raises(OutOfDomain):
            Log(X).eval_real(0.0)
        with pytest.raises(OutOfDomain):
            Root(X, 2).eval_real(-1.0)
        with pytest.raises(OutOfDomain):
            PowReal(X, 0.5).eval_real(-2.0)

    def test_compose(self):
        e = Compose(Sin(X), pow_int(X, 2))
        assert e.eval_real(2.0) == math.sin(4.0)


class TestDifferentiation:
    def test_square(self):
        d = differentiate(pow_int(X, 2))
        assert d.eval_real(5.0) == 10.0

    def test_exponential_is_its_own_derivative(self):
        assert differentiate(Exp(X)) == Exp(X)

    def test_constant(self):
        assert differentiate(Const(4.0)) == Const(0.0)

    def test_primitive_rules(self):
        assert differentiate(Log(X)).eval_real(2.0) == 0.5
        assert differentiate(Sin(X)).eval_real(0.7) == math.cos(0.7)
        assert differentiate(Cos(X)).eval_real(0.7) == -math.sin(0.7)
        assert differentiate(PowReal(X, 1.5)).eval_real(4.0) == 1.5 * 4.0**0.5

    def test_quotient_rule(self):
        e = X / (Const(1.0) + pow_int(X, 2))
        got = differentiate(e).eval_real(2.0)
        assert got == pytest.approx((1 * 5 - 2 * 4) / 25, rel=1e-15)

    def test_chain_rule_through_compose(self):
        e = Compose(Exp(X), Sin(X))
        got = differentiate(e).eval_real(0.5)
        want = math.exp(math.sin(0.5)) * math.cos(0.5)
        assert got == pytest.approx(want, rel=1e-15)

    def test_higher_orders_fold(self):
        d3 = differentiate(pow_int(X, 2), 3)
        assert d3 == Const(0.0)


class TestParser:
    def test_arithmetic(self):
        assert parse("x^2 + 3*x").eval_real(2.0) == 10.0
        assert parse("(1 + x) * (1 - x)").eval_real(0.5) == 0.75
        assert parse("-x^2").eval_real(3.0) == -9.0
        assert parse("2e-3 * x").eval_real(1.0) == 0.002

    def test_functions(self):
        assert parse("exp(x)").eval_real(1.0) == math.e
        assert parse("sqrt(x)").eval_real(4.0) == 2.0
        assert parse("root(3, x)").eval_real(8.0) == pytest.approx(2.0, rel=1e-15)
        assert parse("pow(0.5, x)").eval_real(9.0) == 3.0
        assert parse("sin(pi)").eval_real(0.0) == math.sin(math.pi)

    def test_power_kinds(self):
        assert parse("x^2").eval_real(-3.0) == 9.0
        assert parse("x**2").eval_real(3.0) == 9.0
        assert parse("x^-1").eval_real(4.0) == 0.25
        with pytest.raises(OutOfDomain):
            parse("x^0.5").eval_real(-3.0)

    def test_rejects_garbage(self):
        for text in ("x +", "f(x)", "root(x, 2)", "x ^ x", "1 2", "@"):
            with pytest.raises(DomainError):
                parse(text)
