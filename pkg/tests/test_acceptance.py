"""Acceptance gate: one test per criterion, at the stated tolerances.

Each test prints a single PASS/FAIL line (run pytest with -s to see them;
`monadica verify` prints the same checks per property).  Counts, tolerances,
and runtime budgets are frozen here and inside monadica.verify.
"""

import os
import time

from monadica import verify

SEED = int(os.environ.get("MONADICA_SEED", "0"))


def _run(number: int, label: str, fn, budget_seconds: float) -> None:
    start = time.perf_counter()
    results = fn(SEED)
    elapsed = time.perf_counter() - start
    failed = [r for r in results if not r.passed]
    status = "FAIL" if failed else "PASS"
    print(
        f"{status} criterion {number:02d} [{label}] "
        f"{len(results) - len(failed)}/{len(results)} checks, {elapsed:.2f}s"
    )
    assert not failed, "; ".join(r.line() for r in failed[:3])
    assert elapsed < budget_seconds, f"{elapsed:.2f}s exceeds {budget_seconds}s budget"


def test_criterion_01_primitive_identities():
    # exp(dx)=1+dx, log(1+dx)=dx, sin(dx)=dx, cos(dx)=1, (1+dx)^a=1+a*dx
    _run(1, "identities", verify.check_identities, 1.0)


def test_criterion_02_ring_and_order_suite():
    # 1000 random triples: ring axioms, trichotomy, order compatibility;
    # 1000 random infinitesimals: structurally exact nilpotency
    _run(2, "ring+order", verify.check_ring, 2.0)


def test_criterion_03_termwise_oracle():
    # 500 random values: 64-term prefixes match the sequence formulas
    _run(3, "termwise oracle", verify.check_oracle, 2.0)


def test_criterion_04_differential_rules():
    # six rules: sum, difference, product, power, inverse, quotient, root
    _run(4, "differential rules", verify.check_differential, 1.0)


def test_criterion_05_set_and_monad_suite():
    # 200 random real sets: monad/shadow laws, topology commutation,
    # interval classification
    _run(5, "sets+monads", verify.check_sets, 2.0)


def test_criterion_06_completeness():
    # 200 random bounded sets: real supremum equals the classical supremum
    _run(6, "completeness", verify.check_completeness, 1.0)


def test_criterion_07_derivative_engine():
    # 200 composites: chain rule + structural evaluation within 1e-9;
    # 200 points: derivative vs central difference within 1e-5 relative
    _run(7, "derivative engine", verify.check_derivative, 3.0)


def test_criterion_08_taylor():
    # exp at 0, order 3, shadow 0.5: partial 1.6458333 (1e-7), theta ~ 0.2068
    # with the Lagrange identity to 1e-10; 100 random expansions never
    # violate the remainder bound
    _run(8, "taylor", verify.check_taylor, 2.0)


def test_criterion_09_mean_value():
    # 100 random instances with nonreal endpoints assemble the identity at
    # coefficient level; real endpoints reduce to the classical statement
    _run(9, "mean value", verify.check_mvt, 1.0)


def test_criterion_10_singular_odes():
    # both piecewise model problems verify; the wrong solution fails; the
    # absolute-value extension reports derivative 0 with an absent limit
    _run(10, "singular odes", verify.check_ode, 1.0)


def test_criterion_11_higher_derivatives():
    # closed-form patterns for square/exp/sin/cos up to order 8 within 1e-12
    _run(11, "higher derivatives", verify.check_higher, 1.0)
