"""Limit-free differential calculus over the generalized continuum.

A real function enters as an expression tree together with an open real
interval on which it (and its symbolic derivative) is valid.  Its natural
extension evaluates as

    value(shadow) + derivative(shadow) * dx,

which is the unique everywhere-differentiable extension.  Structural
evaluation of a whole tree over generalized values (``gen_eval``) agrees
with the natural extension of the composite; Taylor expansion, the mean
value identity, function inversion, set images, and piecewise functions
with explicit monad rules are built on top.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from . import core
from .core import GeneralizedReal, as_generalized
from .errors import (
    DomainError,
    MonadicaError,
    NotDifferentiable,
    NotInjective,
    OutOfDomain,
    ProvisoViolated,
    RegionMismatch,
    VanishingDerivative,
)
from .expr import (
    Add,
    Compose,
    Const,
    Cos,
    Div,
    Exp,
    Expr,
    Log,
    Mul,
    Neg,
    PowInt,
    PowReal,
    Root,
    Sin,
    Sub,
    Var,
    iter_nodes,
)
from .sets import GeneralizedSet, Interval, RealSet

_INF = math.inf
_PROBE_WINDOW = 32.0


# -- structural evaluation over generalized values -----------------------------


def _scale_dpart(x: GeneralizedReal, factor: float) -> dict[str, float]:
    return {g: factor * c for g, c in x.dpart.items()}


def gen_eval(e: Expr, x) -> GeneralizedReal:
    """Evaluate a tree over the generalized reals, hatted node by node."""
    x = as_generalized(x)
    if isinstance(e, Const):
        return GeneralizedReal(e.value)
    if isinstance(e, Var):
        return x
    if isinstance(e, Add):
        return core.add(gen_eval(e.lhs, x), gen_eval(e.rhs, x))
    if isinstance(e, Sub):
        return core.sub(gen_eval(e.lhs, x), gen_eval(e.rhs, x))
    if isinstance(e, Mul):
        return core.mul(gen_eval(e.lhs, x), gen_eval(e.rhs, x))
    if isinstance(e, Div):
        return core.div(gen_eval(e.lhs, x), gen_eval(e.rhs, x))
    if isinstance(e, Neg):
        return core.neg(gen_eval(e.arg, x))
    if isinstance(e, PowInt):
        u = gen_eval(e.base, x)
        if e.exponent >= 0:
            return core.pow_nat(u, e.exponent)
        return core.inv(core.pow_nat(u, -e.exponent))
    if isinstance(e, PowReal):
        u = gen_eval(e.base, x)
        s = u.shadow
        if s <= 0.0:
            raise OutOfDomain(f"real power needs a positive shadow, got {s!r}")
        a = e.exponent
        return GeneralizedReal(s**a, _scale_dpart(u, a * s ** (a - 1.0)))
    if isinstance(e, Root):
        u = gen_eval(e.base, x)
        try:
            return core.root(u, e.degree)
        except DomainError as exc:
            raise OutOfDomain(str(exc)) from exc
    if isinstance(e, Exp):
        u = gen_eval(e.arg, x)
        v = math.exp(u.shadow)
        return GeneralizedReal(v, _scale_dpart(u, v))
    if isinstance(e, Log):
        u = gen_eval(e.arg, x)
        if u.shadow <= 0.0:
            raise OutOfDomain(f"log needs a positive shadow, got {u.shadow!r}")
        return GeneralizedReal(math.log(u.shadow), _scale_dpart(u, 1.0 / u.shadow))
    if isinstance(e, Sin):
        u = gen_eval(e.arg, x)
        return GeneralizedReal(math.sin(u.shadow), _scale_dpart(u, math.cos(u.shadow)))
    if isinstance(e, Cos):
        u = gen_eval(e.arg, x)
        return GeneralizedReal(math.cos(u.shadow), _scale_dpart(u, -math.sin(u.shadow)))
    if isinstance(e, Compose):
        return gen_eval(e.outer, gen_eval(e.inner, x))
    if isinstance(e, InverseExpr):
        s0 = e.eval_real(x.shadow)
        slope = 1.0 / e.fn.deriv.eval_real(s0)
        return GeneralizedReal(s0, _scale_dpart(x, slope))
    raise TypeError(f"cannot evaluate node {type(e).__name__}")


# -- natural extensions ----------------------------------------------------------


def _finite_window(lo: float, hi: float) -> tuple[float, float]:
    """Clip an open interval to a finite probe window anchored at whatever
    finite endpoints it has."""
    if math.isinf(lo) and math.isinf(hi):
        return -_PROBE_WINDOW, _PROBE_WINDOW
    if math.isinf(lo):
        return hi - 2.0 * _PROBE_WINDOW, hi
    if math.isinf(hi):
        return lo, lo + 2.0 * _PROBE_WINDOW
    return lo, hi


def _probe_points(lo: float, hi: float, n: int) -> list[float]:
    lo, hi = _finite_window(lo, hi)
    return [lo + (hi - lo) * (i + 0.5) / n for i in range(n)]


def _domain_bounds(domain: RealSet) -> tuple[float, float]:
    if len(domain.intervals) != 1 or domain.points:
        raise DomainError("expected a single open interval domain")
    iv = domain.intervals[0]
    return iv.lo, iv.hi


@dataclass(frozen=True)
class NaturalExtension:
    """A real function, its validity interval, and its symbolic derivative."""

    expr: Expr
    domain: RealSet
    deriv: Expr

    @classmethod
    def on_interval(
        cls, expr: Expr, lo: float = -_INF, hi: float = _INF, probes: int = 129
    ) -> "NaturalExtension":
        """Build the extension on the open interval (lo, hi), checking by
        sampling that the function and its derivative are valid there."""
        lo, hi = float(lo), float(hi)
        if math.isnan(lo) or math.isnan(hi) or not lo < hi:
            raise DomainError(f"invalid open interval ({lo}, {hi})")
        interval = RealSet.interval(lo, hi, False, False)
        for node in iter_nodes(expr):
            declared = getattr(node, "domain", None)
            if declared is not None and not interval.difference(declared).is_empty:
                raise DomainError(
                    f"({lo}, {hi}) exceeds the declared domain of {node}"
                )
        deriv = expr.deriv()
        for xi in _probe_points(lo, hi, probes):
            try:
                expr.eval_real(xi)
                deriv.eval_real(xi)
            except MonadicaError as exc:
                raise DomainError(
                    f"function is not valid on ({lo}, {hi}): {exc}"
                ) from exc
        return cls(expr, interval, deriv)

    def _require(self, s: float) -> None:
        if not self.domain.contains(s):
            raise OutOfDomain(f"shadow {s!r} lies outside the domain")

    def _require_closure(self, a: float, b: float) -> None:
        if not (self.domain.contains(a) and self.domain.contains(b)):
            raise OutOfDomain(
                f"the closed interval [{a!r}, {b!r}] must lie inside the domain"
            )

    def eval_at(self, x) -> GeneralizedReal:
        """value(shadow) + derivative(shadow) * dx."""
        x = as_generalized(x)
        self._require(x.shadow)
        value = self.expr.eval_real(x.shadow)
        slope = self.deriv.eval_real(x.shadow)
        return GeneralizedReal(value, _scale_dpart(x, slope))

    def deriv_at(self, x) -> float:
        """The derivative, constant on each monad."""
        x = as_generalized(x)
        self._require(x.shadow)
        return self.deriv.eval_real(x.shadow)

    def deriv_exprs(self, upto: int) -> list[Expr]:
        """[function, derivative, ..., upto-th derivative] as expressions."""
        out = [self.expr]
        for _ in range(upto):
            out.append(out[-1].deriv())
        return out

    def eval_higher(self, m: int, x) -> GeneralizedReal:
        """m-th extension: (m-1)-th derivative value plus m-th derivative
        times dx."""
        if not isinstance(m, int) or m < 1:
            raise DomainError("extension order must be a positive integer")
        x = as_generalized(x)
        self._require(x.shadow)
        lams = self.deriv_exprs(m)
        try:
            value = lams[m - 1].eval_real(x.shadow)
            slope = lams[m].eval_real(x.shadow)
        except MonadicaError as exc:
            raise NotDifferentiable(
                f"derivative of order {m} is not defined at {x.shadow!r}"
            ) from exc
        return GeneralizedReal(value, _scale_dpart(x, slope))

    def deriv_higher(self, m: int, x) -> float:
        """m-th derivative at the shadow of x (always a real)."""
        if not isinstance(m, int) or m < 1:
            raise DomainError("derivative order must be a positive integer")
        x = as_generalized(x)
        self._require(x.shadow)
        try:
            return self.deriv_exprs(m)[m].eval_real(x.shadow)
        except MonadicaError as exc:
            raise NotDifferentiable(
                f"derivative of order {m} is not defined at {x.shadow!r}"
            ) from exc


def nat_ext_eval(f: NaturalExtension, x) -> GeneralizedReal:
    return f.eval_at(x)


def derivative_at(f: NaturalExtension, x) -> float:
    return f.deriv_at(x)


def mth_ext_eval(f: NaturalExtension, m: int, x) -> GeneralizedReal:
    return f.eval_higher(m, x)


def mth_derivative(f: NaturalExtension, m: int, x) -> float:
    return f.deriv_higher(m, x)


def compose_ext(outer: NaturalExtension, inner: NaturalExtension) -> NaturalExtension:
    """Extension of the composite, on the inner domain."""
    lo, hi = _domain_bounds(inner.domain)
    return NaturalExtension.on_interval(Compose(outer.expr, inner.expr), lo, hi)


# -- Taylor expansion --------------------------------------------------------------


@dataclass(frozen=True)
class TaylorExpansion:
    """Partial sum, a certified remainder bound, and (when a numeric root
    search succeeds) a remainder witness theta in ]0,1[."""

    partial_sum: float
    remainder_bound: float
    theta: float | None

    def to_dict(self) -> dict:
        return {
            "partial_sum": self.partial_sum,
            "remainder_bound": self.remainder_bound,
            "theta": self.theta,
        }


def _max_abs_on_segment(e: Expr, lo: float, hi: float, samples: int = 2049) -> float:
    if lo > hi:
        lo, hi = hi, lo
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    vals = [abs(e.eval_real(t)) for t in xs]
    best = max(range(samples), key=lambda i: vals[i])
    # ternary refinement around the sampled argmax
    a = xs[max(0, best - 1)]
    b = xs[min(samples - 1, best + 1)]
    for _ in range(60):
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        if abs(e.eval_real(m1)) < abs(e.eval_real(m2)):
            a = m1
        else:
            b = m2
    return max(vals[best], abs(e.eval_real((a + b) / 2.0)))


def taylor_expand(f: NaturalExtension, center: float, order: int, x) -> TaylorExpansion:
    """Expand around a real center and evaluate the remainder machinery at
    the shadow of x (which must differ from the center)."""
    if not isinstance(order, int) or order < 0:
        raise DomainError("expansion order must be a nonnegative integer")
    center = float(center)
    x = as_generalized(x)
    f._require(center)
    f._require(x.shadow)
    if x.shadow == center:
        raise OutOfDomain("evaluation shadow must differ from the center")
    lams = f.deriv_exprs(order + 1)
    h = x.shadow - center
    partial = 0.0
    for k in range(order + 1):
        partial += lams[k].eval_real(center) * h**k / math.factorial(k)
    target = f.expr.eval_real(x.shadow)
    scale = h ** (order + 1) / math.factorial(order + 1)
    top = lams[order + 1]

    def gap(theta: float) -> float:
        return target - partial - scale * top.eval_real(center + theta * h)

    theta = _find_unit_root(gap, abs_tol=1e-13 * max(1.0, abs(target)))
    bound = _max_abs_on_segment(top, center, x.shadow) * abs(h) ** (order + 1)
    bound /= math.factorial(order + 1)
    return TaylorExpansion(partial, bound, theta)


def _find_unit_root(g, abs_tol: float, cells: int = 1024) -> float | None:
    """A root of g in the open unit interval: grid scan plus bisection."""
    if abs(g(0.5)) <= abs_tol:
        return 0.5
    thetas = [i / cells for i in range(1, cells)]
    thetas[0:0] = [1e-9]
    thetas.append(1.0 - 1e-9)
    vals = [g(t) for t in thetas]
    for t, v in zip(thetas, vals):
        if abs(v) <= abs_tol:
            return t
    for i in range(len(thetas) - 1):
        if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0:
            a, b = thetas[i], thetas[i + 1]
            fa = vals[i]
            for _ in range(200):
                mid = (a + b) / 2.0
                fm = g(mid)
                if abs(fm) <= abs_tol or (b - a) < 1e-15:
                    return mid
                if (fa < 0.0) == (fm < 0.0):
                    a, fa = mid, fm
                else:
                    b = mid
            return (a + b) / 2.0
    return None


# -- mean value point --------------------------------------------------------------


def mean_value_point(f: NaturalExtension, a, b) -> float:
    """A real point strictly between the shadows where the derivative equals
    the shadow-level mean slope."""
    a, b = as_generalized(a), as_generalized(b)
    if not core.lt(a, b):
        raise DomainError("endpoints must satisfy a < b (indiscernible rejected)")
    sa, sb = a.shadow, b.shadow
    f._require(sa)
    f._require(sb)
    slope = (f.expr.eval_real(sb) - f.expr.eval_real(sa)) / (sb - sa)

    def h(t: float) -> float:
        return f.deriv.eval_real(t) - slope

    cells = 1024
    ts = [sa + (sb - sa) * i / cells for i in range(1, cells)]
    vals = [h(t) for t in ts]
    tol = 1e-13 * max(1.0, abs(slope))
    best = min(range(len(ts)), key=lambda i: abs(vals[i]))
    if abs(vals[best]) <= tol:
        return ts[best]
    lo_idx = None
    for i in range(len(ts) - 1):
        if vals[i] * vals[i + 1] < 0.0:
            lo_idx = i
            break
    if lo_idx is None:
        return ts[best]  # grid minimum; the crossing was narrower than the grid
    lo, hi = ts[lo_idx], ts[lo_idx + 1]
    flo = vals[lo_idx]
    for _ in range(200):
        mid = (lo + hi) / 2.0
        fm = h(mid)
        if abs(fm) <= tol or (hi - lo) < 1e-15 * max(1.0, abs(mid)):
            return mid
        if (flo < 0.0) == (fm < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2.0


# -- inversion ----------------------------------------------------------------------


@dataclass(frozen=True)
class InverseExpr(Expr):
    """Inverse of a strictly monotone extension, evaluated by bisection."""

    fn: NaturalExtension

    def _window(self) -> tuple[float, float]:
        lo, hi = _domain_bounds(self.fn.domain)
        wlo, whi = _finite_window(lo, hi)
        inset = (whi - wlo) * 1e-12
        return wlo + inset, whi - inset

    def eval_real(self, y: float) -> float:
        phi = self.fn.expr.eval_real
        lo, hi = self._window()
        va, vb = phi(lo), phi(hi)
        increasing = vb >= va
        if not (min(va, vb) <= y <= max(va, vb)):
            raise OutOfDomain(f"{y!r} is outside the inverted range")
        for _ in range(200):
            mid = (lo + hi) / 2.0
            if mid == lo or mid == hi:
                break
            if (phi(mid) <= y) == increasing:
                lo = mid
            else:
                hi = mid
        root = (lo + hi) / 2.0
        dphi = self.fn.deriv.eval_real
        for _ in range(3):  # Newton polish
            d = dphi(root)
            if d == 0.0:
                break
            step = (phi(root) - y) / d
            root -= step
        return root

    def deriv(self) -> Expr:
        return Div(Const(1.0), Compose(self.fn.deriv, self))

    def __str__(self):
        return f"inverse({self.fn.expr})"


def inverse_extension(f: NaturalExtension, samples: int = 1024) -> NaturalExtension:
    """Invert a continuous injective extension with nonvanishing derivative.

    The derivative of the result is the reciprocal of the original
    derivative taken at the inverse image.  Validity is checked by dense
    sampling: first monotonicity (injectivity), then the derivative sign.
    """
    lo, hi = _domain_bounds(f.domain)
    xs = _probe_points(lo, hi, samples)
    values = [f.expr.eval_real(t) for t in xs]
    diffs = [b - a for a, b in zip(values, values[1:])]
    if any(d == 0.0 for d in diffs) or (min(diffs) < 0.0 < max(diffs)):
        raise NotInjective("function is not strictly monotone on its domain")
    derivs = [f.deriv.eval_real(t) for t in xs]
    if any(d == 0.0 for d in derivs) or (min(derivs) < 0.0 < max(derivs)):
        raise VanishingDerivative("derivative has a zero on the domain")
    # a zero without a sign change hides at critical points of the derivative
    second = f.deriv.deriv()
    curls = [second.eval_real(t) for t in xs]
    zero_tol = 1e-12 * max(1.0, max(abs(d) for d in derivs))
    for i in range(len(xs) - 1):
        if curls[i] * curls[i + 1] < 0.0:
            a, b = xs[i], xs[i + 1]
            fa = curls[i]
            for _ in range(100):
                mid = (a + b) / 2.0
                fm = second.eval_real(mid)
                if (fa < 0.0) == (fm < 0.0):
                    a, fa = mid, fm
                else:
                    b = mid
            if abs(f.deriv.eval_real((a + b) / 2.0)) <= zero_tol:
                raise VanishingDerivative("derivative has a zero on the domain")
    inv_expr = InverseExpr(f)
    ylo, yhi = sorted((values[0], values[-1]))
    return NaturalExtension(
        inv_expr, RealSet.interval(ylo, yhi, False, False), inv_expr.deriv()
    )


# -- images of sets -----------------------------------------------------------------


def _deriv_zeros(f: NaturalExtension, a: float, b: float, samples: int = 513):
    """Zeros of the derivative on [a, b]; returns (zeros, is_constant)."""
    xs = [a + (b - a) * i / (samples - 1) for i in range(samples)]
    vals = [f.deriv.eval_real(t) for t in xs]
    tol = 1e-12 * max(1.0, max(abs(v) for v in vals))
    if all(abs(v) <= tol for v in vals):
        return [], True
    zeros: list[float] = []
    for t, v in zip(xs, vals):
        if abs(v) <= tol:
            zeros.append(t)
    for i in range(samples - 1):
        if abs(vals[i]) > tol and abs(vals[i + 1]) > tol and vals[i] * vals[i + 1] < 0:
            lo2, hi2 = xs[i], xs[i + 1]
            flo = vals[i]
            for _ in range(100):
                mid = (lo2 + hi2) / 2.0
                fm = f.deriv.eval_real(mid)
                if (flo < 0.0) == (fm < 0.0):
                    lo2, flo = mid, fm
                else:
                    hi2 = mid
            zeros.append((lo2 + hi2) / 2.0)
    zeros.sort()
    deduped: list[float] = []
    gap = (b - a) * 1e-9
    for z in zeros:
        if not deduped or z - deduped[-1] > gap:
            deduped.append(z)
    return deduped, False


def image_set(f: NaturalExtension, g: GeneralizedSet) -> GeneralizedSet:
    """Image of a set under the extension.

    Monads of points where the derivative vanishes collapse to bare reals;
    everywhere else full monads map onto full monads, so interval bases map
    to interval bases split at the derivative's zeros.  Bases must be
    bounded and lie (with endpoints) inside the function's domain.
    """
    ints: list[Interval] = []
    pts: list[float] = []
    extras: list[float] = []
    phi = f.expr.eval_real
    lam = f.deriv.eval_real

    def is_flat(t: float) -> bool:
        return abs(lam(t)) <= 1e-12

    for iv in g.base.intervals:
        if not iv.bounded:
            raise DomainError("image requires bounded interval bases")
        a, b = iv.lo, iv.hi
        f._require_closure(a, b)
        zeros, constant = _deriv_zeros(f, a, b)
        if constant:
            extras.append(phi((a + b) / 2.0))
            continue
        margin = (b - a) * 1e-9
        knots = [a] + [z for z in zeros if a + margin < z < b - margin] + [b]
        for s, t in zip(knots, knots[1:]):
            ya, yb = phi(s), phi(t)
            side_a_closed = s == a and iv.lo_closed and not is_flat(a)
            side_b_closed = t == b and iv.hi_closed and not is_flat(b)
            if ya <= yb:
                ints.append(Interval(ya, yb, side_a_closed, side_b_closed))
            else:
                ints.append(Interval(yb, ya, side_b_closed, side_a_closed))
        for z in zeros:
            if iv.contains(z):
                extras.append(phi(z))
    for p in g.base.points:
        f._require(p)
        if is_flat(p):
            extras.append(phi(p))
        else:
            pts.append(phi(p))
    for p in g.extras:
        f._require(p)
        extras.append(phi(p))
    return GeneralizedSet(RealSet(tuple(ints), tuple(pts)), tuple(extras))


# -- piecewise functions with explicit monad rules -----------------------------------


@dataclass(frozen=True)
class MonadRule:
    """Affine value on a breakpoint monad: value + slope * dt."""

    value: float
    slope: float


@dataclass(frozen=True)
class LimitProbe:
    """Numerically probed one-sided difference quotients at a point."""

    exists: bool
    value: float | None
    left: float | None
    right: float | None
    detail: str


@dataclass(frozen=True)
class RegionReport:
    region: str
    status: str
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"region": self.region, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class PiecewiseExtension:
    """Expressions on the open gaps between breakpoints, affine rules on the
    breakpoint monads; regions cover the whole continuum."""

    breakpoints: tuple[float, ...]
    gap_exprs: tuple[Expr, ...]
    monad_rules: tuple[MonadRule, ...]

    def __post_init__(self) -> None:
        bps = tuple(float(b) for b in self.breakpoints)
        for b in bps:
            if not math.isfinite(b):
                raise DomainError("breakpoints must be finite reals")
        if any(x >= y for x, y in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if len(self.gap_exprs) != len(bps) + 1:
            raise DomainError("need one gap expression more than breakpoints")
        if len(self.monad_rules) != len(bps):
            raise DomainError("need one monad rule per breakpoint")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "gap_exprs", tuple(self.gap_exprs))
        object.__setattr__(self, "monad_rules", tuple(self.monad_rules))

    def _breakpoint_index(self, s: float) -> int | None:
        for i, b in enumerate(self.breakpoints):
            if s == b:
                return i
        return None

    def eval_at(self, t) -> GeneralizedReal:
        t = as_generalized(t)
        s = t.shadow
        i = self._breakpoint_index(s)
        if i is not None:
            rule = self.monad_rules[i]
            return GeneralizedReal(rule.value, _scale_dpart(t, rule.slope))
        return gen_eval(self.gap_exprs[bisect_right(self.breakpoints, s)], t)

    def _phi(self, xi: float, center: float, center_value: float) -> float:
        """The underlying real function near center (center itself maps to
        the declared value)."""
        if xi == center:
            return center_value
        i = self._breakpoint_index(xi)
        if i is not None:
            return self.monad_rules[i].value
        return self.gap_exprs[bisect_right(self.breakpoints, xi)].eval_real(xi)

    def limit_probe(self, xi0: float) -> LimitProbe:
        """Difference quotients at steps 2**-k, k = 4..20, per side; a side
        converges when its last three estimates are Cauchy within 1e-5 and
        the limit exists when both sides agree within 1e-4.  Heuristic."""
        xi0 = float(xi0)
        i = self._breakpoint_index(xi0)
        if i is not None:
            c = self.monad_rules[i].value
        else:
            c = self.gap_exprs[bisect_right(self.breakpoints, xi0)].eval_real(xi0)
        nearest = min(
            (abs(b - xi0) for b in self.breakpoints if b != xi0), default=_INF
        )

        def side(sign: float) -> tuple[float | None, bool]:
            qs = []
            for k in range(4, 21):
                h = sign * 2.0**-k
                if abs(h) >= nearest:
                    continue
                try:
                    qs.append((self._phi(xi0 + h, xi0, c) - c) / h)
                except MonadicaError:
                    return None, False
            if len(qs) < 3:
                return None, False
            cauchy = (
                abs(qs[-1] - qs[-2]) <= 1e-5 and abs(qs[-2] - qs[-3]) <= 1e-5
            )
            return qs[-1], cauchy

        left, left_ok = side(-1.0)
        right, right_ok = side(+1.0)
        if left_ok and right_ok and abs(left - right) <= 1e-4:
            value = (left + right) / 2.0
            return LimitProbe(True, value, left, right, f"classical limit ~ {value!r}")
        return LimitProbe(False, None, left, right, "classical limit absent")

    def deriv_at(self, xi0: float) -> float | None:
        """Derivative at a real point.

        On a breakpoint monad this is the declared slope, subject to the
        proviso: when the probed classical limit exists it must agree with
        the declaration.  Off the breakpoints it is the symbolic derivative
        of the gap expression; None when that is not evaluable.
        """
        xi0 = float(xi0)
        i = self._breakpoint_index(xi0)
        if i is None:
            e = self.gap_exprs[bisect_right(self.breakpoints, xi0)]
            try:
                return e.deriv().eval_real(xi0)
            except MonadicaError:
                return None
        declared = self.monad_rules[i].slope
        probe = self.limit_probe(xi0)
        if probe.exists and abs(declared - probe.value) > 1e-3 * max(
            1.0, abs(probe.value)
        ):
            raise ProvisoViolated(
                f"declared derivative {declared!r} at {xi0!r} but the "
                f"classical limit is {probe.value!r}"
            )
        return declared


def pw_eval(p: PiecewiseExtension, t) -> GeneralizedReal:
    return p.eval_at(t)


def pw_derivative_at(p: PiecewiseExtension, xi0: float) -> float | None:
    return p.deriv_at(xi0)


def _gap_window(
    breakpoints: Sequence[float], index: int, reach: float = 4.0
) -> tuple[float, float]:
    lo = -_INF if index == 0 else breakpoints[index - 1]
    hi = _INF if index == len(breakpoints) else breakpoints[index]
    if math.isinf(lo) and math.isinf(hi):
        return -reach, reach
    if math.isinf(lo):
        return hi - reach, hi
    if math.isinf(hi):
        return lo, lo + reach
    return lo, hi


def ode_verify(
    solution: PiecewiseExtension, rhs: PiecewiseExtension, samples: int = 25
) -> list[RegionReport]:
    """Check a piecewise solution against a piecewise right-hand side,
    region by region: symbolic gap derivatives on sampled real points,
    declared monad slopes (with the proviso probe) on breakpoint monads."""
    if solution.breakpoints != rhs.breakpoints:
        raise RegionMismatch(
            f"breakpoints differ: {solution.breakpoints} vs {rhs.breakpoints}"
        )
    bps = solution.breakpoints
    reports: list[RegionReport] = []
    for i, e in enumerate(solution.gap_exprs):
        if not bps:
            region = "all t"
        elif i == 0:
            region = f"t < {bps[0]!r}"
        elif i == len(bps):
            region = f"t > {bps[-1]!r}"
        else:
            region = f"{bps[i - 1]!r} < t < {bps[i]!r}"
        lo, hi = _gap_window(bps, i)
        de = e.deriv()
        worst = 0.0
        status = "pass"
        detail = ""
        for j in range(samples):
            t = lo + (hi - lo) * (j + 0.5) / samples
            try:
                got = de.eval_real(t)
                want = rhs.gap_exprs[i].eval_real(t)
            except MonadicaError as exc:
                status, detail = "fail", f"evaluation failed at t={t!r}: {exc}"
                break
            err = abs(got - want) / max(1.0, abs(want))
            worst = max(worst, err)
            if err > 1e-9:
                status = "fail"
                detail = f"derivative {got!r} != rhs {want!r} at t={t!r}"
                break
        if status == "pass":
            detail = f"max relative deviation {worst:.3e} on {samples} samples"
        reports.append(RegionReport(region, status, detail))
    for i, b in enumerate(bps):
        region = f"monad({b!r})"
        rhs_rule = rhs.monad_rules[i]
        if rhs_rule.slope != 0.0:
            reports.append(
                RegionReport(
                    region, "fail", "right-hand side is not a real constant here"
                )
            )
            continue
        probe = solution.limit_probe(b)
        try:
            alpha = solution.deriv_at(b)
        except ProvisoViolated as exc:
            reports.append(RegionReport(region, "fail", str(exc)))
            continue
        ok = abs(alpha - rhs_rule.value) <= 1e-12 * max(1.0, abs(rhs_rule.value))
        reports.append(
            RegionReport(
                region,
                "pass" if ok else "fail",
                f"derivative {alpha!r} vs rhs {rhs_rule.value!r}; {probe.detail}",
            )
        )
    return reports
