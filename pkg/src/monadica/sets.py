"""Sets of reals, their monads, and shadows.

``RealSet`` is a finite union of disjoint real intervals plus a finite set
of stray points, kept in a canonical normalized form (sorted, merged,
points absorbed into touching intervals).  ``GeneralizedSet`` represents a
subset of the generalized continuum of the shape

    monad(base) union extras,

where ``base`` is a RealSet and ``extras`` are finitely many bare real
points outside it.  Monadic sets (empty ``extras``) are closed under all
the operators here; the extras exist for images of closed intervals under
functions whose derivative vanishes at an endpoint.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .core import as_generalized, sigma
from .errors import (
    DomainError,
    EmptySetError,
    LengthUndefined,
    NotMonadic,
    NotRepresentable,
    UnboundedError,
)

_INF = math.inf


@dataclass(frozen=True)
class Interval:
    """One real interval; infinite endpoints are always open."""

    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, p: float) -> bool:
        if not self.lo <= p <= self.hi:
            return False
        if p == self.lo and not self.lo_closed:
            return False
        if p == self.hi and not self.hi_closed:
            return False
        return True

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)


def _check_endpoint(v: float, what: str) -> float:
    v = float(v)
    if math.isnan(v):
        raise DomainError(f"{what} may not be NaN")
    return 0.0 if v == 0.0 else v


def _normalize(
    intervals: Iterable[Interval], points: Iterable[float]
) -> tuple[tuple[Interval, ...], tuple[float, ...]]:
    ints: list[list] = []
    pts: set[float] = set()
    for iv in intervals:
        lo = _check_endpoint(iv.lo, "interval lo")
        hi = _check_endpoint(iv.hi, "interval hi")
        lc = bool(iv.lo_closed) and math.isfinite(lo)
        hc = bool(iv.hi_closed) and math.isfinite(hi)
        if lo > hi:
            raise DomainError(f"interval endpoints out of order: {lo} > {hi}")
        if lo == hi:
            if not math.isfinite(lo):
                raise DomainError("interval endpoints may not both be infinite")
            if lc and hc:
                pts.add(lo)
            continue  # degenerate open/half-open interval is empty
        ints.append([lo, hi, lc, hc])
    for p in points:
        p = float(p)
        if not math.isfinite(p):
            raise DomainError("set points must be finite reals")
        pts.add(0.0 if p == 0.0 else p)

    for _ in range(8):  # fixpoint: closing an endpoint can enable a merge
        changed = False
        ints.sort(key=lambda t: (t[0], not t[2]))
        merged: list[list] = []
        for t in ints:
            if merged:
                m = merged[-1]
                if t[0] < m[1] or (t[0] == m[1] and (m[3] or t[2])):
                    if t[0] == m[0]:
                        m[2] = m[2] or t[2]
                    if t[1] > m[1]:
                        m[1], m[3] = t[1], t[3]
                    elif t[1] == m[1]:
                        m[3] = m[3] or t[3]
                    continue
            merged.append(t)
        ints = merged
        leftover: set[float] = set()
        for p in pts:
            placed = False
            for t in ints:
                if t[0] < p < t[1] or (p == t[0] and t[2]) or (p == t[1] and t[3]):
                    placed = True
                    break
                if p == t[0] and not t[2]:
                    t[2] = placed = changed = True
                    break
                if p == t[1] and not t[3]:
                    t[3] = placed = changed = True
                    break
            if not placed:
                leftover.add(p)
        pts = leftover
        if not changed:
            break
    return (
        tuple(Interval(t[0], t[1], t[2], t[3]) for t in ints),
        tuple(sorted(pts)),
    )


@dataclass(frozen=True)
class RealSet:
    """Finite union of disjoint intervals plus a finite point set, normalized."""

    intervals: tuple[Interval, ...] = ()
    points: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        ints, pts = _normalize(self.intervals, self.points)
        object.__setattr__(self, "intervals", ints)
        object.__setattr__(self, "points", pts)

    # -- constructors -----------------------------------------------------

    @classmethod
    def empty(cls) -> "RealSet":
        return cls()

    @classmethod
    def reals(cls) -> "RealSet":
        return cls((Interval(-_INF, _INF, False, False),))

    @classmethod
    def point(cls, p: float) -> "RealSet":
        return cls((), (p,))

    @classmethod
    def interval(
        cls, lo: float, hi: float, lo_closed: bool = True, hi_closed: bool = True
    ) -> "RealSet":
        return cls((Interval(lo, hi, lo_closed, hi_closed),))

    @classmethod
    def closed(cls, lo: float, hi: float) -> "RealSet":
        return cls.interval(lo, hi, True, True)

    @classmethod
    def open(cls, lo: float, hi: float) -> "RealSet":
        return cls.interval(lo, hi, False, False)

    # -- queries ------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.intervals and not self.points

    def contains(self, p: float) -> bool:
        p = float(p)
        return any(iv.contains(p) for iv in self.intervals) or p in self.points

    @property
    def bounded_below(self) -> bool:
        return not self.intervals or math.isfinite(self.intervals[0].lo)

    @property
    def bounded_above(self) -> bool:
        return not self.intervals or math.isfinite(self.intervals[-1].hi)

    @property
    def is_bounded(self) -> bool:
        return self.bounded_below and self.bounded_above

    def component_count(self) -> int:
        return len(self.intervals) + len(self.points)

    # -- boolean algebra ------------------------------------------------------

    def union(self, other: "RealSet") -> "RealSet":
        return RealSet(self.intervals + other.intervals, self.points + other.points)

    def intersect(self, other: "RealSet") -> "RealSet":
        ints = []
        for a in self.intervals:
            for b in other.intervals:
                if a.lo > b.lo:
                    lo, lc = a.lo, a.lo_closed
                elif b.lo > a.lo:
                    lo, lc = b.lo, b.lo_closed
                else:
                    lo, lc = a.lo, a.lo_closed and b.lo_closed
                if a.hi < b.hi:
                    hi, hc = a.hi, a.hi_closed
                elif b.hi < a.hi:
                    hi, hc = b.hi, b.hi_closed
                else:
                    hi, hc = a.hi, a.hi_closed and b.hi_closed
                if lo < hi or (lo == hi and lc and hc):
                    ints.append(Interval(lo, hi, lc, hc))
        pts = [p for p in self.points if other.contains(p)]
        pts += [p for p in other.points if self.contains(p)]
        return RealSet(tuple(ints), tuple(pts))

    def complement(self) -> "RealSet":
        comps = [(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed) for iv in self.intervals]
        comps += [(p, p, True, True) for p in self.points]
        comps.sort(key=lambda t: t[0])
        gaps: list[Interval] = []
        cur_lo, cur_closed = -_INF, False
        for lo, hi, lc, hc in comps:
            if cur_lo < lo or (cur_lo == lo and cur_closed and not lc):
                gaps.append(Interval(cur_lo, lo, cur_closed, not lc))
            cur_lo, cur_closed = hi, not hc
        if cur_lo < _INF:
            gaps.append(Interval(cur_lo, _INF, cur_closed, False))
        return RealSet(tuple(gaps))

    def difference(self, other: "RealSet") -> "RealSet":
        return self.intersect(other.complement())

    # -- standard topology ----------------------------------------------------

    def interior(self) -> "RealSet":
        return RealSet(
            tuple(Interval(iv.lo, iv.hi, False, False) for iv in self.intervals)
        )

    def closure(self) -> "RealSet":
        return RealSet(
            tuple(
                Interval(iv.lo, iv.hi, math.isfinite(iv.lo), math.isfinite(iv.hi))
                for iv in self.intervals
            ),
            self.points,
        )

    def boundary(self) -> "RealSet":
        return self.closure().difference(self.interior())

    def exterior(self) -> "RealSet":
        return self.complement().interior()

    @property
    def is_open(self) -> bool:
        return self == self.interior()

    @property
    def is_closed(self) -> bool:
        return self == self.closure()

    @property
    def is_compact(self) -> bool:
        return self.is_closed and self.is_bounded

    @property
    def is_connected(self) -> bool:
        return self.component_count() <= 1

    # -- bounds -----------------------------------------------------------------

    def _extremum(self, upper: bool) -> tuple[float, bool]:
        """(value, attained) for sup or inf; raises on empty or unbounded."""
        if self.is_empty:
            raise EmptySetError("the empty set has no supremum or infimum")
        best = None
        attained = False
        if self.points:
            best = max(self.points) if upper else min(self.points)
            attained = True
        if self.intervals:
            iv = self.intervals[-1] if upper else self.intervals[0]
            endpoint = iv.hi if upper else iv.lo
            if best is None or (endpoint > best if upper else endpoint < best):
                best, attained = endpoint, (iv.hi_closed if upper else iv.lo_closed)
        if not math.isfinite(best):
            raise UnboundedError("the set is unbounded on the requested side")
        return best, attained

    def sup_value(self) -> float:
        return self._extremum(upper=True)[0]

    def inf_value(self) -> float:
        return self._extremum(upper=False)[0]

    def max_value(self) -> float | None:
        value, attained = self._extremum(upper=True)
        return value if attained else None

    def min_value(self) -> float | None:
        value, attained = self._extremum(upper=False)
        return value if attained else None


@dataclass(frozen=True)
class GeneralizedSet:
    """monad(base) plus finitely many bare real points outside the base."""

    base: RealSet = field(default_factory=RealSet)
    extras: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        cleaned = set()
        for p in self.extras:
            p = float(p)
            if not math.isfinite(p):
                raise DomainError("extra points must be finite reals")
            cleaned.add(0.0 if p == 0.0 else p)
        kept = sorted(p for p in cleaned if not self.base.contains(p))
        object.__setattr__(self, "extras", tuple(kept))

    @property
    def is_monadic(self) -> bool:
        return not self.extras

    @property
    def is_empty(self) -> bool:
        return self.base.is_empty and not self.extras


# -- monads and shadows ---------------------------------------------------------


def monad(s: "RealSet | GeneralizedSet") -> GeneralizedSet:
    """The union of the monads of all members."""
    if isinstance(s, GeneralizedSet):
        return GeneralizedSet(shadow(s), ())
    return GeneralizedSet(s, ())


def shadow(g: "GeneralizedSet | RealSet") -> RealSet:
    """The set of shadows of all members."""
    if isinstance(g, RealSet):
        return g
    return RealSet(g.base.intervals, g.base.points + g.extras)


def member(x, g: GeneralizedSet) -> bool:
    x = as_generalized(x)
    if g.base.contains(x.shadow):
        return True
    return x.is_real and x.shadow in g.extras


def union(g1: GeneralizedSet, g2: GeneralizedSet) -> GeneralizedSet:
    return GeneralizedSet(g1.base.union(g2.base), g1.extras + g2.extras)


def intersect(g1: GeneralizedSet, g2: GeneralizedSet) -> GeneralizedSet:
    base = g1.base.intersect(g2.base)
    extras = [p for p in g1.extras if g2.base.contains(p) or p in g2.extras]
    extras += [p for p in g2.extras if g1.base.contains(p)]
    return GeneralizedSet(base, tuple(extras))


def difference(g1: GeneralizedSet, g2: GeneralizedSet) -> GeneralizedSet:
    base = g1.base.difference(g2.base)
    for p in g2.extras:
        if base.contains(p):
            # removing one bare real from a monad leaves a set that is not
            # of monad-plus-points shape
            raise NotRepresentable(
                f"difference would puncture the monad at {p!r}"
            )
    extras = [
        p for p in g1.extras if not g2.base.contains(p) and p not in g2.extras
    ]
    return GeneralizedSet(base, tuple(extras))


# -- intervals in the generalized continuum -------------------------------------

INTERVAL_KINDS = (
    "closed",
    "open",
    "half_lo",
    "half_hi",
    "ray_ge",
    "ray_gt",
    "ray_le",
    "ray_lt",
    "full",
)


def hat_interval(kind: str, a: float | None = None, b: float | None = None) -> GeneralizedSet:
    """Monad of the real interval of the given kind.

    ``half_lo`` includes only the lower endpoint, ``half_hi`` only the upper
    one; ``ray_ge``/``ray_gt`` extend to +infinity from a and
    ``ray_le``/``ray_lt`` to -infinity from b (rays take one endpoint).
    """
    if kind == "full":
        return monad(RealSet.reals())
    if kind in ("ray_ge", "ray_gt"):
        if a is None:
            raise DomainError(f"{kind} needs its finite endpoint")
        return monad(RealSet.interval(float(a), _INF, kind == "ray_ge", False))
    if kind in ("ray_le", "ray_lt"):
        endpoint = b if b is not None else a
        if endpoint is None:
            raise DomainError(f"{kind} needs its finite endpoint")
        return monad(RealSet.interval(-_INF, float(endpoint), False, kind == "ray_le"))
    if kind not in ("closed", "open", "half_lo", "half_hi"):
        raise DomainError(f"unknown interval kind {kind!r}")
    if a is None or b is None:
        raise DomainError(f"{kind} interval needs both endpoints")
    a, b = float(a), float(b)
    if math.isnan(a) or math.isnan(b):
        raise DomainError("interval endpoints may not be NaN")
    if a > b:
        raise DomainError(f"interval endpoints out of order: {a} > {b}")
    lo_closed = kind in ("closed", "half_lo")
    hi_closed = kind in ("closed", "half_hi")
    return monad(RealSet.interval(a, b, lo_closed, hi_closed))


def length(g: GeneralizedSet) -> float:
    """Length of a bounded interval-shaped set (0 for monads of points and
    for the empty set)."""
    if g.extras:
        raise LengthUndefined("length is only defined for monadic interval sets")
    base = g.base
    if base.is_empty:
        return 0.0
    if not base.intervals and len(base.points) == 1:
        return 0.0
    if len(base.intervals) == 1 and not base.points:
        iv = base.intervals[0]
        if not iv.bounded:
            raise LengthUndefined("length is undefined for unbounded intervals")
        return iv.hi - iv.lo
    raise LengthUndefined("length is undefined for non-interval sets")


# -- topology, transported along monads ------------------------------------------


def _require_monadic(g: GeneralizedSet, op: str) -> RealSet:
    if not g.is_monadic:
        raise NotMonadic(f"{op} requires a monadic set (no extra points)")
    return g.base


def interior(g: GeneralizedSet) -> GeneralizedSet:
    return monad(_require_monadic(g, "interior").interior())


def closure(g: GeneralizedSet) -> GeneralizedSet:
    return monad(_require_monadic(g, "closure").closure())


def boundary(g: GeneralizedSet) -> GeneralizedSet:
    return monad(_require_monadic(g, "boundary").boundary())


def exterior(g: GeneralizedSet) -> GeneralizedSet:
    return monad(_require_monadic(g, "exterior").exterior())


_TOPO_OPS = {
    "interior": interior,
    "exterior": exterior,
    "boundary": boundary,
    "closure": closure,
}


def topo(op: str, g: GeneralizedSet) -> GeneralizedSet:
    try:
        fn = _TOPO_OPS[op]
    except KeyError:
        raise DomainError(f"unknown topology operator {op!r}") from None
    return fn(g)


def is_open(g: GeneralizedSet) -> bool:
    return _require_monadic(g, "is_open").is_open


def is_closed(g: GeneralizedSet) -> bool:
    return _require_monadic(g, "is_closed").is_closed


def is_compact(g: GeneralizedSet) -> bool:
    return _require_monadic(g, "is_compact").is_compact


def is_connected(g: GeneralizedSet) -> bool:
    return _require_monadic(g, "is_connected").is_connected


# -- bounds and the completeness interface ----------------------------------------


def sup_r(g: GeneralizedSet) -> float:
    return shadow(g).sup_value()


def inf_r(g: GeneralizedSet) -> float:
    return shadow(g).inf_value()


def max_r(g: GeneralizedSet) -> float | None:
    return shadow(g).max_value()


def min_r(g: GeneralizedSet) -> float | None:
    return shadow(g).min_value()


def is_upper_bound(bound, g: GeneralizedSet) -> bool:
    s = shadow(g)
    if s.is_empty:
        return True
    if not s.bounded_above:
        return False
    return sigma(as_generalized(bound)) >= s.sup_value()


def is_lower_bound(bound, g: GeneralizedSet) -> bool:
    s = shadow(g)
    if s.is_empty:
        return True
    if not s.bounded_below:
        return False
    return sigma(as_generalized(bound)) <= s.inf_value()


# -- wire format ---------------------------------------------------------------------


def _enc_endpoint(v: float):
    if v == _INF:
        return "+inf"
    if v == -_INF:
        return "-inf"
    return v


def _dec_endpoint(v) -> float:
    if v == "+inf" or v == "inf":
        return _INF
    if v == "-inf":
        return -_INF
    if isinstance(v, (int, float)):
        return float(v)
    raise DomainError(f"bad interval endpoint {v!r}")


def realset_to_dict(s: RealSet) -> dict:
    return {
        "intervals": [
            {
                "lo": _enc_endpoint(iv.lo),
                "hi": _enc_endpoint(iv.hi),
                "lo_closed": iv.lo_closed,
                "hi_closed": iv.hi_closed,
            }
            for iv in s.intervals
        ],
        "points": list(s.points),
    }


def realset_from_dict(data: Mapping) -> RealSet:
    if not isinstance(data, Mapping):
        raise DomainError(f"malformed set encoding: {data!r}")
    ints = []
    for item in data.get("intervals", ()):
        ints.append(
            Interval(
                _dec_endpoint(item["lo"]),
                _dec_endpoint(item["hi"]),
                bool(item.get("lo_closed", True)),
                bool(item.get("hi_closed", True)),
            )
        )
    points: Sequence[float] = data.get("points", ())
    return RealSet(tuple(ints), tuple(float(p) for p in points))


def set_to_dict(g: GeneralizedSet) -> dict:
    out = realset_to_dict(g.base)
    out["extras"] = list(g.extras)
    return out


def set_from_dict(data: Mapping) -> GeneralizedSet:
    base = realset_from_dict(data)
    extras = data.get("extras", ())
    return GeneralizedSet(base, tuple(float(p) for p in extras))


def set_to_json(g: GeneralizedSet) -> str:
    return json.dumps(set_to_dict(g))


def set_from_json(text: str) -> GeneralizedSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from exc
    return set_from_dict(data)
