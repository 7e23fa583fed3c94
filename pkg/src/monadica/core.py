"""Generalized real numbers.

A value is a real *shadow* plus a finite linear combination of named
infinitesimal generators (the *differential part*).  Products of
infinitesimals vanish, so every ring operation keeps the differential part
inside the span of the generators: nothing beyond a sparse coefficient
vector ever needs to be materialized.

The decomposition ``x = sigma(x) + differential(x)`` is unique and is the
representation itself.  Equality is structural: same shadow, same
coefficient vector.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError, NonFiniteInput, NotInvertible

#: Generator id used for the nonreal density witness.
DENSITY_WITNESS_ID = "e:1"


class Ordering(enum.Enum):
    """Three-way comparison: strict order on shadows, no order inside monads."""

    LESS = "less"
    INDISCERNIBLE = "indiscernible"
    GREATER = "greater"


def _clean(value: float, what: str) -> float:
    v = float(value)
    if not math.isfinite(v):
        raise NonFiniteInput(f"{what} must be a finite real, got {value!r}")
    # no signed-zero distinction
    return 0.0 if v == 0.0 else v


@dataclass(frozen=True)
class GeneralizedReal:
    """Shadow plus sparse differential part, kept in canonical form.

    Canonical form stores no zero coefficients, so a value is real iff
    ``dpart`` is empty and infinitesimal iff ``shadow`` is zero.
    """

    shadow: float = 0.0
    dpart: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "shadow", _clean(self.shadow, "shadow"))
        coeffs: dict[str, float] = {}
        for gid, c in self.dpart.items():
            c = _clean(c, f"coefficient of {gid!r}")
            if c != 0.0:
                coeffs[str(gid)] = c
        object.__setattr__(self, "dpart", coeffs)

    # -- structure ---------------------------------------------------------

    @property
    def is_real(self) -> bool:
        return not self.dpart

    @property
    def is_infinitesimal(self) -> bool:
        return self.shadow == 0.0

    def coefficient(self, gid: str) -> float:
        return self.dpart.get(gid, 0.0)

    def differential(self) -> "GeneralizedReal":
        """The unique infinitesimal dx with x = shadow + dx."""
        return GeneralizedReal(0.0, dict(self.dpart))

    def __hash__(self) -> int:
        return hash((self.shadow, frozenset(self.dpart.items())))

    def __str__(self) -> str:
        parts = [repr(self.shadow)]
        for gid in sorted(self.dpart):
            parts.append(f"{self.dpart[gid]!r}*d[{gid}]")
        return " + ".join(parts)

    # -- operators ---------------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __pow__(self, m):
        if not isinstance(m, int):
            return NotImplemented
        return pow_nat(self, m)

    def __lt__(self, other):
        return lt(self, other)

    def __gt__(self, other):
        return lt(other, self)

    def __le__(self, other):
        return lesssim(self, other)

    def __ge__(self, other):
        return lesssim(other, self)


ZERO = GeneralizedReal(0.0)
ONE = GeneralizedReal(1.0)


def as_generalized(value) -> GeneralizedReal:
    """Embed a plain number; pass existing values through unchanged."""
    if isinstance(value, GeneralizedReal):
        return value
    if isinstance(value, (int, float)):
        return GeneralizedReal(float(value))
    raise TypeError(f"cannot interpret {value!r} as a generalized real")


def make(shadow: float, dpart: Mapping[str, float] | None = None) -> GeneralizedReal:
    """Build a value from its decomposition (zero coefficients are dropped)."""
    return GeneralizedReal(shadow, dict(dpart) if dpart else {})


# -- ring operations --------------------------------------------------------


def add(x, y) -> GeneralizedReal:
    x, y = as_generalized(x), as_generalized(y)
    coeffs = dict(x.dpart)
    for gid, c in y.dpart.items():
        coeffs[gid] = coeffs.get(gid, 0.0) + c
    return GeneralizedReal(x.shadow + y.shadow, coeffs)


def neg(x) -> GeneralizedReal:
    x = as_generalized(x)
    return GeneralizedReal(-x.shadow, {g: -c for g, c in x.dpart.items()})


def sub(x, y) -> GeneralizedReal:
    return add(x, neg(y))


def mul(x, y) -> GeneralizedReal:
    """Product; infinitesimal times infinitesimal contributes nothing."""
    x, y = as_generalized(x), as_generalized(y)
    coeffs: dict[str, float] = {}
    for gid, c in y.dpart.items():
        coeffs[gid] = x.shadow * c
    for gid, c in x.dpart.items():
        coeffs[gid] = coeffs.get(gid, 0.0) + y.shadow * c
    return GeneralizedReal(x.shadow * y.shadow, coeffs)


def inv(x) -> GeneralizedReal:
    """Multiplicative inverse; defined exactly for non-infinitesimal values."""
    x = as_generalized(x)
    s = x.shadow
    if s == 0.0:
        raise NotInvertible("infinitesimals have no multiplicative inverse")
    return GeneralizedReal(1.0 / s, {g: -(c / (s * s)) for g, c in x.dpart.items()})


def div(y, x) -> GeneralizedReal:
    return mul(y, inv(x))


def pow_nat(x, m: int) -> GeneralizedReal:
    """x**m for a natural exponent (m = 0 gives 1)."""
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"exponent must be a natural number, got {m!r}")
    if m == 0:
        return ONE
    x = as_generalized(x)
    factor = m * x.shadow ** (m - 1)
    return GeneralizedReal(x.shadow**m, {g: factor * c for g, c in x.dpart.items()})


def root(x, m: int) -> GeneralizedReal:
    """The unique positive m-th root of a positive value (m > 1)."""
    if not isinstance(m, int) or m < 2:
        raise DomainError(f"root degree must be an integer > 1, got {m!r}")
    x = as_generalized(x)
    s = x.shadow
    if s <= 0.0:
        raise DomainError("root requires a positive value (shadow > 0)")
    r = s ** (1.0 / m)
    # one Newton step cleans up the 1/m rounding (e.g. 8**(1/3))
    for _ in range(2):
        r -= (r**m - s) / (m * r ** (m - 1))
    denom = m * r ** (m - 1)
    return GeneralizedReal(r, {g: c / denom for g, c in x.dpart.items()})


# -- decomposition and quotient ---------------------------------------------


def sigma(x) -> float:
    """The shadow: the real each value is indiscernible from."""
    return as_generalized(x).shadow


def differential(x) -> GeneralizedReal:
    """dx, the infinitesimal part of the unique decomposition."""
    return as_generalized(x).differential()


def quotient_repr(x) -> float:
    """Canonical real representative of the monad of x (a field homomorphism)."""
    return sigma(x)


# -- order -------------------------------------------------------------------


def cmp3(x, y) -> Ordering:
    sx, sy = sigma(x), sigma(y)
    if sx < sy:
        return Ordering.LESS
    if sx > sy:
        return Ordering.GREATER
    return Ordering.INDISCERNIBLE


def lt(x, y) -> bool:
    return sigma(x) < sigma(y)


def gt(x, y) -> bool:
    return sigma(y) < sigma(x)


def indiscernible(x, y) -> bool:
    return sigma(x) == sigma(y)


def lesssim(x, y) -> bool:
    """Less than or indiscernible from."""
    return sigma(x) <= sigma(y)


def archimedean_witness(x, y) -> int:
    """Minimal natural m with m*x > y, for positive x."""
    x, y = as_generalized(x), as_generalized(y)
    sx, sy = x.shadow, y.shadow
    if sx <= 0.0:
        raise DomainError("archimedean witness requires x > 0")
    m = max(1, math.floor(sy / sx) + 1)
    while m * sx <= sy:
        m += 1
    while m > 1 and (m - 1) * sx > sy:
        m -= 1
    return m


def density_real_between(x, y) -> float:
    """A real strictly between two ordered values (midpoint of the shadows)."""
    x, y = as_generalized(x), as_generalized(y)
    if not lt(x, y):
        raise DomainError("density requires strictly ordered endpoints")
    return (x.shadow + y.shadow) / 2.0


def density_nonreal_between(xi: float, eta: float) -> GeneralizedReal:
    """A nonreal value strictly between two reals (midpoint plus an impulse)."""
    xi, eta = float(xi), float(eta)
    if not xi < eta:
        raise DomainError("density requires strictly ordered endpoints")
    return GeneralizedReal((xi + eta) / 2.0, {DENSITY_WITNESS_ID: 1.0})


# -- wire format --------------------------------------------------------------


def to_dict(x) -> dict:
    x = as_generalized(x)
    return {"shadow": x.shadow, "d": {g: x.dpart[g] for g in sorted(x.dpart)}}


def from_dict(data: Mapping) -> GeneralizedReal:
    try:
        shadow = data["shadow"]
        dpart = data.get("d", {})
    except (TypeError, KeyError) as exc:
        raise DomainError(f"malformed value encoding: {data!r}") from exc
    if not isinstance(dpart, Mapping):
        raise DomainError('value encoding field "d" must be an object')
    return GeneralizedReal(shadow, dict(dpart))


def to_json(x) -> str:
    return json.dumps(to_dict(x))


def from_json(text: str) -> GeneralizedReal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from exc
    return from_dict(data)
