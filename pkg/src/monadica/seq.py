"""Concrete infinitesimal generator sequences and the termwise oracle.

Every generalized real denotes a convergent sequence: the shadow is the
limit and each generator contributes its own null sequence.  This module
evaluates those sequences term by term, samples convergence witnesses, and
applies the defining sequence formulas for the ring operations literally,
so the closed-form arithmetic in :mod:`monadica.core` can be cross-checked
against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import as_generalized
from .errors import DomainError, NotInvertible, UnknownGenerator


@dataclass(frozen=True)
class SequenceGenerator:
    """A named sequence of reals converging to zero (indices start at 1)."""

    id: str
    term: Callable[[int], float]


def impulse(k: int) -> SequenceGenerator:
    """1 at index k, 0 elsewhere; id ``e:<k>``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"impulse index must be a positive integer, got {k!r}")
    return SequenceGenerator(f"e:{k}", lambda n, _k=k: 1.0 if n == _k else 0.0)


def harmonic() -> SequenceGenerator:
    """n -> 1/n; id ``h``."""
    return SequenceGenerator("h", lambda n: 1.0 / n)


def geometric(r: float) -> SequenceGenerator:
    """n -> r**n for 0 < r < 1; id ``g:<r>`` (shortest round-trip decimal)."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"geometric ratio must satisfy 0 < r < 1, got {r!r}")
    return SequenceGenerator(f"g:{r!r}", lambda n, _r=r: _r**n)


class Catalog:
    """Immutable registry of generators with unique, independent sequences.

    Construction checks that ids are unique and that the generators are
    linearly independent on their first 64 terms, so that structural
    equality of coefficient vectors is sound sequence-level equality.
    """

    def __init__(self, generators: Iterable[SequenceGenerator]):
        gens: dict[str, SequenceGenerator] = {}
        for g in generators:
            if g.id in gens:
                raise DomainError(f"duplicate generator id {g.id!r}")
            gens[g.id] = g
        self._gens = gens
        if gens and independence_rank(list(gens.values())) != len(gens):
            raise DomainError("catalog generators are not linearly independent")

    @classmethod
    def standard(cls, impulses: int = 8, ratios: Sequence[float] = (0.5, 0.25)) -> "Catalog":
        gens = [impulse(k) for k in range(1, impulses + 1)]
        gens.append(harmonic())
        gens.extend(geometric(r) for r in ratios)
        return cls(gens)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(self._gens)

    def __contains__(self, gid: str) -> bool:
        return gid in self._gens

    def get(self, gid: str) -> SequenceGenerator:
        try:
            return self._gens[gid]
        except KeyError:
            raise UnknownGenerator(f"no generator with id {gid!r}") from None

    def generators(self) -> tuple[SequenceGenerator, ...]:
        return tuple(self._gens.values())


def independence_rank(generators: Sequence[SequenceGenerator], n_terms: int = 64) -> int:
    """Rank of the n_terms-by-k matrix of leading sequence terms."""
    import numpy as np

    matrix = np.array(
        [[g.term(n) for n in range(1, n_terms + 1)] for g in generators], dtype=float
    )
    return int(np.linalg.matrix_rank(matrix))


DEFAULT_CATALOG = Catalog.standard()


def term(x, n: int, catalog: Catalog = DEFAULT_CATALOG) -> float:
    """n-th term of the sequence a value denotes."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"sequence index must be a positive integer, got {n!r}")
    x = as_generalized(x)
    value = x.shadow
    for gid, c in x.dpart.items():
        value += c * catalog.get(gid).term(n)
    return value


def prefix(x, n_terms: int, catalog: Catalog = DEFAULT_CATALOG) -> list[float]:
    """First n_terms terms of the sequence a value denotes."""
    return [term(x, n, catalog) for n in range(1, n_terms + 1)]


def sampled_indices(nmax: int) -> list[int]:
    """Index sample used by witnesses: {1..1024} plus powers of two up to 2**23."""
    out = set(range(1, min(nmax, 1024) + 1))
    for k in range(24):
        if 2**k <= nmax:
            out.add(2**k)
    return sorted(out)


def convergence_witness(
    x, eps: float, nmax: int, catalog: Catalog = DEFAULT_CATALOG
) -> int | None:
    """Smallest sampled N with |term(x, n) - sigma(x)| < eps for all sampled
    n in [N, nmax]; None when no sampled index qualifies."""
    if not eps > 0.0:
        raise DomainError("eps must be positive")
    if not isinstance(nmax, int) or nmax < 1:
        raise DomainError("nmax must be a positive integer")
    x = as_generalized(x)
    indices = sampled_indices(nmax)
    ok = [abs(term(x, n, catalog) - x.shadow) < eps for n in indices]
    witness = None
    for i in range(len(indices) - 1, -1, -1):
        if not ok[i]:
            break
        witness = indices[i]
    return witness


# -- literal sequence formulas -------------------------------------------------


def oracle_binary(
    op: str, x, y, n_terms: int, catalog: Catalog = DEFAULT_CATALOG
) -> list[float]:
    """Apply the defining termwise formula of addition or multiplication."""
    if n_terms < 1:
        raise DomainError("n_terms must be at least 1")
    x, y = as_generalized(x), as_generalized(y)
    px = prefix(x, n_terms, catalog)
    py = prefix(y, n_terms, catalog)
    if op == "add":
        return [a + b for a, b in zip(px, py)]
    if op == "mul":
        lx, ly = x.shadow, y.shadow
        return [lx * b + ly * a - lx * ly for a, b in zip(px, py)]
    raise DomainError(f"unknown oracle operation {op!r}")


def oracle_inv(x, n_terms: int, catalog: Catalog = DEFAULT_CATALOG) -> list[float]:
    """Termwise inverse 1/lim - (term - lim)/lim**2 for non-infinitesimal x."""
    x = as_generalized(x)
    lx = x.shadow
    if lx == 0.0:
        raise NotInvertible("termwise inverse requires a non-infinitesimal value")
    return [1.0 / lx - (t - lx) / (lx * lx) for t in prefix(x, n_terms, catalog)]


def oracle_pow_nat(
    x, m: int, n_terms: int, catalog: Catalog = DEFAULT_CATALOG
) -> list[float]:
    """m-fold repetition of the termwise multiplication formula."""
    if not isinstance(m, int) or m < 1:
        raise DomainError("exponent must be a positive integer")
    x = as_generalized(x)
    base = prefix(x, n_terms, catalog)
    lx = x.shadow
    acc, lacc = list(base), lx
    for _ in range(m - 1):
        acc = [lacc * b + lx * a for a, b in zip(acc, base)]
        acc = [v - lacc * lx for v in acc]
        lacc = lacc * lx
    return acc


def converges_to(seq_prefix: Sequence[float], limit: float, eps: float) -> bool:
    """Desk-check helper: does the tail of a prefix sit within eps of limit?"""
    tail = seq_prefix[len(seq_prefix) // 2 :]
    return all(abs(v - limit) <= eps for v in tail)


__all__ = [
    "Catalog",
    "DEFAULT_CATALOG",
    "SequenceGenerator",
    "convergence_witness",
    "converges_to",
    "geometric",
    "harmonic",
    "impulse",
    "independence_rank",
    "oracle_binary",
    "oracle_inv",
    "oracle_pow_nat",
    "prefix",
    "sampled_indices",
    "term",
]
