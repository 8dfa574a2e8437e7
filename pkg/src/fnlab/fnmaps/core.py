"""Map pairs with two-sided interpolation and their verification.

An ``(f, g)`` pair on a poset ``P`` is *valid* when for every comparable
``p <= q`` there are witnesses ``r in f(p) ∩ g(q)`` and ``s in g(p) ∩ f(q)``
with ``p <= r, s <= q``.  A single map ``h`` is valid when ``(h, h)`` is;
the two notions are interchangeable via ``collapse``.  Capacities ``(a, b)``
bound ``|f(x)| <= a`` and ``|g(x)| <= b`` inclusively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from ..errors import (
    IndexOutOfRange,
    MapNotTotal,
    NoWitness,
    NotComparable,
    NotPermutation,
)
from ..poset import Poset, bits_of, mask_of

SetMap = tuple[int, ...]  # one bitmask per poset element


class CapacityPair(NamedTuple):
    """Inclusive bounds on the image sizes of ``f`` and ``g``.

    Any feasible pair has ``a, b >= 1`` since every valid pair satisfies
    ``x in f(x) ∩ g(x)``.
    """

    a: int
    b: int

    def check(self) -> "CapacityPair":
        if self.a < 1 or self.b < 1:
            raise ValueError("capacities must be at least 1")
        return self


def _coerce_map(P: Poset, values: Sequence[object], name: str) -> SetMap:
    if len(values) != P.n:
        raise MapNotTotal(f"{name} must assign a set to each of the {P.n} elements")
    masks = []
    for x, v in enumerate(values):
        m = v if isinstance(v, int) else mask_of(v)
        if m < 0 or m >> P.n:
            raise IndexOutOfRange(f"{name}({x}) mentions elements outside the poset")
        masks.append(m)
    return tuple(masks)


@dataclass(frozen=True)
class FnPair:
    """A total pair of set-valued maps on a poset, stored as bitmask rows."""

    poset: Poset
    f: SetMap
    g: SetMap

    def __post_init__(self):
        object.__setattr__(self, "f", _coerce_map(self.poset, self.f, "f"))
        object.__setattr__(self, "g", _coerce_map(self.poset, self.g, "g"))

    @classmethod
    def from_sets(
        cls, P: Poset, f: Sequence[Iterable[int]], g: Sequence[Iterable[int]]
    ) -> "FnPair":
        return cls(P, tuple(mask_of(s) for s in f), tuple(mask_of(s) for s in g))

    def f_set(self, x: int) -> frozenset[int]:
        return frozenset(bits_of(self.f[x]))

    def g_set(self, x: int) -> frozenset[int]:
        return frozenset(bits_of(self.g[x]))

    def capacities(self) -> CapacityPair:
        a = max((m.bit_count() for m in self.f), default=0)
        b = max((m.bit_count() for m in self.g), default=0)
        return CapacityPair(a, b)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification run.

    ``violation`` is the lexicographically least failing ``(p, q, clause)``
    with clause 1 meaning ``f(p) ∩ g(q)`` and clause 2 meaning
    ``g(p) ∩ f(q)``.  ``interpolants`` maps each comparable ``(p, q)`` to its
    least-index witnesses ``(r, s)`` when requested on a valid pair.
    """

    valid: bool
    violation: tuple[int, int, int] | None = None
    interpolants: Mapping[tuple[int, int], tuple[int, int]] | None = None


def _scan(P: Poset, f: SetMap, g: SetMap) -> tuple[int, int, int] | None:
    up = P.up
    down = P.down
    for p in range(P.n):
        fp = f[p]
        gp = g[p]
        for q in bits_of(up[p]):
            box = up[p] & down[q]
            if not fp & g[q] & box:
                return (p, q, 1)
            if not gp & f[q] & box:
                return (p, q, 2)
    return None


def _interpolants(P: Poset, f: SetMap, g: SetMap) -> dict[tuple[int, int], tuple[int, int]]:
    out = {}
    for p in range(P.n):
        for q in bits_of(P.up[p]):
            box = P.up[p] & P.down[q]
            r = f[p] & g[q] & box
            s = g[p] & f[q] & box
            out[(p, q)] = ((r & -r).bit_length() - 1, (s & -s).bit_length() - 1)
    return out


def verify_pair(pair: FnPair, with_interpolants: bool = False) -> Verdict:
    """Check both interpolation clauses on every comparable pair.

    Returns the least violation in lexicographic ``(p, q)`` index order,
    clause 1 before clause 2.
    """
    hit = _scan(pair.poset, pair.f, pair.g)
    if hit is not None:
        return Verdict(False, hit)
    inter = _interpolants(pair.poset, pair.f, pair.g) if with_interpolants else None
    return Verdict(True, None, inter)


def verify_single(P: Poset, h: Sequence[object], with_interpolants: bool = False) -> Verdict:
    """Single-map verification: ``r in h(p) ∩ h(q)`` with ``p <= r <= q``."""
    masks = _coerce_map(P, h, "h")
    hit = _scan(P, masks, masks)
    if hit is not None:
        return Verdict(False, (hit[0], hit[1], 1))
    inter = _interpolants(P, masks, masks) if with_interpolants else None
    return Verdict(True, None, inter)


def collapse(pair: FnPair) -> SetMap:
    """Merge a pair into the single map ``h(x) = f(x) ∪ g(x)``.

    A valid pair always collapses to a valid single map, and a valid single
    map ``h`` is exactly a valid pair ``(h, h)``.
    """
    return tuple(fm | gm for fm, gm in zip(pair.f, pair.g))


def trivial_pair(P: Poset) -> FnPair:
    """The universal pair ``f(x) = P``, ``g(x) = {x}``: always valid."""
    full = P.full_mask()
    return FnPair(P, tuple(full for _ in range(P.n)), tuple(1 << x for x in range(P.n)))


def wellorder_map(P: Poset, order: Sequence[int]) -> SetMap:
    """Prefix map of an element ordering: ``h(q) = {p : p before-or-at q}``.

    Always a valid single map, with ``|h(q)| = position(q) + 1``.
    """
    if sorted(order) != list(range(P.n)):
        raise NotPermutation("order must be a permutation of the elements")
    h = [0] * P.n
    prefix = 0
    for x in order:
        prefix |= 1 << x
        h[x] = prefix
    return tuple(h)


def interpolant_lookup(pair: FnPair, p: int, q: int) -> tuple[int, int]:
    """Deterministic least-index witnesses ``(r, s)`` for a comparable pair."""
    P = pair.poset
    P.check_index(p)
    P.check_index(q)
    if not P.up[p] >> q & 1:
        raise NotComparable(f"{p} <= {q} does not hold")
    box = P.up[p] & P.down[q]
    r = pair.f[p] & pair.g[q] & box
    s = pair.g[p] & pair.f[q] & box
    if not r:
        raise NoWitness(f"no witness in f({p}) ∩ g({q}) within [{p}, {q}]")
    if not s:
        raise NoWitness(f"no witness in g({p}) ∩ f({q}) within [{p}, {q}]")
    return ((r & -r).bit_length() - 1, (s & -s).bit_length() - 1)
