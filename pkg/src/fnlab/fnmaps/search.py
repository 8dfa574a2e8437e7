"""Exact capacity-bounded pair search and the Pareto frontier walk.

``search_pair`` is a complete backtracking search: it decides whether a
valid pair within capacities ``(a, b)`` exists and returns a witness when
one does.  Choices are made per element in index order (``f(x)`` then
``g(x)``), candidate sets are enumerated in least-index-first order, and
both interpolation clauses are propagated as the assignment grows, so the
result is deterministic bit for bit.  Validity is pointwise monotone, so
the search may fix every image to its exact capacity without losing
completeness.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from ..errors import BudgetExceeded
from ..poset import Poset, bits_of
from .core import CapacityPair, FnPair

DEFAULT_NODE_BUDGET = 10**8


def _candidates(n: int, x: int, size: int) -> list[int]:
    """All bitmasks containing ``x`` with ``size`` bits, least indices first."""
    others = [i for i in range(n) if i != x]
    base = 1 << x
    return [
        base | sum(1 << i for i in combo) for combo in combinations(others, size - 1)
    ]


def search_pair(
    P: Poset,
    cap: CapacityPair | tuple[int, int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> FnPair | None:
    """Find a valid pair with ``|f(x)| <= a`` and ``|g(x)| <= b``, or prove
    there is none.

    Complete within the capacity bounds; raises :class:`BudgetExceeded` when
    the node budget runs out, which is reported distinctly from ``None``.
    """
    a, b = CapacityPair(*cap).check()
    n = P.n
    if n == 0:
        return FnPair(P, (), ())
    asize = min(a, n)
    bsize = min(b, n)
    fcands = [_candidates(n, x, asize) for x in range(n)]
    gcands = [_candidates(n, x, bsize) for x in range(n)]
    up = P.up
    down = P.down
    downs = [list(bits_of(down[x])) for x in range(n)]
    ups = [list(bits_of(up[x])) for x in range(n)]
    box = [[up[p] & down[q] for q in range(n)] for p in range(n)]

    f = [0] * n
    g = [0] * n
    nodes = 0
    # Slot 2x assigns f(x), slot 2x+1 assigns g(x).
    total = 2 * n

    def extend(slot: int) -> bool:
        nonlocal nodes
        if slot == total:
            return True
        x, is_g = divmod(slot, 2)
        if not is_g:
            for fm in fcands[x]:
                nodes += 1
                if nodes > node_budget:
                    raise BudgetExceeded(nodes, node_budget)
                ok = True
                for p in downs[x]:
                    t = fm & box[p][x]
                    if p < x:
                        if not g[p] & t:
                            ok = False
                            break
                    elif not t:
                        ok = False
                        break
                if ok:
                    for q in ups[x]:
                        t = fm & box[x][q]
                        if q < x:
                            if not g[q] & t:
                                ok = False
                                break
                        elif not t:
                            ok = False
                            break
                if ok:
                    f[x] = fm
                    if extend(slot + 1):
                        return True
            return False
        cands = gcands[x]
        if x == 0 and asize == bsize:
            # When a == b, swapping (f, g) maps solutions to solutions, so
            # the first g-choice may start at the position picked for f(0).
            cands = cands[fcands[0].index(f[0]):]
        for gm in cands:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(nodes, node_budget)
            ok = True
            for p in downs[x]:
                t = gm & box[p][x]
                if p <= x:
                    if not f[p] & t:
                        ok = False
                        break
                elif not t:
                    ok = False
                    break
            if ok:
                for q in ups[x]:
                    t = gm & box[x][q]
                    if q <= x:
                        if not f[q] & t:
                            ok = False
                            break
                    elif not t:
                        ok = False
                        break
            if ok:
                g[x] = gm
                if extend(slot + 1):
                    return True
        return False

    if extend(0):
        return FnPair(P, tuple(f), tuple(g))
    return None


def feasible(
    P: Poset,
    cap: CapacityPair | tuple[int, int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    return search_pair(P, cap, node_budget) is not None


@dataclass(frozen=True)
class Frontier:
    """Pareto-minimal feasible capacity pairs, sorted by first component.

    The point set is an antichain under componentwise order and is symmetric
    under swapping the two capacities.
    """

    points: tuple[tuple[int, int], ...]

    def dominates(self, cap: tuple[int, int]) -> bool:
        """Whether the capacity pair is feasible according to the frontier."""
        return any(a <= cap[0] and b <= cap[1] for a, b in self.points)


def _beta(P: Poset, a: int, node_budget: int) -> int:
    """Least ``b`` with ``(a, b)`` feasible, by binary search; ``(a, n)`` is
    always feasible since ``g(x) = (↓x ∪ ↑x)`` pairs with singleton ``f``."""
    lo, hi = 1, max(P.n, 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(P, (a, mid), node_budget):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _beta_task(args):
    P, a, node_budget = args
    return a, _beta(P, a, node_budget)


def _pareto_from_betas(betas: dict[int, int]) -> tuple[tuple[int, int], ...]:
    points = []
    prev = None
    for a in sorted(betas):
        if prev is None or betas[a] < prev:
            points.append((a, betas[a]))
        prev = betas[a]
    mirrored = {(b, a) for a, b in points} | set(points)
    return tuple(sorted(mirrored))


def frontier(
    P: Poset,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> Frontier:
    """Walk the monotone feasibility boundary and return its Pareto points.

    Feasibility is monotone in both capacities and symmetric under swapping
    them, so the walk only descends the boundary for ``a`` up to the
    diagonal and mirrors the result.  With ``workers > 1`` the per-``a``
    boundary values are computed on a process pool; the returned frontier is
    identical to the sequential result.
    """
    if P.n == 0:
        return Frontier(((1, 1),))
    if workers > 1:
        tasks = [(P, a, node_budget) for a in range(1, P.n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            betas = dict(pool.map(_beta_task, tasks))
        return Frontier(_pareto_from_betas(betas))
    betas: dict[int, int] = {}
    prev = None
    for a in range(1, P.n + 1):
        b = prev if prev is not None else P.n
        try:
            while b > 1 and feasible(P, (a, b - 1), node_budget):
                b -= 1
        except BudgetExceeded as e:
            # boundary values confirmed so far are true frontier points
            raise BudgetExceeded(e.nodes, e.budget, _pareto_from_betas(betas)) from e
        betas[a] = b
        prev = b
        if b <= a:
            break
    return Frontier(_pareto_from_betas(betas))
