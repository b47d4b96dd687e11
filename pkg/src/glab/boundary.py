"""Growth tables, subgroup distortion, cones and finite-scale boundary
metric estimates, all driven by exact ball distances.

The estimators certify lower bounds only: every reported figure is a max/min
over finitely many exact rational ratios, so a small ball can understate but
never overstate the asymptotic quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import DEFAULT_DIGIT_BUDGET
from .cayley import Ball, TruncatedBallError, distance
from .groups.base import Element, GroupModel, _bit_budget

__all__ = [
    "GrowthTable",
    "DistortionTable",
    "ConeParams",
    "BoundaryEstimate",
    "UnresolvedConeError",
    "growth",
    "distortion",
    "cone_contains",
    "estimate_s",
    "antipodal_lower_bound",
    "t_min",
]


class UnresolvedConeError(RuntimeError):
    """Cone membership could not be decided with the given ball: no n was
    certified true and at least one n was out of range."""


@dataclass(frozen=True)
class GrowthTable:
    """w_g(n) = #{i : d(1, g^i) <= n}, tabulated for n = 0..radius."""

    group_id: str
    element_key: str
    radius: int
    power_bound: int
    rows: tuple[tuple[int, int], ...]
    scan_complete: bool  # False when powers hit the representability budget

    def w(self, n: int) -> int:
        return self.rows[n][1]

    def to_csv(self) -> str:
        return "n,w\n" + "".join(f"{n},{w}\n" for n, w in self.rows)


@dataclass(frozen=True)
class DistortionTable:
    """Delta(r) = max{|i| : d(1, g^i) <= r}, tabulated for r = 0..radius."""

    group_id: str
    element_key: str
    radius: int
    power_bound: int
    rows: tuple[tuple[int, int], ...]
    scan_complete: bool

    def delta(self, r: int) -> int:
        return self.rows[r][1]

    def to_csv(self) -> str:
        return "r,delta\n" + "".join(f"{r},{d}\n" for r, d in self.rows)


@dataclass(frozen=True)
class ConeParams:
    alpha: Fraction
    c: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.c < 0:
            raise ValueError("cone needs alpha >= 0 and c >= 0")


@dataclass(frozen=True)
class BoundaryEstimate:
    """Finite-scale lower-bound certificate for s(g-ray, h-ray).

    alpha_hat[c] = max over i <= I on both orbits of the best (smallest)
    clamped ratio (d(g^i, h^j) - c) / d(1, h^j) over resolvable j; the
    certified bound is the min over the c grid.  saturated means the max
    was attained at i = I for the minimizing c, i.e. a larger I could
    still raise the bound.
    """

    pair: tuple[str, str]
    I: int
    c_grid: tuple[int, ...]
    alpha_hat: dict[int, Fraction]
    lower_bound_s: Fraction
    skipped: tuple[tuple[str, int], ...]
    saturated: bool
    t_scale: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "schema": "glab-boundary-estimate/v1",
            "pair": list(self.pair),
            "I": self.I,
            "c_grid": list(self.c_grid),
            "alpha_hat_per_c": {str(c): str(a) for c, a in self.alpha_hat.items()},
            "lower_bound_s": str(self.lower_bound_s),
            "skipped": [list(s) for s in self.skipped],
            "saturated": self.saturated,
            "t_scale": self.t_scale,
        }


def _require_complete(b: Ball) -> None:
    if not b.complete:
        raise TruncatedBallError("this estimator needs a complete ball")


def _scan(G: GroupModel, g: Element, b: Ball, power_bound: int, digit_budget: int):
    """One pass over g^i for 0 < |i| <= power_bound in both directions:
    per-distance counts and max |i|, plus a flag that goes False when the
    power iteration hits the representability budget."""
    hist = [0] * (b.radius + 1)
    maxabs = [0] * (b.radius + 1)
    hist[0] = 1  # i = 0 always counts at distance 0
    budget = _bit_budget(digit_budget)
    complete = True
    for direction in (1, -1):
        step = g if direction == 1 else G.invert(g)
        cur = G.identity()
        for i in range(1, power_bound + 1):
            cur = G.multiply(cur, step)
            if G.element_bits(cur) > budget:
                complete = False
                break
            d = b.dists.get(G.canonical_key(cur))
            if d is not None:
                hist[d] += 1
                maxabs[d] = max(maxabs[d], i)
    return hist, maxabs, complete


def growth(
    G: GroupModel,
    g: Element,
    b: Ball,
    power_bound: int | None = None,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> GrowthTable:
    _require_complete(b)
    if power_bound is None:
        power_bound = len(b.dists)
    hist, _, complete = _scan(G, g, b, power_bound, digit_budget)
    rows = []
    acc = 0
    for n in range(b.radius + 1):
        acc += hist[n]
        rows.append((n, acc))
    return GrowthTable(
        group_id=G.group_id,
        element_key=G.canonical_key(g),
        radius=b.radius,
        power_bound=power_bound,
        rows=tuple(rows),
        scan_complete=complete,
    )


def distortion(
    G: GroupModel,
    g: Element,
    b: Ball,
    power_bound: int | None = None,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> DistortionTable:
    _require_complete(b)
    if power_bound is None:
        power_bound = len(b.dists)
    _, maxabs, complete = _scan(G, g, b, power_bound, digit_budget)
    rows = []
    best = 0
    for r in range(b.radius + 1):
        best = max(best, maxabs[r])
        rows.append((r, best))
    return DistortionTable(
        group_id=G.group_id,
        element_key=G.canonical_key(g),
        radius=b.radius,
        power_bound=power_bound,
        rows=tuple(rows),
        scan_complete=complete,
    )


def cone_contains(
    G: GroupModel,
    g: Element,
    params: ConeParams,
    v: Element,
    b: Ball,
    n_range: int,
) -> bool:
    """True iff some n in [1, n_range] has d(v, g^n) <= alpha*d(1,g^n) + c,
    decided by exact rational comparison.  Raises UnresolvedConeError when
    no n certifies true and at least one n was beyond the ball."""
    _require_complete(b)
    if n_range < 1:
        raise ValueError("n_range must be >= 1")
    v_inv = G.invert(v)
    cur = G.identity()
    unresolved = 0
    for _ in range(n_range):
        cur = G.multiply(cur, g)  # g^n
        d_center = distance(b, G, cur)
        d_v = distance(b, G, G.multiply(v_inv, cur))
        if d_center.distance is None or d_v.distance is None:
            unresolved += 1
            continue
        if Fraction(d_v.distance) <= params.alpha * d_center.distance + params.c:
            return True
    if unresolved:
        raise UnresolvedConeError(
            f"{unresolved} of {n_range} cone tests unresolvable at radius {b.radius}"
        )
    return False


def _clamp01(x: Fraction) -> Fraction:
    return max(Fraction(0), min(Fraction(1), x))


def estimate_s(
    G: GroupModel,
    g: Element,
    h: Element,
    b: Ball,
    I: int,
    c_grid: tuple[int, ...] | list[int],
    j_limit: int | None = None,
) -> BoundaryEstimate:
    """Symmetrized finite-scale lower bound on s between the g- and h-rays."""
    _require_complete(b)
    if I < 0:
        raise ValueError("I must be >= 0")
    c_grid = tuple(sorted(set(int(c) for c in c_grid)))
    if not c_grid or c_grid[0] < 0:
        raise ValueError("c_grid must be nonempty with nonnegative entries")
    if j_limit is None:
        j_limit = max(64, 2 * b.radius, 2 * I)

    def orbit_rows(u: Element, v: Element, label: str):
        """d(u^i, v^j) and d(1, v^j) for i <= I, j <= j_limit, ball-exact."""
        v_dists: list[tuple[int, Element, int]] = []  # (j, v^j, d(1,v^j))
        cur = G.identity()
        for j in range(1, j_limit + 1):
            cur = G.multiply(cur, v)
            dj = b.dists.get(G.canonical_key(cur))
            if dj is not None:
                v_dists.append((j, cur, dj))
        rows = []
        u_pow = G.identity()
        for i in range(1, I + 1):
            u_pow = G.multiply(u_pow, u)
            inv = G.invert(u_pow)
            cells = []
            for j, v_pow, dj in v_dists:
                dij = b.dists.get(G.canonical_key(G.multiply(inv, v_pow)))
                if dij is not None:
                    cells.append((dij, dj))
            rows.append((label, i, cells))
        return rows

    rows = orbit_rows(g, h, "g->h") + orbit_rows(h, g, "h->g")

    skipped = tuple((label, i) for label, i, cells in rows if not cells)
    alpha_hat: dict[int, Fraction] = {}
    argmax_i: dict[int, int] = {}
    for c in c_grid:
        best = Fraction(0)
        best_i = 0
        for label, i, cells in rows:
            if not cells:
                continue
            ratios = []
            for dij, dj in cells:
                if dj == 0:
                    ratios.append(Fraction(0) if dij <= c else Fraction(1))
                else:
                    ratios.append(_clamp01(Fraction(dij - c, dj)))
            m = min(ratios)
            if m > best:
                best = m
                best_i = i
        alpha_hat[c] = best
        argmax_i[c] = best_i

    lower = min(alpha_hat.values()) if alpha_hat else Fraction(0)
    c_star = min(c for c in c_grid if alpha_hat[c] == lower)
    return BoundaryEstimate(
        pair=(G.canonical_key(g), G.canonical_key(h)),
        I=I,
        c_grid=c_grid,
        alpha_hat=alpha_hat,
        lower_bound_s=lower,
        skipped=skipped,
        saturated=argmax_i[c_star] == I and I > 0,
    )


def antipodal_lower_bound(
    G: GroupModel,
    g: Element,
    b: Ball,
    I: int,
    c_grid: tuple[int, ...] | list[int],
    j_limit: int | None = None,
) -> BoundaryEstimate:
    """estimate_s against the inverse ray; reports sqrt as the t figure."""
    est = estimate_s(G, g, G.invert(g), b, I, c_grid, j_limit)
    return BoundaryEstimate(
        pair=est.pair,
        I=est.I,
        c_grid=est.c_grid,
        alpha_hat=est.alpha_hat,
        lower_bound_s=est.lower_bound_s,
        skipped=est.skipped,
        saturated=est.saturated,
        t_scale=math.sqrt(est.lower_bound_s),
    )


def t_min(d: int, gamma: float, delta: float) -> float:
    """sqrt(log(gamma/delta) / log((2d-1)*gamma)), the antipodal separation
    floor for a d-generator group with growth gamma and orbit growth delta."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not (gamma > delta > 1):
        raise ValueError("need gamma > delta > 1")
    return math.sqrt(math.log(gamma / delta) / math.log((2 * d - 1) * gamma))
