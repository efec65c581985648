"""Brute-force certification oracles: certified grid searches over 3- and
6-periodic cyclic schedules, and the unfolding lower-bound sequence v_k.

The grid searches evaluate exact objective values on a regular grid, so the
reported best value can only overestimate the true minimum, and by at most
certified_tolerance (a Lipschitz bound times the grid spacing).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom import (
    EdgeId,
    Point,
    Triangle,
    edge_point,
    line_intersection,
    segment_distance,
)
from .orthic import _channel_from_chain, orthic_schedule, reflection_chain
from .schedule import gap_report


@dataclass(frozen=True)
class SearchResult:
    best_value: float
    best_params: list[float]
    grid_n: int
    objective: str  # "gap1" or "gap2"
    certified_tolerance: float


def _edge_grid(t: Triangle, e: EdgeId, us: np.ndarray) -> np.ndarray:
    from .geom import edge_endpoints

    s, f = edge_endpoints(t, e)
    return np.stack(
        [s.x + us * (f.x - s.x), s.y + us * (f.y - s.y)], axis=-1
    )


def _dist_matrix(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    d = p[:, None, :] - q[None, :, :]
    return np.hypot(d[..., 0], d[..., 1])


def grid_search_3periodic(t: Triangle, grid_n: int) -> SearchResult:
    """Minimize the inscribed-triangle perimeter (the 1-gap of a cyclic
    3-periodic schedule) over a (grid_n+1)^3 grid, one parameter per edge."""
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    us = np.arange(grid_n + 1) / grid_n
    pa = _edge_grid(t, EdgeId.A, us)
    pb = _edge_grid(t, EdgeId.B, us)
    pc = _edge_grid(t, EdgeId.C, us)
    d_ab = _dist_matrix(pa, pb)
    d_bc = _dist_matrix(pb, pc)
    d_ca = _dist_matrix(pc, pa)

    best = math.inf
    bi = bk = 0
    n1 = grid_n + 1
    chunk = max(1, min(n1, (1 << 17) // (n1 * n1) + 1))  # keep temp cube cache-sized
    for lo in range(0, n1, chunk):
        hi = min(n1, lo + chunk)
        # cube[i, j, k] = |PA_i PB_j| + |PB_j PC_k| over the u1-chunk
        cube = d_ab[lo:hi, :, None] + d_bc[None, :, :]
        totals = cube.min(axis=1) + d_ca.T[lo:hi]
        flat = int(np.argmin(totals))
        i_loc, k_loc = np.unravel_index(flat, totals.shape)
        val = float(totals[i_loc, k_loc])
        if val < best:
            best = val
            bi, bk = lo + int(i_loc), int(k_loc)
    # Recover the middle parameter only for the winning (u1, u3) pair.
    bj = int(np.argmin(d_ab[bi, :] + d_bc[:, bk]))
    best_idx = (bi, bj, bk)
    max_edge = t.diameter
    return SearchResult(
        best_value=best,
        best_params=[float(us[i]) for i in best_idx],
        grid_n=grid_n,
        objective="gap1",
        certified_tolerance=6.0 * max_edge / grid_n,
    )


# Edge visitation pattern of the 6-periodic search; each edge appears twice,
# so the 2-gap of such a schedule equals the full cycle length.
GAP2_PATTERN = (EdgeId.A, EdgeId.C, EdgeId.B, EdgeId.A, EdgeId.C, EdgeId.B)


def evaluate_gap2_cycle(t: Triangle, params: list[float]) -> float:
    """Exact cycle length (= 2-gap) of the pattern (A,C,B,A,C,B) generator."""
    if len(params) != 6:
        raise ValueError("need 6 edge parameters")
    pts = [edge_point(t, e, u) for e, u in zip(GAP2_PATTERN, params)]
    return sum(pts[i].dist(pts[(i + 1) % 6]) for i in range(6))


def _min_cycle_6(
    grids: list[np.ndarray], d_fwd: list[np.ndarray]
) -> tuple[float, list[int]]:
    """Min over u1..u6 of the closed chain sum, with backpointer recovery.

    d_fwd[i] is the distance matrix between stop i and stop i+1 (0-based,
    stop 6 wrapping to stop 0); all six share grids per stop.
    """
    n1 = grids[0].shape[0]
    best = math.inf
    best_idx: list[int] = [0] * 6
    for i0 in range(n1):
        v = d_fwd[0][i0, :].copy()
        bps = []
        for step in range(1, 5):
            tot = v[:, None] + d_fwd[step]
            bp = np.argmin(tot, axis=0)
            v = np.min(tot, axis=0)
            bps.append(bp)
        tot_last = v + d_fwd[5][:, i0]
        i5 = int(np.argmin(tot_last))
        val = float(tot_last[i5])
        if val < best:
            best = val
            idx = [0] * 6
            idx[0] = i0
            idx[5] = i5
            for step in range(4, 0, -1):
                idx[step] = int(bps[step - 1][idx[step + 1]])
            best_idx = idx
    return best, best_idx


def grid_search_6periodic_gap2(
    t: Triangle, grid_n: int, refine_rounds: int = 8
) -> SearchResult:
    """Minimize the 2-gap over cyclic 6-periodic generators with edge pattern
    (A,C,B,A,C,B); coarse certified grid plus local refinement around the
    best cell.  certified_tolerance reflects the coarse grid only."""
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    lo = np.zeros(6)
    hi = np.ones(6)
    best_val = math.inf
    best_us = [0.0] * 6
    for _ in range(refine_rounds + 1):
        axes = [np.linspace(lo[i], hi[i], grid_n + 1) for i in range(6)]
        grids = [
            _edge_grid(t, e, ax) for e, ax in zip(GAP2_PATTERN, axes)
        ]
        d_fwd = [
            _dist_matrix(grids[i], grids[(i + 1) % 6]) for i in range(6)
        ]
        val, idx = _min_cycle_6(grids, d_fwd)
        if val < best_val:
            best_val = val
            best_us = [float(axes[i][idx[i]]) for i in range(6)]
        width = (hi - lo) / grid_n  # current cell size per axis
        lo = np.clip([best_us[i] - width[i] for i in range(6)], 0.0, 1.0)
        hi = np.clip([best_us[i] + width[i] for i in range(6)], 0.0, 1.0)
        if max(width) < 1e-9:
            break
    return SearchResult(
        best_value=best_val,
        best_params=best_us,
        grid_n=grid_n,
        objective="gap2",
        certified_tolerance=12.0 * t.diameter / grid_n,
    )


def _channel_cross_section(t: Triangle):
    """(R, T, v) of the unfolding: channel boundary hits on BC and the
    per-gadget translation v = K2 - K (|v| = 2 * orthic perimeter)."""
    chain = reflection_chain(t)
    channel = _channel_from_chain(chain)
    b, c = chain.base.b, chain.base.c
    bc: tuple[Point, Point] = (b, c)
    t_pt = line_intersection(channel.boundary_high, bc)
    r_pt = line_intersection(channel.boundary_low, bc)
    v = chain.k2 - chain.k
    return r_pt, t_pt, v


def limited_2k_optimum(t: Triangle, k: int) -> float:
    """v_k: length of the shortest trajectory from the channel cross-section
    RT on BC to its k-th unfolded image (the short diagonal of RTT_kR_k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r_pt, t_pt, v = _channel_cross_section(t)
    shift = v * float(k)
    return segment_distance((r_pt, t_pt), (r_pt + shift, t_pt + shift))


def lower_bound_profile(t: Triangle, k_max: int) -> list[tuple[int, float, float]]:
    """Rows (k, v_k / k, bound_k) where bound_k >= 2*P - v_k/k is the
    parallelogram bound  |v . (T - R)| / (P k)  from the skew diagonal."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    r_pt, t_pt, v = _channel_cross_section(t)
    per2 = v.norm()  # 2 * orthic perimeter
    c = abs(v.dot(t_pt - r_pt))
    rows = []
    for k in range(1, k_max + 1):
        shift = v * float(k)
        vk = segment_distance((r_pt, t_pt), (r_pt + shift, t_pt + shift))
        rows.append((k, vk / k, 2.0 * c / (per2 * k)))
    return rows


def verify_1gap_optimality(t: Triangle, grid_n: int = 100) -> bool:
    """Certify 1-gap optimality of the orthic schedule by sandwiching:
    v_k / (2k)  <=  orthic 1-gap  <=  v_k / (2k) + bound_k / 2,
    with k = grid_n unfolding repetitions."""
    k = max(1, grid_n)
    rows = lower_bound_profile(t, k)
    _, vk_over_k, bound = rows[-1]
    lower = vk_over_k / 2.0
    upper = gap_report(orthic_schedule(t), 1).overall
    slack = 1e-9 * upper
    return lower <= upper + slack and upper - lower <= bound / 2.0 + slack
