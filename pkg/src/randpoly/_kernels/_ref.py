"""Pure-Python reference implementation of the 2-D hull kernels.

Used when the compiled extension is unavailable (or forced via
``RANDPOLY_PURE_PYTHON=1``).  Semantics are shared with the compiled
backend: Andrew's monotone chain on lexicographically sorted points,
collinear points dropped, output counter-clockwise starting at the
lexicographic minimum.
"""

from __future__ import annotations

import math

import numpy as np

NAME = "fallback"


def _chain(xs, ys):
    """Hull positions (into the sorted order) for pre-sorted coordinates."""
    m = len(xs)
    if m == 1:
        return [0]
    lower: list[int] = []
    for i in range(m):
        x, y = xs[i], ys[i]
        while len(lower) >= 2:
            j, k = lower[-2], lower[-1]
            if (xs[k] - xs[j]) * (y - ys[j]) - (ys[k] - ys[j]) * (x - xs[j]) <= 0.0:
                lower.pop()
            else:
                break
        lower.append(i)
    upper: list[int] = []
    for i in range(m - 1, -1, -1):
        x, y = xs[i], ys[i]
        while len(upper) >= 2:
            j, k = upper[-2], upper[-1]
            if (xs[k] - xs[j]) * (y - ys[j]) - (ys[k] - ys[j]) * (x - xs[j]) <= 0.0:
                upper.pop()
            else:
                break
        upper.append(i)
    return lower[:-1] + upper[:-1]


def chain_positions(sorted_pts):
    xs = sorted_pts[:, 0].tolist()
    ys = sorted_pts[:, 1].tolist()
    return np.asarray(_chain(xs, ys), dtype=np.intp)


def _area_peri_from_chain(xs, ys, hull):
    k = len(hull)
    if k == 1:
        return 0.0, 0.0
    area = 0.0
    peri = 0.0
    for t in range(k):
        i = hull[t]
        j = hull[(t + 1) % k]
        area += xs[i] * ys[j] - xs[j] * ys[i]
        peri += math.hypot(xs[j] - xs[i], ys[j] - ys[i])
    return 0.5 * area, peri


def chain_area_perimeter(sorted_pts):
    xs = sorted_pts[:, 0].tolist()
    ys = sorted_pts[:, 1].tolist()
    return _area_peri_from_chain(xs, ys, _chain(xs, ys))


def batch_area_perimeter(batch):
    b = batch.shape[0]
    out = np.empty((b, 2), dtype=np.float64)
    for i in range(b):
        pts = batch[i]
        order = np.lexsort((pts[:, 1], pts[:, 0]))
        out[i, 0], out[i, 1] = chain_area_perimeter(pts[order])
    return out

def augmented_areas(sorted_base, extra, mask):
    m = extra.shape[0]
    out = np.empty(m, dtype=np.float64)
    for i in range(m):
        sel = extra[i][mask[i].astype(bool)]
        pts = np.concatenate([sorted_base, sel], axis=0)
        order = np.lexsort((pts[:, 1], pts[:, 0]))
        out[i] = chain_area_perimeter(pts[order])[0]
    return out


def outside_mask(poly, pts, tol):
    k = poly.shape[0]
    edges = np.roll(poly, -1, axis=0) - poly  # (k, 2)
    rel_x = pts[:, 0:1] - poly[:, 0][None, :]  # (m, k)
    rel_y = pts[:, 1:2] - poly[:, 1][None, :]
    cross = edges[:, 0][None, :] * rel_y - edges[:, 1][None, :] * rel_x
    return (cross < -tol).any(axis=1) if k >= 3 else np.ones(len(pts), dtype=bool)


def min_origin_distance(poly):
    k = poly.shape[0]
    if k < 3:
        return 0.0
    nxt = np.roll(poly, -1, axis=0)
    cross = poly[:, 0] * nxt[:, 1] - poly[:, 1] * nxt[:, 0]
    lengths = np.hypot(nxt[:, 0] - poly[:, 0], nxt[:, 1] - poly[:, 1])
    return float(np.min(cross / lengths))
