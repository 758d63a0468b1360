"""Brute-force surface tiles by piling unit hypercubes.

Independent of the package's height function and shift arithmetic: a
lattice point is covered when it dominates some peak, each e-line is scanned
upward for its first covered point, and the N surface points over a flat
tile's projected vertices are checked to form a unit-step chain.
"""

from itertools import permutations

import numpy as np


def window_tiles(dim, lo=-5, hi=5):
    """Canonical (degree 0) base and direction word of every window flat tile."""
    axes = [np.arange(lo, hi + 1)] * (dim - 1)
    heads = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, dim - 1)
    bases = np.concatenate([heads, -heads.sum(1, keepdims=True)], 1)
    perms = np.array(list(permutations(range(dim), dim - 1)))
    b = np.repeat(bases, len(perms), 0)
    d = np.tile(perms, (len(bases), 1))
    return b, d


def _chain(bases, dirs, dim):
    pts = [bases]
    for j in range(dim - 1):
        step = np.eye(dim, dtype=np.int64)[dirs[:, j]]
        pts.append(pts[-1] + step)
    return np.stack(pts, 1)  # F x N x N


def first_covered(lines, peaks, kmin=-64, kmax=64):
    """Smallest k with line + k*e dominating a peak, by scanning k upward."""
    out = np.full(len(lines), kmax + 1, dtype=np.int64)
    todo = np.ones(len(lines), dtype=bool)
    for k in range(kmin, kmax + 1):
        z = lines + k
        cov = np.zeros(len(lines), dtype=bool)
        for p in peaks:
            cov |= np.all(z >= p, axis=1)
        hit = cov & todo
        out[hit] = k
        todo &= ~hit
        if not todo.any():
            break
    if todo.any():
        raise RuntimeError("scan window too small")
    return out


def surface_tiles(peaks, bases, dirs):
    """Surface tile over each flat (base, dirs), or None where none exists.

    Returns (ok mask, tile bases, tile direction words).
    """
    peaks = np.asarray(peaks, dtype=np.int64)
    dim = peaks.shape[1]
    verts = _chain(bases, dirs, dim)
    # normalise every vertex to its e-line representative with last coordinate 0
    lines = verts - verts[:, :, -1:]
    flat_lines = lines.reshape(-1, dim)
    uniq, inv = np.unique(flat_lines, axis=0, return_inverse=True)
    k = first_covered(uniq, peaks)[inv.reshape(-1)].reshape(len(bases), dim)
    surf = lines + k[:, :, None]
    order = np.argsort(surf.sum(2), axis=1, kind="stable")
    surf = np.take_along_axis(surf, order[:, :, None], 1)
    steps = np.diff(surf, axis=1)  # F x (N-1) x N
    unit = (np.abs(steps).sum(2) == 1) & (steps.max(2) == 1)
    axes = steps.argmax(2)
    distinct = np.array([len(set(row)) == dim - 1 for row in axes])
    ok = unit.all(1) & distinct
    return ok, surf[:, 0, :], axes


def all_surface_tiles_in_box(peaks, lo, hi):
    """Every slant tile in the box whose vertices are all surface points (scan)."""
    peaks = np.asarray(peaks, dtype=np.int64)
    dim = peaks.shape[1]
    axes = [np.arange(lo, hi + 1)] * dim
    pts = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, dim)

    def covered(z):
        c = np.zeros(len(z), dtype=bool)
        for p in peaks:
            c |= np.all(z >= p, axis=1)
        return c

    on = covered(pts) & ~covered(pts - 1)
    surface = {tuple(map(int, p)) for p in pts[on]}
    found = []
    for base in surface:
        for dirs in permutations(range(dim), dim - 1):
            v = list(base)
            good = True
            for d in dirs:
                v[d] += 1
                if tuple(v) not in surface:
                    good = False
                    break
            if good:
                found.append((base, dirs))
    return found
