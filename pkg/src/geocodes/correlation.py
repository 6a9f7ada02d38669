"""Worst-case overlap between macrobonds over all translations.

The overlap ``|A ∩ (B + v)|`` counts pairs ``p in A, q in B`` with ``p - q = v``,
so the maximum over ``v`` is the largest multiplicity in the difference
multiset ``{p - q}``. That count is the primary algorithm; the explicit sweep
over every translation is kept as an independent check.

Flipped overlaps use sums instead: ``flip(A) = c - A`` with ``c = (n-1, n-1)``,
so ``|flip(A) ∩ (B + v)|`` counts pairs with ``p + q = c - v``.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .grid import Code, Macrobond, Translation, flip


@dataclass(frozen=True)
class Witness:
    i: int
    j: int
    v: Translation
    overlap: int
    flipped: bool = False


@dataclass(frozen=True)
class CorrelationReport:
    max_auto: int
    max_cross: int
    max_flip: int | None = None
    witness: Witness | None = None
    lam: int | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None


def _check_same_grid(a: Macrobond, b: Macrobond):
    if a.n != b.n:
        raise ValueError(f"grid size mismatch: {a.n} vs {b.n}")


def correlation_at(a: Macrobond, b: Macrobond, v: tuple[int, int]) -> int:
    """``|a ∩ (b + v)|``, using ``a``'s bitmap for membership."""
    _check_same_grid(a, b)
    dx, dy = v
    n = a.n
    if abs(dx) >= n or abs(dy) >= n:
        return 0
    return sum(1 for x, y in b.patches if (x + dx, y + dy) in a)


def _best(counts: Counter) -> tuple[int, Translation]:
    if not counts:
        return 0, Translation(0, 0)
    top = max(counts.values())
    v = min(k for k, c in counts.items() if c == top)
    return top, Translation(*v)


def difference_counts(a: Macrobond, b: Macrobond) -> Counter:
    return Counter((p.x - q.x, p.y - q.y) for p in a.patches for q in b.patches)


def max_cross_correlation(a: Macrobond, b: Macrobond) -> tuple[int, Translation]:
    """Largest ``|a ∩ (b + v)|`` over all ``v``, with the lexicographically
    smallest maximizing ``v``."""
    _check_same_grid(a, b)
    return _best(difference_counts(a, b))


def max_cross_correlation_sweep(a: Macrobond, b: Macrobond) -> tuple[int, Translation]:
    """Same as :func:`max_cross_correlation` by trying every ``|dx|, |dy| < n``."""
    _check_same_grid(a, b)
    n = a.n
    best, arg = -1, Translation(0, 0)
    for dx in range(-n + 1, n):
        for dy in range(-n + 1, n):
            c = correlation_at(a, b, (dx, dy))
            if c > best:
                best, arg = c, Translation(dx, dy)
    return best, arg


def max_auto_correlation(m: Macrobond) -> tuple[int, Translation]:
    """Largest ``|m ∩ (m + v)|`` over ``v != 0``."""
    if len(m) < 2:
        raise ValueError("auto-correlation needs at least 2 patches")
    counts = difference_counts(m, m)
    del counts[(0, 0)]
    return _best(counts)


def max_auto_correlation_sweep(m: Macrobond) -> tuple[int, Translation]:
    if len(m) < 2:
        raise ValueError("auto-correlation needs at least 2 patches")
    n = m.n
    best, arg = -1, Translation(0, 0)
    for dx in range(-n + 1, n):
        for dy in range(-n + 1, n):
            if dx == 0 and dy == 0:
                continue
            c = correlation_at(m, m, (dx, dy))
            if c > best:
                best, arg = c, Translation(dx, dy)
    return best, arg


def max_flip_correlation(a: Macrobond, b: Macrobond) -> tuple[int, Translation]:
    """Largest ``|flip(a) ∩ (b + v)|`` over all ``v`` (``v = 0`` included)."""
    _check_same_grid(a, b)
    k = a.n - 1
    counts = Counter((k - p.x - q.x, k - p.y - q.y) for p in a.patches for q in b.patches)
    return _best(counts)


def max_flip_correlation_sweep(a: Macrobond, b: Macrobond) -> tuple[int, Translation]:
    return max_cross_correlation_sweep(flip(a), b)


# Batched kernels over key arrays (see Macrobond.keys).


def _row_max_multiplicity(d: np.ndarray) -> np.ndarray:
    """Max multiplicity of a value within each row of a 2-D integer array."""
    if d.shape[1] == 0:
        return np.zeros(d.shape[0], dtype=np.int64)
    s = np.sort(d, axis=1)
    idx = np.broadcast_to(np.arange(s.shape[1]), s.shape)
    starts = np.ones(s.shape, dtype=bool)
    starts[:, 1:] = s[:, 1:] != s[:, :-1]
    last_start = np.maximum.accumulate(np.where(starts, idx, 0), axis=1)
    return (idx - last_start + 1).max(axis=1)


def auto_maxima(keys: np.ndarray) -> np.ndarray:
    """Max nonzero-shift auto-correlation for each row of an ``(m, w)`` key array."""
    m, w = keys.shape
    d = keys[:, :, None] - keys[:, None, :]
    off = ~np.eye(w, dtype=bool)
    return _row_max_multiplicity(d[:, off])


def cross_maxima(a: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Max cross-correlation of key row ``a`` against each row of ``others``."""
    d = a[None, :, None] - others[:, None, :]
    return _row_max_multiplicity(d.reshape(len(others), -1))


def flip_maxima(a: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Max flip-correlation of key row ``a`` against each row of ``others``."""
    d = a[None, :, None] + others[:, None, :]
    return _row_max_multiplicity(d.reshape(len(others), -1))


def _pair_block(keys: np.ndarray, rows: Sequence[int], flipping: bool):
    """Per-row maxima of cross (j > i) and flip (j >= i) correlation.

    Returns ``(i, cross_max, cross_argj, flip_max, flip_argj)`` tuples, the
    arg being the smallest ``j`` attaining the row maximum.
    """
    out = []
    for i in rows:
        cm, cj, fm, fj = 0, -1, 0, -1
        rest = keys[i + 1:]
        if len(rest):
            c = cross_maxima(keys[i], rest)
            k = int(np.argmax(c))
            cm, cj = int(c[k]), i + 1 + k
        if flipping:
            f = flip_maxima(keys[i], keys[i:])
            k = int(np.argmax(f))
            fm, fj = int(f[k]), i + k
        out.append((i, cm, cj, fm, fj))
    return out


def _sampled_block(keys: np.ndarray, pairs: Sequence[tuple[int, int]], flipping: bool):
    out = []
    for i, j in pairs:
        c = int(cross_maxima(keys[i], keys[j:j + 1])[0])
        f = int(flip_maxima(keys[i], keys[j:j + 1])[0]) if flipping else 0
        out.append((i, j, c, f))
    return out


def verify_code(
    code: Code,
    mode: str = "exhaustive",
    k: int = 0,
    seed: int = 0,
    flipping: bool | None = None,
    workers: int = 1,
) -> CorrelationReport:
    """Check a code's auto-, cross- and (optionally) flip-correlations.

    ``mode="exhaustive"`` checks every pair; ``mode="sample"`` checks all
    auto-correlations plus ``k`` uniformly drawn unordered pairs (with
    replacement, seeded by ``seed``). ``flipping`` defaults to the code's
    header flag. The flip condition covers ``i == j``. The witness, if any,
    is the largest violation of ``lambda``; ties go to the smallest
    ``(i, j, flipped, dx, dy)``.
    """
    members = code.members
    if not members:
        raise ValueError("cannot verify an empty code")
    n, w = members[0].n, len(members[0])
    for idx, m in enumerate(members):
        if m.n != n or len(m) != w:
            raise ValueError(
                f"member {idx} has n={m.n}, w={len(m)}; expected n={n}, w={w}"
            )
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown verification mode {mode!r}")
    if flipping is None:
        flipping = code.params.flipping
    lam = code.params.lam
    keys = np.stack([m.keys for m in members])
    ell = len(members)

    autos = auto_maxima(keys) if w >= 2 else np.zeros(ell, dtype=np.int64)
    # (overlap, i, j, flipped) candidates; translation resolved afterwards
    cands: list[tuple[int, int, int, bool]] = []
    max_auto = int(autos.max())
    for i in np.flatnonzero(autos > lam):
        cands.append((int(autos[i]), int(i), int(i), False))

    max_cross, max_flip = 0, 0
    if mode == "exhaustive":
        chunks = [range(s, ell, max(workers, 1)) for s in range(max(workers, 1))]
        if workers > 1 and ell > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_pair_block, [keys] * len(chunks), chunks, [flipping] * len(chunks)))
        else:
            parts = [_pair_block(keys, range(ell), flipping)]
        rows = sorted(r for part in parts for r in part)
        for i, cm, cj, fm, fj in rows:
            max_cross = max(max_cross, cm)
            max_flip = max(max_flip, fm)
            if cm > lam:
                cands.append((cm, i, cj, False))
            if flipping and fm > lam:
                cands.append((fm, i, fj, True))
        # a row's argmax hides other violating pairs, but the overall
        # largest violation and its smallest (i, j) are still captured
    else:
        rng = np.random.default_rng(seed)
        pairs = []
        if ell >= 2:
            for _ in range(k):
                i = int(rng.integers(ell))
                j = int(rng.integers(ell - 1))
                if j >= i:
                    j += 1
                pairs.append((min(i, j), max(i, j)))
        for i, j, c, f in _sampled_block(keys, pairs, flipping):
            max_cross = max(max_cross, c)
            max_flip = max(max_flip, f)
            if c > lam:
                cands.append((c, i, j, False))
            if flipping and f > lam:
                cands.append((f, i, j, True))
        if flipping:
            selfs = _sampled_block(keys, [(i, i) for i in range(ell)], True)
            for i, _, _, f in selfs:
                max_flip = max(max_flip, f)
                if f > lam:
                    cands.append((f, i, i, True))

    witness = None
    if cands:
        top = max(c[0] for c in cands)
        resolved = []
        for overlap, i, j, flipped in cands:
            if overlap != top:
                continue
            if flipped:
                val, v = max_flip_correlation(members[i], members[j])
            elif i == j:
                val, v = max_auto_correlation(members[i])
            else:
                val, v = max_cross_correlation(members[i], members[j])
            assert val == overlap
            resolved.append((i, j, flipped, v))
        i, j, flipped, v = min(resolved)
        witness = Witness(i, j, v, top, flipped)

    return CorrelationReport(
        max_auto=max_auto,
        max_cross=max_cross,
        max_flip=max_flip if flipping else None,
        witness=witness,
        lam=lam,
    )
