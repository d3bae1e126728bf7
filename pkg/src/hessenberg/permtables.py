"""Precomputed S_n tables backing the vectorized permutation sweeps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .roots import HessenbergFunction, Root

_MAX_TABLE_N = 10  # 10! rows is ~100 MB of tables; beyond that refuse


@dataclass(frozen=True, eq=False)
class PermTable:
    """All of S_n in lexicographic one-line order, with inversion bitmasks.

    perms[r, k] is the 0-based value w(k+1) - 1; positions[r, v] is the 0-based
    position of value v + 1; inv_masks[r] has bit pair_bit[(i, j)] set exactly
    when (i, j) is an inversion of w (i > j, w(i) < w(j)).
    """

    n: int
    perms: np.ndarray
    positions: np.ndarray
    inv_masks: np.ndarray
    pairs: tuple[Root, ...]

    def pair_bit(self, root: Root) -> int:
        return self._pair_bit[root]

    def __post_init__(self):
        object.__setattr__(
            self, "_pair_bit", {pair: b for b, pair in enumerate(self.pairs)}
        )

    def mask_of(self, roots) -> np.uint64:
        """Bitmask over the pair bits of the given negative roots."""
        m = 0
        for root in roots:
            m |= 1 << self._pair_bit[tuple(root)]
        return np.uint64(m)


@lru_cache(maxsize=None)
def perm_table(n: int) -> PermTable:
    """Build (and cache) the S_n table."""
    if not 1 <= n <= _MAX_TABLE_N:
        raise ValueError(f"permutation tables support 1 <= n <= {_MAX_TABLE_N}, got {n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    positions = np.argsort(perms, axis=1).astype(np.int8)
    pairs = tuple((i, j) for j in range(1, n + 1) for i in range(j + 1, n + 1))
    masks = np.zeros(len(perms), dtype=np.uint64)
    for bit, (i, j) in enumerate(pairs):
        inverted = perms[:, i - 1] < perms[:, j - 1]
        masks |= inverted.astype(np.uint64) << np.uint64(bit)
    return PermTable(n, perms, positions, masks, pairs)


def allowed_matrix(h: HessenbergFunction) -> np.ndarray:
    """0-based boolean matrix: entry [i, j] says t_{i+1} - t_{j+1} lies in Phi_h."""
    n = h.n
    allowed = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i < j:
                allowed[i, j] = True
            elif i > j:
                allowed[i, j] = i + 1 <= h(j + 1)
    return allowed


def phi_minus_mask(table: PermTable, h: HessenbergFunction) -> np.uint64:
    """Bitmask of the Phi_h^- pairs."""
    return table.mask_of(
        (i, j) for j in range(1, h.n + 1) for i in range(j + 1, h(j) + 1)
    )
