"""Hot kernels for the S_n sweeps, with numba and pure-numpy backends.

The backend is picked by the HESSENBERG_KERNEL environment variable
("numba", "numpy", or "auto"; default auto = numba when importable).
Both backends are exact and produce identical histograms; see
benchmarks/bench_kernels.py for a timing comparison.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    _HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAS_NUMBA = False

ENV_FLAG = "HESSENBERG_KERNEL"

_forced: str | None = None


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if _HAS_NUMBA else ("numpy",)


def set_backend(name: str | None) -> None:
    """Force a backend ("numba" or "numpy"); None restores env-flag selection."""
    global _forced
    if name is not None and name not in available_backends():
        raise ValueError(f"unknown or unavailable backend {name!r}")
    _forced = name


def active_backend() -> str:
    if _forced is not None:
        return _forced
    requested = os.environ.get(ENV_FLAG, "auto").lower()
    if requested == "numpy":
        return "numpy"
    if requested == "numba":
        if not _HAS_NUMBA:
            raise RuntimeError("HESSENBERG_KERNEL=numba but numba is not importable")
        return "numba"
    return "numba" if _HAS_NUMBA else "numpy"


def _hist_numpy(positions, inv_masks, allowed, j_indices, phi_mask, nbins):
    ok = np.ones(positions.shape[0], dtype=bool)
    for p in j_indices:
        i = positions[:, p - 1]
        j = positions[:, p]
        ok &= allowed[i, j]
    counts = np.bitwise_count(inv_masks[ok] & phi_mask)
    return np.bincount(counts.astype(np.int64), minlength=nbins)


def _hist_loop(positions, inv_masks, allowed, j_indices, phi_mask, nbins):
    hist = np.zeros(nbins, dtype=np.int64)
    zero = np.uint64(0)
    one = np.uint64(1)
    for r in range(positions.shape[0]):
        ok = True
        for t in range(j_indices.shape[0]):
            p = j_indices[t]
            if not allowed[positions[r, p - 1], positions[r, p]]:
                ok = False
                break
        if ok:
            x = inv_masks[r] & phi_mask
            bits = 0
            while x != zero:
                x &= x - one
                bits += 1
            hist[bits] += 1
    return hist


_hist_numba = numba.njit(cache=True)(_hist_loop) if _HAS_NUMBA else None


def poincare_histogram(positions, inv_masks, allowed, j_indices, phi_mask, nbins):
    """Histogram of |inversions ∩ Phi_h^-| over the w whose inverse keeps J inside Phi_h.

    positions/inv_masks come from a PermTable; allowed is the Phi_h membership
    matrix; j_indices are the 1-based simple-root indices retained in J.
    """
    j_arr = np.asarray(j_indices, dtype=np.int64)
    if active_backend() == "numba":
        return _hist_numba(positions, inv_masks, allowed, j_arr, np.uint64(phi_mask), nbins)
    return _hist_numpy(positions, inv_masks, allowed, j_arr, np.uint64(phi_mask), nbins)
