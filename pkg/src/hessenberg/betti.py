"""Permutations, inversion statistics, and Poincaré polynomials of regular
Hessenberg varieties via the combinatorial Betti-number formula."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .permtables import allowed_matrix, perm_table, phi_minus_mask
from .roots import HessenbergFunction, Root, roots_of

Permutation = tuple[int, ...]  # one-line notation, 1-based values


class NotShortestRepresentative(ValueError):
    """z is not a shortest coset representative (its inverse must increase on [nu1+1])."""


class ResultNotHessenberg(RuntimeError):
    """Conjugation produced a non-Hessenberg root set (implementation bug)."""


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def perm_inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def perm_compose(v: Permutation, w: Permutation) -> Permutation:
    """(v w)(i) = v(w(i))."""
    return tuple(v[w[i] - 1] for i in range(len(w)))


def inversion_pairs(w: Permutation) -> set[Root]:
    """inv(w) = {(i, j) : i > j, w(i) < w(j)}, identified with N^-(w)."""
    n = len(w)
    return {
        (i, j)
        for j in range(1, n + 1)
        for i in range(j + 1, n + 1)
        if w[i - 1] < w[j - 1]
    }


def apply_to_root(w: Permutation, root: Root) -> Root:
    """w(t_i - t_j) = t_{w(i)} - t_{w(j)}."""
    i, j = root
    return (w[i - 1], w[j - 1])


def hessenberg_inversions(w: Permutation, h: HessenbergFunction) -> int:
    """|{(i, j) : i > j, w(i) < w(j), i <= h(j)}| = |N^-(w) ∩ Phi_h^-|."""
    n = len(w)
    if n != h.n:
        raise ValueError("permutation and Hessenberg function sizes differ")
    return sum(
        1
        for j in range(1, n + 1)
        for i in range(j + 1, min(h(j), n) + 1)
        if w[i - 1] < w[j - 1]
    )


def composition_simple_roots(nu: Sequence[int]) -> tuple[int, ...]:
    """Indices p of the simple roots kept in J_nu: all p except proper partial sums.

    Parts may be zero; zero parts contribute no partial sum, so a trivial
    composition like (n) or (n, 0) keeps the whole simple system.
    """
    parts = [int(p) for p in nu]
    if any(p < 0 for p in parts):
        raise ValueError("composition parts must be nonnegative")
    n = sum(parts)
    cuts = set()
    acc = 0
    for p in parts:
        acc += p
        if 0 < acc < n:
            cuts.add(acc)
    return tuple(p for p in range(1, n) if p not in cuts)


def in_phi_h(root: Root, h: HessenbergFunction) -> bool:
    """Whether t_i - t_j lies in Phi_h (positive, or negative with i <= h(j))."""
    i, j = root
    return i < j or i <= h(j)


def satisfies_hessenberg_condition(
    w: Permutation, j_indices: Sequence[int], h: HessenbergFunction
) -> bool:
    """Whether w^{-1}(alpha_p) lies in Phi_h for every retained simple root index p."""
    inv = perm_inverse(w)
    return all(in_phi_h((inv[p - 1], inv[p]), h) for p in j_indices)


@dataclass(frozen=True)
class GradedPolynomial:
    """Integer coefficients of a polynomial in t^2: value sum(coeffs[i] * t^(2i))."""

    coeffs: tuple[int, ...]

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def degree(self) -> int:
        """Largest i with a nonzero coefficient (0 for the zero polynomial)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return 0

    def total(self) -> int:
        """Evaluation at t = 1."""
        return sum(self.coeffs)

    def normalized(self) -> tuple[int, ...]:
        """Coefficients with trailing zeros removed (for identity comparisons)."""
        out = list(self.coeffs)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def shifted(self, k: int) -> "GradedPolynomial":
        """Multiplication by t^(2k)."""
        return GradedPolynomial((0,) * k + self.coeffs)

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return GradedPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )


def poincare_polynomial(nu: Sequence[int], h: HessenbergFunction) -> GradedPolynomial:
    """Poincaré polynomial of the regular Hessenberg variety of Jordan type nu.

    Sums t^(2 |N^-(w) ∩ Phi_h^-|) over the w in S_n with w^{-1}(J_nu) inside
    Phi_h; coefficients run over degrees 0..|Phi_h^-| with trailing zeros kept.
    """
    n = h.n
    if sum(int(p) for p in nu) != n:
        raise ValueError(f"composition {tuple(nu)} does not sum to {n}")
    table = perm_table(n)
    nbins = len(roots_of(h)[0]) + 1
    hist = kernels.poincare_histogram(
        table.positions,
        table.inv_masks,
        allowed_matrix(h),
        composition_simple_roots(nu),
        phi_minus_mask(table, h),
        nbins,
    )
    return GradedPolynomial(tuple(int(x) for x in hist))


def poincare_polynomial_reference(nu: Sequence[int], h: HessenbergFunction) -> GradedPolynomial:
    """Pure-Python restatement of poincare_polynomial, for cross-checking the kernels."""
    import itertools

    n = h.n
    j_indices = composition_simple_roots(nu)
    coeffs = [0] * (len(roots_of(h)[0]) + 1)
    for w in itertools.permutations(range(1, n + 1)):
        if satisfies_hessenberg_condition(w, j_indices, h):
            coeffs[hessenberg_inversions(w, h)] += 1
    return GradedPolynomial(tuple(coeffs))


def qualifying_permutations(nu: Sequence[int], h: HessenbergFunction) -> Iterator[Permutation]:
    """The w with w^{-1}(J_nu) in Phi_h, in lexicographic one-line order."""
    import itertools

    j_indices = composition_simple_roots(nu)
    for w in itertools.permutations(range(1, h.n + 1)):
        if satisfies_hessenberg_condition(w, j_indices, h):
            yield w


def shortest_coset_decompose(w: Permutation, nu1: int) -> tuple[Permutation, Permutation]:
    """Factor w = y z with y permuting [nu1+1] and z a shortest coset representative.

    z re-sorts the entries of w lying in [nu1+1] into increasing order; y is the
    element of S_{nu1+1} recording their original order.
    """
    n = len(w)
    k = nu1 + 1
    if not 1 <= k <= n:
        raise ValueError(f"nu1 + 1 must lie in [1, {n}]")
    small_sorted = sorted(v for v in w if v <= k)
    z = list(w)
    order = iter(small_sorted)
    for pos, val in enumerate(z):
        if val <= k:
            z[pos] = next(order)
    z_t = tuple(z)
    z_inv = perm_inverse(z_t)
    y = tuple(w[z_inv[v - 1] - 1] for v in range(1, k + 1))
    return y, z_t


def shortest_coset_representatives(n: int, nu1: int) -> list[Permutation]:
    """All z in S_n whose values 1..nu1+1 appear in increasing order, lex sorted."""
    import itertools

    k = nu1 + 1
    reps = []
    for positions in itertools.combinations(range(n), k):
        base = [0] * n
        for v, pos in enumerate(positions, start=1):
            base[pos] = v
        for fill in itertools.permutations(range(k + 1, n + 1)):
            word = list(base)
            it = iter(fill)
            for pos in range(n):
                if word[pos] == 0:
                    word[pos] = next(it)
            reps.append(tuple(word))
    return sorted(reps)


def is_shortest_representative(z: Permutation, nu1: int) -> bool:
    inv = perm_inverse(z)
    return all(inv[v - 1] < inv[v] for v in range(1, nu1 + 1))


def conjugated_hessenberg(
    h: HessenbergFunction, z: Permutation, nu1: int
) -> HessenbergFunction:
    """The Hessenberg function h_z on [nu1+1] cut out by z Phi_h z^{-1}.

    Column j keeps the i in [nu1+1] with z^{-1}(i) <= h(z^{-1}(j)); for a
    shortest representative z these form initial segments, so they define a
    Hessenberg function.
    """
    n = h.n
    k = nu1 + 1
    if len(z) != n or not 1 <= k <= n:
        raise ValueError("sizes of h, z, and nu1 are inconsistent")
    if not is_shortest_representative(z, nu1):
        raise NotShortestRepresentative(f"{z} moves some of 1..{nu1} out of order")
    z_inv = perm_inverse(z)
    values = []
    for j in range(1, k + 1):
        col = {i for i in range(1, k + 1) if z_inv[i - 1] <= h(z_inv[j - 1])}
        if col != set(range(1, len(col) + 1)):
            raise ResultNotHessenberg(f"column {j} of z H z^{{-1}} is not an initial segment")
        values.append(len(col))
    try:
        h_z = HessenbergFunction(tuple(values))
    except ValueError as exc:
        raise ResultNotHessenberg(str(exc)) from exc
    return h_z
