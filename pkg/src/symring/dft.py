"""
Discrete Fourier transform of Q[S_r] through Young's natural representation.

The representation matrices are built from polytabloids: the basis of the
Specht module of shape lam is ``e_T`` for the standard tableaux T (sorted by
row-reading word), and ``sigma * e_T = e_{sigma T}``. Coordinates of any
polytabloid are read off from its coefficients on standard tabloids, which
form an invertible (unitriangular up to order) system. All matrices are
integral and are stored as numpy int64 arrays; every accumulation checks a
magnitude bound and falls back to Python integers when it could overflow.

The inverse transform ``a(p) = 1/r! sum_lam f_lam tr(rho_lam(p^-1) A_lam)``
only uses the regular character, so it holds for any complete system of
irreducible representations, in particular this non-orthogonal one.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, lcm
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .group_ring import GroupRingElement, closure
from .partitions import Partition, StandardTableau, check_partition, standard_tableaux
from .perm import DEFAULT_GUARD, Permutation, check_guard, identity
from .wedderburn import BlockAlgebraElement, BlockShape, block_shape

__all__ = [
    "NaturalRepresentation", "NaturalRepCache", "rep_cache", "rep_matrix", "fourier",
    "inverse_fourier", "evaluate", "evaluate_rank_one", "fourier_of_group_sum", "fixed_space_multiplicity",
]

_INT64_SAFE = 2 ** 62
_MEMO_BYTES = 64 * 2 ** 20


def _column_sign(perm_tuple: Sequence[int], values: Sequence[int]) -> int:
    """Sign of the permutation sending ``values`` (in order) to ``perm_tuple``."""
    pos = {v: i for i, v in enumerate(values)}
    seq = [pos[v] for v in perm_tuple]
    sign = 1
    seen = [False] * len(seq)
    for i in range(len(seq)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = seq[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


class NaturalRepresentation:
    """Young's natural representation of one shape, generators built eagerly, products memoized."""

    def __init__(self, lam: Partition):
        self.shape = check_partition(lam)
        self.degree = sum(self.shape)
        self.tableaux: tuple[StandardTableau, ...] = standard_tableaux(self.shape)
        self.size = len(self.tableaux)
        self._tabloid_index = {t.row_of(): i for i, t in enumerate(self.tableaux)}
        self._coords = la.inverse(self._standard_tabloid_matrix())
        self.generators = [self._generator(k) for k in range(1, self.degree)]
        self._memo: dict[tuple, np.ndarray] = {}
        self._memo_cap = max(256, _MEMO_BYTES // (8 * self.size * self.size))
        self.entry_bound = max((int(np.abs(g).max()) for g in self.generators), default=1)

    def _restricted_polytabloid(self, rows: Sequence[Sequence[int]]) -> list[int]:
        """Coefficients of e_t on the standard tabloids, t given by its rows (any filling)."""
        ncols = len(rows[0])
        cols = [[row[j] for row in rows if len(row) > j] for j in range(ncols)]
        cells = [[(i, j) for i in range(len(col))] for j, col in enumerate(cols)]
        out = [0] * self.size
        col_choices = [list(permutations(col)) for col in cols]
        col_signs = [[_column_sign(c, col) for c in choices] for choices, col in zip(col_choices, cols)]
        row_of = [0] * self.degree
        for combo in product(*(range(len(c)) for c in col_choices)):
            sign = 1
            for j, idx in enumerate(combo):
                sign *= col_signs[j][idx]
                for (i, _), v in zip(cells[j], col_choices[j][idx]):
                    row_of[v - 1] = i
            k = self._tabloid_index.get(tuple(row_of))
            if k is not None:
                out[k] += sign
        return out

    def _standard_tabloid_matrix(self) -> la.Matrix:
        cols = [self._restricted_polytabloid(t.rows) for t in self.tableaux]
        return la.transpose(cols)

    def _coordinates(self, rows) -> list[int]:
        v = self._restricted_polytabloid(rows)
        x = la.mat_vec(self._coords, v)
        if any(Fraction(c).denominator != 1 for c in x):
            raise ArithmeticError("non-integral polytabloid coordinates")
        return [int(c) for c in x]

    def _generator(self, k: int) -> np.ndarray:
        """Matrix of the adjacent transposition (k, k+1)."""
        n = self.size
        G = np.zeros((n, n), dtype=np.int64)
        index = {t.rows: i for i, t in enumerate(self.tableaux)}
        for j, t in enumerate(self.tableaux):
            (ri, ci), (rj, cj) = t.position(k), t.position(k + 1)
            swapped = tuple(tuple(k + 1 if x == k else k if x == k + 1 else x for x in row) for row in t.rows)
            if ci == cj:
                G[j, j] = -1
            elif ri != rj:
                G[index[swapped], j] = 1
            else:
                G[:, j] = self._coordinates(swapped)
        return G

    def matrix(self, p: Permutation) -> np.ndarray:
        """rho(p) as an int64 array (read-only view of a memoized value)."""
        if p.degree != self.degree:
            raise ValueError(f"permutation of degree {p.degree} for a shape of {self.degree}")
        key = p.images
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        # peel off first descents: p = q * s_j with q shorter, until a cached or trivial word
        chain = []
        img = list(key)
        while True:
            cached = self._memo.get(tuple(img))
            if cached is not None:
                M = cached
                break
            j = next((i for i in range(len(img) - 1) if img[i] > img[i + 1]), None)
            if j is None:
                M = np.eye(self.size, dtype=np.int64)
                break
            chain.append(j)
            img[j], img[j + 1] = img[j + 1], img[j]
        bound = int(np.abs(M).max()) if M.size else 1
        for j in reversed(chain):
            bound *= self.entry_bound * self.size
            if bound >= _INT64_SAFE:
                M = np.array(M, dtype=object) @ self.generators[j].astype(object)
                bound = max(int(abs(x)) for x in M.flat)
                if bound >= _INT64_SAFE:
                    raise OverflowError("natural representation entries exceed int64")
                M = M.astype(np.int64)
            else:
                M = M @ self.generators[j]
                bound = int(np.abs(M).max())
            img[j], img[j + 1] = img[j + 1], img[j]
            if len(self._memo) >= self._memo_cap:
                self._memo.clear()
            M.flags.writeable = False
            self._memo[tuple(img)] = M
        return M

    def check_coxeter(self) -> bool:
        I = np.eye(self.size, dtype=np.int64)
        g = self.generators
        for a in range(len(g)):
            if not np.array_equal(g[a] @ g[a], I):
                return False
            if a + 1 < len(g) and not np.array_equal(np.linalg.matrix_power(g[a] @ g[a + 1], 3), I):
                return False
            for b in range(a + 2, len(g)):
                if not np.array_equal(g[a] @ g[b], g[b] @ g[a]):
                    return False
        return True


class NaturalRepCache:
    """All natural representations of S_r, built on first use per shape."""

    def __init__(self, r: int):
        self.degree = r
        self.shape: BlockShape = block_shape(r)
        self._reps: dict[int, NaturalRepresentation] = {}

    def rep(self, k: int) -> NaturalRepresentation:
        rep = self._reps.get(k)
        if rep is None:
            rep = self._reps[k] = NaturalRepresentation(self.shape.partitions[k])
        return rep

    def rep_of(self, lam: Partition) -> NaturalRepresentation:
        return self.rep(self.shape.index(lam))

    def __iter__(self):
        return (self.rep(k) for k in range(len(self.shape)))


@lru_cache(maxsize=None)
def rep_cache(r: int) -> NaturalRepCache:
    return NaturalRepCache(r)


def rep_matrix(lam: Partition, p: Permutation) -> list[list[int]]:
    """rho_lam(p) as a nested list of Python integers."""
    lam = check_partition(lam)
    if sum(lam) != p.degree:
        raise ValueError("shape and permutation degrees differ")
    return rep_cache(p.degree).rep_of(lam).matrix(p).tolist()


def _to_fraction_matrix(M: np.ndarray, denom: int) -> la.Matrix:
    if denom == 1:
        return [[int(x) for x in row] for row in M.tolist()]
    return [[Fraction(int(x), denom) for x in row] for row in M.tolist()]


def _integer_terms(a: GroupRingElement) -> tuple[int, list[tuple[Permutation, int]]]:
    D = a.denominator_lcm()
    return D, [(p, int(c * D)) for p, c in a.terms.items()]


def fourier(a: GroupRingElement, blocks: Iterable[int] | None = None) -> BlockAlgebraElement:
    """Block lam = sum_p a(p) rho_lam(p); ``blocks`` restricts to a subset of block indices."""
    r = a.degree
    cache = rep_cache(r)
    shape = cache.shape
    D, terms = _integer_terms(a)
    total = sum(abs(c) for _, c in terms)
    out = {}
    for k in (range(len(shape)) if blocks is None else blocks):
        rep = cache.rep(k)
        n = rep.size
        acc = np.zeros((n, n), dtype=np.int64)
        bound = 0
        exact = None
        for p, c in terms:
            M = rep.matrix(p)
            if exact is None:
                bound += abs(c) * int(np.abs(M).max())
                if bound < _INT64_SAFE:
                    acc += c * M
                    continue
                exact = acc.astype(object)
            exact += M.astype(object) * c
        if exact is not None:
            acc = exact
        if total and acc.any():
            out[k] = _to_fraction_matrix(acc, D)
    return BlockAlgebraElement._trusted(shape, out)


def _integer_factor(M: la.Matrix) -> tuple[la.Matrix, la.Matrix, int]:
    """M = (C @ R) / den with integer C (n x k) and R (k x n), k = rank M."""
    R, piv = la.rref(M)
    C = [[Fraction(row[j]) for j in piv] for row in M]
    dR = lcm(1, *(x.denominator for row in R for x in row))
    dC = lcm(1, *(x.denominator for row in C for x in row))
    Ri = [[int(x * dR) for x in row] for row in R]
    Ci = [[int(x * dC) for x in row] for row in C]
    return Ci, Ri, dR * dC


def evaluate(A: BlockAlgebraElement, p: Permutation) -> Fraction:
    """Coefficient of p in inverse_fourier(A), without computing the other coefficients."""
    if p.degree != A.degree:
        raise ValueError("degree mismatch")
    cache = rep_cache(A.degree)
    q = p.inverse()
    total = Fraction(0)
    for k, M in A.blocks.items():
        rep = cache.rep(k)
        rho = rep.matrix(q)
        s = Fraction(0)
        for i, row in enumerate(M):
            for j, x in enumerate(row):
                if x:
                    s += int(rho[j, i]) * x
        total += rep.size * s
    return total / factorial(A.degree)


def inverse_fourier(A: BlockAlgebraElement, guard: int = DEFAULT_GUARD, force: bool = False) -> GroupRingElement:
    """
    Recover the group-ring element from its blocks.

    Walks S_r breadth-first along left multiplication by adjacent
    transpositions, carrying R * rho(p^-1) for a rank factorisation
    A_lam = C R of every nonzero block.
    """
    r = A.degree
    check_guard(r, guard, force)
    cache = rep_cache(r)
    facts = []
    for k, M in sorted(A.blocks.items()):
        rep = cache.rep(k)
        Ci, Ri, den = _integer_factor(M)
        kk = len(Ri)
        bound = max(1, max(abs(x) for row in Ri for x in row)) * max(1, max(abs(x) for row in Ci for x in row))
        rho_bound = _rho_bound(rep)
        use_obj = bound * rho_bound * rep.size * max(1, kk) * rep.size >= _INT64_SAFE
        dtype = object if use_obj else np.int64
        Rn = np.array(Ri, dtype=dtype).reshape(kk, rep.size)
        Ct = np.array(Ci, dtype=dtype).reshape(rep.size, kk).T.copy()
        gens = [g.astype(dtype) for g in rep.generators]
        facts.append((rep.size, den, Rn, Ct, gens))
    if not facts:
        return GroupRingElement.zero(r)
    # common denominator over all blocks
    big = factorial(r)
    denoms = [den for _, den, _, _, _ in facts]
    L = lcm(*denoms)
    weights = [n * (L // den) for n, den, _, _, _ in facts]
    start = identity(r).images
    layer = {start: [Rn for _, _, Rn, _, _ in facts]}
    seen = {start}
    out = {}

    def coeff(Xs):
        s = 0
        for w, X, (_, _, _, Ct, _) in zip(weights, Xs, facts):
            s += w * int((X * Ct).sum())
        return s

    while layer:
        nxt = {}
        for img, Xs in layer.items():
            c = coeff(Xs)
            if c:
                out[Permutation._trusted(img)] = Fraction(c, big * L)
            pos = {v: i for i, v in enumerate(img)}
            for j in range(1, r):
                # s_j * p swaps the values j and j+1 in the image list
                a, b = pos[j], pos[j + 1]
                new = list(img)
                new[a], new[b] = j + 1, j
                new = tuple(new)
                if new in seen:
                    continue
                seen.add(new)
                nxt[new] = [X @ f[4][j - 1] for X, f in zip(Xs, facts)]
        layer = nxt
    return GroupRingElement._trusted(r, out)


# max |rho_lam(p)_ij| over all lam and p, found by exhaustive enumeration
_RHO_MAX = {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 2, 8: 3}


def _rho_bound(rep: NaturalRepresentation) -> int:
    """Upper bound for the entries of rho(p) over all p."""
    r = rep.degree
    if r in _RHO_MAX:
        return _RHO_MAX[r]
    # each generator column has small 1-norm; bound the word of maximal length
    col_sum = max(int(np.abs(g).sum(axis=0).max()) for g in rep.generators)
    return min(col_sum ** (r * (r - 1) // 2), _INT64_SAFE)


def _fixed_space(mats: list[np.ndarray], n: int) -> la.Matrix:
    """Basis (as rows) of the common fixed vectors {v : M v = v for all M}."""
    rows = []
    for M in mats:
        D = M - np.eye(n, dtype=M.dtype)
        rows.extend(D.tolist())
    if not rows:
        return [list(r) for r in la.eye(n)]
    return la.nullspace(rows, n)


def _cycle_type_counts(G: Sequence[Permutation]) -> Counter:
    return Counter(g.cycle_type() for g in G)


def _average_character(counts: Counter, lam: Partition, order: int) -> int:
    from .characters import mn_character
    s = sum(c * mn_character(tuple(lam), mu) for mu, c in counts.items())
    if s % order:
        raise ArithmeticError("character average is not integral")
    return s // order


def fixed_space_multiplicity(G: Sequence[Permutation], lam: Partition) -> int:
    """dim of the G-fixed vectors in [lam], the trivial-character multiplicity."""
    return _average_character(_cycle_type_counts(G), lam, len(G))


def fourier_of_group_sum(generators: Sequence[Permutation], G: Sequence[Permutation] | None = None) -> BlockAlgebraElement:
    """
    fourier(1_G) for the subgroup G generated by ``generators``.

    Uses rho(1_G) = |G| * F (Y^t F)^-1 Y^t with F, Y the fixed spaces of
    rho(s) and rho(s)^t over the generators, so G is never summed over in the
    representation; G itself is only enumerated for its order and character.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    r = gens[0].degree
    if G is None:
        G = closure(gens)
    cache = rep_cache(r)
    order = len(G)
    counts = _cycle_type_counts(G)
    out = {}
    for k in range(len(cache.shape)):
        lam = cache.shape.partitions[k]
        if _average_character(counts, lam, order) == 0:
            continue
        rep = cache.rep(k)
        n = rep.size
        mats = [rep.matrix(s) for s in gens]
        F = _fixed_space(mats, n)
        Y = _fixed_space([m.T.copy() for m in mats], n)
        Fc = la.transpose(F)
        core = la.inverse(la.mat_mul(Y, Fc))
        P = la.mat_mul(la.mat_mul(Fc, core), Y)
        out[k] = la.mat_scale(order, P)
    return BlockAlgebraElement._trusted(cache.shape, out)


def _scaled_ints(vec) -> tuple[list[int], int]:
    den = lcm(1, *(Fraction(x).denominator for x in vec))
    return [int(Fraction(x) * den) for x in vec], den


def evaluate_rank_one(elements: Sequence, perms: Sequence[Permutation]) -> list[list[Fraction]]:
    """
    Coefficients ``[x(p) for p in perms]`` for rank-one block elements x = u a^t.

    x(p) = f_lam / r! * a^t rho(p^-1) u; elements sharing a block are
    evaluated together with one matrix product per permutation.
    """
    out = [[Fraction(0)] * len(perms) for _ in elements]
    if not elements:
        return out
    r = elements[0].degree
    cache = rep_cache(r)
    inv = [p.inverse() for p in perms]
    by_block: dict[int, list[int]] = {}
    for idx, x in enumerate(elements):
        by_block.setdefault(x.block, []).append(idx)
    big = factorial(r)
    for k, idxs in by_block.items():
        rep = cache.rep(k)
        n = rep.size
        cols, rows, dens = [], [], []
        for idx in idxs:
            u, du = _scaled_ints(elements[idx].column)
            a, da = _scaled_ints(elements[idx].row)
            cols.append(u)
            rows.append(a)
            dens.append(du * da)
        umax = max(abs(v) for c in cols for v in c)
        amax = max(abs(v) for c in rows for v in c)
        safe = umax * amax * n * n * _rho_bound(rep) < _INT64_SAFE
        dtype = np.int64 if safe else object
        U = np.array(cols, dtype=dtype).T.reshape(n, len(idxs))
        A = np.array(rows, dtype=dtype).reshape(len(idxs), n)
        for j, q in enumerate(inv):
            rho = rep.matrix(q)
            V = (rho if safe else rho.astype(object)) @ U
            vals = (A * V.T).sum(axis=1)
            for t, idx in enumerate(idxs):
                v = int(vals[t])
                if v:
                    out[idx][j] = Fraction(v * n, big * dens[t])
    return out
