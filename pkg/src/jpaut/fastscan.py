"""Vectorized exhaustive scans over prime fields.

Candidates are d x d matrices over F_p indexed by base-p digits in row-major
entry order, so index order equals the lexicographic order of the pure-Python
enumeration streams.  Each scan runs staged necessary-condition filters (all
derived from the defining identities, computed division-free in exact mod-p
integer arithmetic) and finishes with the complete identity check, so the
returned candidate list is exactly the solution set.  Filter slots are chosen
greedily on a fixed probe chunk before any parallel dispatch; the choice
depends only on (p, d, tensor), never on the worker count.  Chunks are
processed in index order; worker threads only parallelize chunks, never
reorder them.

Intermediate values are bounded by 64*p**4 and 6*p**5 (see the per-stage
bounds in the helpers), so arithmetic runs in int32 when those fit and in
int64 otherwise; both give identical exact results mod p.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

CHUNK = 1 << 16
MAX_SLOTS = 4

MatTuple = tuple  # nested tuples of ints, row-major


def _work_dtype(p: int) -> type:
    """int32 when every intermediate bound fits, else int64."""
    limit = 2 ** 31 - 1
    return np.int32 if (64 * p ** 4 < limit and 6 * p ** 5 < limit) else np.int64


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((perm, -1 if inv % 2 else 1))
    return tuple(out)


def _digit_matrices(idx: np.ndarray, p: int, d: int) -> np.ndarray:
    """Decode arbitrary candidate indices to (B, d, d) entries, row-major."""
    cells = d * d
    out = np.empty((idx.shape[0], cells), dtype=np.int64)
    rest = idx
    for c in range(cells - 1, -1, -1):
        rest, out[:, c] = np.divmod(rest, p)
    return out.reshape(idx.shape[0], d, d)


@lru_cache(maxsize=8)
def _low_digit_block(p: int, k: int) -> np.ndarray:
    """(p**k, k) int16 table of the k low base-p digits of 0 .. p**k - 1."""
    size = p ** k
    out = np.empty((size, k), dtype=np.int16)
    for c in range(k):
        period = p ** (k - 1 - c)
        pattern = np.repeat(np.arange(p, dtype=np.int16), period)
        out[:, c] = np.tile(pattern, size // (period * p))
    return out


def _digits_range(start: int, stop: int, p: int, cells: int,
                  dtype: type = np.int64) -> np.ndarray:
    """Digits of the consecutive index range [start, stop), division-free.

    Low digits repeat with period p**k, so they are two row slices of a
    cached table; the high digits are constant on each side of the single
    wrap boundary and decoded from Python ints.
    """
    b = stop - start
    k = cells
    while k > 1 and p ** (k - 1) >= b:
        k -= 1
    block = _low_digit_block(p, k)
    size = p ** k
    out = np.empty((b, cells), dtype=dtype)
    offset = start % size
    split = min(size - offset, b)
    out[:split, cells - k:] = block[offset:offset + split]
    if split < b:
        out[split:, cells - k:] = block[:b - split]
    hi_digits = cells - k
    if hi_digits:
        for side in range(2):
            if side == 1 and split >= b:
                break
            lo, upper = (0, split) if side == 0 else (split, b)
            rest = start // size + side
            for c in range(hi_digits - 1, -1, -1):
                rest, digit = divmod(rest, p)
                out[lo:upper, c] = digit
    return out


def _digit_matrices_range(start: int, stop: int, p: int, d: int,
                          dtype: type = np.int64) -> np.ndarray:
    return _digits_range(start, stop, p, d * d, dtype).reshape(
        stop - start, d, d)


_MINOR_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _row_minors(a: np.ndarray, r0: int, r1: int) -> dict:
    """The six 2x2 minors of rows (r0, r1) of a (B, 4, 4) batch; |m| < 2p**2."""
    return {(x, y): a[:, r0, x] * a[:, r1, y] - a[:, r0, y] * a[:, r1, x]
            for (x, y) in _MINOR_PAIRS}


def _det4_from_minors(top: dict, bot: dict) -> np.ndarray:
    """Unreduced 4x4 determinant from row minors; |det| <= 24p**4."""
    return (top[(0, 1)] * bot[(2, 3)] - top[(0, 2)] * bot[(1, 3)]
            + top[(0, 3)] * bot[(1, 2)] + top[(1, 2)] * bot[(0, 3)]
            - top[(1, 3)] * bot[(0, 2)] + top[(2, 3)] * bot[(0, 1)])


def _det(a: np.ndarray, p: int) -> np.ndarray:
    """Batched determinant mod p for (B, n, n), small n."""
    n = a.shape[1]
    if n == 0:
        return np.ones(a.shape[0], dtype=a.dtype if a.ndim else np.int64)
    if n == 4:
        top = _row_minors(a, 0, 1)
        bot = _row_minors(a, 2, 3)
        return _det4_from_minors(top, bot) % p
    acc = np.zeros(a.shape[0], dtype=a.dtype)
    for perm, sign in _perms(n):
        term = a[:, 0, perm[0]].copy()
        for i in range(1, n):
            term *= a[:, i, perm[i]]
        acc += sign * term
    return acc % p


@lru_cache(maxsize=None)
def _adj_terms(n: int) -> tuple:
    """Cofactor expansion plans: adj[i][j] = sum of signed entry*minor terms.

    For n = 4 each cofactor is a 3-term Laplace expansion against the pool of
    2x2 row minors (pool 0: rows 01, pool 1: rows 23).  Entries of the plan
    are (sign, row, col, pool, pair): sign * A[row, col] * minor[pool][pair].
    """
    plans = []
    for i in range(n):
        row_plans = []
        for j in range(n):
            cols = [t for t in range(n) if t != i]
            terms = []
            if j < 2:
                r = 1 - j
                pool = 1  # complementary minor lives in rows 2, 3
            else:
                r = 5 - j
                pool = 0  # complementary minor lives in rows 0, 1
            for pos, t in enumerate(cols):
                others = tuple(c for c in cols if c != t)
                s = 1 if pos % 2 == 0 else -1
                terms.append((s, r, t, pool, others))
            base = 1 if (i + j) % 2 == 0 else -1
            row_plans.append((base, tuple(terms)))
        plans.append(tuple(row_plans))
    return tuple(plans)


def _adj4_from_minors(a: np.ndarray, top: dict, bot: dict) -> np.ndarray:
    """Unreduced 4x4 adjugate from shared row minors; |entry| < 6p**3.

    Assembled in flat C order so every write is contiguous.
    """
    b = a.shape[0]
    pools = (top, bot)
    flat = np.empty((16, b), dtype=a.dtype)
    for i, row_plans in enumerate(_adj_terms(4)):
        for j, (base, terms) in enumerate(row_plans):
            s0, r0, t0, pool0, o0 = terms[0]
            acc = a[:, r0, t0] * pools[pool0][o0]
            if s0 < 0:
                acc = -acc
            for (s, r, t, pool, others) in terms[1:]:
                term = a[:, r, t] * pools[pool][others]
                if s > 0:
                    acc += term
                else:
                    acc -= term
            flat[4 * i + j] = acc if base > 0 else -acc
    return np.ascontiguousarray(flat.T).reshape(b, 4, 4)


def _det_adj(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Batched (det mod p, adjugate) with a @ adj == det * I mod p.

    The adjugate is returned UNREDUCED: exact integers with |entry| < 6p**3,
    congruent mod p to the true adjugate.  Callers reduce after the next
    contraction; deferring the reduction avoids a full-array division.
    """
    n = a.shape[1]
    b = a.shape[0]
    if n == 1:
        return a[:, 0, 0] % p, np.ones((b, 1, 1), dtype=a.dtype)
    if n == 2:
        det = (a[:, 0, 0] * a[:, 1, 1] - a[:, 0, 1] * a[:, 1, 0]) % p
        flat = np.empty((4, b), dtype=a.dtype)
        flat[0] = a[:, 1, 1]
        flat[1] = -a[:, 0, 1]
        flat[2] = -a[:, 1, 0]
        flat[3] = a[:, 0, 0]
        return det, np.ascontiguousarray(flat.T).reshape(b, 2, 2)
    if n == 3:
        flat = np.empty((9, b), dtype=a.dtype)
        for i in range(3):
            for j in range(3):
                r = [t for t in range(3) if t != j]
                c = [t for t in range(3) if t != i]
                m = a[:, r[0], c[0]] * a[:, r[1], c[1]] \
                    - a[:, r[0], c[1]] * a[:, r[1], c[0]]
                flat[3 * i + j] = m if (i + j) % 2 == 0 else -m
        det = (a[:, 0, 0] * flat[0] + a[:, 0, 1] * flat[3]
               + a[:, 0, 2] * flat[6]) % p
        return det, np.ascontiguousarray(flat.T).reshape(b, 3, 3)
    if n == 4:
        top = _row_minors(a, 0, 1)
        bot = _row_minors(a, 2, 3)
        det = _det4_from_minors(top, bot) % p
        return det, _adj4_from_minors(a, top, bot)
    det = _det(a, p)
    adj = np.empty_like(a)
    rows = list(range(n))
    for i in range(n):
        for j in range(n):
            sel_r = [r for r in rows if r != j]
            sel_c = [c for c in rows if c != i]
            m = _det(a[:, sel_r][:, :, sel_c], p)
            adj[:, i, j] = m if (i + j) % 2 == 0 else (-m) % p
    return det, adj % p


def _generalized_perm(m: np.ndarray, p: int):
    """(cols, scales) if m has exactly one nonzero per row and column."""
    n = m.shape[0]
    red = m % p
    cols = np.full(n, -1, dtype=np.int64)
    scales = np.zeros(n, dtype=np.int64)
    seen = set()
    for i in range(n):
        nz = np.nonzero(red[i])[0]
        if nz.size != 1 or int(nz[0]) in seen:
            return None
        cols[i] = int(nz[0])
        seen.add(int(nz[0]))
        scales[i] = int(red[i, nz[0]])
    return cols, scales


def _make_gram_apply(g: np.ndarray, ginv: np.ndarray, p: int,
                     dtype: type) -> Callable[[np.ndarray], np.ndarray]:
    """Return btil(adj) = (ginv @ adj.T @ g) % p, specialized for the Gram.

    When both g and ginv are generalized permutations (every catalog trace
    is), the two matrix products collapse to a single gather with a scalar
    coefficient per cell: btil[:, i, l] = ginv[i, q_i] g[r_l, l] adj[:, r_l, q_i],
    bounded by p * p * 6p**3 = 6p**5.  The dense fallback reduces between the
    two products, keeping every intermediate under 24p**4.
    """
    d = g.shape[0]
    perm_g = _generalized_perm(g, p)
    perm_ginv = _generalized_perm(ginv, p)
    if perm_g is not None and perm_ginv is not None:
        q, u = perm_ginv  # ginv[i, q[i]] = u[i]
        gcols = perm_g[0]  # g[r, gcols[r]] = scales[r]
        r = np.empty(d, dtype=np.int64)
        for row in range(d):
            r[gcols[row]] = row  # g[r[l], l] nonzero
        s = perm_g[1][r]
        coeff = ((u[:, None] * s[None, :]) % p).astype(dtype)
        rr = np.tile(r, (d, 1)).astype(np.int64)
        qq = np.tile(q[:, None], (1, d)).astype(np.int64)

        def apply_perm(adj: np.ndarray) -> np.ndarray:
            return (coeff * adj[:, rr, qq]) % p

        return apply_perm
    g_t = g.astype(dtype)
    ginv_t = ginv.astype(dtype)

    def apply_dense(adj: np.ndarray) -> np.ndarray:
        mid = (adj.transpose(0, 2, 1) @ g_t) % p
        return (ginv_t @ mid) % p

    return apply_dense


def _chunked(total: int, kernel: Callable[[int, int], np.ndarray],
             jobs: int = 1, chunk: int = CHUNK) -> list[np.ndarray]:
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    if jobs <= 1 or len(ranges) <= 1:
        return [kernel(s, e) for s, e in ranges]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda r: kernel(*r), ranges))


def _to_tuples(mats: np.ndarray) -> list[MatTuple]:
    return [tuple(tuple(int(x) for x in row) for row in m) for m in mats]


def _tensor_by_c(tensor: np.ndarray, dtype: type) -> tuple[np.ndarray, ...]:
    """Per-c slabs (d*d, d_out) of T[x,a,b,c] for the factored slot filter."""
    d_out = tensor.shape[0]
    d = tensor.shape[3]
    return tuple(np.ascontiguousarray(
        tensor[:, :, :, c].reshape(d_out, d * d).T.astype(dtype))
        for c in range(d))


def _slot_rhs(t_byc: tuple[np.ndarray, ...], u: np.ndarray, v: np.ndarray,
              w: np.ndarray, p: int) -> np.ndarray:
    """Factored slot contraction: outer(u, v) once, one matmul per c.

    Inputs are reduced mod p, so |acc| <= d * (d*d * p**3) * p <= 64p**4.
    """
    b, d = u.shape
    uv = (u[:, :, None] * v[:, None, :]).reshape(b, d * d)
    acc = (uv @ t_byc[0]) * w[:, 0, None]
    for c in range(1, d):
        acc += (uv @ t_byc[c]) * w[:, c, None]
    return acc % p


def _transport_full(tensor: np.ndarray, mx: np.ndarray, my: np.ndarray,
                    mz: np.ndarray, p: int) -> np.ndarray:
    """Full contraction R[B,x,i,j,k] = Sum T[x,a,b,c] mx[a,i] my[b,j] mz[c,k].

    Reduces between stages, so sums stay below d * p**2 in every dtype.
    """
    t1 = np.einsum('xabc,Bai->Bxibc', tensor, mx, optimize=True)
    t2 = np.einsum('Bxibc,Bbj->Bxijc', t1 % p, my, optimize=True)
    t3 = np.einsum('Bxijc,Bck->Bxijk', t2 % p, mz, optimize=True)
    return t3 % p


def _probe_start(total: int) -> int:
    """Fixed probe chunk start: the middle chunk, aligned to CHUNK."""
    nchunks = (total + CHUNK - 1) // CHUNK
    return (nchunks // 2) * CHUNK if nchunks > 1 else 0


def _greedy_slots(d: int, count: int,
                  eval_slot: Callable[[tuple[int, int, int], np.ndarray],
                                      np.ndarray]) -> list[tuple[int, int, int]]:
    """Pick filter slots by survivor rate on the probe population.

    eval_slot(slot, mask) returns a boolean pass-vector over the masked
    candidates.  Greedy: rank all slots once, then extend the chain by the
    slot with the fewest cumulative survivors, re-scoring the short list on
    the current survivor set.  Deterministic; ties break lexicographically.
    """
    slots = [(i, j, k) for i in range(d) for j in range(d) for k in range(d)]
    first = eval_slot(slots[0], None)
    n = first.shape[0]
    rates = [(first.mean(), slots[0])]
    for s in slots[1:]:
        rates.append((eval_slot(s, None).mean(), s))
    rates.sort(key=lambda t: (t[0], t[1]))
    if n == 0:
        return [s for _, s in rates[:count]]
    surv = np.ones(n, dtype=bool)
    chosen: list[tuple[int, int, int]] = []
    shortlist = [s for _, s in rates[:16]]
    while len(chosen) < count and surv.any():
        best = None
        for s in shortlist:
            if s in chosen:
                continue
            ok = eval_slot(s, surv)
            key = (ok.mean() if ok.size else 1.0, s)
            if best is None or key < best[0]:
                best = (key, s, ok)
        if best is None:
            break
        _, s, ok = best
        chosen.append(s)
        alive = np.nonzero(surv)[0]
        surv[alive[~ok]] = False
        if surv.sum() <= 8:
            break
    return chosen


def scan_pair_with_trace(p: int, d: int, t_plus: Sequence, t_minus: Sequence,
                         gram: Sequence, jobs: int = 1) -> list[MatTuple]:
    """All phi_plus with (phi_plus, trace-dual inverse) a pair automorphism.

    t_plus / t_minus are nested [x][a][b][c] integer tensors; gram is the
    trace Gram matrix as nested integer rows.  The dual inverse is computed
    division-free via the adjugate: conditions are scaled by det(phi_plus)
    (a unit), which is an equivalence over a field.
    """
    dtype = _work_dtype(p)
    tp = (np.array(t_plus, dtype=np.int64) % p).astype(dtype)
    tm = (np.array(t_minus, dtype=np.int64) % p).astype(dtype)
    g = np.array(gram, dtype=np.int64) % p
    ginv = _int_matrix_inverse(g, p)
    gram_apply = _make_gram_apply(g, ginv, p, dtype)
    tp_byc = _tensor_by_c(tp, dtype)
    total = p ** (d * d)

    def decode(start: int, stop: int):
        idx = np.arange(start, stop, dtype=np.int64)
        a = _digit_matrices_range(start, stop, p, d, dtype)
        if d == 4:
            top = _row_minors(a, 0, 1)
            bot = _row_minors(a, 2, 3)
            det = _det4_from_minors(top, bot) % p
            keep = det != 0
            idx, a, det = idx[keep], a[keep], det[keep]
            top = {key: v[keep] for key, v in top.items()}
            bot = {key: v[keep] for key, v in bot.items()}
            adj = _adj4_from_minors(a, top, bot)
        else:
            det = _det(a, p)
            keep = det != 0
            idx, a, det = idx[keep], a[keep], det[keep]
            _, adj = _det_adj(a, p)
        # btil = det * phi_minus, with phi_minus = (phi_plus^T G)^{-1} G
        btil = gram_apply(adj)
        return idx, a, det, btil

    def slot_pass(a, det, btil, slot):
        i, j, k = slot
        lhs = (det[:, None] * (a @ tp[:, i, j, k])) % p
        rhs = _slot_rhs(tp_byc, a[:, :, i], btil[:, :, j], a[:, :, k], p)
        return (lhs == rhs).all(axis=1)

    ps = _probe_start(total)
    _, pa, pdet, pbtil = decode(ps, min(ps + CHUNK, total))

    def eval_slot(slot, mask):
        if mask is None:
            return slot_pass(pa, pdet, pbtil, slot)
        return slot_pass(pa[mask], pdet[mask], pbtil[mask], slot)

    slots = _greedy_slots(d, MAX_SLOTS, eval_slot)

    def kernel(start: int, stop: int) -> np.ndarray:
        idx, a, det, btil = decode(start, stop)
        for slot in slots:
            if idx.size == 0:
                return idx
            keep = slot_pass(a, det, btil, slot)
            idx, a, det, btil = idx[keep], a[keep], det[keep], btil[keep]
        if idx.size == 0:
            return idx
        # complete condition, both signs
        lhs_p = np.einsum('Bxy,yijk->Bxijk', a, tp, optimize=True) \
            * det[:, None, None, None, None] % p
        rhs_p = _transport_full(tp, a, btil, a, p)
        keep = (lhs_p == rhs_p).all(axis=(1, 2, 3, 4))
        idx, a, det, btil = idx[keep], a[keep], det[keep], btil[keep]
        if idx.size == 0:
            return idx
        lhs_m = np.einsum('Bxy,yijk->Bxijk', btil, tm, optimize=True) \
            * det[:, None, None, None, None] % p
        rhs_m = _transport_full(tm, btil, a, btil, p)
        keep = (lhs_m == rhs_m).all(axis=(1, 2, 3, 4))
        return idx[keep]

    parts = _chunked(total, kernel, jobs)
    idx = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    return _to_tuples(_digit_matrices(idx, p, d))


def scan_triple(p: int, d: int, tensor: Sequence, jobs: int = 1) -> list[MatTuple]:
    """All invertible phi with phi{x,y,z} == {phi x, phi y, phi z}."""
    dtype = _work_dtype(p)
    t = (np.array(tensor, dtype=np.int64) % p).astype(dtype)
    t_byc = _tensor_by_c(t, dtype)
    total = p ** (d * d)

    def decode(start: int, stop: int):
        idx = np.arange(start, stop, dtype=np.int64)
        a = _digit_matrices_range(start, stop, p, d, dtype)
        det = _det(a, p)
        keep = det != 0
        return idx[keep], a[keep]

    def slot_pass(a, slot):
        i, j, k = slot
        lhs = (a @ t[:, i, j, k]) % p
        rhs = _slot_rhs(t_byc, a[:, :, i], a[:, :, j], a[:, :, k], p)
        return (lhs == rhs).all(axis=1)

    ps = _probe_start(total)
    _, pa = decode(ps, min(ps + CHUNK, total))

    def eval_slot(slot, mask):
        return slot_pass(pa if mask is None else pa[mask], slot)

    slots = _greedy_slots(d, MAX_SLOTS, eval_slot)

    def kernel(start: int, stop: int) -> np.ndarray:
        idx, a = decode(start, stop)
        for slot in slots:
            if idx.size == 0:
                return idx
            keep = slot_pass(a, slot)
            idx, a = idx[keep], a[keep]
        if idx.size == 0:
            return idx
        lhs_f = np.einsum('Bxy,yijk->Bxijk', a, t, optimize=True) % p
        rhs_f = _transport_full(t, a, a, a, p)
        keep = (lhs_f == rhs_f).all(axis=(1, 2, 3, 4))
        return idx[keep]

    parts = _chunked(total, kernel, jobs)
    idx = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    return _to_tuples(_digit_matrices(idx, p, d))


def scan_algebra_unit_fixing(p: int, d: int, prod: Sequence, unit: Sequence,
                             jobs: int = 1) -> list[MatTuple]:
    """All invertible unit-fixing phi with phi(x*y) == phi(x)*phi(y).

    Unit preservation is forced by multiplicativity plus surjectivity, so the
    candidate space is the affine subspace {A : A u = u}: columns other than
    the pivot column are free, the pivot column is solved.  prod is the
    nested [x][a][b] product tensor, unit the coordinate vector of 1.
    """
    dtype = _work_dtype(p)
    pr = (np.array(prod, dtype=np.int64) % p).astype(dtype)
    u = np.array(unit, dtype=np.int64) % p
    prf = np.ascontiguousarray(pr.reshape(d, d * d).T)
    t_col = int(np.nonzero(u)[0][0])
    u_t_inv = pow(int(u[t_col]), -1, p)
    free_cols = [j for j in range(d) if j != t_col]
    cells = d * (d - 1)
    pairs = [(0, 0), (0, min(1, d - 1)), (min(1, d - 1), 0)]

    def assemble(digits: np.ndarray) -> np.ndarray:
        b = digits.shape[0]
        free = digits.reshape(b, d, d - 1)  # row-major over (row, free col slot)
        a = np.zeros((b, d, d), dtype=dtype)
        for slot, j in enumerate(free_cols):
            a[:, :, j] = free[:, :, slot]
        acc = np.tile(u, (b, 1)).astype(dtype)
        for j in free_cols:
            acc = (acc - int(u[j]) * a[:, :, j]) % p
        a[:, :, t_col] = (u_t_inv * acc) % p
        return a

    def build(idx: np.ndarray) -> np.ndarray:
        digits = np.empty((idx.shape[0], cells), dtype=dtype)
        rest = idx
        for c in range(cells - 1, -1, -1):
            rest, digits[:, c] = np.divmod(rest, p)
        return assemble(digits)

    def kernel(start: int, stop: int) -> np.ndarray:
        idx = np.arange(start, stop, dtype=np.int64)
        a = assemble(_digits_range(start, stop, p, cells, dtype))
        det = _det(a, p)
        keep = det != 0
        idx, a = idx[keep], a[keep]
        if idx.size == 0:
            return idx
        for (i, j) in pairs:
            lhs = (a @ pr[:, i, j]) % p
            outer = a[:, :, i][:, :, None] * a[:, :, j][:, None, :]
            rhs = outer.reshape(-1, d * d) @ prf % p
            keep = (lhs == rhs).all(axis=1)
            idx, a = idx[keep], a[keep]
            if idx.size == 0:
                return idx
        lhs_f = np.einsum('Bxy,yij->Bxij', a, pr, optimize=True) % p
        t1 = np.einsum('xab,Bai->Bxib', pr, a, optimize=True) % p
        rhs_f = np.einsum('Bxib,Bbj->Bxij', t1, a, optimize=True) % p
        keep = (lhs_f == rhs_f).all(axis=(1, 2, 3))
        return idx[keep]

    total = p ** cells
    parts = _chunked(total, kernel, jobs)
    survivors: list[MatTuple] = []
    for part in parts:
        if part.size:
            survivors.extend(_to_tuples(build(part)))
    return survivors


def scan_similitudes(p: int, n: int, gram: Sequence, isometry_only: bool,
                     jobs: int = 1) -> list[int]:
    """Indices of all similitudes (or isometries) of the form, ascending."""
    dtype = _work_dtype(p)
    g = (np.array(gram, dtype=np.int64) % p).astype(dtype)
    pivot = None
    for i in range(n):
        for j in range(n):
            if g[i, j] % p:
                pivot = (i, j)
                break
        if pivot:
            break
    assert pivot is not None  # nondegenerate forms have a nonzero entry
    piv_inv = pow(int(g[pivot]), -1, p)

    def kernel(start: int, stop: int) -> np.ndarray:
        idx = np.arange(start, stop, dtype=np.int64)
        a = _digit_matrices_range(start, stop, p, n, dtype)
        m_full = np.einsum('Bax,ab,Bby->Bxy', a, g, a, optimize=True) % p
        mult = (m_full[:, pivot[0], pivot[1]] * piv_inv) % p
        ok = (m_full == mult[:, None, None] * g % p).all(axis=(1, 2))
        ok &= mult != 0
        if isometry_only:
            ok &= mult == 1
        return idx[ok]

    total = p ** (n * n)
    parts = _chunked(total, kernel, jobs)
    out: list[int] = []
    for part in parts:
        out.extend(int(x) for x in part)
    return out


def _int_matrix_inverse(g: np.ndarray, p: int) -> np.ndarray:
    """Exact inverse of an integer matrix mod p (small sizes)."""
    n = g.shape[0]
    a = [[int(x) % p for x in row] + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(g)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] % p)
        a[col], a[piv] = a[piv], a[col]
        inv_p = pow(a[col][col], -1, p)
        a[col] = [(inv_p * x) % p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
    return np.array([row[n:] for row in a], dtype=np.int64)
