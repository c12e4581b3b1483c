"""Jordan pairs, triple systems and algebras as structure-constant data.

Structures live over a fixed ordered basis; products are dense tensors of
ring payloads.  Multilinearity makes every identity checkable on basis
tuples, so axiom checks and automorphism predicates are finite tensor
contractions with no sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (AxiomFailure, BudgetExceeded, DegenerateTrace,
                     IncompatibleRings, NotInvertible, ShapeMismatch)
from .matrix import Matrix
from .ring import Ring, RingElement, embedding

# nested payload tuples: Tensor[a][b][c] is the coordinate vector of the
# product of basis elements (a, b, c); Product[a][b] likewise for algebras.
Tensor = tuple
Vector = tuple

MAX_AXIOM_DIM = 6  # per-carrier cap for exhaustive identity sweeps


def _coerce_vec(ring: Ring, vec: Sequence, dim: int) -> Vector:
    if len(vec) != dim:
        raise ShapeMismatch(f"vector length {len(vec)}, expected {dim}")
    out = []
    for v in vec:
        if isinstance(v, RingElement):
            if v.ring != ring:
                raise IncompatibleRings(f"{v.ring.name} vs {ring.name}")
            out.append(v.payload)
        elif isinstance(v, int):
            out.append(ring.from_int(v).payload)
        else:
            out.append(v)
    return tuple(out)


def _freeze_tensor(ring: Ring, data, depth: int) -> Tensor:
    if depth == 0:
        return tuple(data)
    return tuple(_freeze_tensor(ring, row, depth - 1) for row in data)


def zero_vector(ring: Ring, dim: int) -> Vector:
    return tuple(ring.zero_p for _ in range(dim))


def basis_vector(ring: Ring, dim: int, i: int) -> Vector:
    return tuple(ring.one_p if j == i else ring.zero_p for j in range(dim))


def add_vec(ring: Ring, x: Vector, y: Vector) -> Vector:
    return tuple(ring.add(a, b) for a, b in zip(x, y))


def sub_vec(ring: Ring, x: Vector, y: Vector) -> Vector:
    return tuple(ring.sub(a, b) for a, b in zip(x, y))


def scale_vec(ring: Ring, c, x: Vector) -> Vector:
    return tuple(ring.mul(c, a) for a in x)


def trilinear_eval(ring: Ring, tensor: Tensor, x: Vector, y: Vector,
                   z: Vector, dim_out: int) -> Vector:
    """Evaluate the trilinear product with coordinates (x, y, z)."""
    acc = list(zero_vector(ring, dim_out))
    zero = ring.zero_p
    for a, xa in enumerate(x):
        if xa == zero:
            continue
        ta = tensor[a]
        for b, yb in enumerate(y):
            if yb == zero:
                continue
            tab = ta[b]
            xy = ring.mul(xa, yb)
            for c, zc in enumerate(z):
                if zc == zero:
                    continue
                coeff = ring.mul(xy, zc)
                vec = tab[c]
                for i in range(dim_out):
                    if vec[i] != zero:
                        acc[i] = ring.add(acc[i], ring.mul(coeff, vec[i]))
    return tuple(acc)


def bilinear_eval(ring: Ring, prod: Tensor, x: Vector, y: Vector,
                  dim_out: int) -> Vector:
    acc = list(zero_vector(ring, dim_out))
    zero = ring.zero_p
    for a, xa in enumerate(x):
        if xa == zero:
            continue
        pa = prod[a]
        for b, yb in enumerate(y):
            if yb == zero:
                continue
            coeff = ring.mul(xa, yb)
            vec = pa[b]
            for i in range(dim_out):
                if vec[i] != zero:
                    acc[i] = ring.add(acc[i], ring.mul(coeff, vec[i]))
    return tuple(acc)


def transport_tensor(ring: Ring, tensor: Tensor, ma: Matrix, mb: Matrix,
                     mc: Matrix) -> Tensor:
    """New tensor T'[i][j][k] = Sum T[a][b][c] ma[a,i] mb[b,j] mc[c,k].

    Contracts one slot at a time, so the cost is three passes instead of a
    full threefold loop per output entry.
    """
    da, db, dc = len(tensor), len(tensor[0]), len(tensor[0][0])
    dout = len(tensor[0][0][0])
    zero = ring.zero_p
    # slot a
    t1 = [[[None] * dc for _ in range(db)] for _ in range(da)]
    for i in range(ma.cols):
        col = [ma.entries[a][i] for a in range(da)]
        for b in range(db):
            for c in range(dc):
                acc = list(zero_vector(ring, dout))
                for a in range(da):
                    ca = col[a]
                    if ca == zero:
                        continue
                    vec = tensor[a][b][c]
                    for t in range(dout):
                        if vec[t] != zero:
                            acc[t] = ring.add(acc[t], ring.mul(ca, vec[t]))
                t1[i][b][c] = tuple(acc)
    # slot b
    t2 = [[[None] * dc for _ in range(mb.cols)] for _ in range(da)]
    for j in range(mb.cols):
        col = [mb.entries[b][j] for b in range(db)]
        for i in range(da):
            for c in range(dc):
                acc = list(zero_vector(ring, dout))
                for b in range(db):
                    cb = col[b]
                    if cb == zero:
                        continue
                    vec = t1[i][b][c]
                    for t in range(dout):
                        if vec[t] != zero:
                            acc[t] = ring.add(acc[t], ring.mul(cb, vec[t]))
                t2[i][j][c] = tuple(acc)
    # slot c
    out = []
    for i in range(da):
        rows = []
        for j in range(db):
            entry = []
            for k in range(mc.cols):
                acc = list(zero_vector(ring, dout))
                for c in range(dc):
                    cc = mc.entries[c][k]
                    if cc == zero:
                        continue
                    vec = t2[i][j][c]
                    for t in range(dout):
                        if vec[t] != zero:
                            acc[t] = ring.add(acc[t], ring.mul(cc, vec[t]))
                entry.append(tuple(acc))
            rows.append(tuple(entry))
        out.append(tuple(rows))
    return tuple(out)


def apply_to_tensor_output(ring: Ring, mat: Matrix, tensor: Tensor) -> Tensor:
    """Apply a matrix to every output vector of the tensor."""
    return tuple(tuple(tuple(mat.apply(vec) for vec in row2) for row2 in row)
                 for row in tensor)


# -- structures -----------------------------------------------------------


@dataclass(frozen=True)
class JordanPair:
    ring: Ring
    dplus: int
    dminus: int
    t_plus: Tensor   # [a+][b-][c+] -> vector in V+
    t_minus: Tensor  # [a-][b+][c-] -> vector in V-
    trace: Optional[Matrix] = None  # Gram of t: V+ x V- -> R, or None
    name: str = "pair"

    def tensor(self, sigma: int) -> Tensor:
        return self.t_plus if sigma > 0 else self.t_minus

    def dim(self, sigma: int) -> int:
        return self.dplus if sigma > 0 else self.dminus

    def bracket(self, sigma: int, x: Vector, y: Vector, z: Vector) -> Vector:
        d = self.dim(sigma)
        if len(x) != d or len(z) != d or len(y) != self.dim(-sigma):
            raise ShapeMismatch("bracket operands do not match carrier dims")
        return trilinear_eval(self.ring, self.tensor(sigma), x, y, z, d)

    def tensors_equal(self, other: "JordanPair") -> bool:
        """Structure-constant equality, ignoring names and traces."""
        return (self.ring == other.ring and self.dplus == other.dplus
                and self.dminus == other.dminus
                and self.t_plus == other.t_plus
                and self.t_minus == other.t_minus)

    def to_jsonable(self) -> dict:
        def enc(tensor):
            return [[[ [self.ring.payload_str(c) for c in vec]
                       for vec in row2] for row2 in row] for row in tensor]
        out = {"kind": "pair", "name": self.name, "ring": self.ring.name,
               "dims": [self.dplus, self.dminus],
               "tensor_plus": enc(self.t_plus),
               "tensor_minus": enc(self.t_minus)}
        if self.trace is not None:
            out["trace_gram"] = self.trace.to_jsonable()
        return out


@dataclass(frozen=True)
class JordanTriple:
    ring: Ring
    dim: int
    tensor: Tensor
    trace: Optional[Matrix] = None
    name: str = "triple"

    def bracket(self, x: Vector, y: Vector, z: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim or len(z) != self.dim:
            raise ShapeMismatch("bracket operands do not match dim")
        return trilinear_eval(self.ring, self.tensor, x, y, z, self.dim)

    def to_jsonable(self) -> dict:
        out = {"kind": "triple", "name": self.name, "ring": self.ring.name,
               "dim": self.dim,
               "tensor": [[[ [self.ring.payload_str(c) for c in vec]
                             for vec in row2] for row2 in row]
                          for row in self.tensor]}
        if self.trace is not None:
            out["trace_gram"] = self.trace.to_jsonable()
        return out


@dataclass(frozen=True)
class JordanAlgebra:
    ring: Ring
    dim: int
    product: Tensor  # [a][b] -> vector
    unit: Optional[Vector] = None
    name: str = "algebra"

    def multiply(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ShapeMismatch("product operands do not match dim")
        return bilinear_eval(self.ring, self.product, x, y, self.dim)

    def to_jsonable(self) -> dict:
        out = {"kind": "algebra", "name": self.name, "ring": self.ring.name,
               "dim": self.dim,
               "product": [[[self.ring.payload_str(c) for c in vec]
                            for vec in row] for row in self.product]}
        if self.unit is not None:
            out["unit"] = [self.ring.payload_str(c) for c in self.unit]
        return out


@dataclass(frozen=True)
class PairMap:
    """A pair of invertible matrices acting on the two carriers."""
    plus: Matrix
    minus: Matrix

    def __post_init__(self):
        if self.plus.ring != self.minus.ring:
            raise IncompatibleRings("carrier maps over different rings")
        if self.plus.rows != self.plus.cols or self.minus.rows != self.minus.cols:
            raise ShapeMismatch("carrier maps must be square")

    @classmethod
    def identity(cls, ring: Ring, dplus: int, dminus: int) -> "PairMap":
        return cls(Matrix.identity(ring, dplus), Matrix.identity(ring, dminus))

    def compose(self, other: "PairMap") -> "PairMap":
        return PairMap(self.plus @ other.plus, self.minus @ other.minus)

    def inverse(self) -> "PairMap":
        return PairMap(self.plus.inverse(), self.minus.inverse())

    def canonical_key(self):
        return (self.plus.entries, self.minus.entries)

    def to_jsonable(self) -> dict:
        return {"plus": self.plus.to_jsonable(), "minus": self.minus.to_jsonable()}


# -- axiom checking -------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    kind: str
    checked: int
    failures: tuple = ()

    def first_failure(self) -> Optional[dict]:
        return self.failures[0] if self.failures else None


def _d_matrix(ring: Ring, tensor: Tensor, x: Vector, y: Vector,
              dim: int) -> Matrix:
    cols = []
    for c in range(dim):
        z = basis_vector(ring, dim, c)
        cols.append(trilinear_eval(ring, tensor, x, y, z, dim))
    # columns are images of basis vectors
    return Matrix(ring, dim, dim,
                  tuple(tuple(cols[c][r] for c in range(dim))
                        for r in range(dim)))


def d_operator(pair: JordanPair, sigma: int, x: Vector, y: Vector) -> Matrix:
    """Matrix of z -> {x,y,z}^sigma on the sigma carrier."""
    pair = unwrap(pair)
    x = _coerce_vec(pair.ring, x, pair.dim(sigma))
    y = _coerce_vec(pair.ring, y, pair.dim(-sigma))
    return _d_matrix(pair.ring, pair.tensor(sigma), x, y, pair.dim(sigma))


def q_operator(pair: JordanPair, sigma: int, x: Vector, y: Vector) -> Vector:
    """Q_x(y) = (1/2){x,y,x}^sigma."""
    pair = unwrap(pair)
    x = _coerce_vec(pair.ring, x, pair.dim(sigma))
    y = _coerce_vec(pair.ring, y, pair.dim(-sigma))
    half = pair.ring.half_p
    out = trilinear_eval(pair.ring, pair.tensor(sigma), x, y, x, pair.dim(sigma))
    return scale_vec(pair.ring, half, out)


def _check_pair_tensors(ring: Ring, tensors: dict, dims: dict) -> list:
    """Shared identity sweep; tensors/dims keyed by sigma in {1,-1}."""
    failures = []
    # outer symmetry on basis triples
    for sigma in (1, -1):
        t = tensors[sigma]
        ds, do = dims[sigma], dims[-sigma]
        for a in range(ds):
            for b in range(do):
                for c in range(ds):
                    if t[a][b][c] != t[c][b][a]:
                        failures.append({"identity": "outer-symmetry",
                                         "sigma": sigma, "at": (a, b, c)})
                        if len(failures) > 8:
                            return failures
    if failures:
        return failures
    # D-commutator identity on basis 4-tuples:
    # [D(x,y), D(u,v)] = D(D(x,y)u, v) - D(u, D(y,x)v)
    for sigma in (1, -1):
        ds, do = dims[sigma], dims[-sigma]
        ts, to = tensors[sigma], tensors[-sigma]
        d_cache_s = {}
        for a in range(ds):
            x = basis_vector(ring, ds, a)
            for b in range(do):
                y = basis_vector(ring, do, b)
                d_cache_s[(a, b)] = _d_matrix(ring, ts, x, y, ds)
        d_cache_o = {}
        for b in range(do):
            y = basis_vector(ring, do, b)
            for a in range(ds):
                x = basis_vector(ring, ds, a)
                d_cache_o[(b, a)] = _d_matrix(ring, to, y, x, do)
        for a in range(ds):
            x = basis_vector(ring, ds, a)
            for b in range(do):
                y = basis_vector(ring, do, b)
                dxy = d_cache_s[(a, b)]
                dyx = d_cache_o[(b, a)]
                for u_i in range(ds):
                    u = basis_vector(ring, ds, u_i)
                    du = dxy.apply(u)
                    for v_i in range(do):
                        v = basis_vector(ring, do, v_i)
                        duv = d_cache_s[(u_i, v_i)]
                        lhs = dxy @ duv - duv @ dxy
                        rhs = (_d_matrix(ring, ts, du, v, ds)
                               - _d_matrix(ring, ts, u, dyx.apply(v), ds))
                        if lhs != rhs:
                            failures.append({"identity": "D-commutator",
                                             "sigma": sigma,
                                             "at": (a, b, u_i, v_i)})
                            if len(failures) > 8:
                                return failures
    return failures


def unwrap(structure):
    """Accept either a bare structure or a cataloged wrapper around one."""
    inner = getattr(structure, "structure", None)
    return inner if inner is not None else structure


def check_axioms(structure) -> AxiomReport:
    """Exhaustive identity check on basis tuples.

    Valid by multilinearity.  Refuses carriers larger than MAX_AXIOM_DIM
    rather than sampling.
    """
    structure = unwrap(structure)
    ring = structure.ring
    if isinstance(structure, JordanPair):
        if max(structure.dplus, structure.dminus) > MAX_AXIOM_DIM:
            raise BudgetExceeded(
                f"carrier dim above {MAX_AXIOM_DIM}; refusing sampled checks")
        failures = _check_pair_tensors(
            ring, {1: structure.t_plus, -1: structure.t_minus},
            {1: structure.dplus, -1: structure.dminus})
        checked = 2 * (structure.dplus * structure.dminus) ** 2
        return AxiomReport(not failures, "pair", checked, tuple(failures))
    if isinstance(structure, JordanTriple):
        if structure.dim > MAX_AXIOM_DIM:
            raise BudgetExceeded(
                f"carrier dim above {MAX_AXIOM_DIM}; refusing sampled checks")
        failures = _check_pair_tensors(
            ring, {1: structure.tensor, -1: structure.tensor},
            {1: structure.dim, -1: structure.dim})
        checked = 2 * structure.dim ** 4
        return AxiomReport(not failures, "triple", checked, tuple(failures))
    if isinstance(structure, JordanAlgebra):
        return _check_algebra(structure)
    raise ShapeMismatch(f"not a Jordan structure: {type(structure).__name__}")


def _check_algebra(alg: JordanAlgebra) -> AxiomReport:
    ring, d = alg.ring, alg.dim
    if d > MAX_AXIOM_DIM:
        raise BudgetExceeded(
            f"carrier dim above {MAX_AXIOM_DIM}; refusing sampled checks")
    failures = []
    prod = alg.product
    for a in range(d):
        for b in range(a + 1, d):
            if prod[a][b] != prod[b][a]:
                failures.append({"identity": "commutativity", "at": (a, b)})
    if alg.unit is not None and not failures:
        for a in range(d):
            e = basis_vector(ring, d, a)
            if alg.multiply(alg.unit, e) != e:
                failures.append({"identity": "unit", "at": (a,)})
    if failures:
        return AxiomReport(False, "algebra", d * d, tuple(failures))
    # linearized Jordan identity (degree 4, sufficient given 1/2 in the ring):
    # ((xz)y)w + ((xw)y)z + ((zw)y)x = (xz)(yw) + (xw)(yz) + (zw)(yx)
    basis = [basis_vector(ring, d, i) for i in range(d)]
    pr = {}
    for a in range(d):
        for b in range(a, d):
            pr[(a, b)] = pr[(b, a)] = prod[a][b]
    mul = alg.multiply
    for xi in range(d):
        for zi in range(xi, d):
            xz = pr[(xi, zi)]
            for wi in range(zi, d):
                xw = pr[(xi, wi)]
                zw = pr[(zi, wi)]
                for yi in range(d):
                    y = basis[yi]
                    lhs = add_vec(ring,
                                  add_vec(ring,
                                          mul(mul(xz, y), basis[wi]),
                                          mul(mul(xw, y), basis[zi])),
                                  mul(mul(zw, y), basis[xi]))
                    rhs = add_vec(ring,
                                  add_vec(ring,
                                          mul(xz, mul(y, basis[wi])),
                                          mul(xw, mul(y, basis[zi]))),
                                  mul(zw, mul(y, basis[xi])))
                    if lhs != rhs:
                        failures.append({"identity": "jordan-linearized",
                                         "at": (xi, zi, wi, yi)})
                        if len(failures) > 8:
                            return AxiomReport(False, "algebra", d ** 4,
                                               tuple(failures))
    return AxiomReport(not failures, "algebra", d ** 4, tuple(failures))


# -- derived constructions ------------------------------------------------


def triple_from_algebra(alg: JordanAlgebra) -> JordanTriple:
    """Triple product {x,y,z} = (xy)z + (zy)x - (zx)y on the same carrier."""
    alg = unwrap(alg)
    report = check_axioms(alg)
    if not report.ok:
        raise AxiomFailure(f"not a Jordan algebra: {report.first_failure()}")
    ring, d = alg.ring, alg.dim
    basis = [basis_vector(ring, d, i) for i in range(d)]
    mul = alg.multiply
    tensor = []
    for a in range(d):
        row = []
        for b in range(d):
            entry = []
            for c in range(d):
                x, y, z = basis[a], basis[b], basis[c]
                val = sub_vec(ring,
                              add_vec(ring, mul(mul(x, y), z),
                                      mul(mul(z, y), x)),
                              mul(mul(z, x), y))
                entry.append(val)
            row.append(tuple(entry))
        tensor.append(tuple(row))
    return JordanTriple(ring, d, tuple(tensor), None,
                        name=f"triple({alg.name})")


def pair_from_triple(t: JordanTriple) -> JordanPair:
    """Double the carrier: both signed products are copies of the triple's."""
    t = unwrap(t)
    return JordanPair(t.ring, t.dim, t.dim, t.tensor, t.tensor, t.trace,
                      name=f"pair({t.name})")


def scalar_extend(structure, target: Ring):
    """Same structure constants, pushed through the base-to-target embedding."""
    structure = unwrap(structure)
    emb = embedding(structure.ring, target)

    def ext_vec(vec):
        return tuple(emb(p) for p in vec)

    def ext3(tensor):
        return tuple(tuple(tuple(ext_vec(v) for v in row2) for row2 in row)
                     for row in tensor)

    def ext_gram(g):
        if g is None:
            return None
        return Matrix(target, g.rows, g.cols,
                      tuple(tuple(emb(p) for p in row) for row in g.entries))

    if isinstance(structure, JordanPair):
        return JordanPair(target, structure.dplus, structure.dminus,
                          ext3(structure.t_plus), ext3(structure.t_minus),
                          ext_gram(structure.trace),
                          name=f"{structure.name}@{target.name}")
    if isinstance(structure, JordanTriple):
        return JordanTriple(target, structure.dim, ext3(structure.tensor),
                            ext_gram(structure.trace),
                            name=f"{structure.name}@{target.name}")
    if isinstance(structure, JordanAlgebra):
        prod = tuple(tuple(ext_vec(v) for v in row)
                     for row in structure.product)
        unit = None if structure.unit is None else ext_vec(structure.unit)
        return JordanAlgebra(target, structure.dim, prod, unit,
                             name=f"{structure.name}@{target.name}")
    raise ShapeMismatch(f"not a Jordan structure: {type(structure).__name__}")


# -- automorphism predicates ----------------------------------------------


def _np_tensor_int(tensor: Tensor):
    import numpy as np
    return np.array(tensor, dtype=np.int64)


def _np_transport_equal(ring, tensor: Tensor, out_map: Matrix, ma: Matrix,
                        mb: Matrix, mc: Matrix) -> bool:
    """out_map(T[i,j,k]) == T(ma e_i, mb e_j, mc e_k), exact mod p."""
    import numpy as np
    p = ring.p
    t = _np_tensor_int(tensor)  # (da, db, dc, dout)
    f = np.array(out_map.entries, dtype=np.int64)
    a = np.array(ma.entries, dtype=np.int64)
    b = np.array(mb.entries, dtype=np.int64)
    c = np.array(mc.entries, dtype=np.int64)
    lhs = np.einsum('xy,abcy->abcx', f, t, optimize=True) % p
    t1 = np.einsum('abcx,ai->ibcx', t, a, optimize=True) % p
    t2 = np.einsum('ibcx,bj->ijcx', t1, b, optimize=True) % p
    rhs = np.einsum('ijcx,ck->ijkx', t2, c, optimize=True) % p
    return bool((lhs == rhs).all())


def _transport_equal(ring, tensor: Tensor, out_map: Matrix, ma: Matrix,
                     mb: Matrix, mc: Matrix) -> bool:
    from .ring import PrimeField
    if isinstance(ring, PrimeField):
        return _np_transport_equal(ring, tensor, out_map, ma, mb, mc)
    transported = transport_tensor(ring, tensor, ma, mb, mc)
    applied = apply_to_tensor_output(ring, out_map, tensor)
    return transported == applied


def pair_map_respects(pair: JordanPair, f: PairMap) -> bool:
    """Tensor transport equality for both signs (no invertibility demand)."""
    pair = unwrap(pair)
    if (f.plus.rows != pair.dplus or f.minus.rows != pair.dminus):
        raise ShapeMismatch("map dims do not match pair dims")
    return (_transport_equal(pair.ring, pair.t_plus, f.plus,
                             f.plus, f.minus, f.plus)
            and _transport_equal(pair.ring, pair.t_minus, f.minus,
                                 f.minus, f.plus, f.minus))


def is_pair_automorphism(pair: JordanPair, f: PairMap) -> bool:
    if not (f.plus.is_invertible() and f.minus.is_invertible()):
        return False
    return pair_map_respects(pair, f)


def triple_map_respects(t: JordanTriple, phi: Matrix) -> bool:
    t = unwrap(t)
    if phi.rows != t.dim or phi.cols != t.dim:
        raise ShapeMismatch("map dim does not match triple dim")
    return _transport_equal(t.ring, t.tensor, phi, phi, phi, phi)


def is_triple_automorphism(t: JordanTriple, phi: Matrix) -> bool:
    return phi.is_invertible() and triple_map_respects(t, phi)


def algebra_map_respects(alg: JordanAlgebra, phi: Matrix) -> bool:
    alg = unwrap(alg)
    if phi.rows != alg.dim or phi.cols != alg.dim:
        raise ShapeMismatch("map dim does not match algebra dim")
    ring, d = alg.ring, alg.dim
    from .ring import PrimeField
    if isinstance(ring, PrimeField):
        import numpy as np
        p = ring.p
        pr = _np_tensor_int(alg.product)
        f = np.array(phi.entries, dtype=np.int64)
        lhs = np.einsum('xy,aby->abx', f, pr, optimize=True) % p
        t1 = np.einsum('abx,ai->ibx', pr, f, optimize=True) % p
        rhs = np.einsum('ibx,bj->ijx', t1, f, optimize=True) % p
        return bool((lhs == rhs).all())
    cols = [tuple(phi.entries[r][c] for r in range(d)) for c in range(d)]
    for a in range(d):
        for b in range(a, d):
            lhs = phi.apply(alg.product[a][b])
            rhs = alg.multiply(cols[a], cols[b])
            if lhs != rhs:
                return False
    return True


def is_algebra_automorphism(alg: JordanAlgebra, phi: Matrix) -> bool:
    return phi.is_invertible() and algebra_map_respects(alg, phi)


def pair_iso_respects(src: JordanPair, dst: JordanPair, f: PairMap) -> bool:
    """f carries src's products to dst's products (both signs).

    For basis triples: f^s({x,y,z}_src) == {f^s x, f^-s y, f^s z}_dst.
    """
    src, dst = unwrap(src), unwrap(dst)
    if f.plus.rows != src.dplus or f.minus.rows != src.dminus:
        raise ShapeMismatch("map dims do not match source pair")
    if f.plus.rows != dst.dplus or f.minus.rows != dst.dminus:
        raise ShapeMismatch("map dims do not match target pair")
    ring = src.ring
    for sigma in (1, -1):
        ts, td = src.tensor(sigma), dst.tensor(sigma)
        ms = f.plus if sigma > 0 else f.minus
        mo = f.minus if sigma > 0 else f.plus
        ds, do = src.dim(sigma), src.dim(-sigma)
        cols_s = [tuple(ms.entries[r][c] for r in range(ds)) for c in range(ds)]
        cols_o = [tuple(mo.entries[r][c] for r in range(do)) for c in range(do)]
        for a in range(ds):
            for b in range(do):
                for c in range(ds):
                    lhs = ms.apply(ts[a][b][c])
                    rhs = trilinear_eval(ring, td, cols_s[a], cols_o[b],
                                         cols_s[c], ds)
                    if lhs != rhs:
                        return False
    return True


def is_pair_isomorphism(src: JordanPair, dst: JordanPair, f: PairMap) -> bool:
    if not (f.plus.is_invertible() and f.minus.is_invertible()):
        return False
    return pair_iso_respects(src, dst, f)


def dual_inverse(pair: JordanPair, phi_plus: Matrix) -> Matrix:
    """The unique phi_minus with t(phi_plus x, phi_minus y) = t(x, y).

    With Gram G, the condition reads phi_plus^T G phi_minus = G.
    """
    pair = unwrap(pair)
    if pair.trace is None:
        raise DegenerateTrace(f"{pair.name} has no registered trace")
    g = pair.trace
    m = phi_plus.transpose() @ g
    if not m.is_invertible():
        raise NotInvertible("phi_plus is not invertible against the trace")
    return m.inverse() @ g


def trace_pairing(pair: JordanPair, x: Vector, y: Vector) -> RingElement:
    pair = unwrap(pair)
    if pair.trace is None:
        raise DegenerateTrace(f"{pair.name} has no registered trace")
    x = _coerce_vec(pair.ring, x, pair.dplus)
    y = _coerce_vec(pair.ring, y, pair.dminus)
    g = pair.trace
    acc = pair.ring.zero_p
    for a, xa in enumerate(x):
        if xa == pair.ring.zero_p:
            continue
        for b, yb in enumerate(y):
            acc = pair.ring.add(acc, pair.ring.mul(pair.ring.mul(xa, g.entries[a][b]), yb))
    return RingElement(pair.ring, acc)
