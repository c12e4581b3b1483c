"""Named constructors for the bilinear-form and matrix families.

Each constructor fixes an ordered basis (the form's basis, or matrix units
E_ij in row-major order), evaluates the defining product on basis tuples,
and registers the generic trace where one is defined.  The explicit
isomorphisms between presentations live here too.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import (BadDims, BadInput, DegenerateForm, NoSquareRootOfMinusOne,
                     ParseError)
from .jordan import (JordanAlgebra, JordanPair, JordanTriple, PairMap,
                     basis_vector, check_axioms, is_pair_isomorphism,
                     pair_from_triple, triple_from_algebra, MAX_AXIOM_DIM)
from .matrix import BilinearForm, Matrix, standard_form
from .ring import Ring, RingElement, parse_ring


@dataclass(frozen=True)
class NamedSystem:
    tag: str
    ring: Ring
    params: tuple  # dims, in display order
    structure: object  # JordanPair | JordanTriple | JordanAlgebra

    @property
    def name(self) -> str:
        dims = ",".join(str(p) for p in self.params)
        sep = "," if dims else ""
        return f"{self.tag}({dims}{sep}{self.ring.name})"


def _validate(structure) -> None:
    dims = []
    if isinstance(structure, JordanPair):
        dims = [structure.dplus, structure.dminus]
    elif isinstance(structure, (JordanTriple, JordanAlgebra)):
        dims = [structure.dim]
    if max(dims, default=0) <= MAX_AXIOM_DIM:
        report = check_axioms(structure)
        assert report.ok, f"catalog construction broke axioms: {report.first_failure()}"


def _form_tensor(form: BilinearForm):
    """T[a][b][c] = G[a,b] e_c + G[c,b] e_a - G[a,c] e_b."""
    ring = form.gram.ring
    g = form.gram.entries
    n = form.gram.rows
    zero = ring.zero_p
    tensor = []
    for a in range(n):
        row = []
        for b in range(n):
            entry = []
            for c in range(n):
                vec = [zero] * n
                vec[c] = ring.add(vec[c], g[a][b])
                vec[a] = ring.add(vec[a], g[c][b])
                vec[b] = ring.sub(vec[b], g[a][c])
                entry.append(tuple(vec))
            row.append(tuple(entry))
        tensor.append(tuple(row))
    return tuple(tensor)


def make_type_iv_pair(form: BilinearForm) -> NamedSystem:
    ring = form.gram.ring
    n = form.gram.rows
    t = _form_tensor(form)
    pair = JordanPair(ring, n, n, t, t, form.gram, name=f"VIV({n},{ring.name})")
    sys = NamedSystem("VIV", ring, (n,), pair)
    _validate(pair)
    return sys


def make_type_iv_triple(form: BilinearForm) -> NamedSystem:
    ring = form.gram.ring
    n = form.gram.rows
    t = _form_tensor(form)
    trip = JordanTriple(ring, n, t, form.gram, name=f"ThatIV({n},{ring.name})")
    sys = NamedSystem("ThatIV", ring, (n,), trip)
    _validate(trip)
    return sys


def make_bilinear_form_algebra(form: BilinearForm) -> NamedSystem:
    """J = R1 + V with 1 the unit and uv = b(u,v)1; dim = 1 + dim V."""
    ring = form.gram.ring
    nv = form.gram.rows
    d = nv + 1
    zero, one = ring.zero_p, ring.one_p
    prod = [[None] * d for _ in range(d)]
    unit = basis_vector(ring, d, 0)
    for a in range(d):
        for b in range(d):
            if a == 0:
                prod[a][b] = basis_vector(ring, d, b)
            elif b == 0:
                prod[a][b] = basis_vector(ring, d, a)
            else:
                vec = [zero] * d
                vec[0] = form.gram.entries[a - 1][b - 1]
                prod[a][b] = tuple(vec)
    alg = JordanAlgebra(ring, d, tuple(tuple(r) for r in prod), unit,
                        name=f"Jbilin({d},{ring.name})")
    sys = NamedSystem("Jbilin", ring, (d,), alg)
    _validate(alg)
    return sys


def make_t_iv(form: BilinearForm) -> NamedSystem:
    """The triple system of J(V, b); carrier dim = 1 + dim V."""
    alg = make_bilinear_form_algebra(form).structure
    trip = triple_from_algebra(alg)
    ring = form.gram.ring
    d = alg.dim
    trip = JordanTriple(trip.ring, trip.dim, trip.tensor, None,
                        name=f"TIV({d},{ring.name})")
    sys = NamedSystem("TIV", ring, (d,), trip)
    _validate(trip)
    return sys


def _unit_index(n: int, i: int, j: int) -> int:
    return i * n + j


def _matrix_units(ring: Ring, rows: int, cols: int):
    """Basis E_ij of M_{rows,cols} in row-major order, as Matrix objects."""
    zero = ring.zero_p
    units = []
    for i in range(rows):
        for j in range(cols):
            units.append(Matrix(ring, rows, cols, tuple(
                tuple(ring.one_p if (r, c) == (i, j) else zero
                      for c in range(cols)) for r in range(rows))))
    return units


def _flatten(m: Matrix):
    return tuple(p for row in m.entries for p in row)


def _hat_product(x: Matrix, y: Matrix, z: Matrix) -> Matrix:
    return x @ y @ z + z @ y @ x


def _tilde_product(x: Matrix, y: Matrix, z: Matrix) -> Matrix:
    yt = y.transpose()
    return x @ yt @ z + z @ yt @ x


def _triple_tensor_from(ring, bx, by, bz, product):
    tensor = []
    for x in bx:
        row = []
        for y in by:
            entry = []
            for z in bz:
                entry.append(_flatten(product(x, y, z)))
            row.append(tuple(entry))
        tensor.append(tuple(row))
    return tuple(tensor)


def _check_dims(m: int, n: int) -> None:
    if not (1 <= m <= n):
        raise BadDims(f"need 1 <= m <= n, got ({m}, {n})")


def make_vti(m: int, n: int, ring: Ring) -> NamedSystem:
    _check_dims(m, n)
    units = _matrix_units(ring, m, n)
    t = _triple_tensor_from(ring, units, units, units, _tilde_product)
    gram = Matrix.identity(ring, m * n)  # tr(E_ij E_kl^T) = delta_ik delta_jl
    pair = JordanPair(ring, m * n, m * n, t, t, gram,
                      name=f"VtI({m},{n},{ring.name})")
    sys = NamedSystem("VtI", ring, (m, n), pair)
    _validate(pair)
    return sys


def _vhi_trace_gram(ring: Ring, m: int, n: int) -> Matrix:
    """Gram of t(x, y) = tr(xy) on M_{m,n} x M_{n,m} in unit bases."""
    zero, one = ring.zero_p, ring.one_p
    rows = []
    for i in range(m):
        for j in range(n):
            row = [zero] * (n * m)
            row[_unit_index(m, j, i)] = one  # tr(E_ij E_kl) = d_jk d_li
            rows.append(tuple(row))
    return Matrix(ring, m * n, n * m, tuple(rows))


def make_vhi(m: int, n: int, ring: Ring) -> NamedSystem:
    _check_dims(m, n)
    plus_units = _matrix_units(ring, m, n)
    minus_units = _matrix_units(ring, n, m)
    t_plus = _triple_tensor_from(ring, plus_units, minus_units, plus_units,
                                 _hat_product)
    t_minus = _triple_tensor_from(ring, minus_units, plus_units, minus_units,
                                  _hat_product)
    gram = _vhi_trace_gram(ring, m, n)
    pair = JordanPair(ring, m * n, n * m, t_plus, t_minus, gram,
                      name=f"VhI({m},{n},{ring.name})")
    sys = NamedSystem("VhI", ring, (m, n), pair)
    _validate(pair)
    return sys


def make_tti(m: int, n: int, ring: Ring) -> NamedSystem:
    _check_dims(m, n)
    units = _matrix_units(ring, m, n)
    t = _triple_tensor_from(ring, units, units, units, _tilde_product)
    gram = Matrix.identity(ring, m * n)
    trip = JordanTriple(ring, m * n, t, gram, name=f"TtI({m},{n},{ring.name})")
    sys = NamedSystem("TtI", ring, (m, n), trip)
    _validate(trip)
    return sys


def make_thi(n: int, ring: Ring) -> NamedSystem:
    _check_dims(n, n)
    units = _matrix_units(ring, n, n)
    t = _triple_tensor_from(ring, units, units, units, _hat_product)
    gram = _vhi_trace_gram(ring, n, n)
    trip = JordanTriple(ring, n * n, t, gram, name=f"ThI({n},{ring.name})")
    sys = NamedSystem("ThI", ring, (n,), trip)
    _validate(trip)
    return sys


def make_mn_plus(n: int, ring: Ring) -> NamedSystem:
    """M_n as a Jordan algebra with x o y = (xy + yx)/2."""
    _check_dims(n, n)
    half = ring.half_p
    units = _matrix_units(ring, n, n)
    prod = []
    for x in units:
        row = []
        for y in units:
            s = x @ y + y @ x
            row.append(tuple(ring.mul(half, p) for p in _flatten(s)))
        prod.append(tuple(row))
    unit = _flatten(Matrix.identity(ring, n))
    alg = JordanAlgebra(ring, n * n, tuple(prod), unit,
                        name=f"Mplus({n},{ring.name})")
    sys = NamedSystem("Mplus", ring, (n,), alg)
    _validate(alg)
    return sys


def make_bad_pair(ring: Ring) -> NamedSystem:
    """Deliberate axiom-violating fixture: {e1, f2, e2} = e1, all else zero.

    Outer symmetry fails since {e2, f2, e1} = 0.
    """
    zero, one = ring.zero_p, ring.one_p
    zvec = (zero, zero)
    t_plus = [[[zvec, zvec], [zvec, zvec]], [[zvec, zvec], [zvec, zvec]]]
    t_plus[0][1][1] = (one, zero)
    t_minus = tuple(tuple((zvec, zvec) for _ in range(2)) for _ in range(2))
    pair = JordanPair(ring, 2, 2,
                      tuple(tuple(tuple(e) for e in row) for row in t_plus),
                      t_minus, None, name=f"BadPair({ring.name})")
    return NamedSystem("BadPair", ring, (), pair)


# -- explicit isomorphisms -------------------------------------------------


@dataclass(frozen=True)
class PairIsomorphism:
    source: JordanPair
    target: JordanPair
    map: PairMap
    name: str = "iso"

    def verify(self) -> bool:
        return is_pair_isomorphism(self.source, self.target, self.map)


def extended_form(form: BilinearForm) -> BilinearForm:
    """Extend b on V to J = R1 + V: 1 is a norm-one vector orthogonal to V."""
    ring = form.gram.ring
    nv = form.gram.rows
    zero, one = ring.zero_p, ring.one_p
    rows = []
    rows.append(tuple([one] + [zero] * nv))
    for i in range(nv):
        rows.append(tuple([zero] + list(form.gram.entries[i])))
    return BilinearForm(Matrix(ring, nv + 1, nv + 1, tuple(rows)))


def lambda_isomorphism(form: BilinearForm, i: RingElement) -> PairIsomorphism:
    """From the pair of T_IV(V, b) onto the type IV pair of (J, extended b).

    Determined by v_k -> v_k and (sign)i*1 -> 1, which needs i^2 = -1.
    """
    ring = form.gram.ring
    if isinstance(i, int):
        i = ring.from_int(i)
    if i.ring != ring:
        raise BadInput("square root of -1 from a different ring")
    if i * i != ring.from_int(-1):
        raise NoSquareRootOfMinusOne(
            f"{i} squares to {(i * i)}, not -1, in {ring.name}")
    t_iv = make_t_iv(form).structure
    source = pair_from_triple(t_iv)
    target_sys = make_type_iv_pair(extended_form(form))
    target = target_sys.structure
    d = t_iv.dim
    # basis (1, v_1, ..., v_{n-1}); sigma*i*1 -> 1 forces 1 -> -sigma*i*1
    minus_i = (-i).payload
    plus_diag = [minus_i] + [ring.one_p] * (d - 1)
    minus_diag = [i.payload] + [ring.one_p] * (d - 1)
    f = PairMap(Matrix.diagonal(ring, plus_diag),
                Matrix.diagonal(ring, minus_diag))
    iso = PairIsomorphism(source, target, f,
                          name=f"lambda({d},{ring.name})")
    assert iso.verify(), "constructed map failed transport verification"
    return iso


def vti_to_vhi(m: int, n: int, ring: Ring) -> PairIsomorphism:
    """(x, y) -> (x, y^T) from VtI_{m,n} onto VhI_{m,n}."""
    source = make_vti(m, n, ring).structure
    target = make_vhi(m, n, ring).structure
    zero, one = ring.zero_p, ring.one_p
    rows = []
    for k in range(n):
        for l in range(m):
            row = [zero] * (m * n)
            row[_unit_index(n, l, k)] = one  # E_lk in M_{m,n} -> E_kl
            rows.append(tuple(row))
    f = PairMap(Matrix.identity(ring, m * n),
                Matrix(ring, n * m, m * n, tuple(rows)))
    iso = PairIsomorphism(source, target, f, name=f"vti-vhi({m},{n},{ring.name})")
    assert iso.verify(), "transpose map failed transport verification"
    return iso


# -- system-spec parsing ---------------------------------------------------

_SPEC_RE = re.compile(r"^\s*([A-Za-z]+)\s*\(\s*(.*?)\s*\)\s*$")

_ONE_DIM = {"VIV", "ThatIV", "TIV", "ThI", "Mplus", "Jbilin"}
_TWO_DIM = {"VtI", "VhI", "TtI"}


def parse_system(text: str) -> NamedSystem:
    """Parse specs like "VIV(n=2,ring=F5)", "VhI(1,2,F3)", "BadPair(F3)"."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ParseError(f"bad system spec: {text!r}")
    tag, argstr = m.group(1), m.group(2)
    args = [a.strip() for a in argstr.split(",")] if argstr.strip() else []
    kwargs, positional = {}, []
    for a in args:
        if "=" in a:
            k, v = a.split("=", 1)
            kwargs[k.strip()] = v.strip()
        else:
            positional.append(a)
    ring_text = kwargs.pop("ring", None)
    if ring_text is None and positional:
        ring_text = positional.pop()  # ring is always the last positional
    if ring_text is None:
        raise ParseError(f"system spec needs a ring: {text!r}")
    ring = parse_ring(ring_text)
    try:
        dims = [int(x) for x in positional]
    except ValueError:
        raise ParseError(f"non-integer dimension in {text!r}") from None
    if dims and ("m" in kwargs or "n" in kwargs):
        raise ParseError(f"mix of positional and keyword dimensions in {text!r}")
    for key in ("m", "n"):
        if key in kwargs:
            try:
                dims.append(int(kwargs.pop(key)))
            except ValueError:
                raise ParseError(f"non-integer dimension in {text!r}") from None
    if kwargs:
        raise ParseError(f"unknown system parameters {sorted(kwargs)} in {text!r}")

    if tag == "BadPair":
        if dims:
            raise ParseError("BadPair takes only a ring")
        return make_bad_pair(ring)
    if tag in _ONE_DIM:
        if len(dims) != 1:
            raise ParseError(f"{tag} takes one dimension, got {dims}")
        n = dims[0]
        if n < 1:
            raise BadDims(f"dimension must be positive, got {n}")
        if tag == "VIV":
            return make_type_iv_pair(standard_form(ring, n))
        if tag == "ThatIV":
            return make_type_iv_triple(standard_form(ring, n))
        if tag == "TIV":
            return make_t_iv(standard_form(ring, n - 1))
        if tag == "Jbilin":
            return make_bilinear_form_algebra(standard_form(ring, n - 1))
        if tag == "ThI":
            return make_thi(n, ring)
        if tag == "Mplus":
            return make_mn_plus(n, ring)
    if tag in _TWO_DIM:
        if len(dims) != 2:
            raise ParseError(f"{tag} takes dimensions (m, n), got {dims}")
        m_, n_ = dims
        maker = {"VtI": make_vti, "VhI": make_vhi, "TtI": make_tti}[tag]
        return maker(m_, n_, ring)
    raise ParseError(f"unknown system tag {tag!r}")
