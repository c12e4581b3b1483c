"""Jordan structures: axiom checks, operators, constructions between kinds."""
import pytest

from jpaut import (PrimeField, ProductRing, Matrix, PairMap, check_axioms,
                   d_operator, q_operator, is_pair_automorphism,
                   is_triple_automorphism, dual_inverse, triple_from_algebra,
                   pair_from_triple, scalar_extend, standard_form,
                   make_type_iv_pair, make_type_iv_triple, make_t_iv,
                   make_vhi, make_mn_plus, make_bad_pair,
                   enumerate_automorphisms)
from jpaut.errors import (BudgetExceeded, DegenerateTrace, ShapeMismatch)

F3 = PrimeField(3)
F5 = PrimeField(5)
F33 = ProductRing(F3, F3)


def test_check_axioms_pair_report():
    rep = check_axioms(make_vhi(1, 2, F3))
    assert rep.ok and rep.kind == "pair"
    # two signs, (dplus * dminus)^2 basis tuples each: 2 * 16 = 32
    assert rep.checked == 32
    assert rep.failures == ()


def test_check_axioms_triple_and_algebra():
    rt = check_axioms(make_type_iv_triple(standard_form(F3, 2)))
    assert rt.ok and rt.kind == "triple" and rt.checked == 2 * 2 ** 4
    ra = check_axioms(make_mn_plus(2, F3))
    assert ra.ok and ra.kind == "algebra"


def test_bad_pair_fails_outer_symmetry():
    rep = check_axioms(make_bad_pair(F3))
    assert not rep.ok
    assert rep.failures[0]["identity"] == "outer-symmetry"
    assert rep.failures[0]["at"] == (0, 1, 1)


def test_check_axioms_refuses_large_carriers():
    # dim 9 per side is past the exhaustive sweep cap; no sampling fallback
    with pytest.raises(BudgetExceeded):
        check_axioms(make_vhi(3, 3, F3))


def test_d_and_q_operators_dim_one_form_pair():
    # rank-1 form <1> with b(x, y) = xy: {x, y, z} = xyz, so D(1, 1) = 1
    pair = make_type_iv_pair(standard_form(F3, 1))
    one = (F3.one,)
    d = d_operator(pair.structure, 1, one, one)
    assert d == Matrix.build(F3, [[1]])
    # Q_x y = (1/2) {x, y, x}, and 1/2 = 2 in F3
    q = q_operator(pair.structure, 1, one, one)
    assert q == (2,)


def test_pair_map_compose_and_inverse():
    pair = make_vhi(1, 2, F3)
    a = Matrix.build(F3, [[2]])
    b = Matrix.build(F3, [[1, 1], [0, 1]])
    from jpaut import hat_generators
    pm = hat_generators(a, b)
    assert is_pair_automorphism(pair, pm)
    ident = pm.compose(pm.inverse())
    assert ident.plus == Matrix.identity(F3, 2)
    assert ident.minus == Matrix.identity(F3, 2)


def test_dual_inverse_preserves_trace_pairing():
    pair = make_type_iv_pair(standard_form(F3, 2))
    g = pair.structure.trace
    from jpaut import go_to_pair_aut, enumerate_GO
    for a in enumerate_GO(standard_form(F3, 2)):
        pm = go_to_pair_aut(a, standard_form(F3, 2))
        assert pm.minus == dual_inverse(pair.structure, pm.plus)
        # phi_plus^T G phi_minus == G
        assert pm.plus.transpose() @ g @ pm.minus == g


def test_dual_inverse_requires_a_trace():
    pt = pair_from_triple(make_t_iv(standard_form(F5, 0)).structure)
    assert pt.trace is None
    with pytest.raises(DegenerateTrace):
        dual_inverse(pt, Matrix.identity(F5, 1))


def test_triple_from_algebra_unit_acts_as_identity():
    import numpy as np
    alg = make_mn_plus(2, F3)
    t = triple_from_algebra(alg.structure)
    assert check_axioms(t).ok
    # {1, 1, z} = (1z)1 + (z1)1 - (z1)1 = z for every z
    tensor = np.array(t.tensor)
    unit = np.array(alg.structure.unit)
    res = np.einsum('xabk,a,b->xk', tensor, unit, unit) % 3
    assert np.array_equal(res, np.eye(4, dtype=res.dtype))


def test_pair_from_triple_doubles_the_carrier():
    t = make_type_iv_triple(standard_form(F5, 2)).structure
    p = pair_from_triple(t)
    assert (p.dplus, p.dminus) == (t.dim, t.dim)
    assert p.t_plus == t.tensor and p.t_minus == t.tensor
    assert p.trace == t.trace  # the registered trace rides along


def test_scalar_extension_to_split_ring():
    # V over R x S splits: automorphisms multiply componentwise
    viv = make_type_iv_pair(standard_form(F3, 1))
    ext = scalar_extend(viv.structure, F33)
    assert check_axioms(ext).ok
    s = enumerate_automorphisms(ext)
    assert s.order == 4  # 2 per component


def test_is_pair_automorphism_rejects_non_similitudes():
    viv = make_type_iv_pair(standard_form(F3, 2))
    shear = Matrix.build(F3, [[1, 1], [0, 1]])
    assert not is_pair_automorphism(viv, PairMap(shear, shear))


def test_is_triple_automorphism_shape_guard():
    that = make_type_iv_triple(standard_form(F3, 2))
    with pytest.raises(ShapeMismatch):
        is_triple_automorphism(that, Matrix.identity(F3, 3))
