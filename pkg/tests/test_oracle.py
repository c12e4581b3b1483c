"""Enumeration oracle: exhaustive scans, family images, closures, budgets."""
import pytest

from jpaut import (PrimeField, Rationals, Matrix, PairMap,
                   standard_form, enumerate_GL, enumerate_GO, enumerate_O,
                   pair_from_triple, make_type_iv_pair, make_type_iv_triple,
                   make_t_iv, make_vhi, make_tti, make_mn_plus,
                   make_bilinear_form_algebra, go_to_pair_aut,
                   ortho_to_triple_aut, hat_l, hat_r, transpose_twist,
                   tti_map, tti_membership, all_twisted_maps,
                   factor_triple_aut, enumerate_automorphisms,
                   generate_closure, family_image, compare, gl_order,
                   DEFAULT_BUDGET)
from jpaut.errors import (BadInput, BudgetExceeded, MixedSystems,
                          NonEnumerableRing, NotFactorable)

F3 = PrimeField(3)
F5 = PrimeField(5)


def test_default_budget_covers_the_desk_grid():
    # the largest desk scan is GL_4(F3); the default budget must admit it
    assert DEFAULT_BUDGET >= gl_order(F3, 4)


def test_small_exhaustive_orders_and_engines():
    s = enumerate_automorphisms(make_type_iv_pair(standard_form(F3, 1)))
    assert (s.order, s.engine, s.candidates) == (2, "pure", 2)
    s2 = enumerate_automorphisms(make_type_iv_triple(standard_form(F5, 1)))
    assert s2.order == 2
    s3 = enumerate_automorphisms(make_vhi(1, 2, F3))
    assert (s3.order, s3.engine) == (48, "fast")
    assert s3.verify_group_closed()


def test_fast_and_pure_engines_agree():
    vhi = make_vhi(1, 2, F3)
    fast = enumerate_automorphisms(vhi, engine="fast")
    pure = enumerate_automorphisms(vhi, engine="pure")
    assert fast.elements == pure.elements


def test_rectangle_pair_equals_right_translation_image():
    for ring, order in ((F3, 48), (F5, 480)):
        vhi = make_vhi(1, 2, ring)
        ex = enumerate_automorphisms(vhi)
        img = family_image(vhi, "pair",
                           [hat_r(b, 1) for b in enumerate_GL(2, ring)])
        assert ex.order == order
        assert compare(ex, img).equal, ring.name


def test_form_pair_equals_similitude_image():
    for ring in (F3, F5):
        form = standard_form(ring, 2)
        viv = make_type_iv_pair(form)
        ex = enumerate_automorphisms(viv)
        im = family_image(viv, "pair",
                          [go_to_pair_aut(a, form) for a in enumerate_GO(form)])
        assert compare(ex, im).equal, ring.name


def test_form_triple_equals_isometry_image():
    for ring in (F3, F5):
        form = standard_form(ring, 2)
        that = make_type_iv_triple(form)
        ex = enumerate_automorphisms(that)
        im = family_image(that, "triple",
                          [ortho_to_triple_aut(a, form)
                           for a in enumerate_O(form)])
        assert compare(ex, im).equal, ring.name


def test_unital_triple_orders_and_factorability():
    # (order, factorable) per carrier dim; the dim-2 carrier splits as a
    # product of two lines, so half its automorphisms move the unit line
    # and do not factor through a scalar times an algebra automorphism
    expected = {1: (2, 2), 2: (8, 4), 3: (16, 16)}
    for n in (1, 2, 3):
        form = standard_form(F5, n - 1)
        tiv = make_t_iv(form)
        alg = make_bilinear_form_algebra(form)
        ex = enumerate_automorphisms(tiv)
        factorable = 0
        for el in ex.elements:
            try:
                factor_triple_aut(alg, el)
            except NotFactorable:
                continue
            factorable += 1
        assert (ex.order, factorable) == expected[n], n


def test_untraced_pair_scans_both_sides():
    pt = pair_from_triple(make_t_iv(standard_form(F5, 0)).structure)
    assert pt.trace is None
    s = enumerate_automorphisms(pt)
    # candidate space is GL_1 x GL_1; graph constraint cuts it to 4
    assert (s.order, s.candidates) == (4, 16)


def test_tti_rectangle_equals_multiplier_image():
    tti = make_tti(1, 2, F3)
    ex = enumerate_automorphisms(tti)
    els = [tti_map(a, b)
           for a in enumerate_GO(standard_form(F3, 1))
           for b in enumerate_GO(standard_form(F3, 2))
           if tti_membership(a, b)]
    im = family_image(tti, "triple", els)
    assert ex.order == 8 and compare(ex, im).equal


def test_matrix_algebra_equals_twisted_image():
    mn = make_mn_plus(2, F3)
    ex = enumerate_automorphisms(mn)
    assert ex.candidates == 3 ** 12 and ex.order == 48
    im = family_image(mn, "algebra",
                      [t.as_matrix() for t in all_twisted_maps(F3, 2, 1)])
    assert compare(ex, im).equal


def test_closure_of_nothing_is_the_identity():
    viv = make_type_iv_pair(standard_form(F5, 2))
    assert generate_closure(viv, []).order == 1


def test_closure_of_a_closed_family_is_itself():
    form = standard_form(F5, 2)
    viv = make_type_iv_pair(form)
    gens = [go_to_pair_aut(a, form) for a in enumerate_GO(form)]
    cl = generate_closure(viv, gens)
    assert cl.order == len(gens) == 32


def test_square_rectangle_closure_order():
    # |GL_2(F3)|^2 / 2 central classes, doubled by the transpose twist
    vhi22 = make_vhi(2, 2, F3)
    gens = ([hat_l(a, 2) for a in enumerate_GL(2, F3)]
            + [hat_r(b, 2) for b in enumerate_GL(2, F3)]
            + [transpose_twist(F3, 2)])
    cl = generate_closure(vhi22, gens)
    assert cl.order == 2304 == 48 * 48 // 2 * 2
    assert cl.verify_group_closed()


def test_closure_rejects_non_automorphism_generators():
    viv = make_type_iv_pair(standard_form(F3, 2))
    shear = Matrix.build(F3, [[1, 1], [0, 1]])
    with pytest.raises(BadInput):
        generate_closure(viv, [PairMap(shear, shear)])


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        enumerate_automorphisms(make_vhi(2, 2, F3), budget=1000)
    # a budget equal to the candidate count is enough
    s = enumerate_automorphisms(make_type_iv_pair(standard_form(F3, 1)),
                                budget=2)
    assert s.order == 2
    with pytest.raises(BudgetExceeded):
        enumerate_automorphisms(make_type_iv_pair(standard_form(F3, 1)),
                                budget=1)


def test_infinite_rings_are_refused():
    with pytest.raises(NonEnumerableRing):
        enumerate_automorphisms(make_vhi(1, 1, Rationals()))


def test_compare_refuses_mixed_systems():
    a = enumerate_automorphisms(make_type_iv_pair(standard_form(F3, 1)))
    b = enumerate_automorphisms(make_vhi(1, 2, F3))
    with pytest.raises(MixedSystems):
        compare(a, b)


def test_jobs_do_not_change_the_result():
    tiv3 = make_t_iv(standard_form(F5, 2))
    r1 = enumerate_automorphisms(tiv3, jobs=1)
    r4 = enumerate_automorphisms(tiv3, jobs=4)
    assert r1.elements == r4.elements
    assert r1.to_jsonable(True) == r4.to_jsonable(True)


def test_to_jsonable_shape():
    s = enumerate_automorphisms(make_type_iv_pair(standard_form(F3, 1)))
    blob = s.to_jsonable(True)
    assert sorted(blob) == ["candidates", "elements", "engine", "kind",
                            "mode", "order", "ring", "system"]
    assert blob["elements"] == [{"plus": [["1"]], "minus": [["1"]]},
                                {"plus": [["2"]], "minus": [["2"]]}]
