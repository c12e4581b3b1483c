"""Block grading on gl: degree bookkeeping, bracket laws, pair recovery."""
from jpaut import (PrimeField, make_graded_gl, check_graded_lie,
                   pair_from_grading, make_vhi)

F3 = PrimeField(3)
F5 = PrimeField(5)


def test_degree_layout():
    g = make_graded_gl(1, 2, F3)
    assert g.size == 3 and g.dim == 9
    # unit E_ij has degree block(j) - block(i); block 0 is the first m rows
    assert g.degrees == (0, 1, 1, -1, 0, 0, -1, 0, 0)
    assert len(g.wing_indices(1)) == 2
    assert len(g.wing_indices(-1)) == 2
    assert len(g.wing_indices(0)) == 5


def test_bracket_spot_value():
    g = make_graded_gl(2, 2, F3)
    # [E_00, E_01] = E_01 in the unit basis (index 4i + j)
    e00 = tuple(1 if k == 0 else 0 for k in range(16))
    e01 = tuple(1 if k == 1 else 0 for k in range(16))
    assert g.apply_bracket(e00, e01) == e01
    assert g.apply_bracket(e01, e00) == tuple(-1 % 3 if k == 1 else 0
                                              for k in range(16))


def test_graded_lie_report():
    rep = check_graded_lie(make_graded_gl(1, 2, F3))
    assert rep["ok"] and rep["failures"] == []
    # antisymmetry on dim^2 pairs plus Jacobi on dim^3 triples
    assert rep["checked"] == 9 ** 2 + 9 ** 3


def test_pair_from_grading_matches_rectangle_pair():
    for ring in (F3, F5):
        for (m, n) in ((1, 1), (1, 2)):
            rec = pair_from_grading(make_graded_gl(m, n, ring))
            direct = make_vhi(m, n, ring).structure
            assert rec.t_plus == direct.t_plus, (ring.name, m, n)
            assert rec.t_minus == direct.t_minus
