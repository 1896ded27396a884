"""Finite point realizations, operator matrices, fibers, and comparisons."""

from fractions import Fraction

import pytest

from quivergrass.demazure import demazure_module
from quivergrass.errors import NotFiniteRegimeError, ValidationError
from quivergrass.fields import QQ
from quivergrass.geomrep import (
    _certified_rational_points,
    _reconstruct_fraction,
    chevalley_compare,
    fiber_euler,
    finite_points,
    operator_matrices,
    restricted_compat,
    verify_sl2,
)
from quivergrass.hull import injective_hull
from quivergrass.linalg import Mat
from quivergrass.quiver import double, line_quiver
from quivergrass.repmod import full_subrep, make_rep, reduce_mod, socle, zero_subrep

A1 = line_quiver(1)
A2 = line_quiver(2)
A3 = line_quiver(3)
W10 = {"1": 1, "2": 0}


def test_minuscule_realization_has_one_point_per_weight():
    real = finite_points(A2, W10)
    assert real.finite
    assert real.weights() == [(0, 0), (1, 0), (1, 1)]
    for vt in real.weights():
        st = real.status(vt)
        assert len(st.points) == 1
        assert st.counts == ((2, 1), (3, 1), (5, 1))
        assert st.reason is None
    assert real.total_points() == 3


def test_rank_three_minuscule_has_four_points():
    real = finite_points(A3, {"1": 1, "2": 0, "3": 0})
    assert real.finite
    assert real.total_points() == 4
    assert real.weights() == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]


def test_varying_count_is_reported_not_raised():
    real = finite_points(A1, {"1": 2})
    assert not real.finite
    st = real.status((1,))
    assert st.points is None
    assert st.counts == ((2, 3), (3, 4), (5, 6))
    assert "varies" in st.reason
    assert real.status((0,)).finite and real.status((2,)).finite
    with pytest.raises(NotFiniteRegimeError):
        real.point_list()


def test_operator_matrices_frozen_values():
    real = finite_points(A2, W10)
    ops = operator_matrices(real)
    assert ops["1"].raising == ((0, 1, 0), (0, 0, 0), (0, 0, 0))
    assert ops["1"].lowering == ((0, 0, 0), (1, 0, 0), (0, 0, 0))
    assert ops["1"].torus == ((1, 0, 0), (0, -1, 0), (0, 0, 0))
    assert ops["2"].raising == ((0, 0, 0), (0, 0, 1), (0, 0, 0))
    assert ops["2"].lowering == ((0, 0, 0), (0, 0, 0), (0, 1, 0))
    assert ops["2"].torus == ((0, 0, 0), (0, 1, 0), (0, 0, -1))


def test_torus_sequence_along_the_chain():
    real = finite_points(A2, W10)
    ops = operator_matrices(real)
    pairs = [
        (ops["1"].torus[k][k], ops["2"].torus[k][k]) for k in range(3)
    ]
    assert pairs == [(1, 0), (-1, 1), (0, -1)]


def test_commutators_against_torus():
    real = finite_points(A2, W10)
    ops = operator_matrices(real)

    def mul(a, b):
        n = len(a)
        return [
            [sum(a[r][t] * b[t][c] for t in range(n)) for c in range(n)]
            for r in range(n)
        ]

    for i in ("1", "2"):
        for j in ("1", "2"):
            comm = [
                [x - y for x, y in zip(ra, rb)]
                for ra, rb in zip(
                    mul(ops[i].raising, ops[j].lowering),
                    mul(ops[j].lowering, ops[i].raising),
                )
            ]
            expect = (
                [list(r) for r in ops[i].torus]
                if i == j
                else [[0] * 3 for _ in range(3)]
            )
            assert comm == expect


def test_raising_annihilates_the_vacuum():
    real = finite_points(A2, W10)
    ops = operator_matrices(real)
    for i in ("1", "2"):
        assert all(row[0] == 0 for row in ops[i].raising)
        # and nothing lowers into the vacuum either
        assert all(ops[i].lowering[0][c] == 0 for c in range(3))


def test_fiber_euler_values():
    m = injective_hull(A1, {"1": 2})
    assert fiber_euler(zero_subrep(m.rep), "1", "up") == 2
    assert fiber_euler(full_subrep(m.rep), "1", "up") == 0
    assert fiber_euler(full_subrep(m.rep), "1", "down") == 2
    m2 = injective_hull(A2, W10)
    soc = socle(m2.rep)
    assert fiber_euler(soc, "2", "up") == 1
    assert fiber_euler(soc, "2", "down") == 0
    assert fiber_euler(soc, "1", "down") == 1


def test_fiber_euler_validation():
    m = injective_hull(A1, {"1": 2})
    with pytest.raises(ValidationError):
        fiber_euler(zero_subrep(m.rep), "1", "sideways")
    with pytest.raises(ValidationError):
        fiber_euler(zero_subrep(m.rep), "9", "up")
    rep_p = reduce_mod(m.rep, 3)
    with pytest.raises(ValidationError):
        fiber_euler(zero_subrep(rep_p), "1", "up")


def test_sl2_report_finite_case():
    rep = verify_sl2(A2, W10)
    assert rep.finite_regime
    assert rep.passed
    assert rep.total_dim == 3
    assert rep.total_points == 3
    names = [it.name for it in rep.items]
    assert "raising/lowering commutators equal the torus table" in names
    assert "repeated brackets at distinct vertices vanish" in names


def test_sl2_report_rank_three():
    rep = verify_sl2(A3, {"1": 1, "2": 0, "3": 0})
    assert rep.finite_regime and rep.passed
    assert rep.total_dim == 4 and rep.total_points == 4


def test_sl2_report_outside_finite_regime():
    rep = verify_sl2(A1, {"1": 2})
    assert not rep.finite_regime
    assert rep.passed
    assert rep.total_dim == 3
    assert rep.total_points is None
    assert len(rep.items) == 2


def test_sl2_adjoint_weight_census_via_leading_coefficients():
    rep = verify_sl2(A2, {"1": 1, "2": 1})
    assert not rep.finite_regime  # the middle weight has varying counts
    assert rep.passed
    assert rep.total_dim == 8
    dims = dict(rep.weight_dims)
    assert dims[(1, 1)] == 2
    assert sum(1 for _, m in rep.weight_dims if m == 1) == 6


def test_restricted_compat_all_word_segments():
    word = ("1", "2", "1")
    for k in range(len(word) + 1):
        assert restricted_compat(A2, W10, word[k:])
        assert restricted_compat(A2, W10, word[: len(word) - k])
    assert restricted_compat(A3, {"1": 1, "2": 0, "3": 0}, ("1", "2", "1"))


def test_restricted_compat_needs_finite_regime():
    with pytest.raises(NotFiniteRegimeError):
        restricted_compat(A1, {"1": 2}, ("1",))


def test_chevalley_reports():
    rep = chevalley_compare(A2, W10)
    assert rep.passed
    assert rep.pair_count == 3
    names = [it.name for it in rep.items]
    assert "raising and lowering swap under the pairing" in names
    assert "torus eigenvalue lists negate and reverse" in names
    rep1 = chevalley_compare(A1, {"1": 1})
    assert rep1.passed and rep1.pair_count == 2


def test_chevalley_needs_finite_regime():
    with pytest.raises(NotFiniteRegimeError):
        chevalley_compare(A1, {"1": 2})


def test_rational_reconstruction_integer_route():
    m = injective_hull(A2, W10)
    pts = _certified_rational_points(m.rep, {"1": 1, "2": 1}, 1, [2, 3, 5], None)
    chain = demazure_module(A2, W10, ("2", "1"))
    assert pts is not None and len(pts) == 1
    assert pts[0].key() == chain.stages[-1].key()


def test_rational_reconstruction_with_fraction_and_bad_prime():
    dq = double(line_quiver(2))
    rep = make_rep(
        QQ,
        dq,
        {"1": 2, "2": 1},
        {
            "a1": Mat.from_rows(QQ, [[Fraction(1), Fraction(2)]]),
            "a1*": Mat.zeros(QQ, 2, 1),
        },
    )
    pts = _certified_rational_points(rep, {"1": 1, "2": 0}, 1, [2, 3, 5], None)
    assert pts is not None
    assert pts[0].basis("1").to_lists() == [[Fraction(1)], [Fraction(-1, 2)]]
    assert (
        _certified_rational_points(rep, {"1": 1, "2": 0}, 2, [2, 3, 5], None)
        is None
    )


def test_fraction_reconstruction_helper():
    assert _reconstruct_fraction(7, 15) == Fraction(-1, 2)
    assert _reconstruct_fraction(0, 15) == 0
    assert _reconstruct_fraction(1, 15) == 1
    assert _reconstruct_fraction(3, 7) is None


def test_realization_is_deterministic():
    a = finite_points(A2, W10)
    b = finite_points(A2, W10)
    assert [vt for vt, _ in a.point_list()] == [vt for vt, _ in b.point_list()]
    assert [pt.key() for _, pt in a.point_list()] == [
        pt.key() for _, pt in b.point_list()
    ]
