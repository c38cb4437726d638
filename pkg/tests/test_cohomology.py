"""Cocycles, coboundaries, invariants, and the splitting xi = ad r0 + R."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cocycles, multivectors, zoo_names
from flatbialg.cohomology import (
    Cochain,
    CoefficientView,
    NotCocycleError,
    check_tables,
    coboundary,
    coboundary_space,
    cocycle_space,
    complement_keys,
    decompose,
    first_residual_witness,
    invariants,
    lemma_inv_closed_form,
)
from flatbialg.exteralg import Multivector, SubspaceBasis, basis_keys
from flatbialg.flatliealg import AnomalousAlgebraError, build_algebra
from flatbialg.zoo import dim3_cochain, get_zoo

COCYCLE_DIMS = {
    "dim3": 4, "dim4": 9, "g_alpha_1": 10, "g_alpha_2": 12,
    "g_alpha_3": 10, "g_alpha_half": 12, "g_alpha_neg1": 10,
    "lambda_12": 12, "lambda_13": 10, "lambda_3x2": 37,
}
INV2_DIMS = {
    "dim3": 1, "dim4": 1, "g_alpha_1": 4, "g_alpha_2": 2,
    "g_alpha_3": 2, "g_alpha_half": 2, "g_alpha_neg1": 4,
    "lambda_12": 2, "lambda_13": 2, "lambda_3x2": 3,
}


def random_cochain_strategy(g):
    return st.lists(
        multivectors(g.dim, 2), min_size=g.dim, max_size=g.dim,
    ).map(lambda vals: Cochain(g, vals))


@given(zoo_names(), st.data())
def test_cochain_vec_round_trip(name, data):
    g = get_zoo()[name]
    xi = data.draw(random_cochain_strategy(g))
    assert Cochain.from_vec(g, xi.to_vec()) == xi


@given(st.data())
def test_coefficient_view_reconstructs(data):
    g = get_zoo()["lambda_3x2"]
    mv = data.draw(multivectors(g.dim, 2, max_terms=8))
    assert CoefficientView(g, mv).reconstruct() == mv
    g4 = get_zoo()["dim4"]
    mv4 = data.draw(multivectors(g4.dim, 2, max_terms=6))
    assert CoefficientView(g4, mv4).reconstruct() == mv4


def test_coefficient_view_signs_and_strictness(zoo):
    g = zoo["g_alpha_2"]
    # d2 ^ d3 carries n(2, 1) with the canonical-order sign flipped
    mv = Multivector(g.dim, 2, {(g.d(2), g.d(3)): Fraction(5)})
    view = CoefficientView(g, mv)
    assert view.n(2, 1) == -5
    assert view.n(1, 2) == 0
    mv2 = Multivector(g.dim, 2, {(g.d(1), g.d(4)): Fraction(7)})
    assert CoefficientView(g, mv2).n(1, 2) == 7
    with pytest.raises(ValueError):
        view.m(2, 1)
    with pytest.raises(ValueError):
        view.p(1, 1)
    # a and f extend antisymmetrically instead
    gl = build_algebra(1, 2, 1, [[1]])
    mvf = Multivector(gl.dim, 2, {(gl.z(1), gl.z(2)): Fraction(3)})
    vf = CoefficientView(gl, mvf)
    assert vf.f(2, 1) == -3 and vf.f(1, 1) == 0


def test_cocycle_and_invariant_dimensions(zoo):
    for name, g in zoo.items():
        assert cocycle_space(g).dim == COCYCLE_DIMS[name], name
        assert invariants(g, 2).dim == INV2_DIMS[name], name


def test_coboundaries_sit_inside_cocycles(zoo):
    for name, g in zoo.items():
        zb = coboundary_space(g)
        zc = cocycle_space(g)
        assert all(zc.member(v) for v in zb.vectors), name
    g3 = zoo["dim3"]
    assert cocycle_space(g3).dim - coboundary_space(g3).dim == 2


@given(zoo_names(), st.data())
def test_residual_witness_matches_membership(name, data):
    g = get_zoo()[name]
    xi = data.draw(random_cochain_strategy(g))
    witness = first_residual_witness(g, xi)
    inside = cocycle_space(g).member(xi.to_vec())
    assert (witness is None) == inside
    if witness is not None:
        pair, residual = witness
        assert not residual.is_zero()
        with pytest.raises(NotCocycleError) as err:
            decompose(g, xi)
        assert err.value.pair == pair


def test_invariants_are_annihilated_by_adjoints(zoo):
    for name, g in zoo.items():
        inv = invariants(g, 2)
        keys2 = basis_keys(g.dim, 2)
        for vec in inv.vectors:
            mv = Multivector(g.dim, 2, dict(zip(keys2, vec)))
            for x in range(g.dim):
                assert g.ad_basis_apply(x, mv).is_zero(), name


def test_invariants_match_structural_description(zoo):
    for name, g in zoo.items():
        assert lemma_inv_closed_form(g) == invariants(g, 2), name


def test_closed_form_refuses_disagreeing_criteria():
    g = build_algebra(2, 0, 2, [[1, 2], [1, -2]])
    with pytest.raises(AnomalousAlgebraError):
        lemma_inv_closed_form(g)


def test_degenerate_pair_generators(zoo):
    g = zoo["g_alpha_1"]
    inv = invariants(g, 2)
    assert inv.dim == 4
    keys2 = basis_keys(g.dim, 2)

    def vec(coords):
        return Multivector(g.dim, 2, coords).to_coords(keys2)

    # plane symplectic generators
    assert inv.member(vec({(g.d(1), g.d(2)): 1}))
    assert inv.member(vec({(g.d(3), g.d(4)): 1}))
    # crossed-plane generators for the pair (1, 2), eps = +1
    assert inv.member(vec({(g.d(1), g.d(3)): 1, (g.d(2), g.d(4)): 1}))
    assert inv.member(vec({(g.d(1), g.d(4)): 1, (g.d(2), g.d(3)): -1}))
    # and the un-paired single blades are not invariant
    assert not inv.member(vec({(g.d(1), g.d(3)): 1}))


def test_degree3_invariants_of_central_extension(zoo):
    g = zoo["dim4"]
    inv = invariants(g, 3)
    keys3 = basis_keys(g.dim, 3)
    expected = SubspaceBasis(len(keys3), [
        Multivector(g.dim, 3, {(0, 2, 3): 1}).to_coords(keys3),
        Multivector(g.dim, 3, {(1, 2, 3): 1}).to_coords(keys3),
    ])
    assert inv == expected
    with pytest.raises(ValueError):
        invariants(g, 4)


def test_decompose_frozen_three_dimensional_case(zoo):
    g = zoo["dim3"]
    s, d1, d2 = 0, 1, 2
    dec = decompose(g, dim3_cochain(g, 1, 1, 1, 1))
    assert dec.r0.coords == {(s, d1): 1, (s, d2): -1}
    assert dec.R.value(s).coords == {(d1, d2): 1}
    assert dec.R.value(d1).coords == {(s, d1): 1}
    assert dec.R.value(d2).coords == {(s, d2): 1}
    assert [dict(p.coords) for p in dec.phi] == [{(d1,): 1, (d2,): -1}]
    rep = check_tables(g, dec.R)
    assert rep.ok and rep.checked == 2


@given(zoo_names(), st.data())
def test_decompose_reconstructs_cocycle(name, data):
    g = get_zoo()[name]
    if name in ("g_alpha_1", "g_alpha_neg1", "lambda_3x2"):
        return  # degenerate pair or slow case, covered elsewhere
    xi = data.draw(cocycles(g))
    dec = decompose(g, xi)
    assert coboundary(g, dec.r0) + dec.R == xi
    comp = set(complement_keys(g))
    assert set(dec.r0.coords) <= comp
    nsz = g.k0 + g.l0
    inv = invariants(g, 2)
    keys2 = basis_keys(g.dim, 2)
    for x in range(nsz):
        assert inv.member(dec.R.value(x).to_coords(keys2))


def test_decompose_recovers_complement_coboundary(zoo):
    g = zoo["dim3"]
    r = Multivector(3, 2, {(0, 1): Fraction(2), (0, 2): Fraction(-3)})
    dec = decompose(g, coboundary(g, r))
    assert dec.r0.coords == r.coords
    assert dec.R.is_zero()
    # a purely invariant bivector has no coboundary at all
    assert coboundary(g, Multivector(3, 2, {(1, 2): 1})).is_zero()


def test_table_checks_flag_injected_diagonal(zoo):
    g = zoo["g_alpha_2"]
    xi = Cochain.from_vec(g, cocycle_space(g).vectors[0])
    dec = decompose(g, xi)
    rep = check_tables(g, dec.R)
    assert rep.ok and rep.checked == 22 and rep.anomalies == ()

    vals = [dec.R.value(i) for i in range(g.dim)]
    vals[g.d(1)] = vals[g.d(1)] + Multivector(
        g.dim, 2, {(g.d(1), g.d(2)): Fraction(1)})
    bad = check_tables(g, Cochain(g, vals))
    assert not bad.ok
    assert bad.findings[0]["identity"] == "n_11^(d1) = 0"
