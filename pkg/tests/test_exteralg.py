"""Exterior algebra and exact linear algebra building blocks."""

from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multivectors, rationals
from flatbialg.exteralg import (
    Matrix,
    Multivector,
    SubspaceBasis,
    basis_keys,
    contract,
    pairing,
    sort_sign,
    sparse_nullspace,
    sparse_rref,
    sparse_solve,
    wedge,
)


def brute_parity(seq):
    inv = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )
    return -1 if inv % 2 else 1


def test_sort_sign_matches_inversion_parity():
    for n in (2, 3, 4):
        for perm in permutations(range(n)):
            srt, sign = sort_sign(perm)
            assert srt == tuple(range(n))
            assert sign == brute_parity(perm)
    assert sort_sign((1, 1)) == (None, 0)
    assert sort_sign((2, 0, 2)) == (None, 0)


def test_basis_keys_are_sorted_combinations():
    assert basis_keys(4, 2) == list(combinations(range(4), 2))
    assert basis_keys(3, 3) == [(0, 1, 2)]
    assert basis_keys(3, 1) == [(0,), (1,), (2,)]


@given(multivectors(5, 2), multivectors(5, 2), rationals())
def test_multivector_arithmetic(u, v, c):
    assert (u + v) - v == u
    assert u.scale(c) == c * u
    assert (u + v).scale(c) == u.scale(c) + v.scale(c)
    assert u + u.scale(-1) == Multivector.zero(5, 2)


@given(multivectors(5, 2))
def test_coords_round_trip(u):
    keys = basis_keys(5, 2)
    assert Multivector.from_coords(5, 2, u.to_coords(), keys) == u


@given(multivectors(5, 1), multivectors(5, 1), multivectors(5, 2))
def test_wedge_bilinear_and_alternating(x, y, u):
    assert wedge(x, x).is_zero()
    assert wedge(x, y) == wedge(y, x).scale(-1)
    # bivector with bivector commutes ((-1)^{2*2} = 1)
    assert wedge(u, wedge(x, y)) == wedge(wedge(x, y), u)
    assert wedge(x + y, u) == wedge(x, u) + wedge(y, u)


@given(multivectors(5, 1), multivectors(5, 1), multivectors(5, 1))
def test_wedge_associative(x, y, z):
    assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))


@given(multivectors(5, 3), multivectors(5, 1), multivectors(5, 2))
def test_contract_adjoint_to_wedge(form, x, u):
    # (i_x form)(u) = form(x ^ u), the defining property
    assert pairing(contract(form, x), u) == pairing(form, wedge(x, u))


@given(multivectors(5, 3), multivectors(5, 1))
def test_contract_squares_to_zero(form, x):
    assert contract(contract(form, x), x).is_zero()


@given(multivectors(6, 3), multivectors(6, 2))
def test_contract_by_higher_degree(form, x):
    got = contract(form, x)
    assert got.degree == 1
    for (i,) in basis_keys(6, 1):
        e = Multivector.basis_vector(6, i)
        assert got.coeff((i,)) == pairing(form, wedge(x, e))


def test_sparse_rref_canonical():
    rows = [
        {0: Fraction(2), 1: Fraction(4)},
        {0: Fraction(1), 1: Fraction(2), 2: Fraction(1)},
    ]
    red, pivots = sparse_rref(rows, 3)
    assert pivots == [0, 2]
    assert red[0] == {0: Fraction(1), 1: Fraction(2)}
    assert red[1] == {2: Fraction(1)}
    again, pivots2 = sparse_rref([dict(r) for r in red], 3)
    assert again == red and pivots2 == pivots


@given(st.lists(
    st.dictionaries(st.integers(0, 5), rationals(), max_size=4),
    max_size=6,
))
def test_nullspace_annihilated_by_rows(rows):
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    rows = [r for r in rows if r]
    nul = sparse_nullspace(rows, 6)
    for vec in nul.vectors:
        for row in rows:
            assert sum(c * vec[k] for k, c in row.items()) == 0
    # rank-nullity
    _, pivots = sparse_rref([dict(r) for r in rows], 6)
    assert nul.dim == 6 - len(pivots)


def test_sparse_solve_and_inconsistency():
    rows = [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(2)}]
    sol = sparse_solve([dict(r) for r in rows], 2,
                       [Fraction(3), Fraction(4)])
    assert sol is not None
    assert sol[0] + sol[1] == 3 and 2 * sol[1] == 4
    # inconsistent: x + y = 1 and 2x + 2y = 3
    bad = sparse_solve(
        [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(2), 1: Fraction(2)}],
        2, [Fraction(1), Fraction(3)])
    assert bad is None


def test_matrix_rank_nullspace_solve():
    m = Matrix.from_cols(
        [[1, 0, 1], [0, 1, 1], [1, 1, 2]], nrows=3)
    assert m.rank() == 2
    nul = m.nullspace()
    assert nul.dim == 1
    v = nul.vectors[0]
    assert m.apply(list(v)) == [Fraction(0)] * 3
    sol = m.solve([Fraction(1), Fraction(1), Fraction(2)])
    assert sol is not None
    assert m.apply(sol) == [Fraction(1), Fraction(1), Fraction(2)]
    assert m.solve([Fraction(1), Fraction(1), Fraction(3)]) is None


@given(st.permutations(list(range(3))), rationals(max_num=3).filter(bool))
def test_subspace_basis_is_span_invariant(perm, scale):
    vecs = [
        [Fraction(1), Fraction(2), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(1), Fraction(1), Fraction(0)],
        [Fraction(1), Fraction(3), Fraction(1), Fraction(1)],
    ]
    a = SubspaceBasis(4, vecs)
    shuffled = [vecs[i] for i in perm]
    shuffled[0] = [scale * x for x in shuffled[0]]
    # add a row to another: still the same span
    shuffled[1] = [x + y for x, y in zip(shuffled[1], shuffled[0])]
    b = SubspaceBasis(4, shuffled)
    assert a == b
    assert a.dim == 2


def test_subspace_membership_and_coordinates():
    sb = SubspaceBasis(3, [[1, 0, 1], [0, 1, 1]])
    vec = [Fraction(2), Fraction(-1), Fraction(1)]
    coords = sb.coordinates(vec)
    assert coords is not None
    recon = [Fraction(0)] * 3
    for c, row in zip(coords, sb.vectors):
        recon = [a + c * b for a, b in zip(recon, row)]
    assert recon == vec
    assert not sb.member([1, 0, 0])
    assert sb.contains(SubspaceBasis(3, [[1, 1, 2]]))


def test_wedge_degree_cap():
    u = Multivector(6, 2, {(0, 1): Fraction(1)})
    v = Multivector(6, 3, {(2, 3, 4): Fraction(1)})
    with pytest.raises(ValueError):
        wedge(u, v)
