"""Shared fixtures and hypothesis strategies for the test suite."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from flatbialg.cohomology import Cochain, cocycle_space
from flatbialg.exteralg import Multivector, basis_keys
from flatbialg.zoo import get_zoo

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def zoo():
    return get_zoo()


def rationals(max_num=6, max_den=4):
    return st.fractions(
        min_value=-max_num, max_value=max_num, max_denominator=max_den)


def multivectors(dim, degree, max_terms=4):
    """Sparse random multivectors of one degree."""
    keys = basis_keys(dim, degree)
    return st.dictionaries(
        st.sampled_from(keys), rationals(),
        max_size=min(max_terms, len(keys)),
    ).map(lambda d: Multivector(
        dim, degree, {k: v for k, v in d.items() if v}))


def cocycles(g, max_terms=4):
    """Random rational combinations of the cocycle space basis of g."""
    space = cocycle_space(g)

    def build(pairs):
        vec = [Fraction(0)] * space.ambient
        for idx, c in pairs:
            row = space.vectors[idx % space.dim]
            vec = [a + c * b for a, b in zip(vec, row)]
        return Cochain.from_vec(g, vec)

    return st.lists(
        st.tuples(st.integers(0, space.dim - 1), rationals()),
        max_size=max_terms,
    ).map(build)


def zoo_names():
    return st.sampled_from(sorted(get_zoo()))
