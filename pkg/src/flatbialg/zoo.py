"""Built-in algebra catalogue plus the two fully worked cochain families.

Every verification case runs offline against these fixtures. Catalogue
names are stable identifiers used in reports; two entries duplicate the
g_alpha family on purpose (they are listed under both namings upstream and
keeping both keeps report labels unambiguous).
"""

from __future__ import annotations

from fractions import Fraction

from .exteralg import Multivector
from .flatliealg import build_algebra
from .cohomology import Cochain

ZOO_PARAMS = {
    "dim3": (1, 0, 1, ((1,),)),
    "dim4": (1, 1, 1, ((1,),)),
    "g_alpha_2": (1, 0, 2, ((1,), (2,))),
    "g_alpha_1": (1, 0, 2, ((1,), (1,))),
    "g_alpha_neg1": (1, 0, 2, ((1,), (-1,))),
    "g_alpha_3": (1, 0, 2, ((1,), (3,))),
    "g_alpha_half": (1, 0, 2, ((1,), (Fraction(1, 2),))),
    "lambda_12": (1, 0, 2, ((1,), (2,))),
    "lambda_13": (1, 0, 2, ((1,), (3,))),
    "lambda_3x2": (2, 0, 3, ((1, 0), (0, 1), (1, 1))),
}

_cache = {}


def get_zoo():
    """Name -> built algebra, constructed once per process."""
    if not _cache:
        for name, (k0, l0, m, rows) in ZOO_PARAMS.items():
            _cache[name] = build_algebra(k0, l0, m, rows)
    return dict(_cache)


def nondegenerate_names():
    from .flatliealg import classify
    return tuple(
        name for name, g in sorted(get_zoo().items())
        if classify(g).nondegenerate
    )


def dim3_cochain(g, a, b, c, e):
    """The general cocycle on the dim-3 algebra, parameters (a, b, c, e):
    xi(s) = a s^d1 + b s^d2 + c d1^d2, xi(d1) = e s^d1 + b d1^d2,
    xi(d2) = e s^d2 - a d1^d2."""
    a, b, c, e = (Fraction(v) for v in (a, b, c, e))
    s, d1, d2 = 0, 1, 2

    def mv(coords):
        return Multivector(3, 2, {k: v for k, v in coords.items() if v})

    return Cochain(g, [
        mv({(s, d1): a, (s, d2): b, (d1, d2): c}),
        mv({(s, d1): e, (d1, d2): b}),
        mv({(s, d2): e, (d1, d2): -a}),
    ])


def dim3_bialgebra_condition(a, b, c, e):
    """The dual Jacobi identity holds iff c = 0 or e = 0."""
    return c == 0 or e == 0


DIM4_PARAM_NAMES = ("n_z", "c", "e", "g", "h", "n", "c1", "g1", "h1")


def dim4_cochain(g4, params):
    """The general cocycle on the dim-4 algebra.

    params maps the nine coefficient names (n_z, c, e, g, h, n, c1, g1, h1)
    to scalars:
        xi(z)  = n_z d1^d2
        xi(s)  = c s^d1 + e s^d2 + g z^d1 + h z^d2 + n d1^d2
        xi(d1) = c1 s^d1 + g1 z^d1 + h1 z^d2 + e d1^d2
        xi(d2) = c1 s^d2 - h1 z^d1 + g1 z^d2 - c d1^d2
    """
    p = {k: Fraction(params[k]) for k in DIM4_PARAM_NAMES}
    s, z, d1, d2 = 0, 1, 2, 3

    def mv(coords):
        return Multivector(4, 2, {k: v for k, v in coords.items() if v})

    return Cochain(g4, [
        mv({(s, d1): p["c"], (s, d2): p["e"], (z, d1): p["g"],
            (z, d2): p["h"], (d1, d2): p["n"]}),
        mv({(d1, d2): p["n_z"]}),
        mv({(s, d1): p["c1"], (z, d1): p["g1"], (z, d2): p["h1"],
            (d1, d2): p["e"]}),
        mv({(s, d2): p["c1"], (z, d1): -p["h1"], (z, d2): p["g1"],
            (d1, d2): -p["c"]}),
    ])


def _dim4_linear_conditions(p):
    lin1 = p["g"] * p["c1"] - p["c"] * p["g1"] + p["e"] * p["h1"]
    lin2 = p["h"] * p["c1"] - p["e"] * p["g1"] - p["c"] * p["h1"]
    return lin1 == 0 and lin2 == 0


def dim4_tabulated_predicate(params):
    """The three-condition bialgebra test as listed in the reference
    derivation: (n_z = n = 0 or c = 0) plus the two linear conditions.
    Known to be incomplete in both directions; see dim4_jacobi_predicate."""
    p = {k: Fraction(params[k]) for k in DIM4_PARAM_NAMES}
    gate = (p["n_z"] == 0 and p["n"] == 0) or p["c"] == 0
    return gate and _dim4_linear_conditions(p)


def dim4_jacobi_predicate(params):
    """Exact bialgebra condition for the dim-4 family, derived from the
    generic Jacobiator: (n_z = n = 0, or c1 = g1 = 0) plus the two linear
    conditions. Verified against is_bialgebra on the full {-1,0,1}^9 grid."""
    p = {k: Fraction(params[k]) for k in DIM4_PARAM_NAMES}
    gate = (p["n_z"] == 0 and p["n"] == 0) or (p["c1"] == 0 and p["g1"] == 0)
    return gate and _dim4_linear_conditions(p)
