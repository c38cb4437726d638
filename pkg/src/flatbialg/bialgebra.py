"""Dual brackets, Jacobi tests, Schouten brackets, and Yang-Baxter checks.

The dual bracket is the transpose of a cocycle: <[a*, b*], x> = <a* ^ b*,
xi(x)> with the orthonormal pairing, nothing else. Bialgebra decisions run
the Jacobi identity generically on all dual basis triples; the closed-form
Jacobiators from the reference derivation are kept separately as
cross-checks, never as the decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exteralg import Multivector, basis_keys, sparse_solve, wedge
from .flatliealg import AlgebraError, classify
from .cohomology import (
    CoefficientView,
    coboundary,
    decompose,
    first_residual_witness,
    invariants,
    NotCocycleError,
)


class DualBracket:
    """Structure constants of the transposed cocycle on the dual basis."""

    __slots__ = ("g", "xi", "table")

    def __init__(self, g, xi):
        self.g = g
        self.xi = xi
        table = {}
        for c in range(g.dim):
            for key, v in xi.value(c).coords.items():
                if key not in table:
                    table[key] = {}
                table[key][(c,)] = v
        self.table = {
            key: Multivector(g.dim, 1, coords) for key, coords in table.items()
        }

    def bracket_pair(self, a, b):
        """[e_a*, e_b*] for flat indices a, b."""
        if a == b:
            return Multivector.zero(self.g.dim, 1)
        if a < b:
            hit = self.table.get((a, b))
            return hit if hit is not None else Multivector.zero(self.g.dim, 1)
        return -self.bracket_pair(b, a)

    def bracket(self, u, v):
        """Bilinear extension to dual vectors (degree-1 multivectors)."""
        out = Multivector.zero(self.g.dim, 1)
        for (a,), ca in u.coords.items():
            for (b,), cb in v.coords.items():
                if a != b:
                    out = out + self.bracket_pair(a, b).scale(ca * cb)
        return out

    def u_star(self, k):
        """u_k* = sum_i lambda_{ik} s_i*."""
        g = self.g
        coords = {}
        for i in range(1, g.k0 + 1):
            lam = g.lam.lam(i, k)
            if lam:
                coords[(g.s(i),)] = lam
        return Multivector(g.dim, 1, coords)

    def X(self, i, j):
        sc = plane_scalars(self.g, self.xi)
        return sum(
            (self.g.lam.lam(p, i) * sc["c"][(p, j)] for p in range(1, self.g.k0 + 1)),
            Fraction(0),
        )

    def Y(self, i, j):
        sc = plane_scalars(self.g, self.xi)
        return sum(
            (self.g.lam.lam(p, i) * sc["e"][(p, j)] for p in range(1, self.g.k0 + 1)),
            Fraction(0),
        )


def dual_bracket(g, xi):
    """Transpose bracket of a cochain; meaningful when xi is a cocycle."""
    return DualBracket(g, xi)


def jacobiator(db, a, b, c):
    """J(a*, b*, c*) = [a*,[b*,c*]] + [b*,[c*,a*]] + [c*,[a*,b*]]."""
    g = db.g
    ea = Multivector.basis_vector(g.dim, a)
    eb = Multivector.basis_vector(g.dim, b)
    ec = Multivector.basis_vector(g.dim, c)
    return (
        db.bracket(ea, db.bracket(eb, ec))
        + db.bracket(eb, db.bracket(ec, ea))
        + db.bracket(ec, db.bracket(ea, eb))
    )


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    cocycle_ok: bool
    witness: tuple | None          # (a, b, c, jacobiator) or residual pair
    entries: tuple                 # ((a, b, c), jacobiator) per basis triple


def is_bialgebra(g, xi, full=True):
    """Decide whether the transpose of xi is a Lie bracket on the dual.

    Non-cocycles fail the cocycle gate and are reported as such, which is
    a different failure than a nonzero Jacobiator. With full=False the
    triple scan stops at the first nonzero Jacobiator and entries holds
    only the evaluated prefix.
    """
    res = first_residual_witness(g, xi)
    if res is not None:
        return JacobiReport(ok=False, cocycle_ok=False,
                            witness=res, entries=())
    db = dual_bracket(g, xi)
    entries = []
    witness = None
    for (a, b, c) in basis_keys(g.dim, 3):
        j = jacobiator(db, a, b, c)
        entries.append(((a, b, c), j))
        if witness is None and not j.is_zero():
            witness = (a, b, c, j)
            if not full:
                break
    return JacobiReport(ok=witness is None, cocycle_ok=True,
                        witness=witness, entries=tuple(entries))


def mu(g, X):
    """mu(X1^...^Xk) = sum_{i<j} (-1)^{i+j} [Xi,Xj] ^ (rest), extended
    linearly; positions are 1-based in the sign."""
    if X.degree not in (2, 3, 4):
        raise ValueError("mu is defined for degrees 2 through 4")
    out = Multivector.zero(g.dim, X.degree - 1)
    for key, coeff in X.coords.items():
        for pi in range(len(key)):
            for pj in range(pi + 1, len(key)):
                br = g.bracket_basis(key[pi], key[pj])
                if not br:
                    continue
                sign = 1 if (pi + pj) % 2 == 0 else -1  # (-1)^{(pi+1)+(pj+1)}
                rest = tuple(x for t, x in enumerate(key) if t not in (pi, pj))
                restmv = Multivector(g.dim, len(rest), {rest: 1})
                for b, cb in br.items():
                    term = wedge(Multivector.basis_vector(g.dim, b), restmv)
                    out = out + term.scale(sign * coeff * cb)
    return out


def schouten(g, X, Y):
    """Schouten bracket of two bivectors.

    Computed through the closed form [X,Y] = mu(X^Y) - X^mu(Y) - Y^mu(X),
    which is the unique trivector satisfying the pairing identity

        <w, [X,Y]> = w(mu(X^Y)) - (i_X w)(mu(Y)) - (i_Y w)(mu(X))

    for every 3-form w, with the first-slot contraction (i_X w)(u) =
    w(X ^ u) used throughout this package. The sign convention is pinned
    by exact agreement with schouten_oracle, not chosen independently.
    """
    if X.degree != 2 or Y.degree != 2:
        raise ValueError("schouten is defined here for bivector pairs")
    return mu(g, wedge(X, Y)) - wedge(X, mu(g, Y)) - wedge(Y, mu(g, X))


def schouten_oracle(g, X, Y):
    """Independent Schouten evaluation: bilinear extension of

        [x^y, u^v] = [x,u]^y^v - [x,v]^y^u - [y,u]^x^v + [y,v]^x^u

    over decomposable terms. Must agree with schouten everywhere.
    """
    if X.degree != 2 or Y.degree != 2:
        raise ValueError("schouten_oracle is defined here for bivector pairs")
    out = Multivector.zero(g.dim, 3)

    def term(bracket_of, rest1, rest2, sign, scale):
        nonlocal out
        br = g.bracket_basis(*bracket_of)
        if not br:
            return
        restmv = Multivector(g.dim, 1, {(rest1,): 1})
        restmv = wedge(restmv, Multivector(g.dim, 1, {(rest2,): 1}))
        if restmv.is_zero():
            return
        for bidx, cb in br.items():
            t = wedge(Multivector.basis_vector(g.dim, bidx), restmv)
            out = out + t.scale(sign * scale * cb)

    for (x, y), cx in X.coords.items():
        for (u, v), cy in Y.coords.items():
            s = cx * cy
            term((x, u), y, v, 1, s)
            term((x, v), y, u, -1, s)
            term((y, u), x, v, -1, s)
            term((y, v), x, u, 1, s)
    return out


@dataclass(frozen=True)
class CybeVerdict:
    bracket_square: Multivector
    class_: str                    # triangular | invariant_nonzero | generic


def cybe_classify(g, r):
    """Classify r by its Schouten square against the Yang-Baxter ladder."""
    rr = schouten(g, r, r)
    if rr.is_zero():
        label = "triangular"
    elif invariants(g, 3).member(rr.to_coords(basis_keys(g.dim, 3))):
        label = "invariant_nonzero"
    else:
        label = "generic"
    return CybeVerdict(bracket_square=rr, class_=label)


def exactness(g, xi):
    """Find r with xi = coboundary(r), or None.

    Uses the splitting criterion: after the canonical decomposition the
    remainder must vanish on the s- and z-generators and equal ad r1 on
    the plane generators for some r1 in (^2 s) + (s ^ z). Only stated for
    nondegenerate algebras.
    """
    if not classify(g).nondegenerate:
        raise AlgebraError("exactness criterion requires a nondegenerate algebra")
    dec = decompose(g, xi)
    nsz = g.k0 + g.l0
    for x in range(nsz):
        if not dec.R.value(x).is_zero():
            return None

    r1keys = []
    for i in range(g.k0):
        for j in range(i + 1, g.k0):
            r1keys.append((i, j))
        for j in range(g.l0):
            r1keys.append((i, g.k0 + j))
    r1keys.sort()

    keys2 = basis_keys(g.dim, 2)
    rows = []
    rhs = []
    for a in range(nsz, g.dim):
        byrow = {}
        for cpos, ck in enumerate(r1keys):
            img = g.ad_basis_apply(a, Multivector(g.dim, 2, {ck: 1}))
            for wkey, v in img.coords.items():
                byrow.setdefault(wkey, {})[cpos] = v
        target = dec.R.value(a)
        for wpos, wkey in enumerate(keys2):
            row = byrow.get(wkey, {})
            b = target.coeff(wkey)
            if row or b:
                rows.append(dict(row))
                rhs.append(b)
    sol = sparse_solve(rows, len(r1keys), rhs)
    if sol is None:
        return None
    r1 = Multivector(g.dim, 2, {ck: sol[cpos] for cpos, ck in enumerate(r1keys)})
    r = dec.r0 + r1
    if coboundary(g, r) != xi:
        raise RuntimeError("internal: exactness solve produced a wrong bivector")
    return r


def plane_scalars(g, xi):
    """Per-plane scalar families of a cocycle.

    The s-images of a cocycle satisfy c_{pj}^k = lambda_{kj} c_{pj} (and
    the same shape for e, g, h), so a single scalar per (row, plane) slot
    carries the whole family. Recovered from the first generator with a
    nonzero lambda in the plane's row, then verified against the rest;
    inconsistency means the input was not a cocycle.
    """
    views = [CoefficientView(g, xi.value(k - 1)) for k in range(1, g.k0 + 1)]
    out = {"c": {}, "e": {}, "g": {}, "h": {}}
    for j in range(1, g.m + 1):
        kstar = next(k for k in range(1, g.k0 + 1) if g.lam.lam(k, j))
        lam0 = g.lam.lam(kstar, j)
        families = (
            ("c", g.k0, lambda V, p: V.c(p, j)),
            ("e", g.k0, lambda V, p: V.e(p, j)),
            ("g", g.l0, lambda V, p: V.g_(p, j)),
            ("h", g.l0, lambda V, p: V.h(p, j)),
        )
        for name, bound, read in families:
            for p in range(1, bound + 1):
                scalar = read(views[kstar - 1], p) / lam0
                for k in range(1, g.k0 + 1):
                    if read(views[k - 1], p) != g.lam.lam(k, j) * scalar:
                        raise ValueError(
                            f"scalar family {name}[{p},{j}] is inconsistent "
                            "across s-generators (input is not a cocycle)"
                        )
                out[name][(p, j)] = scalar
    return out


@dataclass(frozen=True)
class PlaneCase:
    plane: int
    case: str | None               # "I", "II", or None (no case applies)
    matches: tuple                 # alternative numbers that hold
    ab: tuple | None               # (a, b) for case II alternative 2

    @property
    def ok(self):
        return self.case is None or bool(self.matches)


@dataclass(frozen=True)
class CaseFilterReport:
    planes: tuple

    @property
    def ok(self):
        return all(pc.ok for pc in self.planes)


def case_filter(g, xi):
    """Check each plane of a bialgebra cocycle against the two alternative
    tables of the classification (necessary conditions, not enumeration).

    Case selection per plane j: the first table applies when j > k0 or the
    diagonal n_{jj} family of xi(s)/xi(z) is nonzero; the second when that
    family vanishes, j <= k0, and some c_{pj} coefficient of xi(d_{2j-1})
    is nonzero. A plane matching no case is vacuously fine; an applicable
    case with no matching alternative is reported via ok=False.
    """
    if not classify(g).nondegenerate:
        raise AlgebraError("case filter is stated for nondegenerate algebras")
    res = first_residual_witness(g, xi)
    if res is not None:
        raise NotCocycleError(*res)
    sc = plane_scalars(g, xi)
    sviews = [CoefficientView(g, xi.value(k)) for k in range(g.k0)]
    zviews = [CoefficientView(g, xi.value(g.k0 + k)) for k in range(g.l0)]
    planes = []
    for j in range(1, g.m + 1):
        n_diag = [V.n(j, j) for V in sviews] + [V.n(j, j) for V in zviews]
        Vodd = CoefficientView(g, xi.value(g.d(2 * j - 1)))
        c_odd = [Vodd.c(p, j) for p in range(1, g.k0 + 1)]
        scalars_zero = (
            all(sc["c"][(p, j)] == 0 and sc["e"][(p, j)] == 0
                for p in range(1, g.k0 + 1))
            and all(sc["g"][(p, j)] == 0 and sc["h"][(p, j)] == 0
                    for p in range(1, g.l0 + 1))
        )
        e_odd_zero = all(Vodd.e(p, j) == 0 for p in range(1, g.k0 + 1))

        if j > g.k0 or any(n_diag):
            matches = []
            if e_odd_zero and all(
                Vodd.g_(p, j) == 0 and Vodd.h(p, j) == 0
                for p in range(1, g.l0 + 1)
            ):
                matches.append(1)
            if e_odd_zero and all(
                sc["c"][(p, j)] == 0 and sc["e"][(p, j)] == 0
                for p in range(1, g.k0 + 1)
            ):
                matches.append(2)
            if scalars_zero:
                matches.append(3)
            planes.append(PlaneCase(j, "I", tuple(matches), None))
        elif any(c_odd):
            matches = []
            ab = None
            if scalars_zero:
                matches.append(1)
            if e_odd_zero:
                pstar = next(p for p in range(1, g.k0 + 1) if Vodd.c(p, j))
                denom = Vodd.c(pstar, j)
                a = sc["c"][(pstar, j)] / denom
                b = sc["e"][(pstar, j)] / denom
                good = all(
                    sc["c"][(p, j)] == a * Vodd.c(p, j)
                    and sc["e"][(p, j)] == b * Vodd.c(p, j)
                    for p in range(1, g.k0 + 1)
                ) and all(
                    sc["g"][(p, j)] == -a * Vodd.g_(p, j) + b * Vodd.h(p, j)
                    and sc["h"][(p, j)] == b * Vodd.g_(p, j) + a * Vodd.h(p, j)
                    for p in range(1, g.l0 + 1)
                )
                if good:
                    matches.append(2)
                    ab = (a, b)
            planes.append(PlaneCase(j, "II", tuple(matches), ab))
        else:
            planes.append(PlaneCase(j, None, (), None))
    return CaseFilterReport(planes=tuple(planes))


# ---------------------------------------------------------------------------
# closed-form cross-checks (kept out of the decision path on purpose)

def _alpha(g, r1view, i, k):
    """sum_p lambda_{pk} a~_{ip} with a~ the antisymmetric extension."""
    return sum(
        (g.lam.lam(p, k) * r1view.a(i, p) for p in range(1, g.k0 + 1)),
        Fraction(0),
    )


def _beta(g, r1view, i, k):
    """sum_p lambda_{pk} b_{pi}."""
    return sum(
        (g.lam.lam(p, k) * r1view.b(p, i) for p in range(1, g.k0 + 1)),
        Fraction(0),
    )


def pairing_table_rows(g, r0, r1):
    """All rows of the <w, [r0, r1]> table: (label, closed form, direct).

    r0 carries the z^d and crossed-plane families (g, h, m, n, p read as
    plain bivector coefficients), r1 the a/b families on ^2 s and s ^ z.
    The direct side pairs the basis 3-form against schouten(r0, r1).
    """
    V0 = CoefficientView(g, r0)
    V1 = CoefficientView(g, r1)
    br = schouten(g, r0, r1)
    rows = []

    def emit(label, key, closed):
        rows.append((label, closed, br.coeff(key)))

    for i in range(1, g.k0 + 1):
        for jz in range(1, g.l0 + 1):
            for k in range(1, g.m + 1):
                a = _alpha(g, V1, i, k)
                emit(f"s{i}^z{jz}^d{2*k-1}",
                     (g.s(i), g.z(jz), g.d(2 * k - 1)),
                     -a * V0.h(jz, k))
                emit(f"s{i}^z{jz}^d{2*k}",
                     (g.s(i), g.z(jz), g.d(2 * k)),
                     a * V0.g_(jz, k))
    for i in range(1, g.l0 + 1):
        for jz in range(i + 1, g.l0 + 1):
            for k in range(1, g.m + 1):
                bi = _beta(g, V1, i, k)
                bj = _beta(g, V1, jz, k)
                emit(f"z{i}^z{jz}^d{2*k-1}",
                     (g.z(i), g.z(jz), g.d(2 * k - 1)),
                     bi * V0.h(jz, k) - bj * V0.h(i, k))
                emit(f"z{i}^z{jz}^d{2*k}",
                     (g.z(i), g.z(jz), g.d(2 * k)),
                     -bi * V0.g_(jz, k) + bj * V0.g_(i, k))
    for i in range(1, g.k0 + 1):
        for j in range(1, g.m + 1):
            for k in range(j + 1, g.m + 1):
                aj = _alpha(g, V1, i, j)
                ak = _alpha(g, V1, i, k)
                emit(f"s{i}^d{2*j-1}^d{2*k-1}",
                     (g.s(i), g.d(2 * j - 1), g.d(2 * k - 1)),
                     -ak * V0.n(j, k) + aj * V0.n(k, j))
                emit(f"s{i}^d{2*j-1}^d{2*k}",
                     (g.s(i), g.d(2 * j - 1), g.d(2 * k)),
                     ak * V0.m(j, k) - aj * V0.p(j, k))
                emit(f"s{i}^d{2*j}^d{2*k}",
                     (g.s(i), g.d(2 * j), g.d(2 * k)),
                     aj * V0.n(j, k) - ak * V0.n(k, j))
    for i in range(1, g.l0 + 1):
        for j in range(1, g.m + 1):
            for k in range(j + 1, g.m + 1):
                bj = _beta(g, V1, i, j)
                bk = _beta(g, V1, i, k)
                emit(f"z{i}^d{2*j-1}^d{2*k-1}",
                     (g.z(i), g.d(2 * j - 1), g.d(2 * k - 1)),
                     bk * V0.n(j, k) - bj * V0.n(k, j))
                emit(f"z{i}^d{2*j-1}^d{2*k}",
                     (g.z(i), g.d(2 * j - 1), g.d(2 * k)),
                     -bk * V0.m(j, k) + bj * V0.p(j, k))
                emit(f"z{i}^d{2*j}^d{2*k}",
                     (g.z(i), g.d(2 * j), g.d(2 * k)),
                     -bj * V0.n(j, k) + bk * V0.n(k, j))
    return rows


def jacobiator_form_rows(g, xi):
    """Closed-form Jacobiator comparisons for one decomposed cocycle.

    Returns {family: [(triple, actual, tabulated, swapped), ...]} where
    'tabulated' is the closed form as listed in the reference derivation
    and 'swapped' is the partner-rotated variant

        tabulated(ssd_odd)  = F_odd * u_k*,  swapped = +F_even * u_k*
        tabulated(ssd_even) = F_even * u_k*, swapped = -F_odd * u_k*

    with F_odd, F_even the two quartic coefficient combinations. The zzz
    family has no variant (swapped = tabulated).
    """
    db = dual_bracket(g, xi)
    sc = plane_scalars(g, xi)
    out = {"ssd_odd": [], "ssd_even": [], "zzz": []}

    for i in range(1, g.k0 + 1):
        for j in range(i + 1, g.k0 + 1):
            for k in range(1, g.m + 1):
                Vodd = CoefficientView(g, xi.value(g.d(2 * k - 1)))
                cik, cjk = sc["c"][(i, k)], sc["c"][(j, k)]
                eik, ejk = sc["e"][(i, k)], sc["e"][(j, k)]
                ciko, cjko = Vodd.c(i, k), Vodd.c(j, k)
                eiko, ejko = Vodd.e(i, k), Vodd.e(j, k)
                f_odd = -eik * cjko + ejk * ciko - cik * ejko + cjk * eiko
                f_even = -cjk * ciko + ejk * eiko + cik * cjko - eik * ejko
                u = db.u_star(k)
                trip_odd = (g.s(i), g.s(j), g.d(2 * k - 1))
                trip_even = (g.s(i), g.s(j), g.d(2 * k))
                out["ssd_odd"].append((
                    trip_odd,
                    jacobiator(db, *trip_odd),
                    u.scale(f_odd),
                    u.scale(f_even),
                ))
                out["ssd_even"].append((
                    trip_even,
                    jacobiator(db, *trip_even),
                    u.scale(f_even),
                    u.scale(-f_odd),
                ))

    zviews = [CoefficientView(g, xi.value(g.z(k))) for k in range(1, g.l0 + 1)]
    sviews = [CoefficientView(g, xi.value(g.s(k))) for k in range(1, g.k0 + 1)]
    for i in range(1, g.l0 + 1):
        for j in range(i + 1, g.l0 + 1):
            for k in range(j + 1, g.l0 + 1):
                coords = {}
                for (ci, cj, ck) in ((i, j, k), (j, k, i), (k, i, j)):
                    for p in range(1, g.k0 + 1):
                        v = sum(
                            (sviews[p - 1].f(ci, ell) * zviews[ell - 1].f(cj, ck)
                             for ell in range(1, g.l0 + 1)),
                            Fraction(0),
                        )
                        if v:
                            kk = (g.s(p),)
                            coords[kk] = coords.get(kk, Fraction(0)) + v
                    for p in range(1, g.l0 + 1):
                        v = sum(
                            (zviews[p - 1].f(ci, ell) * zviews[ell - 1].f(cj, ck)
                             for ell in range(1, g.l0 + 1)),
                            Fraction(0),
                        )
                        if v:
                            kk = (g.z(p),)
                            coords[kk] = coords.get(kk, Fraction(0)) + v
                closed = Multivector(g.dim, 1, coords)
                trip = (g.z(i), g.z(j), g.z(k))
                actual = jacobiator(db, *trip)
                out["zzz"].append((trip, actual, closed, closed))

    return out


def m_module_components(g, X):
    """Partition a trivector by the plane-module decomposition.

    Keys: m1 s^(plane area), m2 z^(plane area), m3 all-d, m4 s^(crossed
    planes), m5 z^(crossed planes), m6 s^z^d, m7 s^s^d, m8 z^z^d, other.
    """
    if X.degree != 3:
        raise ValueError("module components are defined for trivectors")
    parts = {name: {} for name in
             ("m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8", "other")}
    nsz = g.k0 + g.l0
    for key, v in X.coords.items():
        kinds = []
        for idx in key:
            if idx < g.k0:
                kinds.append("s")
            elif idx < nsz:
                kinds.append("z")
            else:
                kinds.append("d")
        dplanes = {(idx - nsz) // 2 for idx, kind in zip(key, kinds)
                   if kind == "d"}
        sig = "".join(kinds)
        if sig == "sdd":
            name = "m1" if len(dplanes) == 1 else "m4"
        elif sig == "zdd":
            name = "m2" if len(dplanes) == 1 else "m5"
        elif sig == "ddd":
            name = "m3"
        elif sig == "szd":
            name = "m6"
        elif sig == "ssd":
            name = "m7"
        elif sig == "zzd":
            name = "m8"
        else:
            name = "other"
        parts[name][key] = v
    return {name: Multivector(g.dim, 3, coords)
            for name, coords in parts.items()}
