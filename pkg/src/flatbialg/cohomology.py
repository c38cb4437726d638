"""Degree-one Chevalley-Eilenberg machinery with bivector coefficients.

A cochain assigns a bivector to every basis element; the coboundary of a
bivector r is x -> ad_x r. Cocycles decompose as xi = ad r0 + R where R
sends s- and z-generators into the invariant bivectors and r0 lives in a
fixed complement (s^[g,g] + z^[g,g] + mixed-plane d-wedges). The complement
solve is canonical: one exact linear system whose unknowns are the r0
coordinates (lex order by wedge key) followed by the invariant coefficients
of R on each s/z-generator, solved in reduced echelon form with free
variables pinned to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exteralg import (
    Multivector,
    SubspaceBasis,
    basis_keys,
    sparse_nullspace,
    sparse_solve,
    wedge,
)
from .flatliealg import AnomalousAlgebraError, classify


class NotCocycleError(ValueError):
    """Input cochain fails the cocycle identity; carries the first witness."""

    def __init__(self, pair, residual):
        self.pair = pair
        self.residual = residual
        super().__init__(
            f"not a cocycle: residual on basis pair {pair} is {residual!r}"
        )


class DecompositionError(RuntimeError):
    pass


class Cochain:
    """Map from basis elements to bivectors, extended linearly."""

    __slots__ = ("g", "values")

    def __init__(self, g, values):
        values = tuple(values)
        if len(values) != g.dim:
            raise ValueError("one bivector per basis element required")
        for v in values:
            if v.dim != g.dim or v.degree != 2:
                raise ValueError("cochain values must be bivectors over g")
        self.g = g
        self.values = values

    @classmethod
    def zero(cls, g):
        return cls(g, [Multivector.zero(g.dim, 2)] * g.dim)

    def value(self, idx):
        return self.values[idx]

    def apply(self, x):
        """Value on a degree-1 multivector."""
        out = Multivector.zero(self.g.dim, 2)
        for (i,), c in x.coords.items():
            out = out + self.values[i].scale(c)
        return out

    def view(self, idx):
        return CoefficientView(self.g, self.values[idx])

    def __add__(self, other):
        return Cochain(self.g, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return Cochain(self.g, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c):
        return Cochain(self.g, [v.scale(c) for v in self.values])

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.g is other.g and self.values == other.values

    __hash__ = None

    def to_vec(self):
        """Flat coordinates: index = basis_index * C(n,2) + wedge position."""
        keys2 = basis_keys(self.g.dim, 2)
        out = []
        for v in self.values:
            out.extend(v.to_coords(keys2))
        return out

    @classmethod
    def from_vec(cls, g, vec):
        keys2 = basis_keys(g.dim, 2)
        P = len(keys2)
        if len(vec) != g.dim * P:
            raise ValueError("cochain vector has wrong length")
        vals = [
            Multivector.from_coords(g.dim, 2, vec[b * P:(b + 1) * P], keys2)
            for b in range(g.dim)
        ]
        return cls(g, vals)


class CoefficientView:
    """Named coefficient families of one bivector.

    Families follow the block naming: a on s^s, b on s^z, c on s^d_odd,
    e on s^d_even, f on z^z, g on z^d_odd, h on z^d_even, m on d_odd^d_odd,
    n on d_odd^d_even (all index pairs), p on d_even^d_even. All arguments
    are 1-based. a, f extend antisymmetrically; m, p require i < j; n is a
    full square family with n(i, i) the coefficient on the plane bivector.
    """

    __slots__ = ("g", "mv")

    def __init__(self, g, mv):
        if mv.degree != 2 or mv.dim != g.dim:
            raise ValueError("view requires a bivector over g")
        self.g = g
        self.mv = mv

    def _sd(self, i, a):
        return self.mv.coeff((self.g.s(i), self.g.d(a)))

    def _zd(self, i, a):
        return self.mv.coeff((self.g.z(i), self.g.d(a)))

    def a(self, i, j):
        if i == j:
            return Fraction(0)
        if i > j:
            return -self.a(j, i)
        return self.mv.coeff((self.g.s(i), self.g.s(j)))

    def b(self, i, j):
        return self.mv.coeff((self.g.s(i), self.g.z(j)))

    def c(self, i, j):
        return self._sd(i, 2 * j - 1)

    def e(self, i, j):
        return self._sd(i, 2 * j)

    def f(self, i, j):
        if i == j:
            return Fraction(0)
        if i > j:
            return -self.f(j, i)
        return self.mv.coeff((self.g.z(i), self.g.z(j)))

    def g_(self, i, j):
        return self._zd(i, 2 * j - 1)

    def h(self, i, j):
        return self._zd(i, 2 * j)

    def m(self, i, j):
        if not i < j:
            raise ValueError("m-family needs i < j")
        return self.mv.coeff((self.g.d(2 * i - 1), self.g.d(2 * j - 1)))

    def n(self, i, j):
        di, dj = self.g.d(2 * i - 1), self.g.d(2 * j)
        if di < dj:
            return self.mv.coeff((di, dj))
        return -self.mv.coeff((dj, di))

    def p(self, i, j):
        if not i < j:
            raise ValueError("p-family needs i < j")
        return self.mv.coeff((self.g.d(2 * i), self.g.d(2 * j)))

    def reconstruct(self):
        """Rebuild the bivector from the named families (round-trip check)."""
        g = self.g
        out = Multivector.zero(g.dim, 2)

        def blade(i, j, c):
            return Multivector(g.dim, 2, {tuple(sorted((i, j))): c if i < j else -c})

        for i in range(1, g.k0 + 1):
            for j in range(i + 1, g.k0 + 1):
                v = self.a(i, j)
                if v:
                    out = out + blade(g.s(i), g.s(j), v)
            for j in range(1, g.l0 + 1):
                v = self.b(i, j)
                if v:
                    out = out + blade(g.s(i), g.z(j), v)
            for j in range(1, g.m + 1):
                v = self.c(i, j)
                if v:
                    out = out + blade(g.s(i), g.d(2 * j - 1), v)
                v = self.e(i, j)
                if v:
                    out = out + blade(g.s(i), g.d(2 * j), v)
        for i in range(1, g.l0 + 1):
            for j in range(i + 1, g.l0 + 1):
                v = self.f(i, j)
                if v:
                    out = out + blade(g.z(i), g.z(j), v)
            for j in range(1, g.m + 1):
                v = self.g_(i, j)
                if v:
                    out = out + blade(g.z(i), g.d(2 * j - 1), v)
                v = self.h(i, j)
                if v:
                    out = out + blade(g.z(i), g.d(2 * j), v)
        for i in range(1, g.m + 1):
            for j in range(i + 1, g.m + 1):
                v = self.m(i, j)
                if v:
                    out = out + blade(g.d(2 * i - 1), g.d(2 * j - 1), v)
                v = self.p(i, j)
                if v:
                    out = out + blade(g.d(2 * i), g.d(2 * j), v)
            for j in range(1, g.m + 1):
                v = self.n(i, j)
                if v:
                    out = out + blade(g.d(2 * i - 1), g.d(2 * j), v)
        return out


@dataclass(frozen=True)
class Decomposition:
    r0: Multivector
    R: "Cochain"
    phi: tuple


@dataclass(frozen=True)
class TableReport:
    findings: tuple
    anomalies: tuple
    checked: int

    @property
    def ok(self):
        return not self.findings and not self.anomalies


def cocycle_residual(g, xi):
    """Residuals xi([x,y]) - ad_x xi(y) + ad_y xi(x) on all basis pairs."""
    out = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            r = xi.apply(g.bracket(
                Multivector.basis_vector(g.dim, i),
                Multivector.basis_vector(g.dim, j),
            ))
            r = r - g.ad_basis_apply(i, xi.value(j)) + g.ad_basis_apply(j, xi.value(i))
            out[(i, j)] = r
    return out


def first_residual_witness(g, xi):
    res = cocycle_residual(g, xi)
    for pair in sorted(res):
        if not res[pair].is_zero():
            return pair, res[pair]
    return None


def _ad2_rowmajor(g, x):
    """Row-major sparse matrix of ad_{e_x} on bivectors: {row: {col: v}}."""
    key = ("ad2", x)
    hit = g._cache.get(key)
    if hit is not None:
        return hit
    keys2 = basis_keys(g.dim, 2)
    pos = {k: i for i, k in enumerate(keys2)}
    rows = {}
    for kpos, k in enumerate(keys2):
        img = g.ad_basis_apply(x, Multivector(g.dim, 2, {k: 1}))
        for wkey, v in img.coords.items():
            rows.setdefault(pos[wkey], {})[kpos] = v
    g._cache[key] = rows
    return rows


def cocycle_space(g):
    """Kernel of the cocycle operator, as a SubspaceBasis.

    Assembled twice on purpose: once from structure constants and sparse
    adjoint blocks, once index-naively (basis cochain -> residual column,
    dense nullspace). The two kernels must agree exactly.
    """
    hit = g._cache.get("cocycle_space")
    if hit is not None:
        return hit

    n = g.dim
    keys2 = basis_keys(n, 2)
    P = len(keys2)

    # path 1: structured sparse rows
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            br = g.bracket_basis(i, j)
            adi = _ad2_rowmajor(g, i)
            adj = _ad2_rowmajor(g, j)
            for wpos in range(P):
                row = {}
                for b, cb in br.items():
                    row[b * P + wpos] = row.get(b * P + wpos, Fraction(0)) + cb
                for kpos, v in adi.get(wpos, {}).items():
                    col = j * P + kpos
                    row[col] = row.get(col, Fraction(0)) - v
                for kpos, v in adj.get(wpos, {}).items():
                    col = i * P + kpos
                    row[col] = row.get(col, Fraction(0)) + v
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
    structured = sparse_nullspace(rows, n * P)

    # path 2: index-naive assembly through the generic residual, one basis
    # cochain at a time (kernel extraction shares the echelon engine)
    byrow = {}
    zero2 = Multivector.zero(n, 2)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairpos = {pair: t for t, pair in enumerate(pairs)}
    pos2 = {k: t for t, k in enumerate(keys2)}
    for b in range(n):
        for k in keys2:
            vals = [zero2] * n
            vals[b] = Multivector(n, 2, {k: 1})
            col = b * P + pos2[k]
            res = cocycle_residual(g, Cochain(g, vals))
            for pair, mv in res.items():
                for wkey, v in mv.coords.items():
                    r = pairpos[pair] * P + pos2[wkey]
                    byrow.setdefault(r, {})[col] = v
    naive = sparse_nullspace(list(byrow.values()), n * P)

    if structured != naive:
        raise DecompositionError(
            "cocycle operator assemblies disagree "
            f"(dims {structured.dim} vs {naive.dim})"
        )
    g._cache["cocycle_space"] = structured
    return structured


def coboundary(g, r):
    """The cochain x -> ad_x r."""
    if r.degree != 2 or r.dim != g.dim:
        raise ValueError("coboundary needs a bivector over g")
    return Cochain(g, [g.ad_basis_apply(x, r) for x in range(g.dim)])


def coboundary_space(g):
    hit = g._cache.get("coboundary_space")
    if hit is not None:
        return hit
    vecs = [
        coboundary(g, Multivector(g.dim, 2, {k: 1})).to_vec()
        for k in basis_keys(g.dim, 2)
    ]
    out = SubspaceBasis(g.dim * len(basis_keys(g.dim, 2)), vecs)
    g._cache["coboundary_space"] = out
    return out


def invariants(g, p):
    """Joint kernel of all adjoints on degree-p multivectors."""
    if p not in (2, 3):
        raise ValueError("invariants are computed for degrees 2 and 3")
    key = ("inv", p)
    hit = g._cache.get(key)
    if hit is not None:
        return hit
    keysp = basis_keys(g.dim, p)
    pos = {k: i for i, k in enumerate(keysp)}
    rows = []
    for x in range(g.dim):
        byrow = {}
        for kpos, k in enumerate(keysp):
            img = g.ad_basis_apply(x, Multivector(g.dim, p, {k: 1}))
            for wkey, v in img.coords.items():
                byrow.setdefault(pos[wkey], {})[kpos] = v
        rows.extend(byrow.values())
    out = sparse_nullspace(rows, len(keysp))
    g._cache[key] = out
    return out


def lemma_inv_closed_form(g):
    """Invariant bivectors from the structural description: all z-wedges,
    one symplectic generator per plane, and for each degenerate pair (i,j)
    with L_j = eps L_i the two crossed-plane directions

        d_{2i-1}^d_{2j-1} + eps d_{2i}^d_{2j}
        d_{2i-1}^d_{2j}   - eps d_{2i}^d_{2j-1}

    Refuses algebras whose degeneracy criteria disagree.
    """
    report = classify(g)
    if report.anomaly is not None:
        raise AnomalousAlgebraError(report.anomaly)
    keys2 = basis_keys(g.dim, 2)
    vecs = []

    def vec_of(coords):
        return Multivector(g.dim, 2, coords).to_coords(keys2)

    for i in range(1, g.l0 + 1):
        for j in range(i + 1, g.l0 + 1):
            vecs.append(vec_of({(g.z(i), g.z(j)): 1}))
    for i in range(1, g.m + 1):
        vecs.append(vec_of({(g.d(2 * i - 1), g.d(2 * i)): 1}))
    for (i, j, eps) in report.pairs:
        vecs.append(vec_of({
            (g.d(2 * i - 1), g.d(2 * j - 1)): 1,
            (g.d(2 * i), g.d(2 * j)): eps,
        }))
        vecs.append(vec_of({
            (g.d(2 * i - 1), g.d(2 * j)): 1,
            (g.d(2 * i), g.d(2 * j - 1)): -eps,
        }))
    return SubspaceBasis(len(keys2), vecs)


def complement_keys(g):
    """Wedge keys spanning the canonical complement used for r0:
    s^d, z^d, and crossed-plane d^d wedges, in lex order."""
    off = g.k0 + g.l0
    keys = []
    for i in range(g.k0 + g.l0):
        for a in range(off, g.dim):
            keys.append((i, a))
    for i in range(1, g.m + 1):
        for j in range(i + 1, g.m + 1):
            for a in (g.d(2 * i - 1), g.d(2 * i)):
                for b in (g.d(2 * j - 1), g.d(2 * j)):
                    keys.append((a, b))
    return sorted(keys)


def decompose(g, xi):
    """Split a cocycle as xi = ad r0 + R.

    r0 lives in the canonical complement, R sends every s- and z-generator
    into the invariant bivectors, and on plane generators the remainder
    satisfies xi(d_odd) = R(d_odd) + phi ^ d_even and xi(d_even) = R(d_even)
    + d_odd ^ phi with phi read off r0. Non-cocycles are rejected with the
    first nonzero residual.
    """
    witness = first_residual_witness(g, xi)
    if witness is not None:
        raise NotCocycleError(*witness)

    n = g.dim
    keys2 = basis_keys(n, 2)
    P = len(keys2)
    comp = complement_keys(g)
    ncomp = len(comp)
    inv = invariants(g, 2)
    nsz = g.k0 + g.l0
    nvars = ncomp + nsz * inv.dim

    rows = []
    rhs = []
    for x in range(nsz):
        # images of the complement blades under ad_x, scattered row-wise
        byrow = {}
        for cpos, ck in enumerate(comp):
            img = g.ad_basis_apply(x, Multivector(n, 2, {ck: 1}))
            for wkey, v in img.coords.items():
                byrow.setdefault(wkey, {})[cpos] = v
        target = xi.value(x)
        for wpos, wkey in enumerate(keys2):
            row = dict(byrow.get(wkey, {}))
            for t in range(inv.dim):
                v = inv.vectors[t][wpos]
                if v:
                    row[ncomp + x * inv.dim + t] = v
            b = target.coeff(wkey)
            if row or b:
                rows.append(row)
                rhs.append(b)

    sol = sparse_solve(rows, nvars, rhs)
    if sol is None:
        raise DecompositionError("decomposition system is inconsistent")

    r0 = Multivector(n, 2, {ck: sol[cpos] for cpos, ck in enumerate(comp)})
    R = xi - coboundary(g, r0)

    phi = []
    for ell in range(1, g.m + 1):
        coords = {}
        for j in range(1, g.m + 1):
            codd = sum(
                (g.lam.lam(i, ell) * r0.coeff((g.s(i), g.d(2 * j - 1)))
                 for i in range(1, g.k0 + 1)),
                Fraction(0),
            )
            ceven = sum(
                (g.lam.lam(i, ell) * r0.coeff((g.s(i), g.d(2 * j)))
                 for i in range(1, g.k0 + 1)),
                Fraction(0),
            )
            if codd:
                coords[(g.d(2 * j - 1),)] = codd
            if ceven:
                coords[(g.d(2 * j),)] = ceven
        phi.append(Multivector(n, 1, coords))

    # post-conditions; cheap, and a failure here means a real bug
    for x in range(nsz):
        if not inv.member(R.value(x).to_coords(keys2)):
            raise DecompositionError("remainder is not invariant on generators")
    for ell in range(1, g.m + 1):
        dodd = Multivector.basis_vector(n, g.d(2 * ell - 1))
        deven = Multivector.basis_vector(n, g.d(2 * ell))
        lhs_odd = xi.value(g.d(2 * ell - 1))
        lhs_even = xi.value(g.d(2 * ell))
        if lhs_odd != R.value(g.d(2 * ell - 1)) + wedge(phi[ell - 1], deven):
            raise DecompositionError(f"odd plane identity fails on plane {ell}")
        if lhs_even != R.value(g.d(2 * ell)) + wedge(dodd, phi[ell - 1]):
            raise DecompositionError(f"even plane identity fails on plane {ell}")

    return Decomposition(r0=r0, R=R, phi=tuple(phi))


def check_tables(g, R):
    """Structural constraints on the plane-generator remainder.

    The diagonal n-family of every R(d) must vanish, and for every plane
    pair (i, j) the m/n/p families obey linear relations dictated by which
    integer relations the characteristic rows satisfy. Findings list every
    violated identity; anomalies list index combinations where mutually
    exclusive row relations hold at once.
    """
    findings = []
    anomalies = []
    checked = 0

    views = {}
    for a in range(1, 2 * g.m + 1):
        views[a] = CoefficientView(g, R.value(g.d(a)))

    def expect(tag, actual, expected):
        nonlocal checked
        checked += 1
        if actual != expected:
            findings.append({
                "identity": tag,
                "actual": str(actual),
                "expected": str(expected),
            })

    for ell in range(1, g.m + 1):
        for i in range(1, g.m + 1):
            expect(f"n_{i}{i}^(d{2*ell-1}) = 0", views[2 * ell - 1].n(i, i), Fraction(0))
            expect(f"n_{i}{i}^(d{2*ell}) = 0", views[2 * ell].n(i, i), Fraction(0))

    def rows_eq(u, v):
        return all(a == b for a, b in zip(u, v))

    def detect(i, j, ell):
        """eps for L_ell = L_j + eps L_i, and for L_ell = -L_j + eps L_i."""
        Li, Lj, Le = g.lam.row(i), g.lam.row(j), g.lam.row(ell)
        plus = [e for e in (1, -1)
                if rows_eq(Le, [b + e * a for a, b in zip(Li, Lj)])]
        minus = [e for e in (1, -1)
                 if rows_eq(Le, [-b + e * a for a, b in zip(Li, Lj)])]
        return plus, minus

    # crossed-plane relations, third plane distinct
    for i in range(1, g.m + 1):
        for j in range(i + 1, g.m + 1):
            for ell in range(1, g.m + 1):
                if ell in (i, j):
                    continue
                plus, minus = detect(i, j, ell)
                V1, V2 = views[2 * ell - 1], views[2 * ell]
                loc = f"pair ({i},{j}), plane {ell}"
                if plus and minus:
                    anomalies.append(
                        f"{loc}: both sum relations hold (eps {plus} and {minus})"
                    )
                    continue
                if not plus and not minus:
                    for tag, val in (
                        (f"m_{i}{j}", V1.m(i, j)), (f"m'_{i}{j}", V2.m(i, j)),
                        (f"p_{i}{j}", V1.p(i, j)), (f"p'_{i}{j}", V2.p(i, j)),
                        (f"n_{i}{j}", V1.n(i, j)), (f"n'_{i}{j}", V2.n(i, j)),
                        (f"n_{j}{i}", V1.n(j, i)), (f"n'_{j}{i}", V2.n(j, i)),
                    ):
                        expect(f"{loc}: {tag} = 0", val, Fraction(0))
                    continue
                if plus:
                    eps = plus[0]
                    expect(f"{loc}: p = -eps m (odd)", V1.p(i, j), -eps * V1.m(i, j))
                    expect(f"{loc}: p_odd = -eps n_even", V1.p(i, j), -eps * V2.n(i, j))
                    expect(f"{loc}: p = -eps m (even)", V2.p(i, j), -eps * V2.m(i, j))
                    expect(f"{loc}: p_even = eps n_odd", V2.p(i, j), eps * V1.n(i, j))
                    expect(f"{loc}: n_ji = -eps n_ij (odd)", V1.n(j, i), -eps * V1.n(i, j))
                    expect(f"{loc}: n_ji = -eps n_ij (even)", V2.n(j, i), -eps * V2.n(i, j))
                else:
                    eps = minus[0]
                    expect(f"{loc}: p = eps m (odd)", V1.p(i, j), eps * V1.m(i, j))
                    expect(f"{loc}: p_odd = eps n_even", V1.p(i, j), eps * V2.n(i, j))
                    expect(f"{loc}: p = eps m (even)", V2.p(i, j), eps * V2.m(i, j))
                    expect(f"{loc}: p_even = -eps n_odd", V2.p(i, j), -eps * V1.n(i, j))
                    expect(f"{loc}: n_ji = eps n_ij (odd)", V1.n(j, i), eps * V1.n(i, j))
                    expect(f"{loc}: n_ji = eps n_ij (even)", V2.n(j, i), eps * V2.n(i, j))

    # crossed-plane relations inside the pair's own planes
    for i in range(1, g.m + 1):
        for j in range(i + 1, g.m + 1):
            Li, Lj = g.lam.row(i), g.lam.row(j)
            caseA = [e for e in (1, -1)
                     if rows_eq(Li, [2 * e * b for b in Lj])]
            caseB = [e for e in (1, -1)
                     if rows_eq(Lj, [2 * e * a for a in Li])]
            loc = f"pair ({i},{j})"
            if caseA and caseB:
                anomalies.append(f"{loc}: both double-row relations hold")
                continue

            def zero_block(t, label):
                Vo, Ve = views[2 * t - 1], views[2 * t]
                for tag, val in (
                    ("m (odd)", Vo.m(i, j)), ("m (even)", Ve.m(i, j)),
                    ("p (odd)", Vo.p(i, j)), ("p (even)", Ve.p(i, j)),
                    ("n_ij (odd)", Vo.n(i, j)), ("n_ij (even)", Ve.n(i, j)),
                    ("n_ji (odd)", Vo.n(j, i)), ("n_ji (even)", Ve.n(j, i)),
                ):
                    expect(f"{loc}: {label}-block {tag} = 0", val, Fraction(0))

            if not caseA and not caseB:
                zero_block(i, "i")
                zero_block(j, "j")
            elif caseA:
                eps = caseA[0]
                zero_block(i, "i")
                V1, V2 = views[2 * j - 1], views[2 * j]
                expect(f"{loc}: j-block p_odd = -eps n_even", V1.p(i, j), -eps * V2.n(i, j))
                expect(f"{loc}: j-block m_odd = -n_even", V1.m(i, j), -V2.n(i, j))
                expect(f"{loc}: j-block p_even = eps n_odd", V2.p(i, j), eps * V1.n(i, j))
                expect(f"{loc}: j-block m_even = n_odd", V2.m(i, j), V1.n(i, j))
                expect(f"{loc}: j-block n_ji_odd = eps n_ij_odd", V1.n(j, i), eps * V1.n(i, j))
                expect(f"{loc}: j-block n_ji_even = eps n_ij_even", V2.n(j, i), eps * V2.n(i, j))
            else:
                eps = caseB[0]
                zero_block(j, "j")
                W1, W2 = views[2 * i - 1], views[2 * i]
                expect(f"{loc}: i-block p_odd = n_even", W1.p(i, j), W2.n(i, j))
                expect(f"{loc}: i-block m_odd = eps n_even", W1.m(i, j), eps * W2.n(i, j))
                expect(f"{loc}: i-block p_even = -n_odd", W2.p(i, j), -W1.n(i, j))
                expect(f"{loc}: i-block m_even = -eps n_odd", W2.m(i, j), -eps * W1.n(i, j))
                expect(f"{loc}: i-block n_ji_odd = eps n_ij_odd", W1.n(j, i), eps * W1.n(i, j))
                expect(f"{loc}: i-block n_ji_even = eps n_ij_even", W2.n(j, i), eps * W2.n(i, j))

    return TableReport(findings=tuple(findings), anomalies=tuple(anomalies),
                       checked=checked)
