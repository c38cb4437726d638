"""Flat Lie algebras in block normal form.

The basis is ordered s_1..s_k0, z_1..z_l0, d_1..d_{2m}. The only nonzero
basis brackets are

    [s_i, d_{2j-1}] =  lam(i, j) d_{2j}
    [s_i, d_{2j}]   = -lam(i, j) d_{2j-1}

so each d-plane P_j = span{d_{2j-1}, d_{2j}} carries a family of infinitesimal
rotations with speeds given by column j reading of the characteristic rows.
This normal form is unimodular, the implicit metric making the basis
orthonormal is flat, and [g, g] is spanned by the d's. The characteristic
matrix has one row per plane and one column per s-generator; it must have
no zero row (zero rows would put the plane into the center) and full column
rank (the s-part acts faithfully).

No automatic basis reordering is performed anywhere: inputs are taken in the
normal form above or rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exteralg import Matrix, Multivector, basis_keys, sort_sign, sparse_solve


class AlgebraError(ValueError):
    """Invalid normal-form data."""


class InvalidCenterError(AlgebraError):
    """A characteristic row is zero, so its plane would be central."""


class NonInjectiveError(AlgebraError):
    """The characteristic matrix has column rank below k0."""


class DimensionError(AlgebraError):
    """More s-generators than planes (k0 > m), rank k0 is impossible."""


class AnomalousAlgebraError(AlgebraError):
    """The two degeneracy criteria disagree on this algebra."""


@dataclass(frozen=True)
class CharacteristicMatrix:
    """m x k0 matrix of rotation speeds; row j belongs to plane j."""

    rows: tuple

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def m(self):
        return len(self.rows)

    @property
    def k0(self):
        return len(self.rows[0]) if self.rows else 0

    def lam(self, i, j):
        """lam(i, j): speed of s_i on plane j, both 1-based."""
        return self.rows[j - 1][i - 1]

    def row(self, j):
        """Row of plane j (1-based)."""
        return self.rows[j - 1]


@dataclass(frozen=True)
class BasisIndex:
    """Structured basis position: kind 's' | 'z' | 'd' plus 1-based ordinal."""

    kind: str
    ordinal: int

    @property
    def plane(self):
        if self.kind != "d":
            raise ValueError("plane is only defined for d-indices")
        return (self.ordinal + 1) // 2

    @property
    def parity(self):
        """0 for d_{2j-1}, 1 for d_{2j}."""
        if self.kind != "d":
            raise ValueError("parity is only defined for d-indices")
        return (self.ordinal + 1) % 2

    def flat(self, g):
        if self.kind == "s":
            if not 1 <= self.ordinal <= g.k0:
                raise ValueError(f"s{self.ordinal} out of range")
            return self.ordinal - 1
        if self.kind == "z":
            if not 1 <= self.ordinal <= g.l0:
                raise ValueError(f"z{self.ordinal} out of range")
            return g.k0 + self.ordinal - 1
        if self.kind == "d":
            if not 1 <= self.ordinal <= 2 * g.m:
                raise ValueError(f"d{self.ordinal} out of range")
            return g.k0 + g.l0 + self.ordinal - 1
        raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def from_flat(cls, g, idx):
        if not 0 <= idx < g.dim:
            raise ValueError(f"flat index {idx} out of range")
        if idx < g.k0:
            return cls("s", idx + 1)
        if idx < g.k0 + g.l0:
            return cls("z", idx - g.k0 + 1)
        return cls("d", idx - g.k0 - g.l0 + 1)


@dataclass(frozen=True)
class DegeneracyReport:
    nondegenerate: bool
    pairs: tuple          # (i, j, eps) with 1-based plane indices, i < j
    anomaly: str | None = None


class FlatLieAlgebra:
    """Immutable container for one normal-form algebra, with caches."""

    def __init__(self, k0, l0, m, lam):
        self.k0 = k0
        self.l0 = l0
        self.m = m
        self.lam = lam
        self.dim = k0 + l0 + 2 * m
        self._bracket_table = self._build_table()
        self._cache = {}

    # -- indexing ----------------------------------------------------------

    def s(self, i):
        return BasisIndex("s", i).flat(self)

    def z(self, i):
        return BasisIndex("z", i).flat(self)

    def d(self, a):
        return BasisIndex("d", a).flat(self)

    def index(self, idx):
        return BasisIndex.from_flat(self, idx)

    def basis_name(self, idx):
        b = self.index(idx)
        return f"{b.kind}{b.ordinal}"

    def basis_names(self):
        return [self.basis_name(i) for i in range(self.dim)]

    # -- brackets ----------------------------------------------------------

    def _build_table(self):
        table = {}
        for i in range(1, self.k0 + 1):
            for j in range(1, self.m + 1):
                lam = self.lam.lam(i, j)
                if not lam:
                    continue
                si = i - 1
                odd = self.k0 + self.l0 + 2 * (j - 1)
                even = odd + 1
                table[(si, odd)] = {even: lam}
                table[(si, even)] = {odd: -lam}
        return table

    def bracket_basis(self, x, y):
        """[e_x, e_y] for flat indices, as a sparse {index: Fraction} dict."""
        if x == y:
            return {}
        if x < y:
            return self._bracket_table.get((x, y), {})
        return {k: -v for k, v in self._bracket_table.get((y, x), {}).items()}

    def bracket(self, x, y):
        """Bilinear extension of the basis bracket to degree-1 multivectors."""
        out = {}
        for (kx,), cx in x.coords.items():
            for (ky,), cy in y.coords.items():
                for b, cb in self.bracket_basis(kx, ky).items():
                    s = out.get((b,), 0) + cx * cy * cb
                    if s:
                        out[(b,)] = s
                    else:
                        out.pop((b,), None)
        res = Multivector.zero(self.dim, 1)
        res.coords = out
        return res

    def ad_basis_apply(self, x, mv):
        """ad_{e_x} acting on a degree-p multivector as a derivation."""
        out = {}
        for key, c in mv.coords.items():
            for pos, idx in enumerate(key):
                for b, cb in self.bracket_basis(x, idx).items():
                    newkey, sign = sort_sign(key[:pos] + (b,) + key[pos + 1:])
                    if sign == 0:
                        continue
                    s = out.get(newkey, 0) + sign * c * cb
                    if s:
                        out[newkey] = s
                    else:
                        out.pop(newkey, None)
        res = Multivector.zero(self.dim, mv.degree)
        res.coords = out
        return res

    def ad_apply(self, x, mv):
        """ad_x for a degree-1 multivector x, extended as a derivation."""
        res = Multivector.zero(self.dim, mv.degree)
        for (i,), c in x.coords.items():
            res = res + self.ad_basis_apply(i, mv).scale(c)
        return res


def build_algebra(k0, l0, m, rows):
    """Validate normal-form data and construct the algebra.

    rows is the m x k0 characteristic matrix (any Fraction-convertible
    entries). Raises InvalidCenterError on a zero row, DimensionError when
    k0 > m, NonInjectiveError when the column rank is below k0.
    """
    if m < 1:
        raise AlgebraError("at least one plane is required (m >= 1)")
    if k0 < 0 or l0 < 0:
        raise AlgebraError("negative block sizes")
    lam = CharacteristicMatrix.from_rows(rows)
    if lam.m != m:
        raise AlgebraError(f"expected {m} characteristic rows, got {lam.m}")
    for j in range(1, m + 1):
        row = lam.row(j)
        if len(row) != k0:
            raise AlgebraError(f"characteristic row {j} has length {len(row)}, expected {k0}")
        if not any(row):
            raise InvalidCenterError(
                f"characteristic row {j} is zero: plane {j} would be central "
                "and the center would intersect the derived ideal"
            )
    if k0 > m:
        raise DimensionError(f"k0={k0} exceeds m={m}, full column rank is impossible")
    if k0 > 0:
        rank = Matrix(list(lam.rows)).rank()
        if rank < k0:
            raise NonInjectiveError(
                f"characteristic matrix has rank {rank} < k0={k0}"
            )
    g = FlatLieAlgebra(k0, l0, m, lam)
    defect = jacobi_defect(g)
    if defect is not None:
        raise AlgebraError(f"internal: Jacobi identity fails on {defect}")
    if unimodular_defect(g) is not None:
        raise AlgebraError("internal: algebra is not unimodular")
    return g


def bracket(g, x, y):
    return g.bracket(x, y)


def adjoint(g, x, p=1):
    """Matrix of ad_x on degree-p multivectors over the canonical key order.

    x may be a degree-1 Multivector or a flat basis index.
    """
    if p not in (1, 2, 3):
        raise ValueError("adjoint degree must be 1, 2 or 3")
    keys = basis_keys(g.dim, p)
    pos = {k: i for i, k in enumerate(keys)}
    cols = []
    for k in keys:
        blade = Multivector(g.dim, p, {k: 1})
        img = g.ad_apply(x, blade) if isinstance(x, Multivector) else g.ad_basis_apply(x, blade)
        col = [Fraction(0)] * len(keys)
        for kk, v in img.coords.items():
            col[pos[kk]] = v
        cols.append(col)
    return Matrix.from_cols(cols, nrows=len(keys))


def levi_civita(g, x, y):
    """Covariant derivative of the metric connection on basis coordinates.

    Defined through 2<nabla_x y, w> = <[x,y],w> + <[w,x],y> + <[w,y],x>
    over the orthonormal basis.
    """
    xy = g.bracket(x, y)
    out = {}
    for w in range(g.dim):
        ew = Multivector.basis_vector(g.dim, w)
        val = xy.coeff((w,))
        wx = g.bracket(ew, x)
        wy = g.bracket(ew, y)
        val += sum((c * y.coeff(k) for k, c in wx.coords.items()), Fraction(0))
        val += sum((c * x.coeff(k) for k, c in wy.coords.items()), Fraction(0))
        val = val / 2
        if val:
            out[(w,)] = val
    res = Multivector.zero(g.dim, 1)
    res.coords = out
    return res


def curvature(g, x, y, z):
    """R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z."""
    a = levi_civita(g, x, levi_civita(g, y, z))
    b = levi_civita(g, y, levi_civita(g, x, z))
    c = levi_civita(g, g.bracket(x, y), z)
    return a - b - c


def jacobi_defect(g):
    """First basis triple violating Jacobi, or None."""
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(j + 1, g.dim):
                ei = Multivector.basis_vector(g.dim, i)
                ej = Multivector.basis_vector(g.dim, j)
                ek = Multivector.basis_vector(g.dim, k)
                total = (
                    g.bracket(g.bracket(ei, ej), ek)
                    + g.bracket(g.bracket(ej, ek), ei)
                    + g.bracket(g.bracket(ek, ei), ej)
                )
                if not total.is_zero():
                    return (i, j, k)
    return None


def unimodular_defect(g):
    """First basis index whose adjoint has nonzero trace, or None."""
    for x in range(g.dim):
        tr = Fraction(0)
        for y in range(g.dim):
            tr += g.bracket_basis(x, y).get(y, Fraction(0))
        if tr:
            return x
    return None


def classify(g):
    """Degeneracy report from the two independent criteria.

    The squared criterion compares componentwise squares of characteristic
    rows; the row criterion looks for L_j = eps L_i. When they disagree the
    report carries an anomaly note and no verdict is fabricated.
    """
    sq_pairs = set()
    row_pairs = []
    for i in range(1, g.m + 1):
        for j in range(i + 1, g.m + 1):
            ri, rj = g.lam.row(i), g.lam.row(j)
            if all(a * a == b * b for a, b in zip(ri, rj)):
                sq_pairs.add((i, j))
            for eps in (1, -1):
                if all(b == eps * a for a, b in zip(ri, rj)):
                    row_pairs.append((i, j, eps))
    row_set = {(i, j) for i, j, _ in row_pairs}
    anomaly = None
    if sq_pairs != row_set:
        sq_only = sorted(sq_pairs - row_set)
        row_only = sorted(row_set - sq_pairs)
        anomaly = (
            "degeneracy criteria disagree: squared criterion flags "
            f"{sq_only}, row criterion flags {row_only}"
        )
    return DegeneracyReport(
        nondegenerate=not sq_pairs and not row_pairs and anomaly is None,
        pairs=tuple(sorted(row_pairs)),
        anomaly=anomaly,
    )


def scaling_derivation_is_outer(g):
    """Check that D = 0 on s,z and identity on the d-block is a non-inner
    derivation. Returns True when D is a derivation and no x solves ad_x = D.
    """
    n = g.dim
    dstart = g.k0 + g.l0

    def apply_D(idx):
        return {idx: Fraction(1)} if idx >= dstart else {}

    # derivation property on basis pairs
    for i in range(n):
        for j in range(i + 1, n):
            br = g.bracket_basis(i, j)
            lhs = {}
            for b, c in br.items():
                for k, v in apply_D(b).items():
                    lhs[k] = lhs.get(k, 0) + c * v
            rhs = {}
            for k, v in apply_D(i).items():
                for b, c in g.bracket_basis(k, j).items():
                    rhs[b] = rhs.get(b, 0) + v * c
            for k, v in apply_D(j).items():
                for b, c in g.bracket_basis(i, k).items():
                    rhs[b] = rhs.get(b, 0) + v * c
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return False

    # innerness: solve ad_x = D entry by entry
    rows = []
    rhs = []
    for a in range(n):       # column of the endomorphism
        for b in range(n):   # row
            row = {}
            for x in range(n):
                c = g.bracket_basis(x, a).get(b)
                if c:
                    row[x] = c
            rows.append(row)
            rhs.append(Fraction(1) if (a == b and a >= dstart) else Fraction(0))
    return sparse_solve(rows, n, rhs) is None
