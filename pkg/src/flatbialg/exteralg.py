"""Exact exterior algebra over the rationals.

Everything downstream manipulates sparse multivectors of degree at most 4
over an n-dimensional space with a fixed ordered basis, identified with
forms through the implicit orthonormal metric (so <e_I*, e_I> = 1 on
canonical blades). Coefficients are fractions.Fraction throughout; there is
no float and no tolerance anywhere.

Linear algebra goes through one fraction-free elimination routine working on
sparse {column: value} rows: rows are scaled to integers, elimination
cross-multiplies and strips the gcd content after every row combination, and
pivots are divided out only at the very end. The output is the reduced row
echelon form, which is unique, so results do not depend on pivot choices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

MAX_DEGREE = 4


def sort_sign(indices):
    """Sort a tuple of indices, tracking the permutation sign.

    Returns (sorted_tuple, sign). A repeated index gives (None, 0), which
    is what a wedge of dependent vectors should collapse to.
    """
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return None, 0
    return tuple(idx), sign


def basis_keys(dim, degree):
    """All strictly increasing index tuples of one degree, in lex order."""
    return list(combinations(range(dim), degree))


class Multivector:
    """Sparse multivector of fixed degree.

    coords maps strictly increasing index tuples to nonzero Fractions.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("dim", "degree", "coords")

    def __init__(self, dim, degree, coords=None):
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree {degree} outside supported range 0..{MAX_DEGREE}")
        if dim < 0:
            raise ValueError("negative dimension")
        clean = {}
        if coords:
            for key, val in coords.items():
                key = tuple(key)
                if len(key) != degree:
                    raise ValueError(f"key {key} does not have degree {degree}")
                for a, b in zip(key, key[1:]):
                    if a >= b:
                        raise ValueError(f"key {key} is not strictly increasing")
                if key and (key[0] < 0 or key[-1] >= dim):
                    raise ValueError(f"key {key} out of range for dimension {dim}")
                val = Fraction(val)
                if val:
                    clean[key] = val
        self.dim = dim
        self.degree = degree
        self.coords = clean

    @classmethod
    def zero(cls, dim, degree):
        return cls(dim, degree, None)

    @classmethod
    def blade(cls, dim, indices, coeff=1):
        """e_{i1} ^ ... ^ e_{ik} times coeff, indices in any order."""
        key, sign = sort_sign(tuple(indices))
        if sign == 0:
            return cls(dim, len(indices), None)
        return cls(dim, len(indices), {key: Fraction(coeff) * sign})

    @classmethod
    def basis_vector(cls, dim, i):
        return cls(dim, 1, {(i,): Fraction(1)})

    def coeff(self, key):
        return self.coords.get(tuple(key), Fraction(0))

    def is_zero(self):
        return not self.coords

    def terms(self):
        return sorted(self.coords.items())

    def _check_compatible(self, other):
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("multivectors of different shape")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coords)
        for k, v in other.coords.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = Multivector(self.dim, self.degree)
        res.coords = out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        res = Multivector(self.dim, self.degree)
        res.coords = {k: -v for k, v in self.coords.items()}
        return res

    def scale(self, c):
        c = Fraction(c)
        res = Multivector(self.dim, self.degree)
        if c:
            res.coords = {k: c * v for k, v in self.coords.items()}
        return res

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return (self.dim, self.degree, self.coords) == (other.dim, other.degree, other.coords)

    __hash__ = None

    def to_coords(self, keys=None):
        """Coordinate list over the canonical key order (or a given one)."""
        if keys is None:
            keys = basis_keys(self.dim, self.degree)
        return [self.coords.get(k, Fraction(0)) for k in keys]

    @classmethod
    def from_coords(cls, dim, degree, vec, keys=None):
        if keys is None:
            keys = basis_keys(dim, degree)
        if len(vec) != len(keys):
            raise ValueError("coordinate vector has wrong length")
        return cls(dim, degree, {k: v for k, v in zip(keys, vec)})

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.terms())
        return f"Multivector({self.dim}, {self.degree}, {{{body}}})"


def wedge(u, v):
    """Exterior product. Degrees above 4 are out of scope and rejected."""
    if u.dim != v.dim:
        raise ValueError("wedge over different spaces")
    degree = u.degree + v.degree
    if degree > MAX_DEGREE:
        raise ValueError(f"wedge degree {degree} exceeds {MAX_DEGREE}")
    out = {}
    for ku, cu in u.coords.items():
        for kv, cv in v.coords.items():
            key, sign = sort_sign(ku + kv)
            if sign == 0:
                continue
            s = out.get(key, 0) + sign * cu * cv
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    res = Multivector(u.dim, degree)
    res.coords = out
    return res


def contract(form, x):
    """Interior product i_x(form), with x filling the FIRST slots:

        (i_x form)(y) = form(x ^ y)

    For a single vector in position p of a blade this gives the usual
    (-1)^(p-1) sign.
    """
    if form.dim != x.dim:
        raise ValueError("contract over different spaces")
    if x.degree > form.degree:
        raise ValueError("contraction degree exceeds form degree")
    out_degree = form.degree - x.degree
    out = {}
    for kf, cf in form.coords.items():
        fset = set(kf)
        for kx, cx in x.coords.items():
            if not set(kx) <= fset:
                continue
            rest = tuple(i for i in kf if i not in set(kx))
            _, sign = sort_sign(kx + rest)
            s = out.get(rest, 0) + sign * cf * cx
            if s:
                out[rest] = s
            else:
                out.pop(rest, None)
    res = Multivector(form.dim, out_degree)
    res.coords = out
    return res


def pairing(form, x):
    """Full contraction of equal degrees: sum of coefficient products."""
    if form.dim != x.dim or form.degree != x.degree:
        raise ValueError("pairing of different shapes")
    if len(form.coords) > len(x.coords):
        form, x = x, form
    return sum((c * x.coords[k] for k, c in form.coords.items() if k in x.coords),
               Fraction(0))


# ---------------------------------------------------------------------------
# fraction-free elimination on sparse rows


def _intify(row):
    """Scale a {col: Fraction} row to coprime integers."""
    den = 1
    for v in row.values():
        d = v.denominator
        den = den * d // gcd(den, d)
    out = {}
    g = 0
    for k, v in row.items():
        n = int(v * den)
        if n:
            out[k] = n
            g = gcd(g, n)
    if g > 1:
        for k in out:
            out[k] //= g
    return out


def sparse_rref(rows, ncols):
    """Reduced row echelon form of sparse rows.

    rows is an iterable of {col: value} dicts (values Fraction or int).
    Returns (reduced_rows, pivots): reduced_rows are {col: Fraction} dicts
    with the pivot entry equal to 1, ordered by pivot column; pivots is the
    list of pivot columns. The elimination core works on integer rows and
    never forms intermediate fractions.
    """
    work = [r for r in (_intify(r) for r in rows) if r]
    done = []  # (pivot_col, integer row) in increasing pivot order

    for col in range(ncols):
        best = -1
        for i, r in enumerate(work):
            if r.get(col):
                if best < 0 or len(r) < len(work[best]):
                    best = i
        if best < 0:
            continue
        piv = work.pop(best)
        a = piv[col]

        def eliminate(r):
            b = r.get(col)
            if not b:
                return r
            new = {}
            for k in r.keys() | piv.keys():
                v = a * r.get(k, 0) - b * piv.get(k, 0)
                if v:
                    new[k] = v
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                for k in new:
                    new[k] //= g
            return new

        work = [r2 for r2 in (eliminate(r) for r in work) if r2]
        done = [(pc, eliminate(r)) for pc, r in done]
        done.append((col, piv))

    out = []
    pivots = []
    for pc, r in done:
        pv = Fraction(r[pc])
        out.append({k: Fraction(v) / pv for k, v in r.items()})
        pivots.append(pc)
    return out, pivots


def sparse_nullspace(rows, ncols):
    """Kernel of the operator whose rows are given; returns a SubspaceBasis."""
    red, pivots = sparse_rref(rows, ncols)
    pivset = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in zip(red, pivots):
            c = r.get(f)
            if c:
                v[pc] = -c
        vecs.append(v)
    return SubspaceBasis(ncols, vecs)


def sparse_solve(rows, ncols, rhs):
    """Particular solution of (rows) x = rhs with free variables zero.

    rhs is aligned with rows. Returns a list of Fractions, or None when the
    system is inconsistent.
    """
    aug = []
    for r, b in zip(rows, rhs):
        d = {k: v for k, v in r.items() if v}
        if b:
            d[ncols] = b
        aug.append(d)
    red, pivots = sparse_rref(aug, ncols + 1)
    sol = [Fraction(0)] * ncols
    for r, pc in zip(red, pivots):
        if pc == ncols:
            return None
        sol[pc] = r.get(ncols, Fraction(0))
    return sol


class Matrix:
    """Dense exact matrix, a thin wrapper over the sparse elimination core."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        rows = [tuple(Fraction(x) for x in r) for r in rows]
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit ncols")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = tuple(rows)

    @classmethod
    def from_cols(cls, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("empty matrix needs an explicit nrows")
            return cls([[] for _ in range(nrows)], ncols=0)
        nrows = len(cols[0])
        return cls([[col[i] for col in cols] for i in range(nrows)])

    def entry(self, i, j):
        return self.rows[i][j]

    def sparse_rows(self):
        return [{j: v for j, v in enumerate(r) if v} for r in self.rows]

    def rref(self):
        red, pivots = sparse_rref(self.sparse_rows(), self.ncols)
        dense = [[r.get(j, Fraction(0)) for j in range(self.ncols)] for r in red]
        return Matrix(dense, ncols=self.ncols), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        return sparse_nullspace(self.sparse_rows(), self.ncols)

    def solve(self, b):
        return sparse_solve(self.sparse_rows(), self.ncols, list(b))

    def apply(self, v):
        v = list(v)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((r[j] * v[j] for j in range(self.ncols) if v[j]), Fraction(0))
                for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


class SubspaceBasis:
    """Subspace of Q^n held in reduced row echelon normal form.

    Two SubspaceBasis objects are equal exactly when they span the same
    subspace, because the RREF basis of a subspace is unique.
    """

    __slots__ = ("ambient", "vectors", "pivots")

    def __init__(self, ambient, vectors=()):
        rows = []
        for v in vectors:
            if isinstance(v, dict):
                d = {i: Fraction(x) for i, x in v.items() if x}
            else:
                v = list(v)
                if len(v) != ambient:
                    raise ValueError("vector length does not match ambient dimension")
                d = {i: Fraction(x) for i, x in enumerate(v) if x}
            if d:
                if d and max(d) >= ambient:
                    raise ValueError("index out of range")
                rows.append(d)
        red, pivots = sparse_rref(rows, ambient)
        self.ambient = ambient
        self.pivots = tuple(pivots)
        self.vectors = tuple(
            tuple(r.get(c, Fraction(0)) for c in range(ambient)) for r in red
        )

    @property
    def dim(self):
        return len(self.vectors)

    def member(self, vec):
        """Exact membership test."""
        return self.coordinates(vec) is not None

    def coordinates(self, vec):
        """Coefficients of vec over self.vectors, or None if outside."""
        vec = [Fraction(x) for x in vec]
        if len(vec) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        coeffs = []
        for row, p in zip(self.vectors, self.pivots):
            c = vec[p]
            coeffs.append(c)
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        if any(vec):
            return None
        return coeffs

    def contains(self, other):
        if self.ambient != other.ambient:
            raise ValueError("different ambient spaces")
        return all(self.member(v) for v in other.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ambient == other.ambient and self.vectors == other.vectors

    __hash__ = None

    def __repr__(self):
        return f"SubspaceBasis(ambient={self.ambient}, dim={self.dim})"
