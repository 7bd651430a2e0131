"""Exact rational linear algebra and small polynomial arithmetic.

Everything here works over ``Q`` (``gmpy2.mpq``); no floating point enters.
Matrices are stored row-sparse (one ``{col: value}`` dict per row) because the
prolongation endomorphisms have only a handful of nonzeros per row, but the
public surface is that of an ordinary dense ``rows x cols`` grid.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import gmpy2

Q = gmpy2.mpq
ZERO = Q(0)
ONE = Q(1)

__all__ = [
    "Q", "to_q", "MatrixQ", "SubspaceQ", "Poly4", "DimensionMismatch",
    "rref", "kernel", "refine", "intersect", "contains", "span",
    "poly_diff", "poly_eval",
]


class DimensionMismatch(ValueError):
    pass


def to_q(x) -> "Q":
    """Convert ints, Fractions, mpq and ``"p/q"`` strings to ``Q``.

    Floats are refused: silently rounding a parameter would move it off a
    special locus.
    """
    if isinstance(x, (float, Decimal)):
        raise TypeError(f"refusing to convert decimal {x!r} to an exact rational")
    if isinstance(x, Fraction):
        return Q(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"malformed rational {x!r}; use 'p/q'")
        num, _, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise ValueError(f"malformed rational {x!r}; use 'p/q'") from None
        if d == 0:
            raise ValueError(f"zero denominator in {x!r}")
        return Q(n, d)
    return Q(x)


def _axpy(dst: dict, a, src: Mapping) -> None:
    """dst += a * src, dropping exact zeros."""
    for c, v in src.items():
        w = dst.get(c, ZERO) + a * v
        if w:
            dst[c] = w
        else:
            dst.pop(c, None)


class MatrixQ:
    """Immutable exact matrix with row-sparse storage."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[Mapping[int, object]] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple({} for _ in range(rows))
        else:
            if len(data) != rows:
                raise DimensionMismatch(f"expected {rows} rows, got {len(data)}")
            out = []
            for r in data:
                d = {}
                for c, v in r.items():
                    if not 0 <= c < cols:
                        raise DimensionMismatch(f"column {c} out of range {cols}")
                    v = to_q(v)
                    if v:
                        d[c] = v
                out.append(d)
            self._data = tuple(out)

    @classmethod
    def _wrap(cls, rows, cols, data) -> "MatrixQ":
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, tuple(data)
        return m

    @classmethod
    def from_dense(cls, grid: Sequence[Sequence[object]], cols: int | None = None) -> "MatrixQ":
        grid = [list(r) for r in grid]
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise DimensionMismatch("ragged grid")
        return cls(len(grid), cols, [{j: v for j, v in enumerate(r) if v} for r in grid])

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls._wrap(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls._wrap(rows, cols, [{} for _ in range(rows)])

    def row(self, i: int) -> dict:
        return self._data[i]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i].get(j, ZERO)

    def to_dense(self) -> list[list]:
        return [[r.get(j, ZERO) for j in range(self.cols)] for r in self._data]

    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self) -> str:
        return f"MatrixQ({self.rows}x{self.cols}, nnz={self.nnz()})"

    def transpose(self) -> "MatrixQ":
        out = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, v in r.items():
                out[j][i] = v
        return MatrixQ._wrap(self.cols, self.rows, out)

    T = property(transpose)

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        self._check_same(other)
        out = []
        for a, b in zip(self._data, other._data):
            d = dict(a)
            _axpy(d, ONE, b)
            out.append(d)
        return MatrixQ._wrap(self.rows, self.cols, out)

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        self._check_same(other)
        out = []
        for a, b in zip(self._data, other._data):
            d = dict(a)
            _axpy(d, -ONE, b)
            out.append(d)
        return MatrixQ._wrap(self.rows, self.cols, out)

    def __neg__(self) -> "MatrixQ":
        return self.scale(-ONE)

    def scale(self, a) -> "MatrixQ":
        a = to_q(a)
        if not a:
            return MatrixQ.zeros(self.rows, self.cols)
        return MatrixQ._wrap(self.rows, self.cols, [{j: a * v for j, v in r.items()} for r in self._data])

    def __matmul__(self, other):
        if isinstance(other, MatrixQ):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            od = other._data
            out = []
            for r in self._data:
                d: dict = {}
                for k, v in r.items():
                    _axpy(d, v, od[k])
                out.append(d)
            return MatrixQ._wrap(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, v: Sequence) -> list:
        """Matrix times a dense vector."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((x * v[j] for j, x in r.items()), ZERO) for r in self._data]

    def apply_sparse(self, v: Mapping[int, object]) -> dict:
        """Matrix times a sparse vector, returning a sparse vector."""
        # column access through the transpose is cheaper for sparse inputs
        out: dict = {}
        for i, r in enumerate(self._data):
            s = ZERO
            for j, x in r.items():
                y = v.get(j)
                if y:
                    s += x * y
            if s:
                out[i] = s
        return out

    def commutator(self, other: "MatrixQ") -> "MatrixQ":
        return self @ other - other @ self

    def vstack(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack with different column counts")
        return MatrixQ._wrap(self.rows + other.rows, self.cols, self._data + other._data)

    def _check_same(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def to_float(self):
        import numpy as np

        a = np.zeros((self.rows, self.cols))
        for i, r in enumerate(self._data):
            for j, v in r.items():
                a[i, j] = float(v)
        return a


class _Echelon:
    """Incrementally maintained fully reduced row-echelon basis."""

    def __init__(self):
        self.rows: dict[int, dict] = {}  # pivot column -> row (pivot entry 1)

    def reduce(self, v: Mapping) -> dict:
        r = dict(v)
        for p in [c for c in r if c in self.rows]:
            a = r.get(p)
            if a:
                _axpy(r, -a, self.rows[p])
        return r

    def add(self, v: Mapping) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = ONE / r[p]
        r = {c: x * inv for c, x in r.items()}
        for row in self.rows.values():
            a = row.get(p)
            if a:
                _axpy(row, -a, r)
        self.rows[p] = r
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def matrix(self, cols: int) -> MatrixQ:
        return MatrixQ._wrap(len(self.rows), cols, [self.rows[p] for p in self.pivots()])


def rref(m: MatrixQ) -> tuple[MatrixQ, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    e = _Echelon()
    for r in m._data:
        if r:
            e.add(r)
    return e.matrix(m.cols), e.pivots()


class SubspaceQ:
    """Subspace of Q^n given by a canonical RREF basis (rows)."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: MatrixQ | None = None, *, _canonical=False):
        if basis is None:
            basis = MatrixQ.zeros(0, ambient_dim)
        if basis.cols != ambient_dim:
            raise DimensionMismatch(f"basis has {basis.cols} columns, ambient {ambient_dim}")
        if _canonical:
            piv = [min(r) for r in basis._data]
        else:
            basis, piv = rref(basis)
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = piv

    @classmethod
    def full(cls, n: int) -> "SubspaceQ":
        return cls(n, MatrixQ.identity(n), _canonical=True)

    @classmethod
    def zero(cls, n: int) -> "SubspaceQ":
        return cls(n)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[dict]:
        return list(self.basis._data)

    def reduce(self, v: Mapping) -> dict:
        """Residual of v after subtracting its component along the basis pivots."""
        r = dict(v)
        for i, p in enumerate(self.pivots):
            a = r.get(p)
            if a:
                _axpy(r, -a, self.basis._data[i])
        return r

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceQ):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __repr__(self) -> str:
        return f"SubspaceQ(dim={self.dim}, ambient={self.ambient_dim})"

    def __le__(self, other: "SubspaceQ") -> bool:
        return all(contains(other, v) for v in self.basis._data)


def _as_sparse(v) -> dict:
    if isinstance(v, Mapping):
        return {int(k): to_q(x) for k, x in v.items() if x}
    return {i: to_q(x) for i, x in enumerate(v) if x}


def span(ambient_dim: int, vectors: Iterable) -> SubspaceQ:
    e = _Echelon()
    for v in vectors:
        e.add(_as_sparse(v))
    return SubspaceQ(ambient_dim, e.matrix(ambient_dim), _canonical=True)


def kernel(m: MatrixQ) -> SubspaceQ:
    """Null space {v : m v = 0} as a subspace of Q^cols."""
    r, piv = rref(m)
    pivset = set(piv)
    vecs = []
    for j in range(m.cols):
        if j in pivset:
            continue
        v = {j: ONE}
        for i, p in enumerate(piv):
            x = r._data[i].get(j)
            if x:
                v[p] = -x
        vecs.append(v)
    return span(m.cols, vecs)


def _kernel_of_columns(cols: list[dict], k: int) -> list[dict]:
    """Kernel of the linear map c -> sum_j c_j cols[j] (cols sparse vectors)."""
    # build rows of the matrix whose columns are `cols`
    rows: dict[int, dict] = {}
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows.setdefault(i, {})[j] = x
    m = MatrixQ._wrap(len(rows), k, list(rows.values()))
    return kernel(m).vectors()


def _combine(coeffs: Mapping[int, object], vectors: Sequence[Mapping]) -> dict:
    out: dict = {}
    for j, c in coeffs.items():
        _axpy(out, c, vectors[j])
    return out


def refine(maps: Sequence[MatrixQ], s: SubspaceQ) -> SubspaceQ:
    """Largest subspace {v in s : M v in s for every M in maps}."""
    n = s.ambient_dim
    for m in maps:
        if m.rows != n or m.cols != n:
            raise DimensionMismatch(f"map {m.rows}x{m.cols} on ambient dimension {n}")
    basis = s.vectors()
    if not basis:
        return s
    cols = []
    stride = n
    for j, b in enumerate(basis):
        stacked: dict = {}
        for i, m in enumerate(maps):
            res = s.reduce(m.apply_sparse(b))
            for c, x in res.items():
                stacked[i * stride + c] = x
        cols.append(stacked)
    ker = _kernel_of_columns(cols, len(basis))
    if len(ker) == len(basis):
        return s
    return span(n, (_combine(c, basis) for c in ker))


def contains(s: SubspaceQ, v) -> bool:
    v = _as_sparse(v)
    if v and max(v) >= s.ambient_dim:
        raise DimensionMismatch("vector longer than ambient dimension")
    return not s.reduce(v)


def intersect(s1: SubspaceQ, s2: SubspaceQ) -> SubspaceQ:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(f"ambient {s1.ambient_dim} vs {s2.ambient_dim}")
    basis = s1.vectors()
    ker = _kernel_of_columns([s2.reduce(b) for b in basis], len(basis))
    return span(s1.ambient_dim, (_combine(c, basis) for c in ker))


def subspace_sum(s1: SubspaceQ, s2: SubspaceQ) -> SubspaceQ:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(f"ambient {s1.ambient_dim} vs {s2.ambient_dim}")
    return span(s1.ambient_dim, s1.vectors() + s2.vectors())


# --------------------------------------------------------------------------
# polynomials in x1..x4


class Poly4:
    """Polynomial in four variables with exact coefficients.

    ``terms`` maps exponent 4-tuples to nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        t = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != 4 or min(e) < 0:
                raise ValueError(f"bad exponent {e}")
            c = to_q(c)
            if c:
                t[e] = t.get(e, ZERO) + c
                if not t[e]:
                    del t[e]
        self.terms = t

    @classmethod
    def const(cls, c) -> "Poly4":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, i: int) -> "Poly4":
        """The coordinate x_i, i in 1..4."""
        e = [0, 0, 0, 0]
        e[i - 1] = 1
        return cls({tuple(e): 1})

    def _coerce(self, other) -> "Poly4":
        return other if isinstance(other, Poly4) else Poly4.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, ZERO) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly4._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly4._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                v = t.get(e, ZERO) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Poly4._raw(t)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, t) -> "Poly4":
        p = cls.__new__(cls)
        p.terms = t
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def diff(self, var: int) -> "Poly4":
        if var not in (1, 2, 3, 4):
            raise ValueError(f"variable index must be 1..4, got {var}")
        i = var - 1
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                t[tuple(f)] = c * e[i]
        return Poly4._raw(t)

    def eval(self, point: Sequence) -> "Q":
        pt = [to_q(x) for x in point]
        s = ZERO
        for e, c in self.terms.items():
            s += c * pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2] * pt[3] ** e[3]
        return s

    def eval_float(self, point) -> float:
        x1, x2, x3, x4 = (float(v) for v in point)
        s = 0.0
        for e, c in self.terms.items():
            s += float(c) * x1 ** e[0] * x2 ** e[1] * x3 ** e[2] * x4 ** e[3]
        return s


def poly_diff(p: Poly4, var: int) -> Poly4:
    return p.diff(var)


def poly_eval(p: Poly4, point: Sequence) -> "Q":
    return p.eval(point)
