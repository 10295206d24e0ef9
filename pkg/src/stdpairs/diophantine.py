"""Exact integer linear algebra.

This module is the computational kernel of the package: everything else
reduces its questions (membership in a monoid, properness of a pair,
intersection of translated submonoids, ...) to finding the componentwise
minimal nonnegative integer solutions of a linear system ``M x = b``.

The solver works lattice-geometrically, entirely over Python integers and
fractions (no overflow anywhere):

* a saturated basis of the integer kernel lattice comes from the Smith
  normal form of M;
* the extreme rays of the nonnegative solution cone come from enumerating
  active constraint subsets in kernel coordinates;
* a pulling triangulation of the rays reduces the Hilbert basis to the
  lattice points of finitely many half-open parallelepipeds, enumerated
  exactly via Smith-form residue classes (a minimal lattice point has all
  simplex coefficients below one);
* inhomogeneous systems are homogenized with one slack coordinate: the
  minimal solutions of ``M x = b`` are the height-one Hilbert basis
  elements of ``[M | -b]``.

Easy instances short-circuit through a budgeted Contejean-Devie style
completion seeded with the cached kernel basis; the triangulation pipeline
takes over whenever the completion frontier grows past its budget, so the
worst case stays predictable.  Kernel data is cached per matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

IntVector = tuple  # tuple[int, ...]; kept loose so plain tuples interoperate


def vec(entries: Iterable[int]) -> IntVector:
    return tuple(int(e) for e in entries)


def vec_add(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def vec_dot(u: IntVector, v: IntVector) -> int:
    return sum(a * b for a, b in zip(u, v))


def vec_leq(u: IntVector, v: IntVector) -> bool:
    """Componentwise u <= v."""
    return all(a <= b for a, b in zip(u, v))


def vec_is_zero(u: IntVector) -> bool:
    return all(a == 0 for a in u)


def primitive(v: IntVector) -> IntVector:
    """Divide out the content (gcd of the entries); the zero vector is fixed."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored as a tuple of row tuples.

    ``rows`` and ``cols`` are carried explicitly so that degenerate shapes
    (0 x c and r x 0) stay distinguishable; both are legal and denote empty
    matrices.
    """

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.data:
            if len(r) != self.cols:
                raise ValueError("ragged matrix row")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(vec(r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        cols = [vec(c) for c in cols]
        if rows is None:
            rows = len(cols[0]) if cols else 0
        data = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return cls(rows, len(cols), data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def row(self, i: int) -> IntVector:
        return self.data[i]

    def col(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def mul(self, x: IntVector) -> IntVector:
        """Matrix times column vector."""
        if len(x) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum(r[j] * x[j] for j in range(self.cols)) for r in self.data)

    def mul_fractions(self, x: Sequence) -> list:
        """Matrix times a vector of fractions (exact)."""
        return [sum(r[j] * x[j] for j in range(self.cols)) for r in self.data]

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ocols = other.cols
        data = tuple(
            tuple(sum(r[k] * other.data[k][j] for k in range(self.cols)) for j in range(ocols))
            for r in self.data
        )
        return IntMatrix(self.rows, ocols, data)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        data = tuple(self.data[i] + other.data[i] for i in range(self.rows))
        return IntMatrix(self.rows, self.cols + other.cols, data)

    def neg(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def take_cols(self, indices: Sequence[int]) -> "IntMatrix":
        data = tuple(tuple(r[j] for j in indices) for r in self.data)
        return IntMatrix(self.rows, len(indices), data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def with_sorted_cols(self) -> "IntMatrix":
        return IntMatrix.from_cols(sorted(self.columns()), rows=self.rows)

    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def to_token(self) -> str:
        """Canonical one-line text form, usable as a dictionary key."""
        body = " ".join(str(a) for r in self.data for a in r)
        return f"{self.rows} {self.cols} {body}".rstrip()

    def __str__(self) -> str:
        if self.rows == 0:
            return "[]"
        widths = [max((len(str(r[j])) for r in self.data), default=0) for j in range(self.cols)]
        lines = []
        for i, r in enumerate(self.data):
            body = " ".join(str(a).rjust(w) for a, w in zip(r, widths))
            lines.append(("[[" if i == 0 else " [") + body + ("]]" if i == self.rows - 1 else "]"))
        if self.rows == 1:
            return "[[" + " ".join(str(a) for a in self.data[0]) + "]]"
        return "\n".join(lines)


@dataclass(frozen=True)
class SolutionSet:
    """A finite antichain of componentwise-minimal nonnegative solutions.

    Vectors all share one dimension and are kept lexicographically sorted so
    that serialized output is canonical.
    """

    dim: int
    vectors: tuple

    @classmethod
    def of(cls, dim: int, vectors: Iterable[IntVector]) -> "SolutionSet":
        return cls(dim, tuple(sorted(set(map(tuple, vectors)))))

    def is_empty(self) -> bool:
        return not self.vectors

    def __bool__(self) -> bool:
        return bool(self.vectors)

    def __iter__(self) -> Iterator[IntVector]:
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.vectors


def minimal_elements(vectors: Iterable[IntVector]) -> list:
    """The componentwise-minimal members of a finite set of vectors."""
    vs = sorted(set(map(tuple, vectors)), key=lambda v: (sum(v), v))
    out: list = []
    for v in vs:
        if not any(vec_leq(m, v) for m in out):
            out.append(v)
    return sorted(out)


def smith_normal_form(M: IntMatrix) -> tuple:
    """Unimodular U, V and diagonal D with ``U M V = D``.

    The diagonal entries are not forced into divisibility order; only the
    diagonal shape matters for kernels and particular solutions.
    """
    m, n = M.rows, M.cols
    D = [list(r) for r in M.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, k, q):  # row_i -= q * row_k
        D[i] = [a - q * b for a, b in zip(D[i], D[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_op(j, k, q):  # col_j -= q * col_k
        for r in range(m):
            D[r][j] -= q * D[r][k]
        for r in range(n):
            V[r][j] -= q * V[r][k]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0 and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            D[i], D[t] = D[t], D[i]
            U[i], U[t] = U[t], U[i]
        if j != t:
            for r in range(m):
                D[r][j], D[r][t] = D[r][t], D[r][j]
            for r in range(n):
                V[r][j], V[r][t] = V[r][t], V[r][j]
        while True:
            moved = False
            for i in range(m):
                if i != t and D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    row_op(i, t, q)
                    if D[i][t] != 0:  # remainder is a smaller pivot
                        D[i], D[t] = D[t], D[i]
                        U[i], U[t] = U[t], U[i]
                        moved = True
            for j in range(n):
                if j != t and D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    col_op(j, t, q)
                    if D[t][j] != 0:
                        for r in range(m):
                            D[r][j], D[r][t] = D[r][t], D[r][j]
                        for r in range(n):
                            V[r][j], V[r][t] = V[r][t], V[r][j]
                        moved = True
            if not moved and all(D[i][t] == 0 for i in range(m) if i != t) and all(
                D[t][j] == 0 for j in range(n) if j != t
            ):
                break
        t += 1
    return (
        IntMatrix(m, m, tuple(tuple(r) for r in U)),
        IntMatrix(m, n, tuple(tuple(r) for r in D)),
        IntMatrix(n, n, tuple(tuple(r) for r in V)),
    )


def integer_kernel_basis(M: IntMatrix) -> list:
    """A saturated lattice basis of ``{x in Z^c : M x = 0}`` (columns of V)."""
    _, D, V = smith_normal_form(M)
    basis = []
    for j in range(M.cols):
        d = D.data[j][j] if j < M.rows else 0
        if d == 0:
            basis.append(V.col(j))
    return basis


def _cone_rays(rows: list, dim: int) -> list:
    """Primitive extreme rays of the pointed cone ``{y : row . y >= 0}``.

    Every extreme ray has an active constraint set of rank dim-1, so all
    candidate directions arise as one-dimensional kernels of row subsets.
    """
    if dim == 0:
        return []
    rays = set()
    for subset in combinations(range(len(rows)), dim - 1):
        sub = IntMatrix.from_rows([rows[j] for j in subset], cols=dim)
        kernel = rational_kernel_basis(sub)
        if len(kernel) != 1:
            continue
        y = kernel[0]
        values = [vec_dot(r, y) for r in rows]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            y = tuple(-a for a in y)
        else:
            continue
        if any(values):
            rays.add(primitive(y))
    return sorted(rays)


@dataclass
class _MatrixData:
    """Per-matrix cache: Smith form, kernel lattice, echelon walk data, rays."""

    M: IntMatrix
    hilbert: tuple | None = None
    solutions: dict = field(default_factory=dict)
    _snf: tuple | None = None
    _kernel: list | None = None
    _echelon: tuple | None = None
    _rays: list | None = None
    _subsets: tuple | None = None

    def snf(self):
        if self._snf is None:
            self._snf = smith_normal_form(self.M)
        return self._snf

    def kernel_basis(self):
        if self._kernel is None:
            self._kernel = integer_kernel_basis(self.M)
        return self._kernel

    def echelon(self):
        """Echelon kernel columns, pivot rows, and per-level determined rows."""
        if self._echelon is None:
            cols, pivots = _column_echelon(self.kernel_basis(), self.M.cols)
            k = len(cols)
            level = []
            for r in range(self.M.cols):
                last = 0
                for j in range(k):
                    if cols[j][r] != 0:
                        last = j + 1
                level.append(last)
            determined = [[r for r in range(self.M.cols) if level[r] == i] for i in range(k + 1)]
            self._echelon = (cols, pivots, determined)
        return self._echelon

    def kernel_rays(self):
        """Extreme rays of ``{x >= 0 : M x = 0}``, as x-vectors."""
        if self._rays is None:
            basis = self.kernel_basis()
            k = len(basis)
            c = self.M.cols
            rows = [tuple(basis[i][j] for i in range(k)) for j in range(c)]
            rays = []
            for y in _cone_rays(rows, k):
                x = tuple(sum(basis[i][j] * y[i] for i in range(k)) for j in range(c))
                rays.append(primitive(x))
            self._rays = sorted(set(rays))
        return self._rays

    def feasible_subsets(self):
        """Row basis plus invertible column subsets, for vertex enumeration."""
        if self._subsets is None:
            M = self.M
            rank = rational_rank(M)
            row_basis = _independent_rows(M, rank)
            reduced = [tuple(M.data[i]) for i in row_basis]
            subsets = []
            for S in combinations(range(M.cols), rank):
                square = [[Fraction(reduced[i][j]) for j in S] for i in range(rank)]
                inv = _fraction_inverse(square)
                if inv is not None:
                    subsets.append((S, inv))
            self._subsets = (row_basis, subsets)
        return self._subsets


def _column_echelon(cols: list, dim: int) -> tuple:
    """Unimodular column operations to echelon form; returns (cols, pivot rows)."""
    cols = [list(c) for c in cols]
    k = len(cols)
    pivots = []
    lead = 0
    for row in range(dim):
        if lead == k:
            break
        j = next((j for j in range(lead, k) if cols[j][row] != 0), None)
        if j is None:
            continue
        cols[lead], cols[j] = cols[j], cols[lead]
        while True:
            others = [j for j in range(lead + 1, k) if cols[j][row] != 0]
            if not others:
                break
            for j in others:
                q = cols[j][row] // cols[lead][row]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[lead])]
                if cols[j][row] != 0:
                    cols[lead], cols[j] = cols[j], cols[lead]
        if cols[lead][row] < 0:
            cols[lead] = [-a for a in cols[lead]]
        pivots.append(row)
        lead += 1
    return [tuple(c) for c in cols], pivots


def _independent_rows(M: IntMatrix, rank: int) -> list:
    rows = []
    a: list = []
    for i in range(M.rows):
        trial = a + [[Fraction(x) for x in M.data[i]]]
        if _fraction_rank(trial) > len(a):
            a = trial
            rows.append(i)
        if len(rows) == rank:
            break
    return rows


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ceil_fraction(v) -> int:
    return -((-v.numerator) // v.denominator)


def _box_solutions(data: _MatrixData, x0, bound, budget: int | None = None):
    """Solutions ``x = x0 + (kernel lattice)`` with ``0 <= x <= bound``.

    Returns None when more than ``budget`` recursion nodes are visited.
    """
    cols, pivots, determined = data.echelon()
    k = len(cols)

    for r in determined[0]:
        if not 0 <= x0[r] <= bound[r]:
            return []
    out = []
    visited = [0]

    def rec(i: int, x: list):
        if visited[0] is None:
            return
        if i == k:
            out.append(tuple(x))
            return
        p = pivots[i]
        coeff = cols[i][p]
        lo = _ceil_div(-x[p], coeff)
        hi = (bound[p] - x[p]) // coeff
        col = cols[i]
        span = hi - lo + 1
        if span > 0:
            visited[0] += span
            if budget is not None and visited[0] > budget:
                visited[0] = None
                return
        for y in range(lo, hi + 1):
            nxt = [a + y * b for a, b in zip(x, col)]
            if all(0 <= nxt[r] <= bound[r] for r in determined[i + 1]):
                rec(i + 1, nxt)

    rec(0, list(x0))
    if visited[0] is None:
        return None
    return out


def _particular_solution(data: _MatrixData, b):
    """Some integer solution of ``M x = b`` (sign unrestricted), or None."""
    U, D, V = data.snf()
    m, n = data.M.rows, data.M.cols
    z = U.mul(b)
    w = [0] * n
    for i in range(m):
        d = D.data[i][i] if i < n else 0
        if d == 0:
            if z[i] != 0:
                return None
        else:
            if z[i] % d != 0:
                return None
            w[i] = z[i] // d
    return V.mul(tuple(w))


def _fraction_rank(rows: list) -> int:
    a = [r[:] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pr = a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / pr[col]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        rank += 1
    return rank


def _fraction_inverse(a: list):
    n = len(a)
    work = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col] != 0), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


_MATRIX_CACHE: dict = {}


def _matrix_data(M: IntMatrix) -> _MatrixData:
    data = _MATRIX_CACHE.get(M)
    if data is None:
        data = _MATRIX_CACHE[M] = _MatrixData(M)
    return data


def _facets_of_cone(cols: list, dim: int) -> tuple:
    """Facets and span equations of the cone generated by ``cols`` in R^dim.

    Returns ``(facets, equations)``: one ``(primitive inner normal,
    frozenset of generator positions on the facet)`` per facet, plus a
    primitive basis of the orthogonal complement of the linear span.  Every
    facet contains rank-1 many independent generators, so candidate normals
    arise from generator subsets.
    """
    if not cols:
        return [], rational_kernel_basis(IntMatrix.zero(0, dim))
    matrix = IntMatrix.from_cols(cols, rows=dim)
    equations = rational_kernel_basis(matrix.transpose())
    r = rational_rank(matrix)
    facets: dict = {}
    if r >= 1:
        for subset in combinations(range(len(cols)), r - 1):
            constraint_rows = [cols[j] for j in subset] + list(equations)
            kernel = rational_kernel_basis(IntMatrix.from_rows(constraint_rows, cols=dim))
            if len(kernel) != 1:
                continue
            phi = primitive(kernel[0])
            values = [vec_dot(phi, c) for c in cols]
            if all(v >= 0 for v in values):
                pass
            elif all(v <= 0 for v in values):
                phi = tuple(-x for x in phi)
                values = [-v for v in values]
            else:
                continue
            if not any(values):
                continue
            facets[phi] = frozenset(j for j, v in enumerate(values) if v == 0)
    return sorted(facets.items()), equations


def _extreme_rays_dd(constraints: list, dim: int) -> list:
    """Extreme rays of the pointed cone ``{y : c . y >= 0}`` by double description.

    Starts from an invertible constraint subsystem (whose cone is simplicial
    with the inverse's columns as rays) and cuts by the remaining
    constraints, combining algebraically adjacent positive/negative ray
    pairs.  Requires the constraints to have full column rank.
    """
    idx = _independent_rows(IntMatrix.from_rows(constraints, cols=dim), dim)
    if len(idx) < dim:
        raise ValueError("constraint matrix does not have full column rank")
    inv = _fraction_inverse([[Fraction(constraints[i][j]) for j in range(dim)] for i in idx])
    rays = []
    for j in range(dim):
        col = [inv[r][j] for r in range(dim)]
        den = 1
        for v in col:
            den = den * v.denominator // gcd(den, v.denominator)
        rays.append(primitive(tuple(int(v * den) for v in col)))
    chosen = set(idx)
    processed = list(idx)

    def adjacent(r1, r2):
        common = [
            constraints[i]
            for i in processed
            if vec_dot(constraints[i], r1) == 0 and vec_dot(constraints[i], r2) == 0
        ]
        return _fraction_rank([[Fraction(x) for x in row] for row in common]) == dim - 2

    for i, c in enumerate(constraints):
        if i in chosen:
            continue
        values = {r: vec_dot(c, r) for r in rays}
        if all(v >= 0 for v in values.values()):
            processed.append(i)
            continue
        keep = [r for r in rays if values[r] >= 0]
        new = set(keep)
        pos = [r for r in rays if values[r] > 0]
        neg = [r for r in rays if values[r] < 0]
        for rp in pos:
            for rn in neg:
                if adjacent(rp, rn):
                    combo = tuple(
                        values[rp] * b - values[rn] * a for a, b in zip(rp, rn)
                    )
                    new.add(primitive(combo))
        rays = sorted(new)
        processed.append(i)
    return sorted(set(rays))


def _facet_zero_sets(gens: list) -> list:
    """Generator index sets of the facets of a pointed cone.

    Works in coordinates of the linear span, where the dual cone is pointed
    and its extreme rays (found by double description) are the facet
    normals.
    """
    basis = []
    basis_rows: list = []
    for g in gens:
        trial = basis_rows + [[Fraction(x) for x in g]]
        if _fraction_rank(trial) > len(basis_rows):
            basis_rows = trial
            basis.append(g)
    r = len(basis)
    if r <= 1:
        return []
    coords = []
    rows = []
    row_idx = []
    dim = len(gens[0])
    for j in range(dim):
        trial = rows + [[Fraction(basis[i][j]) for i in range(r)]]
        if _fraction_rank(trial) > len(rows):
            rows = trial
            row_idx.append(j)
        if len(rows) == r:
            break
    inv = _fraction_inverse(rows)
    for g in gens:
        rhs = [g[j] for j in row_idx]
        z = [sum(inv[i][j] * rhs[j] for j in range(r)) for i in range(r)]
        den = 1
        for v in z:
            den = den * v.denominator // gcd(den, v.denominator)
        coords.append(tuple(int(v * den) for v in z))
    normals = _extreme_rays_dd(coords, r)
    out = set()
    for phi in normals:
        values = [vec_dot(phi, cv) for cv in coords]
        if all(v >= 0 for v in values) and any(values):
            out.add(frozenset(j for j, v in enumerate(values) if v == 0))
    return sorted(out, key=sorted)


def _pulling_triangulation(cols: list, dim: int) -> list:
    """Triangulate a pointed cone over its generators (index tuples).

    The first generator is pulled: the cone is the union of simplices over
    that apex and the recursively triangulated facets missing it.
    """

    def recurse(indices):
        sub = [cols[i] for i in indices]
        if _fraction_rank([list(map(Fraction, v)) for v in sub]) == len(indices):
            return {tuple(indices)}
        out = set()
        for zero_set in _facet_zero_sets(sub):
            if 0 in zero_set:
                continue
            below = [indices[p] for p in sorted(zero_set)]
            for simplex in recurse(below):
                out.add(tuple(sorted((indices[0],) + simplex)))
        return out

    return sorted(recurse(list(range(len(cols)))))


def _saturated_span_basis(cols: list, dim: int) -> list:
    """A lattice basis of ``span_Q(cols) intersect Z^dim``."""
    matrix = IntMatrix.from_cols(cols, rows=dim)
    U, D, _ = smith_normal_form(matrix)
    u_inv = _fraction_inverse([[Fraction(x) for x in row] for row in U.data])
    basis = []
    for i in range(min(dim, matrix.cols)):
        if D.data[i][i] != 0:
            col = tuple(int(u_inv[r][i]) for r in range(dim))
            basis.append(col)
    return basis


def _coords_in_basis(basis: list, targets: list, dim: int) -> list:
    """Exact integer coordinates of targets in a saturated basis."""
    k = len(basis)
    rows = []
    row_idx = []
    for r in range(dim):
        trial = rows + [[Fraction(basis[i][r]) for i in range(k)]]
        if _fraction_rank(trial) > len(rows):
            rows = trial
            row_idx.append(r)
        if len(rows) == k:
            break
    inv = _fraction_inverse(rows)
    out = []
    for t in targets:
        rhs = [t[r] for r in row_idx]
        z = [sum(inv[i][j] * rhs[j] for j in range(k)) for i in range(k)]
        assert all(v.denominator == 1 for v in z)
        z = tuple(int(v) for v in z)
        assert all(
            sum(basis[i][r] * z[i] for i in range(k)) == t[r] for r in range(dim)
        )
        out.append(z)
    return out


def _parallelepiped_points(generators: list) -> list:
    """Lattice points in the half-open parallelepiped of a nonsingular basis.

    The quotient group carried by the Smith form enumerates one point per
    residue class: each representative is folded into the parallelepiped by
    subtracting the integer parts of its generator coordinates.
    """
    k = len(generators)
    R = IntMatrix.from_cols(generators, rows=k)
    U, D, _ = smith_normal_form(R)
    u_inv = _fraction_inverse([[Fraction(x) for x in row] for row in U.data])
    r_inv = _fraction_inverse([[Fraction(x) for x in row] for row in R.data])
    points = set()
    from itertools import product as iproduct

    for t in iproduct(*(range(abs(D.data[i][i])) for i in range(k))):
        w = [int(sum(u_inv[r][i] * t[i] for i in range(k))) for r in range(k)]
        coeffs = [sum(r_inv[i][j] * w[j] for j in range(k)) for i in range(k)]
        floors = [c.numerator // c.denominator for c in coeffs]
        p = tuple(
            w[r] - sum(generators[i][r] * floors[i] for i in range(k)) for r in range(k)
        )
        points.add(p)
    return sorted(points)


def _hilbert_basis_geometric(M: IntMatrix) -> list:
    """Hilbert basis of ``{x in N^c : M x = 0}`` by triangulation.

    Working in coordinates of the saturated kernel lattice: enumerate the
    extreme rays of the nonnegativity cone, triangulate them, and collect
    the lattice points of each maximal simplex's half-open parallelepiped.
    Every minimal element appears among those candidates and the rays.
    """
    c = M.cols
    basis = integer_kernel_basis(M)
    k = len(basis)
    if k == 0:
        return []
    rows = [tuple(basis[i][j] for i in range(k)) for j in range(c)]
    rays_y = _cone_rays(rows, k)
    if not rays_y:
        return []
    span = _saturated_span_basis(rays_y, k)
    rays_z = _coords_in_basis(span, rays_y, k)
    candidates = set(rays_z)
    for simplex in _pulling_triangulation(rays_z, len(span)):
        candidates.update(_parallelepiped_points([rays_z[i] for i in simplex]))
    candidates.discard((0,) * len(span))

    def to_x(z):
        y = [sum(span[i][j] * z[i] for i in range(len(span))) for j in range(k)]
        return tuple(sum(basis[i][j] * y[i] for i in range(k)) for j in range(c))

    return minimal_elements(to_x(z) for z in candidates)


def _completion(columns: list, nrows: int, cap_index: int | None = None, seed: list | None = None, budget: int | None = None):
    """Contejean-Devie completion: minimal nonzero solutions of a homogeneous system.

    Breadth-first by 1-norm; a frontier vector extends along coordinate j
    only when its defect has negative scalar product with column j, and
    anything dominating a known minimal solution is pruned.  ``seed``
    supplies already-known minimal solutions (they prune but are not
    re-reported).  ``cap_index`` caps that coordinate at 1.  Returns None
    when more than ``budget`` nodes are generated; the caller then switches
    to the lattice-geometric solver, which has predictable cost.
    """
    ncols = len(columns)
    if ncols == 0:
        return []
    zero_val = (0,) * nrows
    basis: list = list(seed) if seed else []
    found: list = []
    frontier: dict = {}
    for j in range(ncols):
        e = tuple(1 if i == j else 0 for i in range(ncols))
        if not any(vec_leq(b, e) and b != e for b in basis):
            frontier[e] = columns[j]
    visited = len(frontier)
    while frontier:
        for x in sorted(k for k, v in frontier.items() if v == zero_val):
            if not any(vec_leq(b, x) for b in basis):
                basis.append(x)
                found.append(x)
        nxt: dict = {}
        for x, v in frontier.items():
            if v == zero_val:
                continue
            for j in range(ncols):
                if cap_index is not None and j == cap_index and x[j] >= 1:
                    continue
                if vec_dot(v, columns[j]) < 0:
                    y = x[:j] + (x[j] + 1,) + x[j + 1:]
                    if y in nxt:
                        continue
                    if any(vec_leq(b, y) for b in basis):
                        continue
                    nxt[y] = vec_add(v, columns[j])
        visited += len(nxt)
        if budget is not None and visited > budget:
            return None
        frontier = nxt
    return sorted(found) if seed else sorted(basis)


_CD_BUDGET = 500


_BOX_BUDGET = 20000


def hilbert_kernel(M: IntMatrix) -> SolutionSet:
    """Minimal nonzero elements (Hilbert basis) of ``{x in N^c : M x = 0}``.

    Every minimal element lies in a half-open parallelepiped of a
    triangulated simplicial subcone, hence below the componentwise sum of
    all extreme rays.  The box below that sum is walked first; if it is too
    large, the parallelepipeds are enumerated directly.  Cached per matrix.
    """
    data = _matrix_data(M)
    if data.hilbert is None:
        rays = data.kernel_rays()
        if not rays:
            data.hilbert = ()
        else:
            bound = tuple(sum(r[j] for r in rays) for j in range(M.cols))
            zero = (0,) * M.cols
            points = _box_solutions(data, zero, bound, budget=_BOX_BUDGET)
            if points is not None:
                data.hilbert = tuple(minimal_elements(x for x in points if x != zero))
            else:
                data.hilbert = tuple(_hilbert_basis_geometric(M))
    return SolutionSet.of(M.cols, data.hilbert)


def min_nonneg_solutions(M: IntMatrix, b: IntVector) -> SolutionSet:
    """Componentwise-minimal elements of ``{x in N^c : M x = b}``.

    Empty exactly when the system has no nonnegative integer solution; for
    ``b = 0`` the unique minimal solution is the zero vector.

    Three exact tiers, routed by work budgets:

    1. completion on the homogenized system, seeded with the cached kernel
       basis and capped at 1 in the slack coordinate (fast when minimal
       solutions are small);
    2. lattice walk of the box below (sum of kernel rays) + (componentwise
       vertex ceiling), which bounds every minimal solution because a
       height-one point of the homogenized cone is a sub-one combination
       of kernel rays plus a convex combination of vertices;
    3. triangulation of the homogenized cone with exact parallelepiped
       enumeration, whose candidate count is the sum of simplex
       determinants.
    """
    b = vec(b)
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has dim {len(b)}, expected {M.rows}")
    if vec_is_zero(b):
        return SolutionSet.of(M.cols, [(0,) * M.cols])
    data = _matrix_data(M)
    cached = data.solutions.get(b)
    if cached is not None:
        return cached
    result = _min_nonneg_uncached(M, data, b)
    data.solutions[b] = result
    return result


def _min_nonneg_uncached(M: IntMatrix, data: _MatrixData, b: IntVector) -> SolutionSet:
    columns = M.columns()
    columns.append(tuple(-e for e in b))
    slack = M.cols
    seed = [h + (0,) for h in hilbert_kernel(M)]
    quick = _completion(columns, M.rows, cap_index=slack, seed=seed, budget=_CD_BUDGET)
    if quick is not None:
        return SolutionSet.of(M.cols, [x[:slack] for x in quick if x[slack] == 1])

    x0 = _particular_solution(data, b)
    if x0 is None:
        return SolutionSet.of(M.cols, [])
    row_basis, subsets = data.feasible_subsets()
    rb = [b[i] for i in row_basis]
    vertices = []
    for S, inv in subsets:
        xs = [sum(row[i] * rb[i] for i in range(len(rb))) for row in inv]
        if any(v < 0 for v in xs):
            continue
        x = [Fraction(0)] * M.cols
        for j, v in zip(S, xs):
            x[j] = v
        if M.mul_fractions(x) != list(b):
            continue
        vertices.append(x)
    if not vertices:
        return SolutionSet.of(M.cols, [])  # the polyhedron has no vertex, so it is empty
    rays = data.kernel_rays()
    vertex_cap = [max(_ceil_fraction(v[j]) for v in vertices) for j in range(M.cols)]
    bound = tuple(sum(r[j] for r in rays) + vertex_cap[j] for j in range(M.cols))
    points = _box_solutions(data, x0, bound, budget=_BOX_BUDGET)
    if points is not None:
        return SolutionSet.of(M.cols, minimal_elements(points))

    homogenized = M.hstack(IntMatrix.from_cols([tuple(-e for e in b)], rows=M.rows))
    basis = _hilbert_basis_geometric(homogenized)
    return SolutionSet.of(M.cols, [x[:slack] for x in basis if x[slack] == 1])


def rational_rank(M: IntMatrix) -> int:
    """Rank of the matrix over the rationals (exact Gaussian elimination)."""
    a = [[Fraction(x) for x in row] for row in M.data]
    rank = 0
    for col in range(M.cols):
        pivot = next((i for i in range(rank, M.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pr = a[rank]
        for i in range(M.rows):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / pr[col]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        rank += 1
        if rank == M.rows:
            break
    return rank


def rational_kernel_basis(M: IntMatrix) -> list:
    """A canonical primitive integer basis of ``{x in Q^c : M x = 0}``.

    Computed from the reduced row echelon form: one basis vector per free
    column, denominators cleared, content reduced, first nonzero entry made
    positive, rows sorted.  This spans the kernel over Q (which is all the
    face-membership tests need); it is not required to be a lattice basis.
    """
    m, n = M.rows, M.cols
    a = [[Fraction(x) for x in row] for row in M.data]
    pivots: list = []
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pv = a[rank][col]
        a[rank] = [x / pv for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        pivots.append(col)
        rank += 1
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][j]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        iv = [int(x * denom) for x in v]
        iv = list(primitive(iv))
        lead = next((x for x in iv if x != 0), 0)
        if lead < 0:
            iv = [-x for x in iv]
        basis.append(tuple(iv))
    return sorted(basis)
