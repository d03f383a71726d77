"""Exact dense linear algebra over a FieldCtx.

Matrices are stored as int64 arrays of shape (rows, cols, k) holding canonical
coefficient vectors; all observable semantics are exact field arithmetic.
Prime fields (k = 1) take vectorized fast paths since they dominate runtime.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import (
    DimensionMismatch,
    FieldTooSmall,
    NoSolution,
    NotAnEigenvalue,
    NotInvertible,
    NotSquare,
)
from .field import (
    DEFAULT_FIELD_CAP,
    FieldCtx,
    Fq,
    FqPoly,
    embed,
    splitting_field_roots,
)

_reduction_cache: dict[FieldCtx, np.ndarray] = {}


def _np_reduction(ctx: FieldCtx) -> np.ndarray:
    table = _reduction_cache.get(ctx)
    if table is None:
        table = np.array(ctx.reduction_rows, dtype=np.int64).reshape(ctx.k - 1, ctx.k)
        _reduction_cache[ctx] = table
    return table


def _reduce_axis(ctx: FieldCtx, arr: np.ndarray) -> np.ndarray:
    """Reduce polynomial coefficients along the last axis to length k, mod p."""
    k = ctx.k
    if arr.shape[-1] == k:
        return arr % ctx.p
    head = arr[..., :k]
    tail = arr[..., k:]
    table = _np_reduction(ctx)[: arr.shape[-1] - k]
    return (head + np.tensordot(tail, table, axes=([-1], [0]))) % ctx.p


def _conv_last(a: np.ndarray, b: np.ndarray, k: int) -> np.ndarray:
    """Polynomial product along the trailing axes of a (..., k) x (..., k)."""
    out = np.zeros(a.shape[:-1] + (2 * k - 1,), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            out[..., i + j] += a[..., i] * b[..., j]
    return out


def _matmul(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if ctx.k == 1:
        return ((a[..., 0] @ b[..., 0]) % ctx.p)[..., None]
    raw = np.einsum("ita,tjb->ijab", a, b)
    k = ctx.k
    conv = np.zeros(raw.shape[:2] + (2 * k - 1,), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            conv[..., i + j] += raw[..., i, j]
    return _reduce_axis(ctx, conv)


def _scalar_mul(ctx: FieldCtx, s: np.ndarray, arr: np.ndarray) -> np.ndarray:
    """Multiply every (poly) entry of arr by the scalar coefficient vector s."""
    if ctx.k == 1:
        return (arr * int(s[0])) % ctx.p
    conv = np.zeros(arr.shape[:-1] + (2 * ctx.k - 1,), dtype=np.int64)
    for i in range(ctx.k):
        si = int(s[i])
        if si:
            conv[..., i : i + ctx.k] += si * arr
    return _reduce_axis(ctx, conv)


def _poly_outer(ctx: FieldCtx, scalars: np.ndarray, row: np.ndarray) -> np.ndarray:
    """Outer product of scalar vectors (n, k) with a row (c, k) -> (n, c, k)."""
    if ctx.k == 1:
        return (scalars[:, None, :] * row[None, :, :]) % ctx.p
    conv = _conv_last(scalars[:, None, :], row[None, :, :].repeat(scalars.shape[0], axis=0), ctx.k)
    return _reduce_axis(ctx, conv)


def _inv_scalar(ctx: FieldCtx, s: np.ndarray) -> np.ndarray:
    fq = Fq(ctx, tuple(int(x) for x in s))
    return np.array(fq.inverse().coeffs, dtype=np.int64)


def _rref_inplace(ctx: FieldCtx, a: np.ndarray) -> tuple[int, tuple[int, ...]]:
    """Reduce a (R, C, k) array to RREF in place; returns (rank, pivot columns)."""
    p = ctx.p
    rows, cols = a.shape[0], a.shape[1]
    pivots: list[int] = []
    r = 0
    if ctx.k == 1:
        m = a[..., 0]
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                m[[r, i]] = m[[i, r]]
            inv = pow(int(m[r, c]), -1, p)
            m[r] = (m[r] * inv) % p
            col_vals = m[:, c].copy()
            col_vals[r] = 0
            hit = np.nonzero(col_vals)[0]
            if hit.size:
                m[hit] = (m[hit] - np.outer(col_vals[hit], m[r])) % p
            pivots.append(c)
            r += 1
        return r, tuple(pivots)
    for c in range(cols):
        if r == rows:
            break
        sub = a[r:, c]
        nz = np.nonzero(sub.any(axis=-1))[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = _scalar_mul(ctx, _inv_scalar(ctx, a[r, c]), a[r])
        col_vals = a[:, c].copy()
        col_vals[r] = 0
        hit = np.nonzero(col_vals.any(axis=-1))[0]
        if hit.size:
            a[hit] = (a[hit] - _poly_outer(ctx, col_vals[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return r, tuple(pivots)


def _kernel_rows(ctx: FieldCtx, a: np.ndarray) -> np.ndarray:
    """Basis rows (d, C, k) of the right kernel of a (R, C, k) matrix."""
    work = a.copy()
    rank, pivots = _rref_inplace(ctx, work)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    out = np.zeros((len(free), cols, ctx.k), dtype=np.int64)
    for idx, f in enumerate(free):
        out[idx, f, 0] = 1
        for i, pc in enumerate(pivots):
            out[idx, pc] = (-work[i, f]) % ctx.p
    _rref_inplace(ctx, out)
    return out


class FqMatrix:
    """Immutable dense matrix over a FieldCtx."""

    __slots__ = ("ctx", "arr")

    def __init__(self, ctx: FieldCtx, arr: np.ndarray):
        if arr.ndim != 3 or arr.shape[2] != ctx.k:
            raise ValueError("internal array must have shape (rows, cols, k)")
        arr = np.ascontiguousarray(arr % ctx.p, dtype=np.int64)
        arr.flags.writeable = False
        self.ctx = ctx
        self.arr = arr

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows) -> "FqMatrix":
        """Build from nested lists; entries are ints or k-coefficient vectors."""
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        arr = np.zeros((nrows, ncols, ctx.k), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix literal")
            for j, entry in enumerate(row):
                arr[i, j] = ctx.elem(entry).coeffs
        return cls(ctx, arr)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "FqMatrix":
        arr = np.zeros((n, n, ctx.k), dtype=np.int64)
        arr[range(n), range(n), 0] = 1
        return cls(ctx, arr)

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "FqMatrix":
        return cls(ctx, np.zeros((rows, cols, ctx.k), dtype=np.int64))

    @classmethod
    def column(cls, ctx: FieldCtx, entries) -> "FqMatrix":
        return cls.from_rows(ctx, [[e] for e in entries])

    @classmethod
    def row(cls, ctx: FieldCtx, entries) -> "FqMatrix":
        return cls.from_rows(ctx, [list(entries)])

    # -- basic protocol ----------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.arr.shape[0]

    @property
    def cols(self) -> int:
        return self.arr.shape[1]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FqMatrix)
            and self.ctx == other.ctx
            and self.arr.shape == other.arr.shape
            and np.array_equal(self.arr, other.arr)
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.arr.shape, self.arr.tobytes()))

    def __repr__(self) -> str:
        return f"FqMatrix({self.ctx!r}, {self.to_literal()})"

    def entry(self, i: int, j: int) -> Fq:
        return Fq(self.ctx, tuple(int(c) for c in self.arr[i, j]))

    def to_literal(self):
        """Row-major nested lists; bare ints for prime fields, k-vectors otherwise."""
        if self.ctx.k == 1:
            return [[int(c) for c in row] for row in self.arr[..., 0]]
        return [[[int(x) for x in cell] for cell in row] for row in self.arr]

    # -- arithmetic ----------------------------------------------------------

    def _check_ctx(self, other: "FqMatrix") -> None:
        if self.ctx != other.ctx:
            raise DimensionMismatch("matrices live over different fields")

    def __add__(self, other: "FqMatrix") -> "FqMatrix":
        self._check_ctx(other)
        if self.arr.shape != other.arr.shape:
            raise DimensionMismatch("shape mismatch in addition")
        return FqMatrix(self.ctx, (self.arr + other.arr) % self.ctx.p)

    def __sub__(self, other: "FqMatrix") -> "FqMatrix":
        self._check_ctx(other)
        if self.arr.shape != other.arr.shape:
            raise DimensionMismatch("shape mismatch in subtraction")
        return FqMatrix(self.ctx, (self.arr - other.arr) % self.ctx.p)

    def __neg__(self) -> "FqMatrix":
        return FqMatrix(self.ctx, (-self.arr) % self.ctx.p)

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        self._check_ctx(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return FqMatrix(self.ctx, _matmul(self.ctx, self.arr, other.arr))

    def scale(self, s: Fq) -> "FqMatrix":
        return FqMatrix(
            self.ctx, _scalar_mul(self.ctx, np.array(s.coeffs, dtype=np.int64), self.arr)
        )

    @property
    def T(self) -> "FqMatrix":
        return FqMatrix(self.ctx, self.arr.transpose(1, 0, 2))

    def trace(self) -> Fq:
        n = min(self.rows, self.cols)
        diag = self.arr[range(n), range(n)].sum(axis=0) % self.ctx.p
        return Fq(self.ctx, tuple(int(c) for c in diag))

    def is_zero(self) -> bool:
        return not self.arr.any()

    def pow(self, e: int) -> "FqMatrix":
        if self.rows != self.cols:
            raise NotSquare("matrix power requires a square matrix")
        if e < 0:
            return self.inverse().pow(-e)
        result = FqMatrix.identity(self.ctx, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def rank(self) -> int:
        work = self.arr.copy()
        r, _ = _rref_inplace(self.ctx, work)
        return r

    def inverse(self) -> "FqMatrix":
        if self.rows != self.cols:
            raise NotSquare("inverse requires a square matrix")
        n = self.rows
        aug = np.concatenate([self.arr, FqMatrix.identity(self.ctx, n).arr], axis=1)
        r, pivots = _rref_inplace(self.ctx, aug)
        if r < n or any(pc >= n for pc in pivots):
            raise NotInvertible("matrix is singular")
        return FqMatrix(self.ctx, aug[:, n:])

    def kernel(self) -> "Subspace":
        return Subspace(self.ctx, self.cols, _kernel_rows(self.ctx, self.arr))

    def row_space(self) -> "Subspace":
        return Subspace(self.ctx, self.cols, self.arr)

    def flatten_row_major(self) -> "FqMatrix":
        """The 1 x (rows*cols) row vector of entries in row-major order."""
        return FqMatrix(self.ctx, self.arr.reshape(1, self.rows * self.cols, self.ctx.k))

    def kron(self, other: "FqMatrix") -> "FqMatrix":
        """Kronecker product: (A o B)[(i*rB+j),(i'*cB+j')] = A[i,i']*B[j,j']."""
        self._check_ctx(other)
        k = self.ctx.k
        raw = np.einsum("ija,klb->ikjlab", self.arr, other.arr)
        if k == 1:
            out = raw[..., 0, 0][..., None] % self.ctx.p
        else:
            conv = np.zeros(raw.shape[:4] + (2 * k - 1,), dtype=np.int64)
            for a in range(k):
                for b in range(k):
                    conv[..., a + b] += raw[..., a, b]
            out = _reduce_axis(self.ctx, conv)
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        return FqMatrix(self.ctx, out.reshape(rows, cols, out.shape[-1]))


class Subspace:
    """A subspace of row vectors, canonicalized to reduced row echelon form.

    Canonical form makes equality a literal array comparison and keeps
    serialized bases stable across runs.
    """

    __slots__ = ("ctx", "ambient", "basis", "pivots")

    def __init__(self, ctx: FieldCtx, ambient: int, rows: np.ndarray):
        rows = np.ascontiguousarray(rows % ctx.p, dtype=np.int64)
        if rows.ndim != 3:
            rows = rows.reshape(-1, ambient, ctx.k)
        if rows.shape[1] != ambient:
            raise DimensionMismatch("basis rows do not match the ambient dimension")
        work = rows.copy()
        rank, pivots = _rref_inplace(ctx, work)
        basis = work[:rank].copy()
        basis.flags.writeable = False
        self.ctx = ctx
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def zero(cls, ctx: FieldCtx, ambient: int) -> "Subspace":
        return cls(ctx, ambient, np.zeros((0, ambient, ctx.k), dtype=np.int64))

    @classmethod
    def full(cls, ctx: FieldCtx, ambient: int) -> "Subspace":
        return cls(ctx, ambient, FqMatrix.identity(ctx, ambient).arr)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ctx == other.ctx
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def basis_matrix(self) -> FqMatrix:
        return FqMatrix(self.ctx, self.basis.copy())

    def reduce_vector(self, vec: np.ndarray) -> np.ndarray:
        """Residue of a length-ambient row vector modulo this subspace."""
        ctx = self.ctx
        v = vec.reshape(self.ambient, ctx.k).copy() % ctx.p
        for i, pc in enumerate(self.pivots):
            c = v[pc].copy()
            if not c.any():
                continue
            if ctx.k == 1:
                v = (v - int(c[0]) * self.basis[i]) % ctx.p
            else:
                v = (v - _poly_outer(ctx, c[None, :], self.basis[i])[0]) % ctx.p
        return v

    def contains_vector(self, vec: np.ndarray) -> bool:
        return not self.reduce_vector(vec).any()

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient or self.ctx != other.ctx:
            raise DimensionMismatch("subspaces of different ambient spaces")
        stacked = np.concatenate([self.basis, other.basis], axis=0)
        return Subspace(self.ctx, self.ambient, stacked)

    def to_row_lists(self):
        mat = FqMatrix(self.ctx, self.basis.copy())
        return mat.to_literal()


# -- public operations ---------------------------------------------------------


def rref(M: FqMatrix) -> tuple[FqMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form with rank and pivot columns."""
    work = M.arr.copy()
    rank, pivots = _rref_inplace(M.ctx, work)
    return FqMatrix(M.ctx, work), rank, pivots


def solve(A: FqMatrix, b: FqMatrix) -> tuple[FqMatrix, Subspace]:
    """One exact solution of A x = b plus a kernel basis.

    b is a column vector (rows x 1).  Raises NoSolution if inconsistent.
    """
    if b.cols != 1 or b.rows != A.rows:
        raise DimensionMismatch("right-hand side must be a column of matching height")
    aug = np.concatenate([A.arr, b.arr], axis=1)
    rank, pivots = _rref_inplace(A.ctx, aug)
    if any(pc == A.cols for pc in pivots):
        raise NoSolution("inconsistent linear system")
    x = np.zeros((A.cols, 1, A.ctx.k), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc, 0] = aug[i, A.cols]
    return FqMatrix(A.ctx, x), A.kernel()


def char_poly(M: FqMatrix) -> FqPoly:
    """Characteristic polynomial det(xI - M), via a Hessenberg recurrence.

    Divisions only occur by nonzero pivots found with row/column swaps, so the
    computation is exact over any field.
    """
    if M.rows != M.cols:
        raise NotSquare("characteristic polynomial requires a square matrix")
    ctx = M.ctx
    n = M.rows
    if n == 0:
        return FqPoly.one(ctx)
    H = [[M.entry(i, j) for j in range(n)] for i in range(n)]
    for jc in range(n - 2):
        piv = next((i for i in range(jc + 1, n) if not H[i][jc].is_zero()), None)
        if piv is None:
            continue
        if piv != jc + 1:
            H[piv], H[jc + 1] = H[jc + 1], H[piv]
            for row in H:
                row[piv], row[jc + 1] = row[jc + 1], row[piv]
        inv = H[jc + 1][jc].inverse()
        for i in range(jc + 2, n):
            if H[i][jc].is_zero():
                continue
            t = H[i][jc] * inv
            for col in range(n):
                H[i][col] = H[i][col] - t * H[jc + 1][col]
            for rw in range(n):
                H[rw][jc + 1] = H[rw][jc + 1] + t * H[rw][i]
    one = ctx.one()
    polys = [FqPoly.one(ctx)]
    for m in range(1, n + 1):
        pm = FqPoly(ctx, [-H[m - 1][m - 1], one]) * polys[m - 1]
        prod = one
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1]
            coeff = H[i - 1][m - 1] * prod
            if not coeff.is_zero():
                pm = pm - polys[i - 1].scale(coeff)
        polys.append(pm)
    return polys[n]


def _vector_annihilator(M: FqMatrix, v: np.ndarray) -> FqPoly:
    """Monic minimal polynomial of M on the single vector v (a Krylov spin)."""
    ctx = M.ctx
    n = M.rows
    rows = [v.reshape(n, ctx.k) % ctx.p]
    while True:
        d = len(rows)
        w = _matmul(ctx, M.arr, rows[-1].reshape(n, 1, ctx.k)).reshape(n, ctx.k)
        stacked = np.stack(rows).transpose(1, 0, 2)
        aug = np.concatenate([stacked, w.reshape(n, 1, ctx.k)], axis=1)
        _, pivots = _rref_inplace(ctx, aug)
        if all(pc < d for pc in pivots):
            poly = [ctx.zero()] * d + [ctx.one()]
            for i, pc in enumerate(pivots):
                poly[pc] = -Fq(ctx, tuple(int(c) for c in aug[i, d]))
            return FqPoly(ctx, poly)
        # w independent of the earlier powers; n+1 vectors must be dependent
        rows.append(w)


def min_poly(M: FqMatrix, seed: int = 0) -> FqPoly:
    """Monic minimal polynomial, as an lcm of per-vector annihilators.

    Seeded random vectors are tried first, then standard basis vectors; the
    result is verified by substitution before returning.
    """
    if M.rows != M.cols:
        raise NotSquare("minimal polynomial requires a square matrix")
    ctx = M.ctx
    n = M.rows
    if n == 0:
        return FqPoly.one(ctx)
    rng = random.Random(seed)
    sources = []
    for _ in range(3):
        sources.append(
            np.array(
                [[rng.randrange(ctx.p) for _ in range(ctx.k)] for _ in range(n)],
                dtype=np.int64,
            )
        )
    eye = FqMatrix.identity(ctx, n).arr
    sources.extend(eye[:, i] for i in range(n))
    acc = FqPoly.one(ctx)
    for v in sources:
        if not np.asarray(v).any():
            continue
        if _poly_of_matrix(acc, M).is_zero():
            break
        ann = _vector_annihilator(M, np.asarray(v, dtype=np.int64))
        g = acc.gcd(ann)
        acc = (acc * ann) // g if not g.is_zero() else acc * ann
    if not _poly_of_matrix(acc, M).is_zero():
        raise AssertionError("minimal polynomial candidate fails substitution")
    return acc.monic()


def _poly_of_matrix(f: FqPoly, M: FqMatrix) -> FqMatrix:
    """Evaluate f at a square matrix by Horner's rule."""
    ctx = M.ctx
    n = M.rows
    acc = FqMatrix.zeros(ctx, n, n)
    eye = FqMatrix.identity(ctx, n)
    for c in reversed(f.coeffs):
        acc = acc @ M + eye.scale(c)
    return acc


def poly_of_matrix(f: FqPoly, M: FqMatrix) -> FqMatrix:
    if M.rows != M.cols:
        raise NotSquare("polynomial evaluation requires a square matrix")
    return _poly_of_matrix(f, M)


def eigenprojector(M: FqMatrix, alpha: Fq) -> FqMatrix:
    """Projector onto the generalized alpha-eigenspace, as a polynomial in M.

    With char poly (x-a)^m * q, q(a) != 0, the CRT lift h = q * (q^{-1} mod
    (x-a)^m) satisfies h = 1 mod (x-a)^m and h = 0 mod q; the projector is
    h(M).
    """
    if M.rows != M.cols:
        raise NotSquare("eigenprojector requires a square matrix")
    ctx = M.ctx
    if alpha.ctx != ctx:
        raise DimensionMismatch("eigenvalue lives in a different field")
    cp = char_poly(M)
    lin = FqPoly(ctx, [-alpha, ctx.one()])
    mult = 0
    rest = cp
    while True:
        quot, rem = divmod(rest, lin)
        if not rem.is_zero():
            break
        rest = quot
        mult += 1
    if mult == 0:
        raise NotAnEigenvalue(f"{alpha!r} is not a root of the characteristic polynomial")
    if rest.degree() <= 0:
        return FqMatrix.identity(ctx, M.rows)
    d = FqPoly.one(ctx)
    for _ in range(mult):
        d = d * lin
    g, u, _ = rest.ext_gcd(d)
    if not g.is_one():
        raise AssertionError("(x - alpha)^m and the cofactor are not coprime")
    return _poly_of_matrix(rest * u, M)


def eigenprojector_resolution(
    M: FqMatrix, lift: bool = True, field_cap: int = DEFAULT_FIELD_CAP
) -> tuple[FieldCtx, FqMatrix, list[tuple[Fq, FqMatrix, int]]]:
    """All generalized eigenprojectors of M over the splitting field.

    Returns (field, lifted matrix, [(alpha, projector, multiplicity)]).  With
    lift=False the characteristic polynomial must already split over M's own
    field, otherwise FieldTooSmall is raised.
    """
    cp = char_poly(M)
    target, roots = splitting_field_roots(cp, cap=field_cap)
    if target != M.ctx:
        if not lift:
            raise FieldTooSmall(
                "characteristic polynomial does not split; lift the matrix first"
            )
        M = lift_matrix(M, target)
    return target, M, [(a, eigenprojector(M, a), m) for a, m in roots]


def lift_matrix(M: FqMatrix, target: FieldCtx) -> FqMatrix:
    """Apply the deterministic field embedding entrywise."""
    if M.ctx == target:
        return M
    arr = np.zeros((M.rows, M.cols, target.k), dtype=np.int64)
    for i in range(M.rows):
        for j in range(M.cols):
            arr[i, j] = embed(M.entry(i, j), target).coeffs
    return FqMatrix(target, arr)


def trace_pairing(A: FqMatrix, B: FqMatrix) -> Fq:
    """The symmetric invariant pairing tr(AB)."""
    if A.ctx != B.ctx:
        raise DimensionMismatch("matrices live over different fields")
    if A.cols != B.rows or A.rows != B.cols:
        raise DimensionMismatch("trace pairing requires compatible square shapes")
    return (A @ B).trace()
