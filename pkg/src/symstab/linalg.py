"""Vectors, matrices and subspaces over F_q.

Row reduction, kernels, circulant construction, the zero-sum subspace and
the split of a symmetric matrix into D + D^T.  Everything at these sizes
(n <= ~50) is cheap; for q = 2 the elimination additionally runs on
integer-packed rows so large scan workloads stay word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionTooSmallError,
    InvalidInputError,
    NotSymmetricError,
    OddDiagonalError,
)
from .gf import FieldCtx, make_field


@dataclass(frozen=True)
class FqMat:
    """Dense row-major matrix over F_q with entries encoded as integers."""

    ctx: FieldCtx
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise InvalidInputError("matrix storage inconsistent with declared shape")
        q = self.ctx.q
        if any(not (0 <= e < q) for r in self.data for e in r):
            raise InvalidInputError(f"matrix entry outside [0, {q})")

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows) -> "FqMat":
        data = tuple(tuple(int(e) for e in r) for r in rows)
        n_rows = len(data)
        n_cols = len(data[0]) if data else 0
        return cls(ctx, n_rows, n_cols, data)

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "FqMat":
        return cls(ctx, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "FqMat":
        return cls(ctx, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def transpose(self) -> "FqMat":
        return FqMat(
            self.ctx,
            self.cols,
            self.rows,
            tuple(tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def add(self, other: "FqMat") -> "FqMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InvalidInputError("shape mismatch in matrix addition")
        add = self.ctx.add
        return FqMat(
            self.ctx,
            self.rows,
            self.cols,
            tuple(
                tuple(add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            ),
        )

    def matvec(self, v) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise InvalidInputError("vector length does not match column count")
        dot = self.ctx.dot
        return tuple(dot(row, v) for row in self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqMat)
            and self.ctx == other.ctx
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ctx, self.data))


def quad_form(ctx: FieldCtx, m: FqMat, v) -> int:
    """v^T m v in F_q."""
    return ctx.dot(v, m.matvec(v))


def bilinear(ctx: FieldCtx, u, m: FqMat, v) -> int:
    """u^T m v in F_q."""
    return ctx.dot(u, m.matvec(v))


# -- elimination -------------------------------------------------------------


def _rref_generic(ctx: FieldCtx, rows: list[list[int]], cols: int):
    sub, mul, inv = ctx.sub, ctx.mul, ctx.inv
    pivots: list[int] = []
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        scale = inv(rows[rank][col])
        if scale != 1:
            rows[rank] = [mul(scale, e) for e in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [sub(a, mul(f, b)) for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rank, rows, pivots


def _rref_gf2_packed(packed: list[int], cols: int):
    """Word-parallel reduced row echelon form on bit-packed GF(2) rows.

    Bit j of a packed row is column j.
    """
    pivots: list[int] = []
    rank = 0
    for col in range(cols):
        bit = 1 << col
        piv = next((r for r in range(rank, len(packed)) if packed[r] & bit), None)
        if piv is None:
            continue
        packed[rank], packed[piv] = packed[piv], packed[rank]
        for r in range(len(packed)):
            if r != rank and packed[r] & bit:
                packed[r] ^= packed[rank]
        pivots.append(col)
        rank += 1
    return rank, packed, pivots


def pack_gf2(vec) -> int:
    w = 0
    for j, e in enumerate(vec):
        if e:
            w |= 1 << j
    return w


def unpack_gf2(w: int, cols: int) -> tuple[int, ...]:
    return tuple((w >> j) & 1 for j in range(cols))


def rref(m: FqMat) -> tuple[int, FqMat, tuple[int, ...]]:
    """Reduced row echelon form; deterministic leftmost-pivot elimination.

    Returns (rank, reduced matrix, pivot columns).  Zero rows sink to the
    bottom; pivot entries are normalised to 1.
    """
    if m.ctx.q == 2:
        rank, packed, pivots = _rref_gf2_packed([pack_gf2(r) for r in m.data], m.cols)
        data = tuple(unpack_gf2(w, m.cols) for w in packed)
    else:
        rank, rows, pivots = _rref_generic(m.ctx, [list(r) for r in m.data], m.cols)
        data = tuple(tuple(r) for r in rows)
    return rank, FqMat(m.ctx, m.rows, m.cols, data), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^n given by an ordered, linearly independent basis.

    Bases produced by :func:`kernel` and :meth:`from_generators` are in
    reduced echelon form.  Other constructors (the canonical zero-sum basis,
    the generator-first symplectic dual basis) only guarantee linear
    independence, which is what gets validated here.
    """

    ctx: FieldCtx
    n: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.n:
                raise InvalidInputError("basis vector length differs from ambient dimension")
        if self.basis:
            m = FqMat.from_rows(self.ctx, self.basis)
            rank, _, _ = rref(m)
            if rank != len(self.basis):
                raise InvalidInputError("basis vectors are linearly dependent")

    @classmethod
    def from_generators(cls, ctx: FieldCtx, n: int, vectors) -> "Subspace":
        """Span of arbitrary vectors, basis normalised to reduced echelon form."""
        vecs = [tuple(v) for v in vectors]
        if not vecs:
            return cls(ctx, n, ())
        rank, red, _ = rref(FqMat.from_rows(ctx, vecs))
        return cls(ctx, n, red.data[:rank])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v) -> tuple[int, ...]:
        """Eliminate v against the basis (basis needs increasing pivots).

        The result is the canonical coset representative: zero iff v lies
        in the subspace.
        """
        ctx = self.ctx
        w = list(v)
        for b in self.basis:
            piv = next(j for j, e in enumerate(b) if e != 0)
            if w[piv] != 0:
                f = ctx.mul(w[piv], ctx.inv(b[piv]))
                w = [ctx.sub(a, ctx.mul(f, e)) for a, e in zip(w, b)]
        return tuple(w)

    def contains(self, v) -> bool:
        return all(e == 0 for e in self.reduce(v))

    def vectors(self):
        """Iterate all q^dim member vectors (coefficients in odometer order)."""
        ctx, n = self.ctx, self.n
        dims = self.dim
        coeffs = [0] * dims
        cur = [(0,) * n]

        def rec(i, acc):
            if i == dims:
                yield tuple(acc)
                return
            b = self.basis[i]
            for c in range(ctx.q):
                scaled = [ctx.add(a, ctx.mul(c, e)) for a, e in zip(acc, b)]
                yield from rec(i + 1, scaled)

        yield from rec(0, [0] * n)


def kernel(m: FqMat) -> Subspace:
    """Basis of {x : m.x = 0}, in reduced echelon form."""
    ctx = m.ctx
    rank, red, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg(red.data[i][f])
        basis.append(tuple(v))
    # Re-echelonize so pivots increase and the basis is canonical.
    return Subspace.from_generators(ctx, m.cols, basis)


def circulant(ctx: FieldCtx, first_row) -> FqMat:
    """Circulant matrix whose i-th row is the first row cyclically shifted right i times."""
    row = tuple(int(e) for e in first_row)
    n = len(row)
    data = tuple(tuple(row[(j - i) % n] for j in range(n)) for i in range(n))
    return FqMat(ctx, n, n, data)


def zero_sum_basis(ctx: FieldCtx, n: int) -> Subspace:
    """Canonical basis e_i - e_(i+1), i = 1..n-1, of {a : sum_i a_i = 0}.

    The consecutive-difference choice fixes the coefficient enumeration
    order everywhere downstream, so reports and witnesses are reproducible.
    """
    if n < 2:
        raise DimensionTooSmallError(f"zero-sum subspace needs n >= 2, got {n}")
    minus_one = ctx.neg(1)
    basis = []
    for i in range(n - 1):
        v = [0] * n
        v[i] = 1
        v[i + 1] = minus_one
        basis.append(tuple(v))
    return Subspace(ctx, n, tuple(basis))


def is_zero_sum_space(sub: Subspace) -> bool:
    """True iff sub is exactly {a : sum_i a_i = 0}."""
    if sub.dim != sub.n - 1:
        return False
    ctx = sub.ctx
    ones = (1,) * sub.n
    return all(ctx.dot(v, ones) == 0 for v in sub.basis)


def split_upper(L: FqMat) -> FqMat:
    """Matrix D with D + D^T = L: strict upper triangle of L, plus half the
    diagonal when the characteristic is odd.

    In characteristic 2 a nonzero diagonal entry of L admits no split and
    is rejected.
    """
    ctx = L.ctx
    if not L.is_symmetric():
        raise NotSymmetricError("phase split needs a symmetric matrix")
    n = L.rows
    if ctx.p == 2:
        bad = [i for i in range(n) if L.data[i][i] != 0]
        if bad:
            raise OddDiagonalError(
                f"diagonal entries at {bad} are nonzero; not of the form D + D^T in characteristic 2"
            )
        half_diag = [0] * n
    else:
        inv2 = ctx.inv(2 % ctx.q if ctx.r == 1 else 2)
        half_diag = [ctx.mul(inv2, L.data[i][i]) for i in range(n)]
    data = tuple(
        tuple(
            L.data[i][j] if j > i else (half_diag[i] if i == j else 0)
            for j in range(n)
        )
        for i in range(n)
    )
    return FqMat(ctx, n, n, data)


# -- .fqm text format --------------------------------------------------------
#
# line 1:            p r rows cols
# line 2 (r > 1):    modulus coefficients c_0 ... c_r
# then `rows` lines of `cols` integers in [0, q)


def dump_fqm(m: FqMat) -> str:
    ctx = m.ctx
    lines = [f"{ctx.p} {ctx.r} {m.rows} {m.cols}"]
    if ctx.r > 1:
        lines.append(" ".join(str(c) for c in ctx.modulus))
    lines.extend(" ".join(str(e) for e in row) for row in m.data)
    return "\n".join(lines) + "\n"


def parse_fqm(text: str) -> FqMat:
    tokens_by_line = [ln.split() for ln in text.splitlines() if ln.split()]
    if not tokens_by_line:
        raise InvalidInputError("empty .fqm input")
    flat = [tok for line in tokens_by_line for tok in line]
    try:
        nums = [int(t) for t in flat]
    except ValueError as e:
        raise InvalidInputError(f"non-integer token in .fqm input: {e}") from None
    if len(nums) < 4:
        raise InvalidInputError("truncated .fqm header")
    p, r, rows, cols = nums[:4]
    pos = 4
    modulus = None
    if r > 1:
        if len(nums) < pos + r + 1:
            raise InvalidInputError("truncated .fqm modulus line")
        modulus = nums[pos : pos + r + 1]
        pos += r + 1
    ctx = make_field(p, r, modulus)
    if len(nums) != pos + rows * cols:
        raise InvalidInputError(
            f"expected {rows * cols} matrix entries, found {len(nums) - pos}"
        )
    data = [nums[pos + i * cols : pos + (i + 1) * cols] for i in range(rows)]
    return FqMat.from_rows(ctx, data)


def load_fqm(path) -> FqMat:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_fqm(fh.read())


def save_fqm(m: FqMat, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_fqm(m))
