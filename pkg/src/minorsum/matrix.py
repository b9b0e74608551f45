"""Dense matrices over an exact ring, with fraction-free determinants and
Pfaffians.

Public index arguments (entry, row, column, submatrix, delete_rc, IndexSet)
are 1-based throughout, matching the determinant/Pfaffian notation the
package verifies.  Internal storage is a 0-based tuple of row tuples.

The integer ring gets dedicated inner loops for the determinant kernels
(same algorithm, no ring-method indirection); tests cross-check them
against the generic path.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .combinat import IndexSet, crossing_number, perfect_matchings
from .errors import (
    IndexRangeError,
    InexactDivisionError,
    RingMismatchError,
    ShapeError,
    SkewSymmetryError,
)
from .ring import IntegerRing, Ring, ring_from_json_tag


def _as_positions(dim: int, which) -> tuple:
    """Normalize a 1-based index collection to a 0-based position tuple."""
    if isinstance(which, IndexSet):
        idx = which.indices
    else:
        idx = tuple(which)
        for a, b in zip(idx, idx[1:]):
            if a >= b:
                raise IndexRangeError(f"indices {idx} not strictly increasing")
    if idx and (idx[0] < 1 or idx[-1] > dim):
        raise IndexRangeError(f"indices {idx} outside [1, {dim}]")
    return tuple(i - 1 for i in idx)


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "_rows")

    def __init__(self, ring: Ring, entries: Sequence[Sequence], ncols: int | None = None):
        rows = [tuple(ring.coerce(x) for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise ShapeError("ragged rows")
        else:
            width = 0
        if ncols is not None:
            if rows and ncols != width:
                raise ShapeError(f"ncols={ncols} but rows have width {width}")
            width = ncols
        self.ring = ring
        self.nrows = len(rows)
        self.ncols = width
        self._rows = tuple(rows)

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, ring: Ring, m: int, n: int) -> "Matrix":
        z = ring.zero
        return cls(ring, [[z] * n for _ in range(m)], ncols=n)

    # -- basic accessors ----------------------------------------------

    def entry(self, i: int, j: int):
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexRangeError(f"({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        if not 1 <= i <= self.nrows:
            raise IndexRangeError(f"row {i} outside 1..{self.nrows}")
        return self._rows[i - 1]

    def column(self, j: int) -> tuple:
        if not 1 <= j <= self.ncols:
            raise IndexRangeError(f"column {j} outside 1..{self.ncols}")
        return tuple(r[j - 1] for r in self._rows)

    def rows_as_lists(self) -> list:
        return [list(r) for r in self._rows]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self._rows))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.format(x) for x in row) for row in self._rows
        )
        return f"Matrix[{self.nrows}x{self.ncols} over {self.ring.name}]({body})"

    # -- arithmetic ----------------------------------------------------

    def _check_same_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("size mismatch in matrix addition")
        add = self.ring.add
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = self.ring, self.nrows, self.ncols
        out._rows = tuple(
            tuple(add(a, b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self._rows, other._rows)
        )
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("size mismatch in matrix subtraction")
        sub = self.ring.sub
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = self.ring, self.nrows, self.ncols
        out._rows = tuple(
            tuple(sub(a, b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self._rows, other._rows)
        )
        return out

    def __neg__(self) -> "Matrix":
        neg = self.ring.neg
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = self.ring, self.nrows, self.ncols
        out._rows = tuple(tuple(neg(a) for a in r) for r in self._rows)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_ring(other)
        if self.ncols != other.nrows:
            raise ShapeError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        ring = self.ring
        bt = list(zip(*other._rows)) if other._rows else [()] * other.ncols
        if isinstance(ring, IntegerRing):
            rows = tuple(
                tuple(sum(a * b for a, b in zip(r, col)) for col in bt)
                for r in self._rows
            )
        else:
            add, mul, zero = ring.add, ring.mul, ring.zero
            rows = []
            for r in self._rows:
                out_row = []
                for col in bt:
                    acc = zero
                    for a, b in zip(r, col):
                        acc = add(acc, mul(a, b))
                    out_row.append(acc)
                rows.append(tuple(out_row))
            rows = tuple(rows)
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = ring, self.nrows, other.ncols
        out._rows = rows
        return out

    def scale(self, scalar) -> "Matrix":
        c = self.ring.coerce(scalar)
        mul = self.ring.mul
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = self.ring, self.nrows, self.ncols
        out._rows = tuple(tuple(mul(c, a) for a in r) for r in self._rows)
        return out

    def transpose(self) -> "Matrix":
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = self.ring, self.ncols, self.nrows
        if self._rows:
            out._rows = tuple(zip(*self._rows))
        else:
            out._rows = tuple(() for _ in range(self.ncols)) if self.ncols else ()
        return out

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    # -- selection ------------------------------------------------------

    def submatrix(self, rows, cols) -> "Matrix":
        """Submatrix at 1-based row/column index collections (IndexSet or
        strictly increasing iterables)."""
        rp = _as_positions(self.nrows, rows)
        cp = _as_positions(self.ncols, cols)
        out = Matrix.__new__(Matrix)
        out.ring, out.nrows, out.ncols = self.ring, len(rp), len(cp)
        src = self._rows
        out._rows = tuple(tuple(src[r][c] for c in cp) for r in rp)
        return out

    def delete_rc(self, indices) -> "Matrix":
        """Remove the same 1-based rows and columns (Pfaffian minors Y(i,j))."""
        if not self.is_square():
            raise ShapeError("delete_rc needs a square matrix")
        drop = set(_as_positions(self.nrows, indices))
        keep = [i + 1 for i in range(self.nrows) if i not in drop]
        return self.submatrix(keep, keep)

    def columns_at(self, which) -> "Matrix":
        """All rows, 1-based columns `which` (A^I in minor-sum notation)."""
        return self.submatrix(range(1, self.nrows + 1), which)

    # -- predicates -----------------------------------------------------

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        ring = self.ring
        rows = self._rows
        for i in range(self.nrows):
            for j in range(i, self.nrows):
                if not ring.is_zero(ring.add(rows[i][j], rows[j][i])):
                    return False
        return True

    # -- kernels (delegate to module functions) --------------------------

    def det_cofactor(self):
        return det_cofactor(self)

    def det_bareiss(self):
        return det_bareiss(self)

    def pfaffian_matchings(self):
        return pfaffian_matchings(self)

    def pfaffian_laplace(self):
        return pfaffian_laplace(self)


# -- structured matrices -------------------------------------------------


def upper_ones(n: int, ring: Ring) -> Matrix:
    """U_n: 1 strictly above the diagonal, 0 elsewhere."""
    one, zero = ring.one, ring.zero
    return Matrix(ring, [[one if i < j else zero for j in range(n)] for i in range(n)], ncols=n)


def lower_ones(n: int, ring: Ring) -> Matrix:
    one, zero = ring.one, ring.zero
    return Matrix(ring, [[one if i > j else zero for j in range(n)] for i in range(n)], ncols=n)


def all_ones(n: int, ring: Ring) -> Matrix:
    one = ring.one
    return Matrix(ring, [[one] * n for _ in range(n)], ncols=n)


def identity(n: int, ring: Ring) -> Matrix:
    one, zero = ring.one, ring.zero
    return Matrix(ring, [[one if i == j else zero for j in range(n)] for i in range(n)], ncols=n)


_STRUCTURED = {"U": upper_ones, "L": lower_ones, "J": all_ones, "Id": identity}


def structured(kind: str, n: int, ring: Ring) -> Matrix:
    try:
        builder = _STRUCTURED[kind]
    except KeyError:
        raise ShapeError(f"unknown structured kind {kind!r}; use U, L, J, Id") from None
    return builder(n, ring)


def concat_columns(blocks: Sequence[Matrix]) -> Matrix:
    """Column concatenation of matrices with equal row counts and ring."""
    blocks = list(blocks)
    if not blocks:
        raise ShapeError("concat_columns needs at least one block")
    first = blocks[0]
    for b in blocks[1:]:
        if b.ring != first.ring:
            raise RingMismatchError("concat_columns blocks over different rings")
        if b.nrows != first.nrows:
            raise ShapeError("concat_columns blocks with different row counts")
    out = Matrix.__new__(Matrix)
    out.ring = first.ring
    out.nrows = first.nrows
    out.ncols = sum(b.ncols for b in blocks)
    out._rows = tuple(
        tuple(x for b in blocks for x in b._rows[r]) for r in range(first.nrows)
    )
    return out


def augment_hat(A: Matrix) -> Matrix:
    """(m+1) x (n+1) augmentation: A in the top-left block, 1 in the new
    bottom-right corner, 0 elsewhere.  Preserves the sum of maximal minors
    and makes the minor order even."""
    ring = A.ring
    zero, one = ring.zero, ring.one
    rows = [r + (zero,) for r in A._rows]
    rows.append(tuple([zero] * A.ncols + [one]))
    out = Matrix.__new__(Matrix)
    out.ring, out.nrows, out.ncols = ring, A.nrows + 1, A.ncols + 1
    out._rows = tuple(rows)
    return out


def outer_product(ring: Ring, a: Sequence, b: Sequence) -> Matrix:
    """Rank-one matrix (a_i * b_j)."""
    av = [ring.coerce(x) for x in a]
    bv = [ring.coerce(x) for x in b]
    mul = ring.mul
    out = Matrix.__new__(Matrix)
    out.ring, out.nrows, out.ncols = ring, len(av), len(bv)
    out._rows = tuple(tuple(mul(x, y) for y in bv) for x in av)
    return out


# -- determinants ----------------------------------------------------------


def _require_square(M: Matrix, what: str):
    if not M.is_square():
        raise ShapeError(f"{what} needs a square matrix, got {M.nrows}x{M.ncols}")


def _cof_int(rows, cols, r) -> int:
    if not cols:
        return 1
    row = rows[r]
    total = 0
    for t, c in enumerate(cols):
        a = row[c]
        if not a:
            continue
        d = _cof_int(rows, cols[:t] + cols[t + 1:], r + 1)
        if t % 2:
            total -= a * d
        else:
            total += a * d
    return total


def _cof_generic(rows, cols, r, ring):
    if not cols:
        return ring.one
    row = rows[r]
    total = ring.zero
    for t, c in enumerate(cols):
        a = row[c]
        if ring.is_zero(a):
            continue
        d = _cof_generic(rows, cols[:t] + cols[t + 1:], r + 1, ring)
        term = ring.mul(a, d)
        if t % 2:
            term = ring.neg(term)
        total = ring.add(total, term)
    return total


def det_cofactor(M: Matrix):
    """Determinant by cofactor expansion along the first row; det of the
    empty matrix is 1.  Reference oracle for everything else."""
    _require_square(M, "det_cofactor")
    cols = tuple(range(M.ncols))
    if isinstance(M.ring, IntegerRing):
        return _cof_int(M._rows, cols, 0)
    return _cof_generic(M._rows, cols, 0, M.ring)


def _bareiss_int(a) -> int | None:
    """Destructive fraction-free elimination; None when a pivot column is
    entirely zero.  Callers either fall back to the cofactor oracle or use
    the rank argument (zero column of bordered minors means singular)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return None
        ak = a[k]
        akk = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                q, rem = divmod(akk * ai[j] - aik * ak[j], prev)
                if rem:
                    raise InexactDivisionError("Bareiss step not exact")
                ai[j] = q
        prev = akk
    return sign * a[n - 1][n - 1]


def _bareiss_generic(a, ring):
    n = len(a)
    negative = False
    prev = ring.one
    is_zero, mul, sub, div = ring.is_zero, ring.mul, ring.sub, ring.exact_divide
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    negative = not negative
                    break
            else:
                return None
        ak = a[k]
        akk = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = div(sub(mul(akk, ai[j]), mul(aik, ak[j])), prev)
        prev = akk
    result = a[n - 1][n - 1]
    return ring.neg(result) if negative else result


def det_bareiss(M: Matrix):
    """Fraction-free Bareiss determinant with swap-and-negate row pivoting;
    falls back to det_cofactor when a pivot column is entirely zero."""
    _require_square(M, "det_bareiss")
    if M.nrows == 0:
        return M.ring.one
    work = [list(r) for r in M._rows]
    if isinstance(M.ring, IntegerRing):
        res = _bareiss_int(work)
    else:
        res = _bareiss_generic(work, M.ring)
    return det_cofactor(M) if res is None else res


# -- Pfaffians --------------------------------------------------------------


def _assert_pfaffian_input(Y: Matrix):
    _require_square(Y, "pfaffian")
    if Y.nrows % 2:
        raise SkewSymmetryError(f"Pfaffian needs even size, got {Y.nrows}")
    ring = Y.ring
    rows = Y._rows
    for i in range(Y.nrows):
        for j in range(i, Y.nrows):
            if not ring.is_zero(ring.add(rows[i][j], rows[j][i])):
                raise SkewSymmetryError(
                    f"not skew-symmetric at ({i + 1}, {j + 1})"
                )


def pfaffian_matchings(Y: Matrix):
    """Pfaffian straight from the definition: signed sum over perfect
    matchings, sign = (-1)^crossings.  Pf of the empty matrix is 1."""
    _assert_pfaffian_input(Y)
    n = Y.nrows
    ring = Y.ring
    rows = Y._rows
    is_zero, mul = ring.is_zero, ring.mul
    total = ring.zero
    for matching in perfect_matchings(n):
        prod = ring.one
        dead = False
        for i, j in matching.pairs:
            v = rows[i - 1][j - 1]
            if is_zero(v):
                dead = True
                break
            prod = mul(prod, v)
        if dead:
            continue
        if crossing_number(matching) % 2:
            prod = ring.neg(prod)
        total = ring.add(total, prod)
    return total


def pfaffian_laplace(Y: Matrix):
    """Pfaffian by expansion along the last surviving index, memoized on the
    bitmask of surviving 0-based indices."""
    _assert_pfaffian_input(Y)
    ring = Y.ring
    rows = Y._rows
    is_zero, mul, add, neg = ring.is_zero, ring.mul, ring.add, ring.neg
    memo = {}

    def pf(idx: tuple, mask: int):
        if not idx:
            return ring.one
        cached = memo.get(mask)
        if cached is not None:
            return cached
        last = idx[-1]
        rest = idx[:-1]
        total = ring.zero
        for t, j in enumerate(rest):
            v = rows[j][last]
            if is_zero(v):
                continue
            sub_idx = rest[:t] + rest[t + 1:]
            term = mul(v, pf(sub_idx, mask & ~(1 << j) & ~(1 << last)))
            if t % 2:
                term = neg(term)
            total = add(total, term)
        memo[mask] = total
        return total

    n = Y.nrows
    return pf(tuple(range(n)), (1 << n) - 1)


# -- JSON interchange --------------------------------------------------------


def matrix_to_json_dict(M: Matrix) -> dict:
    fmt = M.ring.format
    return {
        "ring": M.ring.to_json_tag(),
        "rows": M.nrows,
        "cols": M.ncols,
        "entries": [[fmt(x) for x in row] for row in M._rows],
    }


def matrix_from_json_dict(obj: dict) -> Matrix:
    try:
        ring = ring_from_json_tag(obj["ring"])
        nrows = obj["rows"]
        ncols = obj["cols"]
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"bad matrix JSON: {exc}") from None
    if len(entries) != nrows or any(len(r) != ncols for r in entries):
        raise ShapeError(
            f"entries shape does not match rows={nrows} cols={ncols}"
        )
    parsed = [
        [ring.parse(x) if isinstance(x, str) else ring.coerce(x) for x in row]
        for row in entries
    ]
    return Matrix(ring, parsed, ncols=ncols)
