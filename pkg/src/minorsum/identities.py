"""Minor-summation and Pfaffian factorization identities.

Every check_* function evaluates both sides of one identity through
independent code paths (subset sums of determinants on one side, a
Pfaffian or a single determinant on the other), compares them exactly,
and returns an IdentityReport.  Nothing here is numeric: all arithmetic
happens in the matrix ring.

Conventions, fixed once for the whole module:
  * matrices A, B are m x n; X is n x n; skew inputs Y are square;
  * A^I is the m x |I| matrix of A-columns picked by the 1-based set I,
    and det(A^I B^J) is the determinant of the column concatenation;
  * sign_from_binom2(k) is (-1)^binom(k,2), read off k mod 4.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .combinat import IndexSet, inv_word, subsets
from .errors import ParityError, RingMismatchError, ShapeError, SkewSymmetryError
from .matrix import (
    Matrix,
    _bareiss_generic,
    _bareiss_int,
    _cof_generic,
    _cof_int,
    all_ones,
    augment_hat,
    concat_columns,
    det_bareiss,
    det_cofactor,
    identity,
    matrix_to_json_dict,
    outer_product,
    pfaffian_matchings,
    upper_ones,
)
from .ring import IntegerRing, Ring

IDENTITY_IDS = (
    "okada",
    "byun",
    "main1",
    "main2",
    "rank1",
    "lemma-aux",
    "iswa",
    "lemma-iswa",
    "ab",
    "ab2",
    "cor7",
    "closed-forms",
    "det-pf-square",
    "cauchy-binet-pf",
)


@dataclass
class IdentityReport:
    identity_id: str
    input_digest: str
    lhs: str
    rhs: str
    passed: bool
    elapsed: float
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        # elapsed is intentionally omitted: serialized reports must be
        # byte-identical across runs
        return {
            "identity": self.identity_id,
            "digest": self.input_digest,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "details": self.details,
        }


def input_digest(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _digest_of(**named) -> str:
    payload = {}
    for key, value in named.items():
        if isinstance(value, Matrix):
            payload[key] = matrix_to_json_dict(value)
        else:
            payload[key] = value
    return input_digest(payload)


def sign_from_binom2(k: int) -> int:
    """(-1)^binom(k,2) from k mod 4 (binom(k,2) is odd iff k = 2, 3 mod 4)."""
    return -1 if k % 4 in (2, 3) else 1


def _apply_sign(ring: Ring, sign: int, x):
    return ring.neg(x) if sign < 0 else x


def _det_rows(ring: Ring, rows):
    """Determinant of a list-of-rows without building a Matrix; Bareiss
    with an integer fast path.  An exhausted pivot column means the leading
    columns are rank-deficient over these integral domains, so the value is
    0 without needing the cofactor fallback the public entry point keeps."""
    if not rows:
        return ring.one
    if isinstance(ring, IntegerRing):
        res = _bareiss_int([list(r) for r in rows])
        return 0 if res is None else res
    res = _bareiss_generic([list(r) for r in rows], ring)
    return ring.zero if res is None else res


def _check_abx(A: Matrix, B: Matrix, X: Matrix):
    if A.ring != B.ring or A.ring != X.ring:
        raise RingMismatchError("A, B, X must share a ring")
    if (A.nrows, A.ncols) != (B.nrows, B.ncols):
        raise ShapeError("A and B must have equal shape")
    if X.nrows != A.ncols or X.ncols != A.ncols:
        raise ShapeError(f"X must be {A.ncols}x{A.ncols}")
    if A.nrows < 1:
        raise ShapeError("need at least one row")


# -- minor sums and the f/g evaluators --------------------------------------


def minor_sum(A: Matrix):
    """Sum of all maximal minors det(A^I), |I| = row count; 0 when m > n."""
    m, n = A.nrows, A.ncols
    ring = A.ring
    total = ring.zero
    rows = A._rows
    for combo in combinations(range(n), m):
        sub = [[row[c] for c in combo] for row in rows]
        total = ring.add(total, _det_rows(ring, sub))
    return total


def f_AB(A: Matrix, B: Matrix, X: Matrix):
    """Even-order evaluator:
    sum over |I| = |J| = m/2 of det(X_IJ) * det(A^I B^J)."""
    _check_abx(A, B, X)
    m, n = A.nrows, A.ncols
    if m % 2:
        raise ParityError(f"f_AB needs even m, got {m}")
    ring = A.ring
    p = m // 2
    total = ring.zero
    arows, brows, xrows = A._rows, B._rows, X._rows
    combos = list(combinations(range(n), p))
    fast = isinstance(ring, IntegerRing)
    is_zero, add, mul = ring.is_zero, ring.add, ring.mul
    for I in combos:
        xrows_I = [xrows[i] for i in I]
        a_part = [[row[c] for c in I] for row in arows]
        for J in combos:
            dX = _det_rows(ring, [[xr[c] for c in J] for xr in xrows_I])
            if (not dX) if fast else is_zero(dX):
                continue
            cat = [a_part[r] + [brows[r][c] for c in J] for r in range(m)]
            dAB = _det_rows(ring, cat)
            total = add(total, mul(dX, dAB))
    return total


def g_AB(A: Matrix, B: Matrix, X: Matrix):
    """Odd-order evaluator: sum over |I| = (m+1)/2, |J| = (m-1)/2 of
    det(1 X_IJ) * det(A^I B^J), the bordered minor taking an all-ones
    first column."""
    _check_abx(A, B, X)
    m, n = A.nrows, A.ncols
    if m % 2 == 0:
        raise ParityError(f"g_AB needs odd m, got {m}")
    ring = A.ring
    p = (m + 1) // 2
    q = p - 1
    one = ring.one
    total = ring.zero
    arows, brows, xrows = A._rows, B._rows, X._rows
    fast = isinstance(ring, IntegerRing)
    is_zero, add, mul = ring.is_zero, ring.add, ring.mul
    for I in combinations(range(n), p):
        xrows_I = [xrows[i] for i in I]
        a_part = [[row[c] for c in I] for row in arows]
        for J in combinations(range(n), q):
            bordered = [[one] + [xr[c] for c in J] for xr in xrows_I]
            dX = _det_rows(ring, bordered)
            if (not dX) if fast else is_zero(dX):
                continue
            cat = [a_part[r] + [brows[r][c] for c in J] for r in range(m)]
            dAB = _det_rows(ring, cat)
            total = add(total, mul(dX, dAB))
    return total


# -- closed forms for near-triangular minors ---------------------------------


def _chain_ok_x1(I: tuple, J: tuple) -> bool:
    # interlacing 1 <= i1 <= j1 <= i2 <= ... <= j_l
    for k in range(len(I)):
        if I[k] > J[k]:
            return False
        if k + 1 < len(I) and J[k] > I[k + 1]:
            return False
    return True


def x1_closed_form(ring: Ring, diag: Sequence, I, J):
    """Closed form for det(X_IJ) where X has the given diagonal and ones
    strictly above it: a product of d_i and (1 - d_i) factors over the
    interlacing chain, else 0."""
    idx_i, idx_j = tuple(I), tuple(J)
    if len(idx_i) != len(idx_j):
        raise ShapeError("index sets must have equal size")
    if not _chain_ok_x1(idx_i, idx_j):
        return ring.zero
    d = [ring.coerce(x) for x in diag]
    val = ring.one
    prev_j = 0
    for k, i in enumerate(idx_i):
        if i == idx_j[k]:
            val = ring.mul(val, d[i - 1])
        if prev_j == i:
            val = ring.mul(val, ring.sub(ring.one, d[i - 1]))
        prev_j = idx_j[k]
    return val


def x2_closed_form(ring: Ring, diag: Sequence, I, J):
    """Closed form for det(1 X_IJ) with |I| = |J| + 1: (-1)^|J| times a
    product over the interlacing chain i1 <= j1 <= i2 <= ... <= i_{l+1},
    else 0."""
    idx_i, idx_j = tuple(I), tuple(J)
    ell = len(idx_j)
    if len(idx_i) != ell + 1:
        raise ShapeError("need |I| = |J| + 1")
    for k in range(ell):
        if not (idx_i[k] <= idx_j[k] <= idx_i[k + 1]):
            return ring.zero
    d = [ring.coerce(x) for x in diag]
    val = ring.one if ell % 2 == 0 else ring.neg(ring.one)
    for k in range(ell):
        if idx_i[k] == idx_j[k]:
            val = ring.mul(val, d[idx_i[k] - 1])
        if idx_j[k] == idx_i[k + 1]:
            val = ring.mul(val, ring.sub(ring.one, d[idx_i[k + 1] - 1]))
    return val


def ones_above_diagonal(ring: Ring, diag: Sequence) -> Matrix:
    """Upper-triangular matrix with the given diagonal and ones above it."""
    d = [ring.coerce(x) for x in diag]
    n = len(d)
    one, zero = ring.one, ring.zero
    rows = [
        [d[i] if i == j else (one if j > i else zero) for j in range(n)]
        for i in range(n)
    ]
    return Matrix(ring, rows, ncols=n)


def strict_upper_part(Y: Matrix) -> Matrix:
    """Copy of Y with everything on or below the diagonal zeroed."""
    zero = Y.ring.zero
    rows = [
        [Y._rows[i][j] if j > i else zero for j in range(Y.ncols)]
        for i in range(Y.nrows)
    ]
    return Matrix(Y.ring, rows, ncols=Y.ncols)


# -- interlacing-chain sums (theorem AB family) -------------------------------


def _chain_sum(first: Matrix, second: Matrix, weak_within: bool):
    """Sum of det over interleaved column picks first^{c1} second^{c2}
    first^{c3} ... with m columns total.

    weak_within=True:  c1 <= c2 < c3 <= c4 < ...  (weak inside a pair,
                       strict between pairs)
    weak_within=False: c1 < c2 <= c3 < c4 <= ...
    """
    m, n = first.nrows, first.ncols
    ring = first.ring
    srcs = [first._rows if t % 2 == 0 else second._rows for t in range(m)]
    total = ring.zero
    add = ring.add

    def chains(pos: int, prev: int):
        if pos == m:
            yield ()
            return
        if pos == 0:
            lo = 0
        else:
            within = pos % 2 == 1
            weak = weak_within if within else not weak_within
            lo = prev if weak else prev + 1
        for c in range(lo, n):
            for tail in chains(pos + 1, c):
                yield (c,) + tail

    for chain in chains(0, 0):
        rows = [[srcs[t][r][chain[t]] for t in range(m)] for r in range(m)]
        total = add(total, _det_rows(ring, rows))
    return total


# -- checkers -----------------------------------------------------------------


def _report(identity_id, digest, ring, lhs, rhs, passed, t0, details=None):
    return IdentityReport(
        identity_id=identity_id,
        input_digest=digest,
        lhs=ring.format(lhs),
        rhs=ring.format(rhs),
        passed=passed,
        elapsed=time.perf_counter() - t0,
        details=details or {},
    )


def check_okada(A: Matrix) -> IdentityReport:
    """Minor summation: sum of maximal minors equals Pf(AUA^t - AU^tA^t),
    with the hat augmentation for odd m.  For m > n both sides must be 0."""
    t0 = time.perf_counter()
    if A.nrows < 1:
        raise ShapeError("need at least one row")
    ring = A.ring
    details = {}
    passed = True
    if A.nrows % 2 == 0:
        work = A
    else:
        work = augment_hat(A)
        raw = minor_sum(A)
        details["unaugmented_minor_sum"] = ring.format(raw)
    lhs = minor_sum(work)
    if "unaugmented_minor_sum" in details:
        passed = passed and lhs == raw
    U = upper_ones(work.ncols, ring)
    T = work @ U @ work.T - work @ U.T @ work.T
    rhs = pfaffian_matchings(T)
    passed = passed and lhs == rhs
    if A.nrows > A.ncols:
        # empty minor sum: both sides are required to vanish
        passed = passed and ring.is_zero(lhs) and ring.is_zero(rhs)
        details["overdetermined"] = True
    return _report(
        "okada", _digest_of(A=A), ring, lhs, rhs, passed, t0, details
    )


def check_byun(A: Matrix) -> IdentityReport:
    """Squared minor sum equals det(A (2U + Id) A^t), both parities of m."""
    t0 = time.perf_counter()
    if A.nrows < 1:
        raise ShapeError("need at least one row")
    ring = A.ring
    s = minor_sum(A)
    lhs = ring.mul(s, s)
    core = upper_ones(A.ncols, ring).scale(ring.from_int(2)) + identity(A.ncols, ring)
    rhs = det_bareiss(A @ core @ A.T)
    details = {"minor_sum": ring.format(s)}
    if A.nrows > A.ncols:
        details["overdetermined"] = True
    return _report(
        "byun", _digest_of(A=A), ring, lhs, rhs, lhs == rhs, t0, details
    )


def check_main2(A: Matrix, B: Matrix, X: Matrix) -> IdentityReport:
    """Pfaffian Cauchy-Binet: Pf(AXB^t - BX^tA^t) equals
    (-1)^binom(m/2,2) * f_AB(X), m even."""
    t0 = time.perf_counter()
    _check_abx(A, B, X)
    m = A.nrows
    if m % 2:
        raise ParityError(f"main2 needs even m, got {m}")
    ring = A.ring
    lhs = pfaffian_matchings(A @ X @ B.T - B @ X.T @ A.T)
    rhs = _apply_sign(ring, sign_from_binom2(m // 2), f_AB(A, B, X))
    return _report(
        "main2", _digest_of(A=A, B=B, X=X), ring, lhs, rhs, lhs == rhs, t0
    )


def check_main1(A: Matrix, B: Matrix, X: Matrix) -> IdentityReport:
    """Main factorization: det(AXB^t + B(J - X^t)A^t) splits as
    f_AB(X) f_BA(J - X^t) for even m and g_AB(X) g_BA(J - X^t) for odd m.
    Odd m also cross-checks the equivalent form
    (-1)^((m-1)/2) g_AB(X) g_BA(X^t)."""
    t0 = time.perf_counter()
    _check_abx(A, B, X)
    m, n = A.nrows, A.ncols
    ring = A.ring
    J_n = all_ones(n, ring)
    lhs = det_bareiss(A @ X @ B.T + B @ (J_n - X.T) @ A.T)
    details = {}
    if m % 2 == 0:
        rhs = ring.mul(f_AB(A, B, X), f_AB(B, A, J_n - X.T))
        passed = lhs == rhs
    else:
        gx = g_AB(A, B, X)
        rhs = ring.mul(gx, g_AB(B, A, J_n - X.T))
        alt = _apply_sign(
            ring,
            -1 if ((m - 1) // 2) % 2 else 1,
            ring.mul(gx, g_AB(B, A, X.T)),
        )
        details["alt_rhs"] = ring.format(alt)
        passed = lhs == rhs and rhs == alt
    return _report(
        "main1", _digest_of(A=A, B=B, X=X), ring, lhs, rhs, passed, t0, details
    )


def check_rank1(Y: Matrix, a: Sequence, b: Sequence) -> IdentityReport:
    """Rank-one perturbation of a skew matrix: det(Y + ab^t) in terms of
    Pfaffian minors of Y.  When a = b the even case must collapse to
    det(Y) and the odd case to a perfect square (checked as sub-assertions)."""
    t0 = time.perf_counter()
    ring = Y.ring
    m = Y.nrows
    if not Y.is_skew_symmetric():
        raise SkewSymmetryError("rank1 needs a skew-symmetric Y")
    av = [ring.coerce(x) for x in a]
    bv = [ring.coerce(x) for x in b]
    if len(av) != m or len(bv) != m:
        raise ShapeError("vector lengths must match the matrix size")
    M = outer_product(ring, av, bv)
    lhs = det_bareiss(Y + M)
    details = {}
    if m % 2 == 0:
        pf = pfaffian_matchings(Y)
        acc = ring.zero
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                w = ring.sub(
                    ring.mul(av[i - 1], bv[j - 1]), ring.mul(av[j - 1], bv[i - 1])
                )
                if ring.is_zero(w):
                    continue
                term = ring.mul(w, pfaffian_matchings(Y.delete_rc((i, j))))
                if (i + j - 1) % 2:
                    term = ring.neg(term)
                acc = ring.add(acc, term)
        rhs = ring.mul(pf, ring.add(pf, acc))
        passed = lhs == rhs
        if av == bv:
            dy = det_bareiss(Y)
            details["symmetric_det_Y"] = ring.format(dy)
            passed = passed and lhs == dy and rhs == dy
    else:
        # pfaffian_matchings(delete_rc) validates skewness of Y on the way
        fa = ring.zero
        fb = ring.zero
        for i in range(1, m + 1):
            pf_i = pfaffian_matchings(Y.delete_rc((i,)))
            ta = ring.mul(av[i - 1], pf_i)
            tb = ring.mul(bv[i - 1], pf_i)
            if (i - 1) % 2:
                ta = ring.neg(ta)
                tb = ring.neg(tb)
            fa = ring.add(fa, ta)
            fb = ring.add(fb, tb)
        rhs = ring.mul(fa, fb)
        passed = lhs == rhs
        if av == bv:
            details["symmetric_square_root"] = ring.format(fa)
            passed = passed and fa == fb
    digest = _digest_of(
        Y=Y, a=[ring.format(x) for x in av], b=[ring.format(x) for x in bv]
    )
    return _report("rank1", digest, ring, lhs, rhs, passed, t0, details)


def check_lemma_aux(A: Matrix, B: Matrix, X: Matrix) -> IdentityReport:
    """Auxiliary odd-order lemma: with Y = AXB^t - BX^tA^t,
    sum_i (-1)^(i-1) (row sum of A_i) Pf(Y(i)) equals
    (-1)^binom((m-1)/2, 2) * g_AB(X)."""
    t0 = time.perf_counter()
    _check_abx(A, B, X)
    m = A.nrows
    if m % 2 == 0:
        raise ParityError(f"lemma-aux needs odd m, got {m}")
    ring = A.ring
    Y = A @ X @ B.T - B @ X.T @ A.T
    lhs = ring.zero
    for i in range(1, m + 1):
        row_total = ring.zero
        for v in A.row(i):
            row_total = ring.add(row_total, v)
        term = ring.mul(row_total, pfaffian_matchings(Y.delete_rc((i,))))
        if (i - 1) % 2:
            term = ring.neg(term)
        lhs = ring.add(lhs, term)
    rhs = _apply_sign(ring, sign_from_binom2((m - 1) // 2), g_AB(A, B, X))
    return _report(
        "lemma-aux", _digest_of(A=A, B=B, X=X), ring, lhs, rhs, lhs == rhs, t0
    )


def check_iswa(A: Matrix, Y: Matrix) -> IdentityReport:
    """Pfaffian minor summation: sum over |I| = m of Pf(Y_II) det(A^I)
    equals Pf(A Y A^t), for even m and skew n x n Y."""
    t0 = time.perf_counter()
    m, n = A.nrows, A.ncols
    if m % 2:
        raise ParityError(f"iswa needs even m, got {m}")
    if A.ring != Y.ring:
        raise RingMismatchError("A and Y must share a ring")
    if Y.nrows != n or Y.ncols != n:
        raise ShapeError(f"Y must be {n}x{n}")
    ring = A.ring
    arows = A._rows
    lhs = ring.zero
    for I in subsets(n, m):
        pf_part = pfaffian_matchings(Y.submatrix(I, I))
        if ring.is_zero(pf_part):
            continue
        cols = [i - 1 for i in I]
        d = _det_rows(ring, [[row[c] for c in cols] for row in arows])
        lhs = ring.add(lhs, ring.mul(pf_part, d))
    rhs = pfaffian_matchings(A @ Y @ A.T)
    return _report(
        "iswa", _digest_of(A=A, Y=Y), ring, lhs, rhs, lhs == rhs, t0
    )


def check_lemma_iswa(Y: Matrix, I) -> IdentityReport:
    """Split lemma: with X the strict upper part of skew Y and |I| = m even,
    sum over disjoint J u K = I, |J| = |K| = m/2 of
    (-1)^(binom(m/2,2) + inv(JK)) det(X_JK) equals Pf(Y_II)."""
    t0 = time.perf_counter()
    if not isinstance(I, IndexSet):
        I = IndexSet(Y.nrows, I)
    m = len(I)
    if m % 2:
        raise ParityError(f"lemma-iswa needs an even index set, got size {m}")
    ring = Y.ring
    X = strict_upper_part(Y)
    base = sign_from_binom2(m // 2)
    lhs = ring.zero
    members = I.indices
    for J in combinations(members, m // 2):
        K = tuple(v for v in members if v not in J)
        d = det_bareiss(X.submatrix(J, K))
        if ring.is_zero(d):
            continue
        sign = base if inv_word(J, K) % 2 == 0 else -base
        lhs = ring.add(lhs, _apply_sign(ring, sign, d))
    rhs = pfaffian_matchings(Y.submatrix(I, I))
    digest = _digest_of(Y=Y, I=list(I.indices))
    return _report("lemma-iswa", digest, ring, lhs, rhs, lhs == rhs, t0)


def check_ab(A: Matrix, B: Matrix) -> IdentityReport:
    """Interlacing-chain factorization of det(AUB^t + BUA^t + AB^t):
    (weak-within chain sum, A leading) times (strict-within chain sum,
    B leading).  Each factor is also cross-checked against the f/g
    evaluators at X = U + Id and X = U."""
    t0 = time.perf_counter()
    if A.ring != B.ring:
        raise RingMismatchError("A and B must share a ring")
    if (A.nrows, A.ncols) != (B.nrows, B.ncols):
        raise ShapeError("A and B must have equal shape")
    m, n = A.nrows, A.ncols
    if m < 1:
        raise ShapeError("need at least one row")
    ring = A.ring
    U = upper_ones(n, ring)
    lhs = det_bareiss(A @ U @ B.T + B @ U @ A.T + A @ B.T)
    factor1 = _chain_sum(A, B, weak_within=True)
    factor2 = _chain_sum(B, A, weak_within=False)
    rhs = ring.mul(factor1, factor2)
    passed = lhs == rhs
    UI = U + identity(n, ring)
    if m % 2 == 0:
        s = sign_from_binom2(m // 2)
        c1 = _apply_sign(ring, s, f_AB(A, B, UI)) == factor1
        c2 = _apply_sign(ring, s, f_AB(B, A, U)) == factor2
    else:
        p = (m + 1) // 2
        s = sign_from_binom2(p) * (-1 if ((m - 1) // 2) % 2 else 1)
        c1 = _apply_sign(ring, s, g_AB(A, B, UI)) == factor1
        c2 = _apply_sign(ring, s, g_AB(B, A, U)) == factor2
    passed = passed and c1 and c2
    details = {
        "factor1": ring.format(factor1),
        "factor2": ring.format(factor2),
        "factor1_matches_fg": c1,
        "factor2_matches_fg": c2,
    }
    return _report(
        "ab", _digest_of(A=A, B=B), ring, lhs, rhs, passed, t0, details
    )


def check_ab2(A: Matrix, B: Matrix) -> IdentityReport:
    """Chain sums as Pfaffians, even m: the strict-within chain sum equals
    Pf(AUB^t - BU^tA^t) and the weak-within chain sum equals
    Pf(A(U+Id)B^t - B(U^t+Id)A^t)."""
    t0 = time.perf_counter()
    if A.ring != B.ring:
        raise RingMismatchError("A and B must share a ring")
    if (A.nrows, A.ncols) != (B.nrows, B.ncols):
        raise ShapeError("A and B must have equal shape")
    m, n = A.nrows, A.ncols
    if m % 2:
        raise ParityError(f"ab2 needs even m, got {m}")
    ring = A.ring
    U = upper_ones(n, ring)
    Id = identity(n, ring)
    strict_sum = _chain_sum(A, B, weak_within=False)
    weak_sum = _chain_sum(A, B, weak_within=True)
    pf_strict = pfaffian_matchings(A @ U @ B.T - B @ U.T @ A.T)
    pf_weak = pfaffian_matchings(
        A @ (U + Id) @ B.T - B @ (U.T + Id) @ A.T
    )
    passed = strict_sum == pf_strict and weak_sum == pf_weak
    details = {
        "weak_chain_sum": ring.format(weak_sum),
        "weak_chain_pf": ring.format(pf_weak),
    }
    return _report(
        "ab2", _digest_of(A=A, B=B), ring, strict_sum, pf_strict, passed, t0, details
    )


def check_cor7(A: Matrix, X: Matrix) -> IdentityReport:
    """Symmetric corollary, even m: det(A(X + J - X^t)A^t) equals
    det(A(X - X^t)A^t) equals f_AA(X)^2."""
    t0 = time.perf_counter()
    m, n = A.nrows, A.ncols
    if m % 2:
        raise ParityError(f"cor7 needs even m, got {m}")
    if A.ring != X.ring:
        raise RingMismatchError("A and X must share a ring")
    if X.nrows != n or X.ncols != n:
        raise ShapeError(f"X must be {n}x{n}")
    ring = A.ring
    J_n = all_ones(n, ring)
    d1 = det_bareiss(A @ (X + J_n - X.T) @ A.T)
    d2 = det_bareiss(A @ (X - X.T) @ A.T)
    fa = f_AB(A, A, X)
    sq = ring.mul(fa, fa)
    passed = d1 == d2 == sq
    details = {"det_skew_part": ring.format(d2), "f_AA": ring.format(fa)}
    return _report(
        "cor7", _digest_of(A=A, X=X), ring, d1, sq, passed, t0, details
    )


def check_closed_forms(ring: Ring, diag: Sequence) -> IdentityReport:
    """Exhaustive comparison of the x1/x2 closed forms against cofactor
    determinants of the ones-above-diagonal matrix, over every admissible
    (I, J) pair for the given diagonal."""
    t0 = time.perf_counter()
    d = [ring.coerce(x) for x in diag]
    n = len(d)
    X = ones_above_diagonal(ring, d)
    one = ring.one
    checked = 0
    mismatches = []
    for ell in range(n + 1):
        for I in subsets(n, ell):
            for J in subsets(n, ell):
                expect = det_cofactor(X.submatrix(I, J))
                got = x1_closed_form(ring, d, I, J)
                checked += 1
                if got != expect:
                    mismatches.append(
                        {
                            "form": "x1",
                            "I": list(I.indices),
                            "J": list(J.indices),
                            "formula": ring.format(got),
                            "det": ring.format(expect),
                        }
                    )
    for ell in range(n):
        for I in subsets(n, ell + 1):
            for J in subsets(n, ell):
                sub = X.submatrix(I, J)
                bordered = Matrix(
                    ring,
                    [(one,) + row for row in sub._rows],
                    ncols=ell + 1,
                )
                expect = det_cofactor(bordered)
                got = x2_closed_form(ring, d, I, J)
                checked += 1
                if got != expect:
                    mismatches.append(
                        {
                            "form": "x2",
                            "I": list(I.indices),
                            "J": list(J.indices),
                            "formula": ring.format(got),
                            "det": ring.format(expect),
                        }
                    )
    digest = input_digest(
        {"ring": ring.to_json_tag(), "diag": [ring.format(x) for x in d]}
    )
    report = IdentityReport(
        identity_id="closed-forms",
        input_digest=digest,
        lhs=f"{checked} closed-form values",
        rhs=f"{checked - len(mismatches)} matching cofactor determinants",
        passed=not mismatches,
        elapsed=time.perf_counter() - t0,
        details={"checked": checked, "mismatches": mismatches},
    )
    return report


def check_det_pf_square(Y: Matrix) -> IdentityReport:
    """det(Y) = Pf(Y)^2 for skew Y of even size."""
    t0 = time.perf_counter()
    ring = Y.ring
    lhs = det_cofactor(Y)
    pf = pfaffian_matchings(Y)
    rhs = ring.mul(pf, pf)
    return _report(
        "det-pf-square",
        _digest_of(Y=Y),
        ring,
        lhs,
        rhs,
        lhs == rhs,
        t0,
        {"pfaffian": ring.format(pf)},
    )


def check_cauchy_binet_pf(A: Matrix, B: Matrix) -> IdentityReport:
    """Specialization X = Id: Pf(AB^t - BA^t) equals
    (-1)^binom(m/2,2) * sum over |I| = m/2 of det(A^I B^I)."""
    t0 = time.perf_counter()
    if A.ring != B.ring:
        raise RingMismatchError("A and B must share a ring")
    if (A.nrows, A.ncols) != (B.nrows, B.ncols):
        raise ShapeError("A and B must have equal shape")
    m, n = A.nrows, A.ncols
    if m % 2:
        raise ParityError(f"cauchy-binet-pf needs even m, got {m}")
    ring = A.ring
    lhs = pfaffian_matchings(A @ B.T - B @ A.T)
    acc = ring.zero
    for I in combinations(range(1, n + 1), m // 2):
        d = det_bareiss(concat_columns([A.columns_at(I), B.columns_at(I)]))
        acc = ring.add(acc, d)
    rhs = _apply_sign(ring, sign_from_binom2(m // 2), acc)
    return _report(
        "cauchy-binet-pf", _digest_of(A=A, B=B), ring, lhs, rhs, lhs == rhs, t0
    )
