"""Exact linear algebra over the shipped rings.

Matrices are lists of rows of RingElements.  Three pivoting strategies are
used, matching where each ring is effective:

* fields -- ordinary Gaussian elimination;
* local rings -- unit-pivot elimination (an invertible step always has a
  unit somewhere in the active column, by locality);
* the valuation ring Z_(p) -- valuation-pivoted elimination, giving a
  Smith-style kernel basis that is saturated (no kernel vector is p times
  something outside the span).
"""

from __future__ import annotations

from .errors import NotInvertible


def identity_matrix(ring, n):
    return [
        [ring.one if i == j else ring.zero for j in range(n)]
        for i in range(n)
    ]


def zero_matrix(ring, rows, cols):
    return [[ring.zero for _ in range(cols)] for _ in range(rows)]


def mat_mul(a, b, ring):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zero_matrix(ring, rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] = oi[j] + c * bk[j]
    return out

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_vec(a, v, ring):
    out = []
    for row in a:
        s = ring.zero
        for c, x in zip(row, v):
            if c and x:
                s = s + c * x
        out.append(s)
    return out


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_nilpotent_matrix(m, ring, bound):
    """Check M^bound = 0 by repeated squaring (index <= size for nilpotents)."""
    power = m
    steps = max(1, (bound - 1).bit_length()) if bound > 1 else 1
    for _ in range(steps):
        if all(not c for row in power for c in row):
            return True
        power = mat_mul(power, power, ring)
    return all(not c for row in power for c in row)


def solve_unit_pivot(matrix, rhs, ring):
    """Solve M x = b over a local ring by unit-pivot Gaussian elimination.

    ``rhs`` may be a vector or a matrix of column vectors.  Raises
    NotInvertible when no unit pivot exists in some column (the system is
    then not uniquely solvable over the local ring).
    """
    n = len(matrix)
    vec = not isinstance(rhs[0], list)
    aug = [
        list(matrix[i]) + ([rhs[i]] if vec else list(rhs[i]))
        for i in range(n)
    ]
    width = len(aug[0])
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if ring.is_unit(aug[r][col]):
                pivot_row = r
                break
        if pivot_row is None:
            raise NotInvertible(f"no unit pivot in column {col}")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = ring.inv(aug[col][col])
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    if vec:
        return [aug[i][n] for i in range(n)]
    return [[aug[i][j] for j in range(n, width)] for i in range(n)]


def solve_field(matrix, rhs, field):
    """Solve M x = b over a field; returns one solution or None."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for col in range(cols):
        pr = None
        for i in range(r, rows):
            if aug[i][col]:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = field.inv(aug[r][col])
        aug[r] = [c * inv for c in aug[r]]
        for i in range(rows):
            if i != r and aug[i][col]:
                c = aug[i][col]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [field.zero] * cols
    for i, col in enumerate(pivots):
        x[col] = aug[i][cols]
    return x


def rank_over_field(matrix, field):
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pr = None
        for i in range(rank, nrows):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [c * inv for c in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def kernel_over_field(matrix, field):
    """Basis of the right kernel of a matrix over a field."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [c * inv for c in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def kernel_saturated_dvr(matrix, ring):
    """Saturated kernel basis of a square matrix over LocalizedIntegers(p).

    Diagonalizes M = U D V^-1 by valuation-pivoted row and column
    operations while tracking the column transform V; the kernel of M is
    spanned by the columns of V matching zero diagonal entries, and that
    basis is saturated in the ambient free module.
    """
    n = len(matrix)
    m = [list(r) for r in matrix]
    v = identity_matrix(ring, n)

    def col_swap(a, i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def col_addmul(a, dst, src, c):
        for row in a:
            row[dst] = row[dst] + c * row[src]

    rank = 0
    for k in range(n):
        best = None
        best_val = None
        for i in range(k, n):
            for j in range(k, n):
                if m[i][j]:
                    val = ring.valuation(m[i][j])
                    if best_val is None or val < best_val:
                        best, best_val = (i, j), val
                        if val == 0:
                            break
            if best_val == 0:
                break
        if best is None:
            break
        bi, bj = best
        m[k], m[bi] = m[bi], m[k]
        if bj != k:
            col_swap(m, k, bj)
            col_swap(v, k, bj)
        pk = ring.p**best_val
        # dividing by p^best_val stays in the ring: every remaining entry
        # has valuation >= best_val by the pivot choice
        pivot_unit = ring.element(m[k][k].payload / pk)
        inv_unit = ring.inv(pivot_unit)
        for i in range(k + 1, n):
            if m[i][k]:
                c = ring.element((m[i][k] * inv_unit).payload / pk)
                m[i] = [a - c * b for a, b in zip(m[i], m[k])]
        for j in range(k + 1, n):
            if m[k][j]:
                c = ring.element((m[k][j] * inv_unit).payload / pk)
                col_addmul(m, j, k, -c)
                col_addmul(v, j, k, -c)
        rank += 1
    return [[v[i][j] for i in range(n)] for j in range(rank, n)]


def berkowitz_char_poly(matrix, ring):
    """Division-free characteristic polynomial, low-to-high coefficients.

    Returns the coefficients of det(T*Id - M) via the Berkowitz vector
    recurrence; works over any commutative ring.
    """
    n = len(matrix)
    if n == 0:
        return [ring.one]
    # vector of char-poly coefficients, high-to-low, length grows with i
    c = [ring.one, -matrix[0][0]]
    for i in range(1, n):
        a = matrix[i][i]
        row = matrix[i][:i]
        col = [matrix[r][i] for r in range(i)]
        sub = [matrix[r][:i] for r in range(i)]
        # Toeplitz column: 1, -a, -(R S^0 C), -(R S^1 C), ...
        toep = [ring.one, -a]
        vec = col
        for _ in range(i):
            s = ring.zero
            for x, y in zip(row, vec):
                s = s + x * y
            toep.append(-s)
            vec = mat_vec(sub, vec, ring)
        new_c = []
        for k in range(i + 2):
            s = ring.zero
            for j in range(min(k, len(toep) - 1) + 1):
                if k - j < len(c):
                    s = s + toep[j] * c[k - j]
            new_c.append(s)
        c = new_c
    return list(reversed(c))


def det_dp_expansion(matrix, ring):
    """Determinant by dynamic programming over column subsets.

    Division-free, O(2^n * n); used for rings that are not domains.
    """
    n = len(matrix)
    if n == 0:
        return ring.one
    # state: frozen as bitmask of used columns after processing popcount rows
    prev = {0: ring.one}
    for i in range(n):
        cur = {}
        for mask, val in prev.items():
            if not val:
                continue
            parity_base = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    parity_base += 1
                    continue
                c = matrix[i][j]
                if not c:
                    continue
                # placing row i in column j crosses the used columns above j
                sign = -1 if (i - parity_base) % 2 else 1
                term = val * c if sign > 0 else -(val * c)
                key = mask | bit
                if key in cur:
                    cur[key] = cur[key] + term
                else:
                    cur[key] = term
        prev = cur
    full = (1 << n) - 1
    return prev.get(full, ring.zero)
