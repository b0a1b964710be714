"""Dense exact linear algebra over a scalar field (Q or a number field)."""

from ..errors import SingularInputError


def mat_identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_mul(field, a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[field.zero] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            ail = a[i][l]
            if field.is_zero(ail):
                continue
            row_b = b[l]
            row_o = out[i]
            for j in range(m):
                row_o[j] = row_o[j] + ail * row_b[j]
    return out


def mat_sub(field, a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def rref(field, mat):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [row[:] for row in mat]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if not field.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(field, mat):
    if not mat:
        return 0
    _, pivots = rref(field, mat)
    return len(pivots)


def nullspace(field, mat):
    """Basis of the right kernel, as column vectors (lists)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    rows, pivots = rref(field, mat)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        vec = [field.zero] * n
        vec[f] = field.one
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][f]
        basis.append(vec)
    return basis


def solve(field, mat, rhs):
    """One solution of mat @ x = rhs, or None if inconsistent."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [mat[i][:] + [rhs[i]] for i in range(m)]
    rows, pivots = rref(field, aug)
    for row in rows:
        if all(field.is_zero(v) for v in row[:-1]) and not field.is_zero(row[-1]):
            return None
    if n in pivots:
        return None
    x = [field.zero] * n
    for r, c in enumerate(pivots):
        if c < n:
            x[c] = rows[r][-1]
    return x


def det(field, mat):
    n = len(mat)
    rows = [row[:] for row in mat]
    sign = field.one
    acc = field.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not field.is_zero(rows[i][k])), None)
        if piv is None:
            return field.zero
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pivot = rows[k][k]
        acc = acc * pivot
        inv = field.inv(pivot)
        for i in range(k + 1, n):
            if field.is_zero(rows[i][k]):
                continue
            f = rows[i][k] * inv
            rows[i] = [v - f * w for v, w in zip(rows[i], rows[k])]
    return acc * sign


def inverse(field, mat):
    n = len(mat)
    aug = [mat[i][:] + [field.one if j == i else field.zero for j in range(n)]
           for i in range(n)]
    rows, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise SingularInputError("matrix not invertible")
    return [row[n:] for row in rows]
