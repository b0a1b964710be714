"""Square matrices of truncated series and the valuation of their determinant.

The kernel-filtration algorithm: split off the unit block of the constant
term, take the Schur complement divided by t, and recurse.  Each level
contributes r_i = dim ker A_i(0) to the valuation, and the list of r_i is
returned as a certificate.  The recursion matches the direct determinant
expansion exactly (property-tested), including the correction term that the
naive "differentiate and restrict" shortcut misses.
"""

from fractions import Fraction

from ..errors import InsufficientPrecisionError, ZeroDeterminantError
from . import linalg
from .series import TruncatedSeries


class SeriesMatrix:
    """Square matrix of TruncatedSeries in a common variable."""

    def __init__(self, field, var, rows):
        self.field = field
        self.var = var
        self.rows = [[self._coerce(e) for e in row] for row in rows]
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square")

    def _coerce(self, e):
        if isinstance(e, TruncatedSeries):
            return e
        return TruncatedSeries.from_scalar(self.field, self.var, e)

    @property
    def size(self):
        return len(self.rows)

    def constant_term(self):
        z = Fraction(0)
        return [[e.terms.get(z, self.field.zero) for e in row] for row in self.rows]

    def min_order(self):
        orders = [e.order for row in self.rows for e in row if e.order is not None]
        return min(orders) if orders else None


def det_series(mat):
    """Determinant as a TruncatedSeries, by cofactor expansion."""
    rows = mat.rows
    n = len(rows)
    field, var = mat.field, mat.var
    if n == 0:
        return TruncatedSeries.from_scalar(field, var, 1)
    if n == 1:
        return rows[0][0]
    acc = TruncatedSeries.zero(field, var)
    for j in range(n):
        a = rows[0][j]
        if not a.terms and a.order is None:
            continue
        minor = SeriesMatrix(field, var,
                             [[rows[i][k] for k in range(n) if k != j]
                              for i in range(1, n)])
        term = a * det_series(minor)
        if j % 2:
            term = -term
        acc = acc + term
    return acc


def det_valuation_series(mat, max_levels=None):
    """Valuation of det(mat) with the kernel-filtration certificate.

    Returns ``(valuation, [r_0, r_1, ...])``.  Raises ZeroDeterminantError if
    the determinant is exactly zero, and InsufficientPrecisionError when the
    truncation cannot certify termination.  Laurent entries are allowed: rows
    are pre-scaled by powers of the variable and the shift is added back.
    """
    field, var = mat.field, mat.var
    rows = mat.rows
    certificate = []
    total = Fraction(0)
    # normalize away poles row by row
    scaled = []
    for row in rows:
        vmin = Fraction(0)
        for e in row:
            lb = e.valuation_lower_bound()
            if lb is None:
                continue
            if lb < vmin:
                vmin = lb
        if vmin < 0:
            row = [e.shift(-vmin) for e in row]
            total += vmin
        scaled.append(row)
    rows = scaled
    if max_levels is None:
        max_levels = 4 * mat.size + 8
    level = 0
    while True:
        n = len(rows)
        if n == 0:
            return int(total), certificate
        if all(not e.terms for row in rows for e in row):
            raise ZeroDeterminantError("zero determinant within truncation")
        a0 = [[e.terms.get(Fraction(0), field.zero) for e in row] for row in rows]
        ker = linalg.nullspace(field, a0)
        r = len(ker)
        if r == 0:
            certificate.append(0)
            return int(total), certificate
        certificate.append(r)
        total += r
        level += 1
        if level > max_levels:
            raise InsufficientPrecisionError(
                "kernel filtration did not terminate: determinant may vanish",
                required_order=None)
        # change of basis: columns Q = [ker | complement], rows via image
        comp = _complete_basis(field, ker, n)
        Q = _columns_to_matrix(field, ker + comp, n)
        img = linalg.mat_mul(field, a0, _columns_to_matrix(field, comp, n))
        img_cols = [[img[i][j] for i in range(n)] for j in range(n - r)]
        ext = _complete_basis(field, img_cols, n)
        B = _columns_to_matrix(field, ext + img_cols, n)
        P = linalg.inverse(field, B)
        bmat = _smul(field, var, P, rows, Q)
        # blocks: top-left r x r, bottom-right unit
        a11 = [row[:r] for row in bmat[:r]]
        a12 = [row[r:] for row in bmat[:r]]
        a21 = [row[:r] for row in bmat[r:]]
        a22 = [row[r:] for row in bmat[r:]]
        if n - r:
            a22_inv = _series_matrix_inverse(field, var, a22)
            corr = _series_mat_mul(field, var, _series_mat_mul(field, var, a12, a22_inv), a21)
            schur = [[a11[i][j] - corr[i][j] for j in range(r)] for i in range(r)]
        else:
            schur = a11
        new_rows = []
        insufficient = None
        for row in schur:
            new_row = []
            for e in row:
                if e.terms and min(e.terms) < 1:
                    z = Fraction(0)
                    if not field.is_zero(e.terms.get(z, field.zero)):
                        raise InsufficientPrecisionError(
                            "Schur complement has a spurious constant term (bug)")
                shifted = TruncatedSeries(
                    field, var, {k - 1: v for k, v in e.terms.items() if k != 0},
                    None if e.order is None else e.order - 1)
                if shifted.order is not None and shifted.order <= 0 and not shifted.terms:
                    insufficient = shifted.order
                new_row.append(shifted)
            new_rows.append(new_row)
        if insufficient is not None:
            need = mat.min_order()
            raise InsufficientPrecisionError(
                "series order exhausted during kernel filtration",
                required_order=(need * 2 if need else 32))
        rows = new_rows


def _columns_to_matrix(field, cols, n):
    return [[cols[j][i] for j in range(len(cols))] for i in range(n)]


def _complete_basis(field, vectors, n):
    """Extend an independent list of n-vectors to a basis; returns the new ones."""
    rows = [list(v) for v in vectors]
    added = []
    for j in range(n):
        e = [field.one if i == j else field.zero for i in range(n)]
        trial = rows + [e]
        if linalg.rank(field, trial) == len(trial):
            rows.append(e)
            added.append(e)
        if len(rows) == n:
            break
    assert len(rows) == n, "basis completion failed"
    return added


def _smul(field, var, P, rows, Q):
    """P @ rows @ Q with P, Q scalar matrices and rows a series matrix."""
    n = len(rows)
    mid = []
    for i in range(n):
        mid.append([])
        for j in range(n):
            acc = TruncatedSeries.zero(field, var)
            for k in range(n):
                if field.is_zero(P[i][k]):
                    continue
                acc = acc + rows[k][j] * P[i][k]
            mid[i].append(acc)
    out = []
    for i in range(n):
        out.append([])
        for j in range(n):
            acc = TruncatedSeries.zero(field, var)
            for k in range(n):
                if field.is_zero(Q[k][j]):
                    continue
                acc = acc + mid[i][k] * Q[k][j]
            out[i].append(acc)
    return out


def _series_mat_mul(field, var, a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[TruncatedSeries.zero(field, var) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for l in range(k):
            for j in range(m):
                out[i][j] = out[i][j] + a[i][l] * b[l][j]
    return out


def _series_matrix_inverse(field, var, mat):
    """Inverse of a series matrix whose constant term is invertible."""
    n = len(mat)
    aug = [[mat[i][j] for j in range(n)] +
           [TruncatedSeries.from_scalar(field, var, 1 if j == i else 0)
            for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            e = aug[i][c]
            if e.terms and min(e.terms) == 0:
                piv = i
                break
        if piv is None:
            raise InsufficientPrecisionError("unit block not invertible (bug)")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [e * inv for e in aug[c]]
        for i in range(n):
            if i == c:
                continue
            f = aug[i][c]
            if not f.terms and f.order is None:
                continue
            aug[i] = [e - f * w for e, w in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
