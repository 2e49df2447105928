"""Exact dense linear algebra over Fraction.

Small internal helper for the solver in the homotopy search and the
characteristic polynomials of multiplication matrices.  Everything is plain
lists of Fractions; matrices stay small (quotient dimensions and word counts),
so simplicity beats asymptotics here.
"""

from __future__ import annotations

from fractions import Fraction


def identity_matrix(n: int) -> list[list[Fraction]]:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_mul(a, b) -> list[list[Fraction]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            f = ai[k]
            if not f:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    oi[j] += f * bk[j]
    return out


def mat_vec(a, v) -> list[Fraction]:
    return [sum((row[k] * v[k] for k in range(len(v)) if v[k]), Fraction(0)) for row in a]


def solve(rows, rhs) -> list[Fraction] | None:
    """One exact solution of rows.x = rhs, or None if inconsistent.

    Gauss-Jordan elimination on the augmented matrix; free variables are set
    to zero, so the returned solution is supported on pivot columns only.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                row_r = aug[r]
                aug[i] = [vi - f * vr for vi, vr in zip(aug[i], row_r)]
        pivots.append((r, c))
        r += 1
    if any(aug[i][n] for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for row, col in pivots:
        x[col] = aug[row][n]
    return x


def charpoly(mat) -> list[Fraction]:
    """Monic characteristic polynomial det(t*I - M), ascending coefficients.

    The matrix is first brought to Hessenberg form by exact similarity
    operations (a row operation below the subdiagonal paired with the
    compensating column operation), then the determinant is expanded by the
    leading-principal-minor recurrence, which only ever multiplies along the
    subdiagonal.
    """
    n = len(mat)
    h = [[Fraction(x) for x in row] for row in mat]
    for c in range(n - 2):
        p = next((i for i in range(c + 1, n) if h[i][c]), None)
        if p is None:
            continue
        if p != c + 1:
            h[c + 1], h[p] = h[p], h[c + 1]
            for row in h:
                row[c + 1], row[p] = row[p], row[c + 1]
        piv = h[c + 1][c]
        for i in range(c + 2, n):
            if h[i][c]:
                f = h[i][c] / piv
                row_src = h[c + 1]
                h[i] = [vi - f * vs for vi, vs in zip(h[i], row_src)]
                for row in h:
                    row[c + 1] += f * row[i]
    minors = [[Fraction(1)]]
    for k in range(1, n + 1):
        prev = minors[k - 1]
        cur = [Fraction(0)] * (k + 1)
        for i, coef in enumerate(prev):
            cur[i + 1] += coef
            if h[k - 1][k - 1]:
                cur[i] -= h[k - 1][k - 1] * coef
        prod = Fraction(1)
        for m in range(1, k):
            prod *= h[k - m][k - m - 1]
            if not prod:
                break
            factor = h[k - 1 - m][k - 1] * prod
            if factor:
                for i, coef in enumerate(minors[k - 1 - m]):
                    cur[i] -= factor * coef
        minors.append(cur)
    return minors[n]


def poly_at_matrix(coeffs, mat) -> list[list[Fraction]]:
    """Evaluate a scalar polynomial (ascending coefficients) at a square matrix."""
    n = len(mat)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(list(coeffs)):
        acc = mat_mul(acc, mat)
        for i in range(n):
            acc[i][i] += c
    return acc
