"""Pure-Python numeric kernels; the fallback twin of the compiled extension."""

from math import fabs, log, log1p, sqrt


def as_coeffs(values):
    """Backend-native coefficient container (ascending powers)."""
    return tuple(float(v) for v in values)


def _horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_ratio(num, den, x):
    """num(x) / den(x); callers guarantee den(x) > 0."""
    return _horner(num, x) / _horner(den, x)


def log_poly_ratio(p1, p2, x):
    """log(p1(x)) - log(p2(x)) for positive polynomials."""
    return log(_horner(p1, x)) - log(_horner(p2, x))


def log1p_ratio_over_x(r1, r2, x):
    """(log1p(x*r1(x)) - log1p(x*r2(x))) / x with its x -> 0 limit."""
    if x == 0.0:
        return _horner(r1, 0.0) - _horner(r2, 0.0)
    return (log1p(x * _horner(r1, x)) - log1p(x * _horner(r2, x))) / x


def _off_norm(m, n):
    acc = 0.0
    for p in range(n - 1):
        row = m[p]
        for q in range(p + 1, n):
            acc += row[q] * row[q]
    return sqrt(2.0 * acc)


def jacobi_eigenvalues(a, tol, max_sweeps):
    """Cyclic Jacobi with a per-sweep rotation threshold.

    `a` is a symmetric matrix as nested lists; returns (diagonal, off_norm,
    sweeps) where off_norm is the off-diagonal Frobenius norm actually
    reached.  The caller decides whether off_norm <= tol is good enough.
    """
    n = len(a)
    m = [[float(x) for x in row] for row in a]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n < 2:
        return [m[i][i] for i in range(n)], 0.0, 0
    off = _off_norm(m, n)
    sweeps = 0
    while off > tol and sweeps < max_sweeps:
        thresh = off / (n * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p][q]
                if fabs(apq) <= thresh:
                    continue
                theta = (m[q][q] - m[p][p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = m[i][p]
                    aiq = m[i][q]
                    m[i][p] = m[p][i] = aip - s * (aiq + tau * aip)
                    m[i][q] = m[q][i] = aiq + s * (aip - tau * aiq)
                m[p][p] -= t * apq
                m[q][q] += t * apq
                m[p][q] = m[q][p] = 0.0
        sweeps += 1
        off = _off_norm(m, n)
    return [m[i][i] for i in range(n)], off, sweeps
