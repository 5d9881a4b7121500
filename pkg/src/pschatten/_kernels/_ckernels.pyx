# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels: Horner-form integrand evaluation and Jacobi sweeps."""

from array import array as _array

from libc.math cimport fabs, log, log1p, sqrt


def as_coeffs(values):
    """Backend-native coefficient container (ascending powers)."""
    return _array("d", [float(v) for v in values])


cdef inline double _horner(const double[::1] coeffs, double x) noexcept nogil:
    cdef Py_ssize_t i = coeffs.shape[0] - 1
    cdef double acc = 0.0
    while i >= 0:
        acc = acc * x + coeffs[i]
        i -= 1
    return acc


def poly_ratio(const double[::1] num, const double[::1] den, double x):
    """num(x) / den(x); callers guarantee den(x) > 0."""
    return _horner(num, x) / _horner(den, x)


def log_poly_ratio(const double[::1] p1, const double[::1] p2, double x):
    """log(p1(x)) - log(p2(x)) for positive polynomials."""
    return log(_horner(p1, x)) - log(_horner(p2, x))


def log1p_ratio_over_x(const double[::1] r1, const double[::1] r2, double x):
    """(log1p(x*r1(x)) - log1p(x*r2(x))) / x with its x -> 0 limit."""
    if x == 0.0:
        return _horner(r1, 0.0) - _horner(r2, 0.0)
    return (log1p(x * _horner(r1, x)) - log1p(x * _horner(r2, x))) / x


cdef double _off_norm(const double[::1] m, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t p, q
    cdef double acc = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            acc += m[p * n + q] * m[p * n + q]
    return sqrt(2.0 * acc)


def jacobi_eigenvalues(a, double tol, int max_sweeps):
    """Cyclic Jacobi with a per-sweep rotation threshold.

    `a` is a symmetric matrix as nested sequences; returns (diagonal,
    off_norm, sweeps) with off_norm the off-diagonal Frobenius norm reached.
    """
    cdef Py_ssize_t n = len(a)
    flat = _array("d", [float(x) for row in a for x in row])
    if len(flat) != n * n:
        raise ValueError("matrix must be square")
    if n < 2:
        return [flat[i * n + i] for i in range(n)], 0.0, 0
    cdef double[::1] m = flat
    cdef Py_ssize_t p, q, i
    cdef int sweeps = 0
    cdef double off, thresh, apq, theta, t, c, s, tau, aip, aiq
    off = _off_norm(m, n)
    while off > tol and sweeps < max_sweeps:
        thresh = off / (<double> (n * n))
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = m[p * n + q]
                    if fabs(apq) <= thresh:
                        continue
                    theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq)
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
                        aip = m[i * n + p]
                        aiq = m[i * n + q]
                        m[i * n + p] = aip - s * (aiq + tau * aip)
                        m[p * n + i] = m[i * n + p]
                        m[i * n + q] = aiq + s * (aip - tau * aiq)
                        m[q * n + i] = m[i * n + q]
                    m[p * n + p] -= t * apq
                    m[q * n + q] += t * apq
                    m[p * n + q] = 0.0
                    m[q * n + p] = 0.0
        sweeps += 1
        off = _off_norm(m, n)
    return [m[i * n + i] for i in range(n)], off, sweeps
