"""Reference implementations of the tridiagonal eigensolver kernels.

These are the plain numpy/Python versions of the three hot loops behind
the radial eigensolver: a Sturm-sequence eigenvalue counter, bisection
for the smallest eigenvalue, and inverse iteration with a partially
pivoted tridiagonal solve.  Each function is written against the subset
of Python/numpy that numba's nopython mode accepts; sombrero._kernels
wraps them with @njit when the accelerated backend is active and falls
back to these exact functions otherwise, so both paths share one code
body and produce identical arithmetic.
"""

import math

import numpy as np

# Smallest normal double; pivot floors scale from this so the Sturm
# recurrence never divides by an exact zero.
_SAFMIN = 2.2250738585072014e-308


def sturm_count_below(d, e2, x, pivmin):
    """Number of eigenvalues of the symmetric tridiagonal (d, e) below x.

    Classic LDL^T sign-count recurrence with pivots floored at pivmin.
    Zero pivots count as negative; the floor must be applied to each
    pivot before it is reused, otherwise degenerate matrices (constant
    diagonal, e2 = (d/2)^2) lock the recurrence into a {0, huge, d}
    cycle and the count comes out wrong.
    """
    count = 0
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q <= 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q <= 0.0:
            count += 1
    return count


def smallest_eigenvalue(d, e, abs_tol):
    """Smallest eigenvalue of the symmetric tridiagonal (d, e) by bisection.

    Brackets with Gershgorin bounds and bisects on the Sturm count until
    the interval is narrower than abs_tol.  Stops early if the midpoint
    is no longer representable strictly inside the bracket (interval at
    ulp resolution), which can happen before abs_tol is met when the
    eigenvalue sits at large magnitude.  The count recurrence is inlined
    (rather than calling sturm_count_below) so the function stays
    self-contained for JIT compilation.
    """
    n = d.shape[0]
    if n == 1:
        return d[0]
    e2 = e * e
    e2max = 0.0
    for i in range(n - 1):
        if e2[i] > e2max:
            e2max = e2[i]
    pivmin = _SAFMIN * (e2max if e2max > 1.0 else 1.0)

    lo = d[0] - abs(e[0])
    hi = d[0] + abs(e[0])
    for i in range(1, n):
        rad = abs(e[i - 1])
        if i < n - 1:
            rad += abs(e[i])
        if d[i] - rad < lo:
            lo = d[i] - rad
        if d[i] + rad > hi:
            hi = d[i] + rad

    while hi - lo > abs_tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        count = 0
        q = d[0] - mid
        if abs(q) < pivmin:
            q = -pivmin
        if q <= 0.0:
            count += 1
        for i in range(1, n):
            q = d[i] - mid - e2[i - 1] / q
            if abs(q) < pivmin:
                q = -pivmin
            if q <= 0.0:
                count += 1
        if count >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def inverse_iteration(d, e, sigma, rel_tol, max_iter):
    """Eigenvector of the symmetric tridiagonal (d, e) nearest sigma.

    Factors (T - sigma*I) once with partial pivoting (LU with one extra
    superdiagonal, dgttrf-style), then repeatedly solves from a constant
    positive start vector, normalizing each sweep.  Returns the unit
    vector and the number of sweeps used, or -1 if the direction did not
    settle to rel_tol (max-norm of the change of the sign-aligned unit
    vector) within max_iter sweeps.
    """
    n = d.shape[0]
    dd = np.empty(n)
    for i in range(n):
        dd[i] = d[i] - sigma
    dl = np.empty(n - 1)
    du = np.empty(n - 1)
    for i in range(n - 1):
        dl[i] = e[i]
        du[i] = e[i]
    du2 = np.zeros(n - 2 if n > 2 else 0)
    swapped = np.zeros(n - 1, dtype=np.bool_)

    # exact zero pivots are replaced by an eps-sized perturbation scaled
    # to the shifted matrix, so the solve stays finite
    scale_t = 0.0
    for i in range(n):
        if abs(dd[i]) > scale_t:
            scale_t = abs(dd[i])
    for i in range(n - 1):
        if abs(e[i]) > scale_t:
            scale_t = abs(e[i])
    tiny = 2.220446049250313e-16 * scale_t
    if tiny == 0.0:
        tiny = _SAFMIN
    for i in range(n - 1):
        if abs(dd[i]) >= abs(dl[i]):
            # no row swap; a hard zero pivot only occurs when sigma is an
            # exact eigenvalue of a leading block, so floor it
            if dd[i] == 0.0:
                dd[i] = tiny
            fact = dl[i] / dd[i]
            dl[i] = fact
            dd[i + 1] -= fact * du[i]
        else:
            swapped[i] = True
            fact = dd[i] / dl[i]
            dd[i] = dl[i]
            dl[i] = fact
            tmp = du[i]
            du[i] = dd[i + 1]
            dd[i + 1] = tmp - fact * dd[i + 1]
            if i < n - 2:
                du2[i] = du[i + 1]
                du[i + 1] = -fact * du[i + 1]
    if dd[n - 1] == 0.0:
        dd[n - 1] = tiny

    v = np.empty(n)
    start = 1.0 / math.sqrt(n)
    for i in range(n):
        v[i] = start
    x = np.empty(n)

    for sweep in range(max_iter):
        for i in range(n):
            x[i] = v[i]
        # forward substitution with recorded swaps
        for i in range(n - 1):
            if swapped[i]:
                tmp = x[i]
                x[i] = x[i + 1]
                x[i + 1] = tmp - dl[i] * x[i]
            else:
                x[i + 1] -= dl[i] * x[i]
        # back substitution (upper triangle has two superdiagonals)
        x[n - 1] /= dd[n - 1]
        if n > 1:
            x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2]
        for i in range(n - 3, -1, -1):
            x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i]

        # two-stage normalization: pre-scaling by the largest entry keeps
        # the sum of squares from overflowing after a near-singular solve
        amax = 0.0
        for i in range(n):
            if abs(x[i]) > amax:
                amax = abs(x[i])
        if amax == 0.0 or not math.isfinite(amax):
            return v, -1
        nrm = 0.0
        for i in range(n):
            x[i] /= amax
            nrm += x[i] * x[i]
        nrm = math.sqrt(nrm)
        dot = 0.0
        for i in range(n):
            x[i] /= nrm
            dot += x[i] * v[i]
        if dot < 0.0:
            for i in range(n):
                x[i] = -x[i]
        delta = 0.0
        for i in range(n):
            diff = abs(x[i] - v[i])
            if diff > delta:
                delta = diff
            v[i] = x[i]
        if delta < rel_tol:
            return v, sweep + 1
    return v, -1
