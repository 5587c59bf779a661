"""Scalar special functions and the constants built from them.

Everything here is pure and stateless: log-gamma, digamma, beta, the
rising factorial, and the three constants attached to the generalized
inverse functions (the half-period pi_p and the suprema b_p, c_p of
arctan_p and arcsinh_p at x=1).
"""

import math

from gentrig._backend import series_2f1_tail
from gentrig.errors import ConvergenceError, DomainError

EULER_GAMMA = 0.5772156649015328606065120900824024

_LN_SQRT_2PI = 0.9189385332046727417803297364056176

# Stirling coefficients B_{2j} / (2j (2j-1)) for log-gamma, j = 1..7
_LG_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
)
# B_{2j} / (2j) for digamma, j = 1..8
_DG_COEF = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)


def ln_gamma(x):
    """log of the gamma function for x > 0.

    Upward recurrence to x >= 8, then the Stirling series with Bernoulli
    coefficients through order 14.
    """
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"ln_gamma requires finite x > 0, got {x!r}")
    shift = 0.0
    while x < 8.0:
        shift += math.log(x)
        x += 1.0
    r = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_LG_COEF):
        tail = r * tail + c
    return (x - 0.5) * math.log(x) - x + _LN_SQRT_2PI + tail / x - shift


def digamma(x):
    """Logarithmic derivative of gamma for x > 0.

    Upward recurrence to x >= 6 (compensated, since the 1/x terms dominate
    for small x), then the asymptotic series through order 16.
    """
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"digamma requires finite x > 0, got {x!r}")
    shift = 0.0
    comp = 0.0
    while x < 6.0:
        term = -1.0 / x
        t = shift + term
        if abs(shift) >= abs(term):
            comp += (shift - t) + term
        else:
            comp += (term - t) + shift
        shift = t
        x += 1.0
    r = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_DG_COEF):
        tail = r * tail + c
    return math.log(x) - 0.5 / x - tail * r + (shift + comp)


def beta(x, y):
    """Euler beta function for x, y > 0."""
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta requires x, y > 0, got ({x!r}, {y!r})")
    return math.exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y))


def pochhammer_ln(a, n):
    """log of the rising factorial (a)_n for a > 0, integer n >= 0."""
    if not (a > 0.0):
        raise DomainError(f"pochhammer_ln requires a > 0, got {a!r}")
    if n < 0 or n != int(n):
        raise DomainError(f"pochhammer_ln requires integer n >= 0, got {n!r}")
    if n == 0:
        return 0.0
    return ln_gamma(a + float(n)) - ln_gamma(a)


def _check_p(p, minimum=0.0, what="p"):
    if not (p > minimum) or math.isinf(p):
        raise DomainError(f"{what} must be finite and > {minimum}, got {p!r}")


def _solve(mat, rhs):
    # Gaussian elimination with partial pivoting on a small dense system
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0.0:
            raise ArithmeticError("singular extrapolation system")
        a[col], a[piv] = a[piv], a[col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for c in range(col, n + 1):
                a[r][c] -= f * a[col][c]
    out = [0.0] * n
    for r in range(n - 1, -1, -1):
        s = a[r][n] - sum(a[r][c] * out[c] for c in range(r + 1, n))
        out[r] = s / a[r][r]
    return out


def _pi_p_limit(p):
    # Extrapolate 2*arcsin_p(1 - eps) to eps -> 0.  The deficit expands in
    # powers eps^(alpha + k) with alpha = 1 - 1/p known, so a short
    # generalized Richardson table with quadrature evaluations suffices.
    from gentrig.invtrig import FnId, integrate_defining

    alpha = 1.0 - 1.0 / p
    eps0 = min(1e-3, 0.02 / p)
    n_terms = 4
    nodes = [eps0 * 0.5 ** j for j in range(n_terms + 1)]
    vals = [2.0 * integrate_defining(FnId.ARCSIN, p, 1.0 - e).value for e in nodes]
    # model: vals[j] = A - sum_k c_k * nodes[j]^(alpha + k)
    mat = [[1.0] + [-(e ** (alpha + k)) for k in range(n_terms)] for e in nodes]
    return _solve(mat, vals)[0]


def pi_p(p, route="sine"):
    """Half-period constant of the generalized sine, for p > 1.

    Routes: "sine" (closed form 2*pi/(p sin(pi/p))), "beta"
    (2/p * B(1-1/p, 1/p)), "limit" (Richardson extrapolation of
    2*arcsin_p(1-eps)).  All three agree to ~1e-10 relative.
    """
    _check_p(p, 1.0)
    if route == "sine":
        return 2.0 * math.pi / (p * math.sin(math.pi / p))
    if route == "beta":
        return 2.0 / p * beta(1.0 - 1.0 / p, 1.0 / p)
    if route == "limit":
        return _pi_p_limit(p)
    raise DomainError(f"unknown pi_p route {route!r}")


def b_p(p, route="digamma"):
    """Value of arctan_p at x=1, i.e. its supremum on (0, 1].

    Routes: "digamma" (default, closed form from a digamma difference) and
    "hyp" (hypergeometric series at 1/2).
    """
    _check_p(p)
    if route == "digamma":
        return (digamma((1.0 + p) / (2.0 * p)) - digamma(1.0 / (2.0 * p))) / (2.0 * p)
    if route == "hyp":
        q = 1.0 / p
        tail, _, _, ok = series_2f1_tail(q, q, 1.0 + q, 0.5)
        if not ok:
            raise ConvergenceError("series for b_p did not converge")
        return 2.0 ** (-q) * (1.0 + tail)
    raise DomainError(f"unknown b_p route {route!r}")


def c_p(p):
    """Value of arcsinh_p at x=1 (hypergeometric form at 1/2)."""
    _check_p(p)
    q = 1.0 / p
    tail, _, _, ok = series_2f1_tail(1.0, q, 1.0 + q, 0.5)
    if not ok:
        raise ConvergenceError("series for c_p did not converge")
    return 2.0 ** (-q) * (1.0 + tail)


def r_const(a, b):
    """-2*EulerGamma - digamma(a) - digamma(b), for a, b > 0."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"r_const requires a, b > 0, got ({a!r}, {b!r})")
    return -2.0 * EULER_GAMMA - digamma(a) - digamma(b)
