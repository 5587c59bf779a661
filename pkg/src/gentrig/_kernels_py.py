"""Pure-Python evaluation kernels.

These are the hot inner loops: hypergeometric series summation and the
adaptive Gauss-Kronrod integrator for the defining integrals.  A compiled
twin (``_kernels_cy``) implements the same algorithms with the same
operation order; either backend can serve the rest of the package.

Each kernel returns plain tuples so the compiled module can mirror the
interface without object overhead:

    series_2f1_tail(a, b, c, z)         -> (tail, abs_err, terms, ok)
    series_3f2_tail(a1..a3, b1, b2, z)  -> (tail, abs_err, terms, ok)
    quad_defining(kind, p, x, tol, cap) -> (value, abs_err, evals, ok)

``tail`` is the series sum *excluding* the leading 1, i.e. F - 1, kept
separate so callers can form small differences without cancellation.
"""

import math

SERIES_REL_TOL = 1e-16
SERIES_MAX_TERMS = 10 ** 6
QUAD_ABS_TOL = 1e-12
QUAD_MAX_PANELS = 2 ** 14

_EPS = 2.220446049250313e-16

# Gauss-Kronrod 7-15 nodes and weights (positive half, centre last).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def series_2f1_tail(a, b, c, z, rel_tol=SERIES_REL_TOL, max_terms=SERIES_MAX_TERMS):
    """Sum the Gauss series from n=1 on; returns (F-1, abs_err, terms, ok)."""
    if z == 0.0:
        return (0.0, 0.0, 0, True)
    term = 1.0
    s = 0.0
    comp = 0.0
    abs_acc = 0.0
    n = 0
    while n < max_terms:
        term *= ((a + n) * (b + n)) / ((c + n) * (n + 1.0)) * z
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        abs_acc += abs(term)
        n += 1
        if term == 0.0:
            total = s + comp
            return (total, 2.5e-16 * abs(total) + 5e-26 * abs_acc, n, True)
        ratio = ((a + n) * (b + n)) / ((c + n) * (n + 1.0)) * z
        nxt = term * ratio
        if abs(nxt) <= rel_tol * abs(1.0 + s) and abs(ratio) < 1.0:
            total = s + comp
            if z < 0.0:
                tail = abs(nxt)
            else:
                tail = abs(nxt) / (1.0 - abs(ratio))
            return (total, tail + 2.5e-16 * abs(total) + 5e-26 * abs_acc, n, True)
    total = s + comp
    return (total, abs(term) / max(1e-300, 1.0 - abs(z)), n, False)


def series_3f2_tail(a1, a2, a3, b1, b2, z,
                    rel_tol=SERIES_REL_TOL, max_terms=SERIES_MAX_TERMS):
    """Sum the Clausen series from n=1 on; returns (F-1, abs_err, terms, ok)."""
    if z == 0.0:
        return (0.0, 0.0, 0, True)
    term = 1.0
    s = 0.0
    comp = 0.0
    abs_acc = 0.0
    n = 0
    while n < max_terms:
        term *= ((a1 + n) * (a2 + n) * (a3 + n)) / ((b1 + n) * (b2 + n) * (n + 1.0)) * z
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        abs_acc += abs(term)
        n += 1
        if term == 0.0:
            total = s + comp
            return (total, 2.5e-16 * abs(total) + 5e-26 * abs_acc, n, True)
        ratio = ((a1 + n) * (a2 + n) * (a3 + n)) / ((b1 + n) * (b2 + n) * (n + 1.0)) * z
        nxt = term * ratio
        if abs(nxt) <= rel_tol * abs(1.0 + s) and abs(ratio) < 1.0:
            total = s + comp
            if z < 0.0:
                tail = abs(nxt)
            else:
                tail = abs(nxt) / (1.0 - abs(ratio))
            return (total, tail + 2.5e-16 * abs(total) + 5e-26 * abs_acc, n, True)
    total = s + comp
    return (total, abs(term) / max(1e-300, 1.0 - abs(z)), n, False)


def _integrand(kind, p, logx, s):
    # kind 0: (1-t^p)^(-1/p)   inverse sine family (singular as t -> 1)
    # kind 1: 1/(1+t^p)        inverse tangent family
    # kind 2: (1+t^p)^(-1/p)   inverse hyperbolic sine family
    # kind 3: 1/(1-t^p)        inverse hyperbolic tangent family
    # The point t = x*s enters only through log t = log x + log1p(s-1),
    # which stays fully accurate inside boundary layers where x*s would
    # round away the distance to the singular point t = 1.
    if s <= 0.0:
        return 1.0
    logt = logx + math.log1p(s - 1.0)
    if logt >= 0.0:
        # node rounded onto the singular point; half an ulp below 1
        logt = -1.1e-16
    if kind == 1:
        return 1.0 / (1.0 + math.exp(p * logt))
    if kind == 2:
        return math.exp(-math.log1p(math.exp(p * logt)) / p)
    u = -math.expm1(p * logt)
    if kind == 3:
        return 1.0 / u
    return math.exp(-math.log(u) / p)


def _gk15(kind, p, x, logx, lo, hi):
    """Kronrod and Gauss estimates of x * int_lo^hi g(x*s) ds."""
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = _integrand(kind, p, logx, centre)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        f1 = _integrand(kind, p, logx, centre - dx)
        f2 = _integrand(kind, p, logx, centre + dx)
        resk += _WGK[j] * (f1 + f2)
        if j % 2 == 1:
            resg += _WG[j // 2] * (f1 + f2)
    return (resk * half * x, resg * half * x)


def _panel_before(e1, lo1, hi1, e2, lo2, hi2):
    # strict ordering for the refinement queue: largest error first,
    # position as a deterministic tie-break
    if e1 != e2:
        return e1 > e2
    if lo1 != lo2:
        return lo1 < lo2
    return hi1 < hi2


def quad_defining(kind, p, x, tol=QUAD_ABS_TOL, max_panels=QUAD_MAX_PANELS):
    """Globally adaptive bisection with a GK15 rule pair on each panel.

    Integrates the defining integrand after the substitution t = x*s, so
    the panel variable always lives on [0, 1] and the integrable endpoint
    singularity of kinds 0/3 sits strictly outside the panel.  The panel
    with the largest rule-pair difference is split until the summed error
    estimate meets ``tol`` or the panel budget runs out.  Returns
    (value, abs_err, evals, ok); ok=False when refinement stopped with the
    estimate still above ``tol``.
    """
    if x == 0.0:
        return (0.0, 0.0, 0, True)
    logx = math.log1p(x - 1.0) if x > 0.5 else math.log(x)
    # kinds 0/3 have their singularity at t=1, i.e. s = 1/x, just beyond the
    # panel end.  Pre-split geometrically towards s=1 so no initial panel is
    # much wider than its distance to the singularity; otherwise the rule
    # pair can agree by undersampling an unresolved boundary layer.
    cuts = [0.0]
    if kind == 0 or kind == 3:
        delta = max(1.0 / x - 1.0, 1e-18)
        w = 0.5
        while w > delta and len(cuts) < 62:
            cuts.append(1.0 - w)
            w *= 0.5
    cuts.append(1.0)
    evals = 0
    panels = 0
    # heap of refinable panels, ordered by _panel_before
    he = []
    hlo = []
    hhi = []
    hval = []
    done = []
    err_total = 0.0
    val_est = 0.0
    for i in range(len(cuts) - 1):
        resk, resg = _gk15(kind, p, x, logx, cuts[i], cuts[i + 1])
        evals += 15
        panels += 1
        he.append(abs(resk - resg))
        hlo.append(cuts[i])
        hhi.append(cuts[i + 1])
        hval.append(resk)
        err_total += he[-1]
        val_est += resk

    def sift_up(i):
        while i > 0:
            j = (i - 1) // 2
            if _panel_before(he[i], hlo[i], hhi[i], he[j], hlo[j], hhi[j]):
                he[i], he[j] = he[j], he[i]
                hlo[i], hlo[j] = hlo[j], hlo[i]
                hhi[i], hhi[j] = hhi[j], hhi[i]
                hval[i], hval[j] = hval[j], hval[i]
                i = j
            else:
                return

    def sift_down(i):
        n = len(he)
        while True:
            l = 2 * i + 1
            r = l + 1
            b = i
            if l < n and _panel_before(he[l], hlo[l], hhi[l], he[b], hlo[b], hhi[b]):
                b = l
            if r < n and _panel_before(he[r], hlo[r], hhi[r], he[b], hlo[b], hhi[b]):
                b = r
            if b == i:
                return
            he[i], he[b] = he[b], he[i]
            hlo[i], hlo[b] = hlo[b], hlo[i]
            hhi[i], hhi[b] = hhi[b], hhi[i]
            hval[i], hval[b] = hval[b], hval[i]
            i = b

    def pop():
        top = (he[0], hlo[0], hhi[0], hval[0])
        last = len(he) - 1
        he[0], hlo[0], hhi[0], hval[0] = he[last], hlo[last], hhi[last], hval[last]
        del he[last], hlo[last], hhi[last], hval[last]
        if he:
            sift_down(0)
        return top

    def push(e, lo, hi, val):
        he.append(e)
        hlo.append(lo)
        hhi.append(hi)
        hval.append(val)
        sift_up(len(he) - 1)

    for i in range(1, len(he)):
        sift_up(i)

    # the absolute target cannot undercut the eps*|I| noise floor of the
    # rule-pair estimates, so scale it up for super-unit integrals
    while he and err_total > tol * max(1.0, abs(val_est)) and panels + 1 < max_panels:
        e, lo, hi, val = pop()
        if hi - lo <= 4.0 * _EPS * max(abs(lo), abs(hi)):
            # cannot bisect any further in double precision
            done.append((e, lo, hi, val))
            continue
        mid = 0.5 * (lo + hi)
        k1, g1 = _gk15(kind, p, x, logx, lo, mid)
        k2, g2 = _gk15(kind, p, x, logx, mid, hi)
        evals += 30
        panels += 2
        e1 = abs(k1 - g1)
        e2 = abs(k2 - g2)
        err_total += e1 + e2 - e
        val_est += k1 + k2 - val
        push(e1, lo, mid, k1)
        push(e2, mid, hi, k2)

    # deterministic final assembly: sum panels left to right, compensated
    allp = done + list(zip(he, hlo, hhi, hval))
    allp.sort(key=lambda t: (t[1], t[2]))
    total = 0.0
    comp = 0.0
    err = 0.0
    for e, lo, hi, val in allp:
        t = total + val
        if abs(total) >= abs(val):
            comp += (total - t) + val
        else:
            comp += (val - t) + total
        total = t
        err += e
    value = total + comp
    # factor 2: deep boundary-layer panels sit at the rule pair's noise
    # floor, where |K-G| can run slightly below the true Kronrod error
    err = 2.0 * err + 4.0 * _EPS * abs(value)
    ok = err <= 2.0 * tol * max(1.0, abs(value)) * 1.0625 + 4.0 * _EPS * abs(value)
    return (value, err, evals, ok)
