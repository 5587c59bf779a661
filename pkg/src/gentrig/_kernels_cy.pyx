# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python kernels in ``_kernels_py``.

Same algorithms, same operation order, same return conventions; only the
loop bodies run as C.  See ``_kernels_py`` for the documented reference.
"""

from libc.math cimport fabs, log, log1p, exp, expm1, INFINITY
from libc.stdlib cimport malloc, free

DEF SERIES_REL_TOL = 1e-16
DEF QUAD_ABS_TOL = 1e-12
DEF EPS = 2.220446049250313e-16

SERIES_MAX_TERMS = 10 ** 6
QUAD_MAX_PANELS = 2 ** 14

cdef double[8] XGK
cdef double[8] WGK
cdef double[4] WG
XGK[0] = 0.991455371120812639206854697526329
XGK[1] = 0.949107912342758524526189684047851
XGK[2] = 0.864864423359769072789712788640926
XGK[3] = 0.741531185599394439863864773280788
XGK[4] = 0.586087235467691130294144838258730
XGK[5] = 0.405845151377397166906606412076961
XGK[6] = 0.207784955007898467600689403773245
XGK[7] = 0.0
WGK[0] = 0.022935322010529224963732008058970
WGK[1] = 0.063092092629978553290700663189204
WGK[2] = 0.104790010322250183839876322541518
WGK[3] = 0.140653259715525918745189590510238
WGK[4] = 0.169004726639267902826583426598550
WGK[5] = 0.190350578064785409913256402421014
WGK[6] = 0.204432940075298892414161999234649
WGK[7] = 0.209482141084727828012999174891714
WG[0] = 0.129484966168869693270611432679082
WG[1] = 0.279705391489276667901467771423780
WG[2] = 0.381830050505118944950369775488975
WG[3] = 0.417959183673469387755102040816327


def series_2f1_tail(double a, double b, double c, double z,
                    double rel_tol=SERIES_REL_TOL, long max_terms=10 ** 6):
    cdef double term = 1.0
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double abs_acc = 0.0
    cdef double t, ratio, nxt, total, tail
    cdef long n = 0
    if z == 0.0:
        return (0.0, 0.0, 0, True)
    while n < max_terms:
        term *= ((a + n) * (b + n)) / ((c + n) * (n + 1.0)) * z
        t = s + term
        if fabs(s) >= fabs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        abs_acc += fabs(term)
        n += 1
        if term == 0.0:
            total = s + comp
            return (total, 2.5e-16 * fabs(total) + 5e-26 * abs_acc, n, True)
        ratio = ((a + n) * (b + n)) / ((c + n) * (n + 1.0)) * z
        nxt = term * ratio
        if fabs(nxt) <= rel_tol * fabs(1.0 + s) and fabs(ratio) < 1.0:
            total = s + comp
            if z < 0.0:
                tail = fabs(nxt)
            else:
                tail = fabs(nxt) / (1.0 - fabs(ratio))
            return (total, tail + 2.5e-16 * fabs(total) + 5e-26 * abs_acc, n, True)
    total = s + comp
    tail = fabs(term) / max(1e-300, 1.0 - fabs(z))
    return (total, tail, n, False)


def series_3f2_tail(double a1, double a2, double a3, double b1, double b2,
                    double z, double rel_tol=SERIES_REL_TOL,
                    long max_terms=10 ** 6):
    cdef double term = 1.0
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double abs_acc = 0.0
    cdef double t, ratio, nxt, total, tail
    cdef long n = 0
    if z == 0.0:
        return (0.0, 0.0, 0, True)
    while n < max_terms:
        term *= ((a1 + n) * (a2 + n) * (a3 + n)) / ((b1 + n) * (b2 + n) * (n + 1.0)) * z
        t = s + term
        if fabs(s) >= fabs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        abs_acc += fabs(term)
        n += 1
        if term == 0.0:
            total = s + comp
            return (total, 2.5e-16 * fabs(total) + 5e-26 * abs_acc, n, True)
        ratio = ((a1 + n) * (a2 + n) * (a3 + n)) / ((b1 + n) * (b2 + n) * (n + 1.0)) * z
        nxt = term * ratio
        if fabs(nxt) <= rel_tol * fabs(1.0 + s) and fabs(ratio) < 1.0:
            total = s + comp
            if z < 0.0:
                tail = fabs(nxt)
            else:
                tail = fabs(nxt) / (1.0 - fabs(ratio))
            return (total, tail + 2.5e-16 * fabs(total) + 5e-26 * abs_acc, n, True)
    total = s + comp
    tail = fabs(term) / max(1e-300, 1.0 - fabs(z))
    return (total, tail, n, False)


cdef inline double _integrand(int kind, double p, double logx, double s) nogil:
    cdef double logt, u
    if s <= 0.0:
        return 1.0
    logt = logx + log1p(s - 1.0)
    if logt >= 0.0:
        logt = -1.1e-16
    if kind == 1:
        return 1.0 / (1.0 + exp(p * logt))
    if kind == 2:
        return exp(-log1p(exp(p * logt)) / p)
    u = -expm1(p * logt)
    if kind == 3:
        return 1.0 / u
    return exp(-log(u) / p)


cdef inline void _gk15(int kind, double p, double x, double logx,
                       double lo, double hi, double *resk, double *resg) nogil:
    cdef double centre = 0.5 * (lo + hi)
    cdef double half = 0.5 * (hi - lo)
    cdef double fc = _integrand(kind, p, logx, centre)
    cdef double rk = WGK[7] * fc
    cdef double rg = WG[3] * fc
    cdef double dx, f1, f2
    cdef int j
    for j in range(7):
        dx = half * XGK[j]
        f1 = _integrand(kind, p, logx, centre - dx)
        f2 = _integrand(kind, p, logx, centre + dx)
        rk += WGK[j] * (f1 + f2)
        if j % 2 == 1:
            rg += WG[j // 2] * (f1 + f2)
    resk[0] = rk * half * x
    resg[0] = rg * half * x


cdef inline bint _panel_before(double e1, double lo1, double hi1,
                               double e2, double lo2, double hi2) nogil:
    if e1 != e2:
        return e1 > e2
    if lo1 != lo2:
        return lo1 < lo2
    return hi1 < hi2


def quad_defining(int kind, double p, double x, double tol=QUAD_ABS_TOL,
                  long max_panels=2 ** 14):
    cdef long cap = max_panels + 70
    cdef double *he = <double *> malloc(cap * sizeof(double))
    cdef double *hlo = <double *> malloc(cap * sizeof(double))
    cdef double *hhi = <double *> malloc(cap * sizeof(double))
    cdef double *hval = <double *> malloc(cap * sizeof(double))
    cdef double *de = <double *> malloc(cap * sizeof(double))
    cdef double *dlo = <double *> malloc(cap * sizeof(double))
    cdef double *dhi = <double *> malloc(cap * sizeof(double))
    cdef double *dval = <double *> malloc(cap * sizeof(double))
    cdef long nh = 0, nd = 0
    cdef long evals = 0, panels = 0
    cdef double err_total = 0.0, val_est = 0.0
    cdef double logx, delta, w, prev, resk, resg
    cdef double e, lo, hi, val, mid, k1, g1, k2, g2
    cdef double total, comp, err, t, value
    cdef long i, j, b, l, r
    cdef bint ok

    if he == NULL or hlo == NULL or hhi == NULL or hval == NULL or \
            de == NULL or dlo == NULL or dhi == NULL or dval == NULL:
        free(he); free(hlo); free(hhi); free(hval)
        free(de); free(dlo); free(dhi); free(dval)
        raise MemoryError()
    try:
        if x == 0.0:
            return (0.0, 0.0, 0, True)
        logx = log1p(x - 1.0) if x > 0.5 else log(x)

        prev = 0.0
        if kind == 0 or kind == 3:
            delta = max(1.0 / x - 1.0, 1e-18)
            w = 0.5
            while w > delta and nh < 61:
                _gk15(kind, p, x, logx, prev, 1.0 - w, &resk, &resg)
                evals += 15
                panels += 1
                he[nh] = fabs(resk - resg); hlo[nh] = prev; hhi[nh] = 1.0 - w
                hval[nh] = resk
                err_total += he[nh]; val_est += resk
                nh += 1
                prev = 1.0 - w
                w *= 0.5
        _gk15(kind, p, x, logx, prev, 1.0, &resk, &resg)
        evals += 15
        panels += 1
        he[nh] = fabs(resk - resg); hlo[nh] = prev; hhi[nh] = 1.0
        hval[nh] = resk
        err_total += he[nh]; val_est += resk
        nh += 1

        # heapify
        for i in range(1, nh):
            j = i
            while j > 0:
                b = (j - 1) // 2
                if _panel_before(he[j], hlo[j], hhi[j], he[b], hlo[b], hhi[b]):
                    he[j], he[b] = he[b], he[j]
                    hlo[j], hlo[b] = hlo[b], hlo[j]
                    hhi[j], hhi[b] = hhi[b], hhi[j]
                    hval[j], hval[b] = hval[b], hval[j]
                    j = b
                else:
                    break

        while nh > 0 and err_total > tol * max(1.0, fabs(val_est)) and panels + 1 < max_panels:
            # pop worst
            e = he[0]; lo = hlo[0]; hi = hhi[0]; val = hval[0]
            nh -= 1
            he[0] = he[nh]; hlo[0] = hlo[nh]; hhi[0] = hhi[nh]; hval[0] = hval[nh]
            i = 0
            while True:
                l = 2 * i + 1
                r = l + 1
                b = i
                if l < nh and _panel_before(he[l], hlo[l], hhi[l], he[b], hlo[b], hhi[b]):
                    b = l
                if r < nh and _panel_before(he[r], hlo[r], hhi[r], he[b], hlo[b], hhi[b]):
                    b = r
                if b == i:
                    break
                he[i], he[b] = he[b], he[i]
                hlo[i], hlo[b] = hlo[b], hlo[i]
                hhi[i], hhi[b] = hhi[b], hhi[i]
                hval[i], hval[b] = hval[b], hval[i]
                i = b

            if hi - lo <= 4.0 * EPS * max(fabs(lo), fabs(hi)):
                de[nd] = e; dlo[nd] = lo; dhi[nd] = hi; dval[nd] = val
                nd += 1
                continue
            mid = 0.5 * (lo + hi)
            _gk15(kind, p, x, logx, lo, mid, &k1, &g1)
            _gk15(kind, p, x, logx, mid, hi, &k2, &g2)
            evals += 30
            panels += 2
            err_total += fabs(k1 - g1) + fabs(k2 - g2) - e
            val_est += k1 + k2 - val
            # push both children
            he[nh] = fabs(k1 - g1); hlo[nh] = lo; hhi[nh] = mid; hval[nh] = k1
            j = nh
            nh += 1
            while j > 0:
                b = (j - 1) // 2
                if _panel_before(he[j], hlo[j], hhi[j], he[b], hlo[b], hhi[b]):
                    he[j], he[b] = he[b], he[j]
                    hlo[j], hlo[b] = hlo[b], hlo[j]
                    hhi[j], hhi[b] = hhi[b], hhi[j]
                    hval[j], hval[b] = hval[b], hval[j]
                    j = b
                else:
                    break
            he[nh] = fabs(k2 - g2); hlo[nh] = mid; hhi[nh] = hi; hval[nh] = k2
            j = nh
            nh += 1
            while j > 0:
                b = (j - 1) // 2
                if _panel_before(he[j], hlo[j], hhi[j], he[b], hlo[b], hhi[b]):
                    he[j], he[b] = he[b], he[j]
                    hlo[j], hlo[b] = hlo[b], hlo[j]
                    hhi[j], hhi[b] = hhi[b], hhi[j]
                    hval[j], hval[b] = hval[b], hval[j]
                    j = b
                else:
                    break

        # move heap remnants to the done set, then sort all panels by lo
        # (insertion sort into the done arrays keyed on (lo, hi))
        for i in range(nh):
            de[nd] = he[i]; dlo[nd] = hlo[i]; dhi[nd] = hhi[i]; dval[nd] = hval[i]
            nd += 1
        for i in range(1, nd):
            e = de[i]; lo = dlo[i]; hi = dhi[i]; val = dval[i]
            j = i - 1
            while j >= 0 and (dlo[j] > lo or (dlo[j] == lo and dhi[j] > hi)):
                de[j + 1] = de[j]; dlo[j + 1] = dlo[j]
                dhi[j + 1] = dhi[j]; dval[j + 1] = dval[j]
                j -= 1
            de[j + 1] = e; dlo[j + 1] = lo; dhi[j + 1] = hi; dval[j + 1] = val

        total = 0.0
        comp = 0.0
        err = 0.0
        for i in range(nd):
            val = dval[i]
            t = total + val
            if fabs(total) >= fabs(val):
                comp += (total - t) + val
            else:
                comp += (val - t) + total
            total = t
            err += de[i]
        value = total + comp
        err = 2.0 * err + 4.0 * EPS * fabs(value)
        ok = err <= 2.0 * tol * max(1.0, fabs(value)) * 1.0625 + 4.0 * EPS * fabs(value)
        return (value, err, evals, ok)
    finally:
        free(he); free(hlo); free(hhi); free(hval)
        free(de); free(dlo); free(dhi); free(dval)
