# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled twin of sincsum._kernels_py.

Same algorithms, same summation order, same error control; only the
interpreter overhead is gone.  Keep the two files in lockstep: any change
here must be mirrored in the pure module (differential tests compare them).
No fast-math style reassociation is enabled, so both backends track libm
bit for bit on the same platform.
"""

from libc.math cimport cos, exp, fabs, floor, log, pow, sin

cdef double PI = 3.141592653589793
cdef double LOG_PI = 1.1447298858494002

# B_{2j}/(2j)! for j = 1..8 and the |B_18|/18! remainder gauge.
cdef double[8] _EM_COEF
_EM_COEF[0] = 1.0 / 12.0
_EM_COEF[1] = -1.0 / 720.0
_EM_COEF[2] = 1.0 / 30240.0
_EM_COEF[3] = -1.0 / 1209600.0
_EM_COEF[4] = 1.0 / 47900160.0
_EM_COEF[5] = -691.0 / 1307674368000.0
_EM_COEF[6] = 1.0 / 74724249600.0
_EM_COEF[7] = -3617.0 / 10670622842880000.0
cdef double _EM_NEXT = 43867.0 / 5109094217170944000.0

FLOAT_SLACK = 1e-14
cdef double _FLOAT_SLACK = 1e-14

cdef double[8] _DSINC_COEF
_DSINC_COEF[0] = -1.0 / 3.0
_DSINC_COEF[1] = 1.0 / 30.0
_DSINC_COEF[2] = -1.0 / 840.0
_DSINC_COEF[3] = 1.0 / 45360.0
_DSINC_COEF[4] = -1.0 / 3991680.0
_DSINC_COEF[5] = 1.0 / 518918400.0
_DSINC_COEF[6] = -7.0 / 653837184000.0
_DSINC_COEF[7] = 1.0 / 22230464256000.0


def backend_name():
    return "compiled"


cdef inline double _sinc(double x) nogil:
    cdef double t, u
    if fabs(x) < 1e-4:
        t = PI * x
        u = t * t
        return 1.0 - u / 6.0 + (u * u) / 120.0
    if x == floor(x):
        return 0.0  # sin(pi*m) is exactly 0 at integers; libm's is not
    t = PI * x
    return sin(t) / t


cdef inline double _dsinc(double x) nogil:
    cdef double u, g
    cdef int k
    if fabs(x) < 0.125:
        u = (PI * x) * (PI * x)
        g = _DSINC_COEF[7]
        for k in range(6, -1, -1):
            g = g * u + _DSINC_COEF[k]
        return PI * PI * x * g
    return (cos(PI * x) - _sinc(x)) / x


def sinc(double x):
    return _sinc(x)


def sinc_sq(double x):
    cdef double s = _sinc(x)
    return s * s


def dsinc(double x):
    return _dsinc(x)


cdef (double, double) _zeta_em(double s, double a) nogil:
    cdef int n = 0 if a >= 24.0 else 24
    cdef int k, j
    cdef double w, acc, c, term, y, t, base, total, w2, g, corr, gauge
    while True:
        w = n + a
        acc = 0.0
        c = 0.0
        for k in range(n - 1, -1, -1):
            term = pow(k + a, -s)
            y = term - c
            t = acc + y
            c = (t - acc) - y
            acc = t
        base = pow(w, -s)
        total = acc + base * w / (s - 1.0) + 0.5 * base
        w2 = w * w
        g = base * s / w
        corr = 0.0
        for j in range(8):
            corr += _EM_COEF[j] * g
            g *= (s + 2.0 * (j + 1) - 1.0) * (s + 2.0 * (j + 1)) / w2
        total += corr
        gauge = _EM_NEXT * g
        if gauge <= 1e-14 or gauge <= 1e-16 * fabs(total) or n >= 65536:
            return total, gauge
        n = n * 2 if n else 24


def zeta_em(double s, double a):
    cdef (double, double) out = _zeta_em(s, a)
    return out[0], out[1]


cdef inline double _abs_sinc_pow(double x, double s) nogil:
    cdef double u = _sinc(x)
    if u == 0.0:
        return 0.0
    return exp(s * log(fabs(u)))


def power_sum_fixed(double r, double x, int m_terms):
    cdef double s = 2.0 * r
    cdef double acc = 0.0
    cdef double c = 0.0
    cdef double term, y, t, sp, pref, value, tail_bound
    cdef double z_right, g_right, z_left, g_left
    cdef (double, double) zr, zl
    cdef int k
    for k in range(m_terms, 0, -1):
        term = _abs_sinc_pow(x + k, s)
        if term != 0.0:
            y = term - c
            t = acc + y
            c = (t - acc) - y
            acc = t
        term = _abs_sinc_pow(x - k, s)
        if term != 0.0:
            y = term - c
            t = acc + y
            c = (t - acc) - y
            acc = t
    term = _abs_sinc_pow(x, s)
    y = term - c
    acc = acc + y

    sp = fabs(sin(PI * x))
    if sp == 0.0:
        return acc, _FLOAT_SLACK
    pref = exp(s * (log(sp) - LOG_PI))
    if pref == 0.0:
        return acc, _FLOAT_SLACK
    zr = _zeta_em(s, m_terms + 1.0 + x)
    zl = _zeta_em(s, m_terms + 1.0 - x)
    value = acc + pref * (zr[0] + zl[0])
    tail_bound = pref * (zr[1] + zl[1]) + _FLOAT_SLACK
    return value, tail_bound


def power_sum_zeta(double r, double x):
    cdef double s, head, sp, pref
    cdef (double, double) z0, z1
    if x <= 0.0 or x >= 1.0:
        return 1.0
    s = 2.0 * r
    head = _abs_sinc_pow(x, s) + _abs_sinc_pow(x - 1.0, s)
    sp = sin(PI * x)
    pref = exp(s * (log(sp) - LOG_PI))
    if pref == 0.0:
        return head
    z0 = _zeta_em(s, 1.0 + x)
    z1 = _zeta_em(s, 2.0 - x)
    return head + pref * (z0[0] + z1[0])


def power_sum_deriv(double r, double x):
    cdef double s = 2.0 * r
    cdef double u = _sinc(x)
    cdef double du = _dsinc(x)
    cdef double v = _sinc(x - 1.0)
    cdef double dv = _dsinc(x - 1.0)
    cdef double d_head, sp, lsp, pref, d_pref
    cdef (double, double) z0, z1, dz0, dz1
    d_head = s * exp((s - 1.0) * log(u)) * du
    d_head += s * exp((s - 1.0) * log(v)) * dv

    sp = sin(PI * x)
    lsp = log(sp)
    pref = exp(s * (lsp - LOG_PI))
    d_pref = s * PI * cos(PI * x) * exp((s - 1.0) * lsp - s * LOG_PI)

    z0 = _zeta_em(s, 1.0 + x)
    z1 = _zeta_em(s, 2.0 - x)
    dz0 = _zeta_em(s + 1.0, 1.0 + x)
    dz1 = _zeta_em(s + 1.0, 2.0 - x)
    return d_head + d_pref * (z0[0] + z1[0]) + pref * s * (dz1[0] - dz0[0])
