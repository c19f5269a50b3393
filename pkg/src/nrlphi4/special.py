"""Cylinder functions of order 0 and 1 for real positive argument.

Only what the radial square-well problem needs: J0, J1, Y0, Y1 and the
exponentially scaled modified functions exp(-x) I_n(x), exp(x) K_n(x).

Regimes (thresholds fixed):

* J, Y: ascending series for x <= 8; Miller backward recurrence with the
  Neumann sums for Y on (8, 25]; Hankel asymptotic expansion above 25.
* K: ascending series for x <= 2; trapezoidal rule on the integral
  exp(x) K_n(x) = int_0^inf exp(-x (cosh t - 1)) cosh(n t) dt above. The
  integrand is entire and decays double-exponentially, so the trapezoidal
  rule converges geometrically.
* I: ascending series (no cancellation) for x <= 20, asymptotic above.

Target accuracy is 1e-13 absolute on the oscillatory functions' natural
scale and ~1e-14 relative on the modified ones.
"""
from __future__ import annotations

import math

EULER_GAMMA = 0.57721566490153286060651209008240243
SERIES_MAX = 8.0
MILLER_MAX = 25.0
K_SERIES_MAX = 2.0
I_SERIES_MAX = 20.0
_EPS = 1e-17


def _check(x):
    if not x > 0:
        raise ValueError(f"cylinder functions here need x > 0, got {x}")


def _series_j(x):
    """J0, J1 from the ascending series."""
    q = -0.25 * x * x
    t0 = 1.0
    t1 = 0.5 * x
    s0, s1 = t0, t1
    k = 1
    while True:
        t0 *= q / (k * k)
        t1 *= q / (k * (k + 1))
        s0 += t0
        s1 += t1
        if abs(t0) < _EPS * 1e-3 and abs(t1) < _EPS * 1e-3:
            break
        k += 1
    return s0, s1


def _series_y(x, j0, j1):
    """Y0, Y1 from the ascending series; psi(n+1) = H_n - gamma."""
    q = -0.25 * x * x
    lg = math.log(0.5 * x)
    # Y0 = (2/pi) ln(x/2) J0 - (2/pi) sum psi(k+1) q^k/(k!)^2
    term = 1.0
    h = 0.0
    s0 = -EULER_GAMMA
    # Y1 = -2/(pi x) + (2/pi) ln(x/2) J1 - (x/(2 pi)) sum (psi(k+1)+psi(k+2)) q^k/(k!(k+1)!)
    term1 = 1.0
    s1 = (-EULER_GAMMA) + (1.0 - EULER_GAMMA)
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        term1 *= q / (k * (k + 1))
        h += 1.0 / k
        psi_k1 = h - EULER_GAMMA
        psi_k2 = psi_k1 + 1.0 / (k + 1)
        d0 = term * psi_k1
        d1 = term1 * (psi_k1 + psi_k2)
        s0 += d0
        s1 += d1
        if abs(d0) < 1e-20 and abs(d1) < 1e-20 and k > 2:
            break
    y0 = (2.0 / math.pi) * (lg * j0 - s0)
    y1 = -2.0 / (math.pi * x) + (2.0 / math.pi) * lg * j1 - x / (2.0 * math.pi) * s1
    return y0, y1


def _miller(x):
    """J0, J1, Y0, Y1 by backward recurrence, normalized by J0 + 2 sum J_2k = 1."""
    n_start = 2 * int((1.5 * x + 40.0) / 2.0)
    vals = [0.0] * (n_start + 2)
    vals[n_start + 1] = 0.0
    vals[n_start] = 1e-30
    two_over_x = 2.0 / x
    for n in range(n_start, 0, -1):
        vals[n - 1] = n * two_over_x * vals[n] - vals[n + 1]
        if abs(vals[n - 1]) > 1e250:
            for i in range(n - 1, n_start + 2):
                vals[i] *= 1e-250
    norm = vals[0] + 2.0 * sum(vals[2:n_start + 1:2])
    jn = [v / norm for v in vals]
    j0, j1 = jn[0], jn[1]
    lg = math.log(0.5 * x) + EULER_GAMMA
    s0 = 0.0
    s1 = 0.0
    sign = -1.0
    for k in range(1, n_start // 2):
        s0 += sign * jn[2 * k] / k
        s1 += sign * (jn[2 * k - 1] - jn[2 * k + 1]) / k
        sign = -sign
    y0 = (2.0 / math.pi) * (lg * j0 - 2.0 * s0)
    y1 = (2.0 / math.pi) * (-j0 / x + lg * j1 + s1)
    return j0, j1, y0, y1


def _hankel_pq(nu, x):
    mu = 4.0 * nu * nu
    p, q = 1.0, 0.0
    term = 1.0
    prev = math.inf
    k = 1
    while k < 200:
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(term) >= prev or abs(term) < 1e-18:
            break
        prev = abs(term)
        # a_k/x^k enters P with sign (-1)^(k/2) for even k, Q with (-1)^((k-1)/2) for odd k
        if k % 2 == 0:
            p += term * (-1) ** (k // 2)
        else:
            q += term * (-1) ** ((k - 1) // 2)
        k += 1
    return p, q


def _asymptotic_jy(nu, x):
    p, q = _hankel_pq(nu, x)
    chi = x - (0.5 * nu + 0.25) * math.pi
    amp = math.sqrt(2.0 / (math.pi * x))
    c, s = math.cos(chi), math.sin(chi)
    return amp * (p * c - q * s), amp * (p * s + q * c)


def jy01(x):
    """Return ``(J0, J1, Y0, Y1)`` at ``x > 0``."""
    _check(x)
    if x <= SERIES_MAX:
        j0, j1 = _series_j(x)
        y0, y1 = _series_y(x, j0, j1)
        return j0, j1, y0, y1
    if x <= MILLER_MAX:
        return _miller(x)
    j0, y0 = _asymptotic_jy(0, x)
    j1, y1 = _asymptotic_jy(1, x)
    return j0, j1, y0, y1


def j0(x):
    return jy01(x)[0]


def j1(x):
    return jy01(x)[1]


def y0(x):
    return jy01(x)[2]


def y1(x):
    return jy01(x)[3]


def _series_i(x):
    q = 0.25 * x * x
    t0, t1 = 1.0, 0.5 * x
    s0, s1 = t0, t1
    k = 1
    while True:
        t0 *= q / (k * k)
        t1 *= q / (k * (k + 1))
        s0 += t0
        s1 += t1
        if t0 < 1e-17 * s0 and t1 < 1e-17 * s1:
            break
        k += 1
    return s0, s1


def i01e(x):
    """``(exp(-x) I0(x), exp(-x) I1(x))`` for x > 0."""
    _check(x)
    if x <= I_SERIES_MAX:
        s0, s1 = _series_i(x)
        e = math.exp(-x)
        return s0 * e, s1 * e
    out = []
    for nu in (0, 1):
        mu = 4.0 * nu * nu
        s, term, prev, k = 1.0, 1.0, math.inf, 1
        while k < 200:
            term *= -(mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
            if abs(term) >= prev or abs(term) < 1e-18:
                break
            prev = abs(term)
            s += term
            k += 1
        out.append(s / math.sqrt(2.0 * math.pi * x))
    return out[0], out[1]


def _series_k(x):
    i0, i1 = _series_i(x)
    q = 0.25 * x * x
    lg = math.log(0.5 * x)
    # K0 = -ln(x/2) I0 + sum psi(k+1) q^k/(k!)^2
    # K1 = 1/x + ln(x/2) I1 - (x/4) sum (psi(k+1)+psi(k+2)) q^k/(k!(k+1)!)
    term0, term1, h = 1.0, 1.0, 0.0
    s0 = -EULER_GAMMA
    s1 = -2.0 * EULER_GAMMA + 1.0
    k = 0
    while True:
        k += 1
        term0 *= q / (k * k)
        term1 *= q / (k * (k + 1))
        h += 1.0 / k
        psi1 = h - EULER_GAMMA
        psi2 = psi1 + 1.0 / (k + 1)
        s0 += term0 * psi1
        s1 += term1 * (psi1 + psi2)
        if term0 < 1e-20 and k > 2:
            break
    return -lg * i0 + s0, 1.0 / x + lg * i1 - 0.25 * x * s1


def _integral_ke(x):
    h = min(0.25, 0.5 / math.sqrt(x))
    s0 = 0.5
    s1 = 0.5
    t = 0.0
    while True:
        t += h
        ch = math.cosh(t)
        w = math.exp(-x * (ch - 1.0))
        s0 += w
        s1 += w * ch
        if w < 1e-18:
            break
    return h * s0, h * s1


def k01e(x):
    """``(exp(x) K0(x), exp(x) K1(x))`` for x > 0."""
    _check(x)
    if x <= K_SERIES_MAX:
        k0, k1 = _series_k(x)
        e = math.exp(x)
        return k0 * e, k1 * e
    return _integral_ke(x)


def k0(x):
    return k01e(x)[0] * math.exp(-x)


def k1(x):
    return k01e(x)[1] * math.exp(-x)


def i0(x):
    return i01e(x)[0] * math.exp(x)


def i1(x):
    return i01e(x)[1] * math.exp(x)


def wronskian_jy_defect(x):
    """Relative defect of ``J1 Y0 - J0 Y1 = 2/(pi x)``."""
    a, b, c, d = jy01(x)
    ref = 2.0 / (math.pi * x)
    return abs(b * c - a * d - ref) / ref


def wronskian_ik_defect(x):
    """Relative defect of ``I0 K1 + I1 K0 = 1/x``."""
    i0s, i1s = i01e(x)
    k0s, k1s = k01e(x)
    return abs((i0s * k1s + i1s * k0s) * x - 1.0)
