"""Double-word (double-double) floating-point helpers.

A double-word value is an unevaluated sum ``hi + lo`` of two doubles with
``|lo| <= ulp(hi)/2``, giving roughly 32 significant decimal digits.  The
package needs this exactly once: reducing phases ``t * ln(n)`` modulo 2*pi
when ``t`` is large enough (t ~ 1e8 and beyond) that plain doubles lose the
angle entirely.

Every function below accepts either Python floats or numpy arrays; all
branch-free expressions vectorize as-is.
"""

import numpy as np

# 2^27 + 1, Dekker splitter for 53-bit significands
_SPLITTER = 134217729.0

# ln 2 and 2*pi to double-word precision
LN2_HI = 6.931471805599453e-01
LN2_LO = 2.3190468138462996e-17
TWO_PI_HI = 6.283185307179586
TWO_PI_LO = 2.4492935982947064e-16


def two_sum(a, b):
    """Error-free sum: returns (s, e) with s = fl(a+b) and s + e = a + b."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def two_prod(a, b):
    """Error-free product via Dekker splitting: p + e = a * b exactly."""
    p = a * b
    ca = _SPLITTER * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLITTER * b
    bh = cb - (cb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(xh, xl, yh, yl):
    s, e = two_sum(xh, yh)
    e = e + xl + yl
    return two_sum(s, e)


def dd_mul(xh, xl, yh, yl):
    p, e = two_prod(xh, yh)
    e = e + xh * yl + xl * yh
    return two_sum(p, e)


def dd_div_scalar(xh, xl, d):
    """Divide a double-word value by an exact double scalar."""
    q1 = xh / d
    p, e = two_prod(q1, d)
    rh, rl = dd_add(xh, xl, -p, -e)
    q2 = (rh + rl) / d
    return two_sum(q1, q2)


def _dd_exp_small(xh, xl):
    """exp() of a double-word x with |x| <= 0.75.

    Scale by 2^-7, 18-term Taylor (tail < 1e-40 at |x| <= 0.006), then
    square 7 times.  Good to ~1e-30 relative.
    """
    xh = xh * 0.0078125
    xl = xl * 0.0078125
    th = np.ones_like(xh) if isinstance(xh, np.ndarray) else 1.0
    tl = np.zeros_like(xh) if isinstance(xh, np.ndarray) else 0.0
    for n in range(18, 0, -1):
        th, tl = dd_mul(th, tl, xh, xl)
        th, tl = dd_div_scalar(th, tl, float(n))
        th, tl = dd_add(th, tl, 1.0, 0.0)
    for _ in range(7):
        th, tl = dd_mul(th, tl, th, tl)
    return th, tl


def dd_log(x):
    """Natural log of positive x (float or array) to double-word precision.

    Writes x = m * 2^e with m in [0.5, 1), takes the double-precision log of
    m and removes its rounding error through one residual step
    r = m * exp(-u) - 1, so that ln m = u + log1p(r) with r ~ 1e-17.
    """
    m, e = np.frexp(x)
    e = e.astype(float) if isinstance(e, np.ndarray) else float(e)
    u = np.log(m)
    eh, el = _dd_exp_small(-u, np.zeros_like(u) if isinstance(u, np.ndarray) else 0.0)
    ph, pl = dd_mul(m, np.zeros_like(m) if isinstance(m, np.ndarray) else 0.0, eh, el)
    rh, rl = dd_add(ph, pl, -1.0, 0.0)
    # log1p(r) = r to double-word accuracy since r^2 ~ 1e-34
    lh, ll = dd_add(u, np.zeros_like(u) if isinstance(u, np.ndarray) else 0.0, rh, rl)
    kh, kl = two_prod(e, LN2_HI)
    kl = kl + e * LN2_LO
    return dd_add(lh, ll, kh, kl)


def reduce_mod_2pi(xh, xl):
    """Reduce a double-word angle modulo 2*pi to a plain double near (-pi, pi].

    The quotient must stay below 2^53 for exactness; that covers angles up
    to ~5.6e16, far beyond any phase this package produces.
    """
    q = np.round(xh / TWO_PI_HI)
    ph, pl = two_prod(q, TWO_PI_HI)
    rh, rl = dd_add(xh, xl, -ph, -pl)
    ph2, pl2 = two_prod(q, TWO_PI_LO)
    rh, rl = dd_add(rh, rl, -ph2, -pl2)
    return rh + rl


def phase_mod_2pi(t, n):
    """t * ln(n) reduced modulo 2*pi, computed entirely in double-word."""
    lh, ll = dd_log(n if isinstance(n, np.ndarray) else float(n))
    xh, xl = dd_mul(t, 0.0 if not isinstance(lh, np.ndarray) else np.zeros_like(lh),
                    lh, ll)
    return reduce_mod_2pi(xh, xl)
