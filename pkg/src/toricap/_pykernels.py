"""Pure-Python integer kernels; reference implementation and fallback.

All inputs are nonnegative Python ints (rationals pre-scaled to a common
denominator), so results are exact at any magnitude.
"""
from math import isqrt


def ball_multiplier(k):
    """The d with d^2 + d <= 2k <= d^2 + 3d."""
    return (isqrt(8 * k + 1) - 1) // 2


def multiplier_table(n):
    return [(isqrt(8 * k + 1) - 1) // 2 for k in range(n + 1)]


def union_table(weights, n):
    """max over k_1 + ... = k of sum d(k_i) w_i, for every k <= n.

    Max-plus convolution one ball at a time.  A ball's capacity only jumps at
    triangular indices d(d+1)/2, and the running table is nondecreasing, so
    those are the only split points worth trying.
    """
    best = [0] * (n + 1)
    for w in weights:
        new = best[:]
        d = 1
        t = 1
        while t <= n:
            gain = d * w
            for k in range(t, n + 1):
                v = best[k - t] + gain
                if v > new[k]:
                    new[k] = v
            d += 1
            t = d * (d + 1) // 2
        best = new
    return best


def scan_infimum(r, union, kmax):
    """min over l <= len(union)-1 of r*d(k+l) - union[l], with smallest argmin."""
    L = len(union) - 1
    mult = multiplier_table(kmax + L)
    values, args = [], []
    for k in range(kmax + 1):
        best = r * mult[k] - union[0]
        arg = 0
        for l in range(1, L + 1):
            v = r * mult[k + l] - union[l]
            if v < best:
                best, arg = v, l
        values.append(best)
        args.append(arg)
    return values, args
