"""Independent brute-force reference computations for the test suite.

Everything here is deliberately naive: exhaustive enumeration with
exact integer arithmetic, no intervals, no pruning, and no shared code
with the package internals.  Slow but obviously correct on the small
instances the tests use.
"""

from __future__ import annotations

import itertools

import numpy as np


def companion_matrix(coeffs) -> np.ndarray:
    """Multiplication-by-alpha on the power basis for a monic polynomial
    (coefficients ascending), acting on column vectors."""
    d = len(coeffs) - 1
    assert coeffs[d] == 1
    mat = np.zeros((d, d), dtype=np.int64)
    for j in range(d - 1):
        mat[j + 1, j] = 1
    for i in range(d):
        mat[i, d - 1] += -coeffs[i]
    return mat


def zero_words_monic(coeffs, height: int, max_len: int) -> set:
    """All words (MSB first) over {-height..height} of length 1..max_len
    whose exact Horner evaluation at alpha is 0, for monic coeffs."""
    d = len(coeffs) - 1
    mat = companion_matrix(coeffs)
    digits = np.arange(-height, height + 1, dtype=np.int64)
    k = len(digits)
    out = set()
    words = digits.reshape(-1, 1)
    states = np.zeros((k, d), dtype=np.int64)
    states[:, 0] = digits
    for length in range(1, max_len + 1):
        assert int(np.abs(states).max(initial=0)) < 2**55
        hit = np.all(states == 0, axis=1)
        for row in words[hit]:
            out.add(tuple(int(x) for x in row))
        if length == max_len:
            break
        n = states.shape[0]
        states = np.repeat(states @ mat.T, k, axis=0)
        states[:, 0] += np.tile(digits, n)
        words = np.hstack([np.repeat(words, k, axis=0),
                           np.tile(digits, n).reshape(-1, 1)])
    return out


def zero_words_rational(p: int, q: int, height: int, max_len: int) -> set:
    """Zero words for alpha = p/q.  The running value after j digits is
    tracked exactly as value * q^j, an integer."""
    digits = np.arange(-height, height + 1, dtype=np.int64)
    k = len(digits)
    out = set()
    words = digits.reshape(-1, 1)
    scaled = digits * q
    for length in range(1, max_len + 1):
        assert int(np.abs(scaled).max(initial=0)) < 2**55
        for row in words[scaled == 0]:
            out.add(tuple(int(x) for x in row))
        if length == max_len:
            break
        n = scaled.shape[0]
        mult = q ** (length + 1)
        scaled = np.repeat(scaled * p, k) + np.tile(digits, n) * mult
        words = np.hstack([np.repeat(words, k, axis=0),
                           np.tile(digits, n).reshape(-1, 1)])
    return out


def representable_values(coeffs, digits, max_len: int) -> set:
    """Coordinate tuples of every ring element writable as a digit word
    of length <= max_len, monic coeffs, integer digits."""
    d = len(coeffs) - 1

    def mul(x):
        top = x[-1]
        out = [-coeffs[0] * top]
        for i in range(1, d):
            out.append(x[i - 1] - coeffs[i] * top)
        return tuple(out)

    cur = {(0,) * d}
    seen = set(cur)
    for _ in range(max_len):
        nxt = set()
        for x in cur:
            ax = mul(x)
            for dig in digits:
                nxt.add((ax[0] + dig,) + ax[1:])
        seen |= nxt
        cur = nxt
    return seen


def periodic_points_linear(a: int, b: int, digits, bound: int) -> set:
    """Cycle elements of x -> (x - r) * b / a over the integers
    |x| <= bound, r the unique digit congruent to x mod a."""
    by_res = {dd % a: dd for dd in digits}
    assert len(by_res) == a
    guard = 100 * (bound + 10)
    per: set = set()
    for start in range(-bound, bound + 1):
        x = start
        trail: dict = {}
        order: list = []
        while x not in trail and abs(x) <= guard:
            trail[x] = len(order)
            order.append(x)
            r = by_res[x % a]
            num = (x - r) * b
            assert num % a == 0
            x = num // a
        if x in trail:
            per.update(order[trail[x]:])
    return per


def periodic_points_quadratic(a1: int, a2: int, digits, box: int) -> set:
    """Cycle elements of backward division for x^2 + a1 x + a2 with an
    integer digit set, scanning all |u|, |v| <= box.  Inverts
    alpha*(p, q) = (-a2 q, p - a1 q) exactly."""
    guard = 20 * box + 200
    per: set = set()
    for u in range(-box, box + 1):
        for v in range(-box, box + 1):
            x = (u, v)
            trail: dict = {}
            order: list = []
            while x not in trail:
                trail[x] = len(order)
                order.append(x)
                r = next(dd for dd in digits if (x[0] - dd) % a2 == 0)
                qq = -((x[0] - r) // a2)
                pp = x[1] + a1 * qq
                x = (pp, qq)
                if abs(pp) > guard or abs(qq) > guard:
                    break
            if x in trail:
                per.update(order[trail[x]:])
    return per


def height_values_naive(reps, s: int) -> set:
    """All sums a[0][j0] + ... + a[m][jm], m <= s, digits chosen
    independently at each coordinate."""
    padded = [tuple(r) + (0,) * (s + 1 - len(r)) for r in reps]
    out: set = set()
    for m in range(s + 1):
        for combo in itertools.product(range(len(padded)), repeat=m + 1):
            out.add(sum(padded[j][i] for i, j in enumerate(combo)))
    return out
