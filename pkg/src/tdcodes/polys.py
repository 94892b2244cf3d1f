"""Polynomial arithmetic over GF(q) with coefficients as base-field reprs.

Polynomials are little-endian tuples of ints with no trailing zeros; the
zero polynomial is the empty tuple.  Every function takes the field first
and never mutates its arguments.
"""

from __future__ import annotations


def trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(p) - 1


def add(field, a, b) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return trim(out)


def scale(field, c: int, a) -> tuple[int, ...]:
    if c == 0:
        return ()
    if c == 1:
        return tuple(a)
    return tuple(field.base_mul(c, x) for x in a)


def mul(field, a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] ^= field.base_mul(ca, cb)
    return tuple(out)


def divmod_(field, a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lead = field.base_inv(b[-1])
    quot = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        factor = field.base_mul(a[-1], inv_lead)
        quot[da - db] = factor
        for j, cb in enumerate(b):
            if cb:
                a[da - db + j] ^= field.base_mul(factor, cb)
        a.pop()
    return trim(quot), trim(a)


def mod(field, a, b) -> tuple[int, ...]:
    return divmod_(field, a, b)[1]


def monic(field, a) -> tuple[int, ...]:
    a = trim(a)
    if not a or a[-1] == 1:
        return a
    return scale(field, field.base_inv(a[-1]), a)


def gcd(field, a, b) -> tuple[int, ...]:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(field, a, b)
    return monic(field, a)


def powmod(field, a, e: int, f) -> tuple[int, ...]:
    r: tuple[int, ...] = (1,)
    a = mod(field, a, f)
    while e:
        if e & 1:
            r = mod(field, mul(field, r, a), f)
        a = mod(field, mul(field, a, a), f)
        e >>= 1
    return r


def eval_base(field, p, x: int) -> int:
    """Evaluate at a base-field point (Horner)."""
    acc = 0
    for c in reversed(p):
        acc = field.base_mul(acc, x) ^ c
    return acc


def eval_ext(field, p, x: int) -> int:
    """Evaluate at an extension-field point, coefficients embedded."""
    acc = 0
    for c in reversed(p):
        acc = field.ext_mul(acc, x) ^ field.embed_base(c)
    return acc


def x_pow_n_plus_1(n: int) -> tuple[int, ...]:
    """x^n - 1, which in characteristic 2 is x^n + 1."""
    out = [0] * (n + 1)
    out[0] = 1
    out[-1] = 1
    return tuple(out)
