"""Exact arithmetic in the tower GF(2) -> GF(2^s) -> GF((2^s)^m).

Base-field elements of GF(q), q = 2^s, are integers in [0, q) read as
little-endian coefficient bit vectors over GF(2), so base addition is XOR.
Extension elements of GF(q^m) are packed integers holding m base
coefficients in s-bit groups, which makes extension addition plain XOR as
well.  Multiplication reduces modulo the chosen moduli; discrete-log
tables accelerate both fields whenever the field fits (q^m <= 2^20),
with polynomial-basis arithmetic as the fallback above that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import factorint

from tdcodes import polys

MAX_TABLE_ORDER = 1 << 20


class FieldError(ValueError):
    """Bad modulus, unsupported size, or invalid element operation."""


def _prime_factors(n: int) -> list[int]:
    return sorted(factorint(n))


# ---------------------------------------------------------------------------
# GF(2)[x] helpers on int bitmasks (bit i = coefficient of x^i)
# ---------------------------------------------------------------------------

def _gf2_mulmod(a: int, b: int, f: int) -> int:
    top = 1 << (f.bit_length() - 1)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= f
    return r


def _gf2_powmod(a: int, e: int, f: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _gf2_mulmod(r, a, f)
        a = _gf2_mulmod(a, a, f)
        e >>= 1
    return r


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _gf2_is_irreducible(f: int) -> bool:
    d = f.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if not f & 1:
        return False

    def x_frob(times: int) -> int:
        # x^(2^times) mod f via repeated squaring of the class of x
        h = 2
        for _ in range(times):
            h = _gf2_mulmod(h, h, f)
        return h

    if x_frob(d) != 2:
        return False
    for p in _prime_factors(d):
        if _gf2_gcd(x_frob(d // p) ^ 2, f) != 1:
            return False
    return True


def _gf2_x_is_primitive(f: int, group_order: int) -> bool:
    # assumes f irreducible; the class of x must have the full order
    if _gf2_powmod(2, group_order, f) != 1:
        return False
    return all(_gf2_powmod(2, group_order // p, f) != 1
               for p in _prime_factors(group_order))


def default_base_modulus(s: int) -> int:
    """Smallest primitive degree-s polynomial over GF(2) in ascending encoding."""
    for f in range((1 << s) | 1, 1 << (s + 1), 2):
        if _gf2_is_irreducible(f) and _gf2_x_is_primitive(f, (1 << s) - 1):
            return f
    raise FieldError(f"no primitive polynomial of degree {s} found")


# ---------------------------------------------------------------------------
# Field tower
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of GF(q^m) over GF(q) = GF(2^s).

    ``base_modulus`` is a degree-s GF(2) bitmask; ``ext_modulus`` holds the
    m+1 little-endian base-field coefficients of a monic degree-m polynomial
    whose root (the class of x, called beta) generates GF(q^m)^*.

    Use :func:`make_field` to get a validated instance; constructing
    directly skips the irreducibility and primitivity checks.
    """

    s: int
    m: int
    base_modulus: int
    ext_modulus: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.s <= 8:
            raise FieldError(f"unsupported base degree s={self.s} (need 1..8)")
        if not 2 <= self.m <= 16:
            raise FieldError(f"unsupported extension degree m={self.m} (need 2..16)")
        if self.base_modulus.bit_length() - 1 != self.s:
            raise FieldError("base modulus degree mismatch")
        if len(self.ext_modulus) != self.m + 1:
            raise FieldError("extension modulus degree mismatch")
        if self.ext_modulus[-1] != 1:
            raise FieldError("extension modulus must be monic")
        if any(not 0 <= c < self.q for c in self.ext_modulus):
            raise FieldError("extension modulus coefficient out of range")

    @property
    def q(self) -> int:
        return 1 << self.s

    @property
    def n(self) -> int:
        return self.q ** self.m - 1

    # -- base field GF(q) ---------------------------------------------------

    @cached_property
    def _base_tables(self) -> tuple[list[int], list[int]]:
        q, f = self.q, self.base_modulus
        exp = [0] * (q - 1)
        log = [-1] * q
        e = 1
        for k in range(q - 1):
            exp[k] = e
            if log[e] != -1:
                raise FieldError("base modulus root is not primitive")
            log[e] = k
            e = _gf2_mulmod(e, 2, f)
        if e != 1:
            raise FieldError("base modulus root is not primitive")
        return exp, log

    def base_add(self, a: int, b: int) -> int:
        return a ^ b

    def base_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._base_tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def base_inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        exp, log = self._base_tables
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def base_pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("inversion of zero")
            return 0
        exp, log = self._base_tables
        return exp[(log[a] * e) % (self.q - 1)]

    def base_generator_power(self, k: int) -> int:
        """k-th power of the base-field generator (the class of x)."""
        exp, _ = self._base_tables
        return exp[k % (self.q - 1)]

    def base_log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return self._base_tables[1][a]

    # -- extension field GF(q^m) on packed ints -----------------------------

    @property
    def beta(self) -> int:
        """The class of x in GF(q^m): a primitive n-th root of unity."""
        return 1 << self.s

    @cached_property
    def _ext_tail(self) -> int:
        # packed value of x^m = sum_{j<m} c_j x^j (characteristic 2)
        return self.pack_coeffs(self.ext_modulus[:-1])

    @cached_property
    def _ext_tables(self) -> tuple[list[int], list[int]] | None:
        size = self.q ** self.m
        if size > MAX_TABLE_ORDER:
            return None
        n = self.n
        exp = [0] * n
        log = [-1] * size
        e = 1
        for k in range(n):
            exp[k] = e
            if log[e] != -1:
                raise FieldError("extension modulus root is not primitive")
            log[e] = k
            e = self._ext_times_x(e)
        if e != 1:
            raise FieldError("extension modulus root is not primitive")
        return exp, log

    def pack_coeffs(self, coeffs) -> int:
        v = 0
        for j, c in enumerate(coeffs):
            v |= c << (j * self.s)
        return v

    def ext_coeffs(self, x: int) -> tuple[int, ...]:
        mask = self.q - 1
        return tuple((x >> (j * self.s)) & mask for j in range(self.m))

    def _ext_scalar(self, c: int, v: int) -> int:
        # multiply every base coefficient of v by c
        if c == 0 or v == 0:
            return 0
        if c == 1:
            return v
        exp, log = self._base_tables
        lc = log[c]
        q1 = self.q - 1
        mask = q1
        r = 0
        shift = 0
        while v:
            d = v & mask
            if d:
                r |= exp[(lc + log[d]) % q1] << shift
            v >>= self.s
            shift += self.s
        return r

    def _ext_times_x(self, v: int) -> int:
        top_shift = (self.m - 1) * self.s
        carry = v >> top_shift
        v = (v ^ (carry << top_shift)) << self.s
        if carry:
            v ^= self._ext_scalar(carry, self._ext_tail)
        return v

    def _ext_mul_poly(self, a: int, b: int) -> int:
        mask = self.q - 1
        r = 0
        while b:
            d = b & mask
            if d:
                r ^= self._ext_scalar(d, a)
            b >>= self.s
            a = self._ext_times_x(a)
        return r

    def _ext_pow_poly(self, a: int, e: int) -> int:
        # raw square-and-multiply; exponent reduction mod n is only sound
        # once the modulus is known to be primitive, so callers do it
        r = 1
        while e:
            if e & 1:
                r = self._ext_mul_poly(r, a)
            a = self._ext_mul_poly(a, a)
            e >>= 1
        return r

    def ext_add(self, a: int, b: int) -> int:
        return a ^ b

    def ext_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self._ext_tables
        if t is None:
            return self._ext_mul_poly(a, b)
        exp, log = t
        return exp[(log[a] + log[b]) % self.n]

    def ext_inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        t = self._ext_tables
        if t is None:
            return self._ext_pow_poly(a, self.n - 1)
        exp, log = t
        return exp[(self.n - log[a]) % self.n]

    def ext_pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("inversion of zero")
            return 0
        t = self._ext_tables
        if t is None:
            return self._ext_pow_poly(a, e % self.n)
        exp, log = t
        return exp[(log[a] * (e % self.n)) % self.n]

    def beta_power(self, i: int) -> int:
        t = self._ext_tables
        if t is None:
            return self._ext_pow_poly(self.beta, i % self.n)
        return t[0][i % self.n]

    def ext_log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        t = self._ext_tables
        if t is None:
            raise FieldError("discrete log unavailable for fields above 2^20")
        return t[1][a]

    # -- subfield embedding --------------------------------------------------

    def embed_base(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"base element {a} out of range")
        return a

    def project_base(self, x: int) -> int:
        """Inverse of embed_base; fails if x lies outside the embedded GF(q)."""
        if not 0 <= x < self.q:
            raise FieldError(f"element {x} is not in the base subfield")
        return x

    # -- numpy helper tables for matrix work --------------------------------

    @cached_property
    def np_mul_table(self) -> np.ndarray:
        q = self.q
        t = np.zeros((q, q), dtype=np.uint8)
        for a in range(1, q):
            for b in range(a, q):
                t[a, b] = t[b, a] = self.base_mul(a, b)
        t.flags.writeable = False
        return t

    @cached_property
    def np_inv_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.uint8)
        for a in range(1, self.q):
            t[a] = self.base_inv(a)
        t.flags.writeable = False
        return t

    # -- rendering -----------------------------------------------------------

    def base_text(self, a: int) -> str:
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        k = self.base_log(a)
        return "w" if k == 1 else f"w^{k}"

    def ext_text(self, x: int) -> str:
        return ",".join(str(c) for c in self.ext_coeffs(x))


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------

def _ext_x_order_is_full(spec: FieldSpec, n_factors: list[int]) -> bool:
    if spec.ext_modulus[0] == 0:
        return False
    x = spec.beta
    if spec._ext_pow_poly(x, spec.n) != 1:
        return False
    return all(spec._ext_pow_poly(x, spec.n // p) != 1 for p in n_factors)


def _ext_is_irreducible(spec: FieldSpec) -> bool:
    f = spec.ext_modulus
    if f[0] == 0:
        return False
    x = (0, 1)
    h = x
    frob = {0: x}
    for j in range(1, spec.m + 1):
        h = polys.powmod(spec, h, spec.q, f)
        frob[j] = h
    if frob[spec.m] != x:
        return False
    for p in _prime_factors(spec.m):
        g = polys.gcd(spec, polys.add(spec, frob[spec.m // p], x), f)
        if polys.degree(g) != 0:
            return False
    return True


def default_ext_modulus(s: int, m: int, base_modulus: int) -> tuple[int, ...]:
    """First monic degree-m polynomial over GF(q), in ascending packed-coefficient
    order, whose root generates GF(q^m)^*."""
    q = 1 << s
    probe = FieldSpec(s, m, base_modulus, tuple([0] * m + [1]))
    n_factors = _prime_factors(probe.n)
    for tail in range(1, q ** m):
        if tail & (q - 1) == 0:
            continue  # zero constant term: x divides the candidate
        coeffs = tuple((tail >> (j * s)) & (q - 1) for j in range(m)) + (1,)
        cand = FieldSpec(s, m, base_modulus, coeffs)
        if _ext_x_order_is_full(cand, n_factors):
            return coeffs
    raise FieldError(f"no primitive degree-{m} extension modulus over GF({q})")


def make_field(s: int, m: int,
               base_modulus: int | None = None,
               ext_modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Validated field tower; defaults are chosen deterministically."""
    if not 1 <= s <= 8 or not 2 <= m <= 16:
        raise FieldError(f"unsupported sizes s={s}, m={m} (need 1<=s<=8, 2<=m<=16)")
    if base_modulus is None:
        base_modulus = default_base_modulus(s)
    else:
        if base_modulus.bit_length() - 1 != s:
            raise FieldError("base modulus has wrong degree")
        if not _gf2_is_irreducible(base_modulus):
            raise FieldError("reducible base modulus")
        if not _gf2_x_is_primitive(base_modulus, (1 << s) - 1):
            raise FieldError("base modulus root is not primitive")
    if ext_modulus is None:
        ext_modulus = default_ext_modulus(s, m, base_modulus)
        return FieldSpec(s, m, base_modulus, tuple(ext_modulus))

    spec = FieldSpec(s, m, base_modulus, tuple(ext_modulus))
    if not _ext_is_irreducible(spec):
        raise FieldError("reducible extension modulus")
    if not _ext_x_order_is_full(spec, _prime_factors(spec.n)):
        raise FieldError("extension modulus root is not primitive")
    return spec


# ---------------------------------------------------------------------------
# Field-spec JSON (base coefficients as bits, extension coefficients as reprs)
# ---------------------------------------------------------------------------

def field_spec_to_json(spec: FieldSpec) -> dict:
    base_bits = [(spec.base_modulus >> i) & 1 for i in range(spec.s + 1)]
    return {
        "s": spec.s,
        "m": spec.m,
        "base_modulus": base_bits,
        "ext_modulus": [[c] for c in spec.ext_modulus],
    }


def field_spec_from_json(data: dict) -> FieldSpec:
    base = 0
    for i, bit in enumerate(data["base_modulus"]):
        base |= (bit & 1) << i
    ext = tuple(c[0] if isinstance(c, list) else int(c)
                for c in data["ext_modulus"])
    return make_field(int(data["s"]), int(data["m"]), base, ext)


def load_field_spec(path) -> FieldSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return field_spec_from_json(json.load(fh))
