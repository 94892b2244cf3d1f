"""Integer-side machinery: q-adic digits, digit weights, q-cyclotomic cosets
modulo n, the digit-parity defining sets T_(q,m;0) / T_(q,m;1), and the set
transforms (negate, scale, complement, dual) used to derive codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property


class Parity(IntEnum):
    """Digit-weight parity selecting a defining set: EVEN -> T_0, ODD -> T_1."""

    EVEN = 0
    ODD = 1


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus a human-readable reason for failures."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def q_adic_digits(i: int, q: int, m: int) -> tuple[int, ...]:
    """Digits d_0..d_{m-1} with i = sum d_j q^j."""
    if not 0 <= i <= q ** m - 1:
        raise ValueError(f"value {i} out of range for {m} base-{q} digits")
    digits = []
    for _ in range(m):
        i, d = divmod(i, q)
        digits.append(d)
    return tuple(digits)


def q_weight(i: int, q: int, m: int) -> int:
    """Digit sum of the q-adic expansion of i."""
    return sum(q_adic_digits(i, q, m))


def _parity_mask(s: int, m: int) -> int:
    # bit j*s of i is the low bit of digit j, so the digit-sum parity of i
    # is the popcount parity of i & mask
    mask = 0
    for j in range(m):
        mask |= 1 << (j * s)
    return mask


def cyclotomic_coset(i: int, q: int, n: int) -> tuple[int, ...]:
    """The q-cyclotomic coset of i modulo n, sorted ascending."""
    if math.gcd(n, q) != 1:
        raise ValueError("q must be invertible modulo n")
    i %= n
    orbit = [i]
    j = i * q % n
    while j != i:
        orbit.append(j)
        j = j * q % n
    return tuple(sorted(orbit))


def coset_leader(i: int, q: int, n: int) -> int:
    return cyclotomic_coset(i, q, n)[0]


@dataclass(frozen=True)
class CosetPartition:
    """All q-cyclotomic cosets modulo n, keyed by their minimal members."""

    n: int
    q: int
    leaders: tuple[int, ...]
    coset_of: dict[int, int]

    def coset(self, i: int) -> tuple[int, ...]:
        return cyclotomic_coset(i, self.q, self.n)


def coset_partition(q: int, n: int) -> CosetPartition:
    leaders = []
    coset_of: dict[int, int] = {}
    for i in range(n):
        if i in coset_of:
            continue
        orbit = cyclotomic_coset(i, q, n)
        leaders.append(orbit[0])
        for j in orbit:
            coset_of[j] = orbit[0]
    return CosetPartition(n, q, tuple(leaders), coset_of)


@dataclass(frozen=True)
class DefiningSet:
    """Sorted residues in [0, n) closed under multiplication by q modulo n."""

    n: int
    q: int
    elems: tuple[int, ...]

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elems)

    def __contains__(self, i: int) -> bool:
        return i % self.n in self.members

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)


def defining_set(n: int, q: int, elems, validate: bool = True) -> DefiningSet:
    """Normalize residues into [0, n) and optionally verify coset closure."""
    s = DefiningSet(n, q, tuple(sorted({e % n for e in elems})))
    if validate:
        for e in s.elems:
            if e * q % n not in s.members:
                raise ValueError(
                    f"set is not closed under multiplication by {q} mod {n}: "
                    f"{e} is in, {e * q % n} is not")
    return s


def build_T(q: int, m: int, parity: Parity | int) -> DefiningSet:
    """Residues 1..n-1 whose base-q digit sum has the requested parity.

    Closed under multiplication by q because the digit sum is invariant
    under the cyclic digit shift i -> qi mod n.
    """
    s = q.bit_length() - 1
    if q != 1 << s or s < 1:
        raise ValueError(f"q must be a power of two >= 2, got {q}")
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    want = int(Parity(parity))
    n = q ** m - 1
    mask = _parity_mask(s, m)
    elems = [i for i in range(1, n) if (i & mask).bit_count() & 1 == want]
    return DefiningSet(n, q, tuple(elems))


# ---------------------------------------------------------------------------
# Set transforms
# ---------------------------------------------------------------------------

def negate_set(S: DefiningSet) -> DefiningSet:
    """Elementwise -x mod n; preserves coset closure."""
    n = S.n
    elems = sorted((n - e) % n for e in S.elems)
    return DefiningSet(n, S.q, tuple(elems))


def scale_set(v: int, S: DefiningSet) -> DefiningSet:
    """Elementwise v*x mod n (v need not be a unit); preserves coset closure."""
    n = S.n
    return DefiningSet(n, S.q, tuple(sorted({v * e % n for e in S.elems})))


def complement_set(S: DefiningSet) -> DefiningSet:
    members = S.members
    return DefiningSet(S.n, S.q,
                       tuple(i for i in range(S.n) if i not in members))


def dual_defining_set(S: DefiningSet) -> DefiningSet:
    """Z_n minus (-S): the defining set of the dual code."""
    return complement_set(negate_set(S))


def splitting_check(S1: DefiningSet, S2: DefiningSet, v: int) -> CheckResult:
    """Whether (S1, S2, v) splits Z_n: disjoint cover of Z_n - {0} by
    coset-closed sets swapped by the unit v."""
    if S1.n != S2.n or S1.q != S2.q:
        return CheckResult(False, "sets live on different (n, q)")
    n, q = S1.n, S1.q
    if S1.members & S2.members:
        return CheckResult(False, "S1 and S2 intersect")
    if len(S1) + len(S2) != n - 1 or 0 in S1 or 0 in S2:
        return CheckResult(False, "S1 and S2 do not cover Z_n minus {0}")
    for S, name in ((S1, "S1"), (S2, "S2")):
        for e in S.elems:
            if e * q % n not in S.members:
                return CheckResult(False, f"{name} is not a union of cosets")
    if math.gcd(v, n) != 1:
        return CheckResult(False, f"v={v} is not a unit modulo {n}")
    if scale_set(v, S1) != S2:
        return CheckResult(False, f"v*S1 != S2 for v={v}")
    if scale_set(v, S2) != S1:
        return CheckResult(False, f"v*S2 != S1 for v={v}")
    return CheckResult(True, f"(S1, S2, {v}) splits Z_{n}")


# ---------------------------------------------------------------------------
# Arithmetic identities used by the bound analysis
# ---------------------------------------------------------------------------

def gcd_lemma5_check(q: int, ell: int, m: int) -> bool:
    """gcd(q^m - 1, q^ell + 1) = 1 whenever m / gcd(ell, m) is odd."""
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of two, got {q}")
    if m < 2 or ell < 1:
        raise ValueError("need m >= 2 and ell >= 1")
    if (m // math.gcd(ell, m)) % 2 == 0:
        raise ValueError(
            f"m/gcd(ell, m) = {m // math.gcd(ell, m)} is even; "
            "the identity is not claimed here")
    return math.gcd(q ** m - 1, q ** ell + 1) == 1


def lemma6_check(q: int, m: int, A: int, h: int) -> bool:
    """Digit-weight reflection: wt_q(A q^h - 1 - i) = (q-1)h + A - 1 - wt_q(i)
    for every 0 <= i <= A q^h - 1."""
    if not 2 <= A <= q - 1:
        raise ValueError(f"need 2 <= A <= q-1, got A={A}")
    if not 0 <= h <= m - 1:
        raise ValueError(f"need 0 <= h <= m-1, got h={h}")
    top = A * q ** h - 1
    rhs_const = (q - 1) * h + A - 1
    return all(q_weight(top - i, q, m) == rhs_const - q_weight(i, q, m)
               for i in range(top + 1))


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def defining_set_to_json(S: DefiningSet) -> dict:
    if S.n > (1 << 20):
        raise ValueError("defining sets are only serialized for n <= 2^20")
    return {"n": S.n, "q": S.q, "elems": list(S.elems)}


def defining_set_from_json(data: dict) -> DefiningSet:
    if data["n"] > (1 << 20):
        raise ValueError("defining sets are only serialized for n <= 2^20")
    return defining_set(int(data["n"]), int(data["q"]), data["elems"])
