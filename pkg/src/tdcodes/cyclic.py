"""Cyclic codes over GF(q) from defining sets: minimal and generator
polynomials, dimensions, derived codes (dual, complement, even-like,
extended), and the matrix-level structure checks (LCD, self-orthogonal,
self-dual).

Code equality is equality of (field, defining set); the generator
polynomial is computed lazily since set-level derivations never need it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from tdcodes import polys
from tdcodes.coset import DefiningSet, cyclotomic_coset, defining_set, negate_set, \
    complement_set, dual_defining_set
from tdcodes.gf import FieldSpec


def minimal_polynomial(field: FieldSpec, i: int) -> tuple[int, ...]:
    """Minimal polynomial of beta^i over GF(q): the product of (x - beta^j)
    over the cyclotomic coset of i, projected back to base coefficients."""
    orbit = cyclotomic_coset(i, field.q, field.n)
    acc = [1]  # extension-field coefficients, little-endian
    for j in orbit:
        root = field.beta_power(j)
        nxt = [0] * (len(acc) + 1)
        for t, c in enumerate(acc):
            if c:
                nxt[t] ^= field.ext_mul(root, c)
                nxt[t + 1] ^= c
        acc = nxt
    return tuple(field.project_base(c) for c in acc)


def generator_polynomial(field: FieldSpec, T: DefiningSet) -> tuple[int, ...]:
    """Product of the minimal polynomials of the distinct cosets in T."""
    g: tuple[int, ...] = (1,)
    seen: set[int] = set()
    for e in T.elems:
        if e in seen:
            continue
        orbit = cyclotomic_coset(e, field.q, field.n)
        seen.update(orbit)
        g = polys.mul(field, g, minimal_polynomial(field, e))
    if seen - T.members:
        raise ValueError("defining set is not closed under multiplication by q")
    assert len(g) - 1 == len(T)
    return g


@dataclass(frozen=True)
class CyclicCode:
    """A q-ary cyclic code of length n = q^m - 1 given by its defining set."""

    field: FieldSpec
    T: DefiningSet

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return self.n - len(self.T)

    @cached_property
    def generator(self) -> tuple[int, ...]:
        return generator_polynomial(self.field, self.T)


def code_from_T(field: FieldSpec, T: DefiningSet) -> CyclicCode:
    if T.n != field.n or T.q != field.q:
        raise ValueError(f"defining set (n={T.n}, q={T.q}) does not match the "
                         f"field (n={field.n}, q={field.q})")
    for e in T.elems:
        if e * field.q % field.n not in T.members:
            raise ValueError("defining set is not closed under multiplication by q")
    return CyclicCode(field, T)


def dimension(code: CyclicCode) -> int:
    return code.k


def even_like(code: CyclicCode) -> CyclicCode:
    """Adjoin 0 to the defining set, dropping the dimension by one."""
    if 0 in code.T:
        raise ValueError("0 is already in the defining set")
    T = DefiningSet(code.n, code.q, (0,) + code.T.elems)
    return CyclicCode(code.field, T)


def dual_code(code: CyclicCode) -> CyclicCode:
    return CyclicCode(code.field, dual_defining_set(code.T))


def complement_code(code: CyclicCode) -> CyclicCode:
    return CyclicCode(code.field, complement_set(code.T))


def is_lcd(code: CyclicCode) -> bool:
    """LCD iff the defining set is fixed by negation."""
    return negate_set(code.T) == code.T


# ---------------------------------------------------------------------------
# Generator matrices over GF(q), stored as uint8 arrays of base reprs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorMatrix:
    field: FieldSpec
    array: np.ndarray

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]


def generator_matrix(code: CyclicCode) -> GeneratorMatrix:
    """Rows are the coefficient vectors of x^j g(x), j = 0..k-1."""
    g = np.asarray(code.generator, dtype=np.uint8)
    k, n = code.k, code.n
    arr = np.zeros((k, n), dtype=np.uint8)
    for j in range(k):
        arr[j, j:j + g.size] = g
    arr.flags.writeable = False
    return GeneratorMatrix(code.field, arr)


def encode(code: CyclicCode, message) -> np.ndarray:
    msg = np.asarray(message, dtype=np.uint8)
    if msg.shape != (code.k,):
        raise ValueError(f"message length {msg.size} != dimension {code.k}")
    mat = generator_matrix(code)
    mul = code.field.np_mul_table
    return np.bitwise_xor.reduce(mul[msg[:, None], mat.array], axis=0)


def extend_code(code: CyclicCode) -> GeneratorMatrix:
    """Append the overall-sum coordinate (characteristic 2: the XOR of a row)."""
    mat = generator_matrix(code)
    tail = np.bitwise_xor.reduce(mat.array, axis=1)[:, None]
    arr = np.concatenate([mat.array, tail], axis=1)
    arr.flags.writeable = False
    return GeneratorMatrix(code.field, arr)


def gram_matrix(mat: GeneratorMatrix) -> np.ndarray:
    """G * G^T over GF(q) with the Euclidean inner product."""
    mul = mat.field.np_mul_table
    a = mat.array
    out = np.zeros((mat.rows, mat.rows), dtype=np.uint8)
    for i in range(mat.rows):
        out[i] = np.bitwise_xor.reduce(mul[a[i][None, :], a], axis=1)
    return out


def is_self_orthogonal(mat: GeneratorMatrix) -> bool:
    return not gram_matrix(mat).any()


def is_self_dual(mat: GeneratorMatrix) -> bool:
    return 2 * mat.rows == mat.cols and is_self_orthogonal(mat)


def products_are_zero(a: GeneratorMatrix, b: GeneratorMatrix) -> bool:
    """Whether every row of a is orthogonal to every row of b."""
    mul = a.field.np_mul_table
    for i in range(a.rows):
        if np.bitwise_xor.reduce(mul[a.array[i][None, :], b.array], axis=1).any():
            return False
    return True


def row_reduce(field: FieldSpec, array: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(q); returns (rref, pivot columns)."""
    a = array.astype(np.uint8).copy()
    mul, inv = field.np_mul_table, field.np_inv_table
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] ^= mul[a[others, c][:, None], a[r][None, :]]
        pivots.append(c)
        r += 1
    return a, pivots


def matrix_rank(mat: GeneratorMatrix) -> int:
    return len(row_reduce(mat.field, mat.array)[1])


def hull_dimension(code: CyclicCode) -> int:
    """dim(C intersect C-dual) = n - rank of the stacked generator matrices."""
    g = generator_matrix(code)
    d = generator_matrix(dual_code(code))
    stacked = np.concatenate([g.array, d.array], axis=0)
    _, pivots = row_reduce(code.field, stacked)
    return code.n - len(pivots)


# ---------------------------------------------------------------------------
# Rendering and JSON
# ---------------------------------------------------------------------------

def poly_pretty(field: FieldSpec, p) -> str:
    """Descending-degree display with w-power coefficients."""
    if not p:
        return "0"
    terms = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if c == 0:
            continue
        coef = "" if c == 1 else field.base_text(c) + " "
        if d == 0:
            terms.append(field.base_text(c))
        elif d == 1:
            terms.append(f"{coef}x")
        else:
            terms.append(f"{coef}x^{d}")
    return " + ".join(terms)


def code_to_json(code: CyclicCode, parity: int | None = None,
                 variant: str | None = None) -> dict:
    data = {
        "q": code.q,
        "m": code.field.m,
        "n": code.n,
        "k": code.k,
        "defining_set": list(code.T.elems),
        "generator_poly": list(code.generator),
    }
    if parity is not None:
        data["parity"] = int(parity)
    if variant is not None:
        data["variant"] = variant
    return data


def code_from_json(field: FieldSpec, data: dict) -> CyclicCode:
    T = defining_set(int(data["n"]), int(data["q"]), data["defining_set"])
    return code_from_T(field, T)
