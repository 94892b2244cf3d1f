import random

import numpy as np
import pytest

from tdcodes import polys
from tdcodes.coset import DefiningSet, build_T, coset_partition, defining_set
from tdcodes.cyclic import (GeneratorMatrix, code_from_T, complement_code,
                            dual_code, encode, even_like, extend_code,
                            generator_matrix, generator_polynomial,
                            gram_matrix, hull_dimension, is_lcd, is_self_dual,
                            is_self_orthogonal, matrix_rank,
                            minimal_polynomial, poly_pretty,
                            products_are_zero, code_to_json, code_from_json)
from tdcodes.gf import make_field

# generator polynomials of the two quaternary length-63 codes, little-endian
# base reprs (0, 1, w -> 2, w^2 -> 3); known printed values for this tower
REFERENCE_G0 = (1, 0, 2, 3, 2, 2, 3, 2, 1, 1, 1, 0, 1, 1, 0, 1,
                2, 2, 1, 0, 0, 1, 0, 1, 3, 3, 3, 1, 0, 3, 1, 1)
REFERENCE_G1 = tuple(reversed(REFERENCE_G0))


def gf64():
    return make_field(2, 3, base_modulus=0b111, ext_modulus=(2, 1, 1, 1))


def pair(field, q, m):
    return (code_from_T(field, build_T(q, m, 0)),
            code_from_T(field, build_T(q, m, 1)))


def test_minimal_polynomial_of_one():
    f = make_field(2, 2)
    assert minimal_polynomial(f, 0) == (1, 1)  # x + 1


def test_minimal_polynomial_degree_one_coset():
    f = make_field(2, 2)
    mp = minimal_polynomial(f, 5)
    assert len(mp) == 2 and mp[1] == 1
    assert f.embed_base(mp[0]) == f.beta_power(5)


@pytest.mark.parametrize("s,m", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_product_of_minimal_polynomials_is_x_n_minus_1(s, m):
    f = make_field(s, m)
    part = coset_partition(f.q, f.n)
    prod = (1,)
    for leader in part.leaders:
        mp = minimal_polynomial(f, leader)
        assert len(mp) - 1 == len(part.coset(leader))
        prod = polys.mul(f, prod, mp)
    assert prod == polys.x_pow_n_plus_1(f.n)


def test_generator_polynomial_trivial_sets():
    f = make_field(2, 2)
    assert generator_polynomial(f, DefiningSet(15, 4, ())) == (1,)
    g = generator_polynomial(f, DefiningSet(15, 4, tuple(range(15))))
    assert g == polys.x_pow_n_plus_1(15)


def test_generator_polynomial_rejects_unclosed_set():
    f = make_field(2, 2)
    with pytest.raises(ValueError, match="not closed"):
        generator_polynomial(f, DefiningSet(15, 4, (1,)))


def test_reference_generator_polynomials():
    f = gf64()
    c0, c1 = pair(f, 4, 3)
    assert c0.generator == REFERENCE_G0
    assert c1.generator == REFERENCE_G1
    assert c0.k == c1.k == 32
    # the two sets are negations of each other, so g1 is g0 reversed
    assert c1.generator == tuple(reversed(c0.generator))


def test_generator_roots_match_defining_set_exactly():
    for f in (make_field(2, 2), gf64()):
        c = code_from_T(f, build_T(f.q, f.m, 0))
        g = c.generator
        for i in range(f.n):
            val = polys.eval_ext(f, g, f.beta_power(i))
            assert (val == 0) == (i in c.T), i


def test_dimensions():
    f = gf64()
    c0, _ = pair(f, 4, 3)
    assert c0.k == 32 == (c0.n + 1) // 2
    f2 = make_field(2, 2)
    c0, c1 = pair(f2, 4, 2)
    assert c0.k == 9 == (15 + 3) // 2
    assert c1.k == 7 == (15 - 1) // 2


def test_even_like():
    f = gf64()
    c0, _ = pair(f, 4, 3)
    el = even_like(c0)
    assert el.k == 31
    assert 0 in el.T
    assert el.generator == polys.mul(f, (1, 1), c0.generator)
    with pytest.raises(ValueError):
        even_like(el)


def test_dual_code_identities():
    f = make_field(2, 2)
    c0, c1 = pair(f, 4, 2)
    assert dual_code(c0).T == even_like(c1).T
    assert dual_code(c1).T == even_like(c0).T
    assert dual_code(dual_code(c0)).T == c0.T
    whole = code_from_T(f, DefiningSet(15, 4, ()))
    assert dual_code(whole).k == 0


def test_dual_code_agrees_with_matrix_orthogonality():
    for f in (make_field(2, 2), gf64()):
        c = code_from_T(f, build_T(f.q, f.m, 0))
        d = dual_code(c)
        G, D = generator_matrix(c), generator_matrix(d)
        assert products_are_zero(G, D)
        assert matrix_rank(D) == c.n - c.k


def test_complement_code():
    f = gf64()
    c0, c1 = pair(f, 4, 3)
    assert complement_code(c0).T == even_like(c1).T
    assert complement_code(c1).T == even_like(c0).T
    assert complement_code(c0).k == c0.n - c0.k
    assert complement_code(complement_code(c0)).T == c0.T


def test_generator_matrix_and_encode():
    f = gf64()
    c0, _ = pair(f, 4, 3)
    mat = generator_matrix(c0)
    assert (mat.rows, mat.cols) == (32, 63)
    assert matrix_rank(mat) == 32
    assert not encode(c0, [0] * 32).any()
    e0 = [1] + [0] * 31
    cw = encode(c0, e0)
    assert tuple(int(x) for x in cw[:32]) == c0.generator
    # every encoding is divisible by g
    rng = random.Random(5)
    for _ in range(10):
        msg = [rng.randrange(4) for _ in range(32)]
        word = encode(c0, msg)
        _, rem = polys.divmod_(f, polys.trim(word.tolist()), c0.generator)
        assert rem == ()
    with pytest.raises(ValueError):
        encode(c0, [0] * 31)


def test_extend_code():
    f = gf64()
    c0, _ = pair(f, 4, 3)
    ext = extend_code(c0)
    assert (ext.rows, ext.cols) == (32, 64)
    assert matrix_rank(ext) == 32
    # every row, hence every codeword, sums to zero
    assert not np.bitwise_xor.reduce(ext.array, axis=1).any()


def test_is_lcd():
    f2 = make_field(2, 2)
    c0_even_m, _ = pair(f2, 4, 2)
    assert is_lcd(c0_even_m)
    f = gf64()
    c0_odd_m, _ = pair(f, 4, 3)
    assert not is_lcd(c0_odd_m)
    whole = code_from_T(f2, DefiningSet(15, 4, ()))
    assert is_lcd(whole)


def test_hull_dimension():
    f = make_field(2, 2)
    c0, c1 = pair(f, 4, 2)
    assert hull_dimension(c0) == 0
    assert hull_dimension(c1) == 0
    # odd m: the even-like code sits inside the dual, so the hull is large
    fo = gf64()
    codd, _ = pair(fo, 4, 3)
    assert hull_dimension(codd) == 31


def test_self_dual_and_self_orthogonal():
    f = gf64()
    c0, c1 = pair(f, 4, 3)
    assert is_self_dual(extend_code(c0))
    assert is_self_dual(extend_code(c1))
    el = even_like(c0)
    mat = generator_matrix(el)
    assert is_self_orthogonal(mat)
    assert not is_self_dual(mat)  # 2k = 62 != 63
    zero_row = GeneratorMatrix(f, np.zeros((1, 63), dtype=np.uint8))
    assert is_self_orthogonal(zero_row)
    assert not is_self_dual(zero_row)


def test_gram_matrix_detects_non_orthogonality():
    f = make_field(2, 2)
    c0, _ = pair(f, 4, 2)
    assert gram_matrix(generator_matrix(c0)).any()  # LCD code: hull is 0


def test_poly_pretty():
    f = gf64()
    c0, _ = pair(f, 4, 3)
    text = poly_pretty(f, c0.generator)
    assert text.startswith("x^31 + x^30 + w^2 x^29 + x^27")
    assert text.endswith("w^2 x^3 + w x^2 + 1")
    assert poly_pretty(f, ()) == "0"
    assert poly_pretty(f, (2, 1)) == "x + w"


def test_code_json_round_trip():
    f = make_field(2, 2)
    c0, _ = pair(f, 4, 2)
    data = code_to_json(c0, parity=0)
    assert data["q"] == 4 and data["m"] == 2 and data["n"] == 15
    assert data["k"] == 9 and data["parity"] == 0
    assert data["generator_poly"] == list(c0.generator)
    again = code_from_json(f, data)
    assert again.T == c0.T


def test_code_from_T_validates_consistency():
    f = make_field(2, 2)
    with pytest.raises(ValueError, match="does not match"):
        code_from_T(f, build_T(4, 3, 0))
    with pytest.raises(ValueError, match="not closed"):
        code_from_T(f, DefiningSet(15, 4, (1,)))


def test_defining_set_of_code_equals_root_set_of_generator():
    # spot-check the defining-set/root correspondence on a non-parity set
    f = make_field(2, 2)
    T = defining_set(15, 4, [1, 4, 2, 8, 3, 12])
    c = code_from_T(f, T)
    assert c.k == 15 - 6
    for i in range(15):
        val = polys.eval_ext(f, c.generator, f.beta_power(i))
        assert (val == 0) == (i in T)
