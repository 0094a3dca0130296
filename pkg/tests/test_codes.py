import math
import random

import pytest

from cyclopt.codes import CodeSpec, construct_code, minimal_polynomial, sphere_packing_optimal
from cyclopt.cyclotomy import coset_of
from cyclopt.errors import CosetOverlapError, ParameterError
from cyclopt.extfield import get_field
from cyclopt.gfpoly import Poly, is_irreducible, poly_divmod, poly_eval

from conftest import GOLDEN_CODES, golden_field


# ---------------------------------------------------------------- minimal polys


def test_minpoly_of_s_is_x_plus_1():
    f = get_field(5, 4)
    assert minimal_polynomial(f.n // 2, f) == Poly(5, [1, 1])


def test_minpoly_of_1_is_defining_polynomial():
    for p, m in [(5, 2), (5, 3), (7, 2), (11, 2)]:
        f = get_field(p, m)
        assert minimal_polynomial(1, f) == f.pi


def test_minpoly_of_0_is_x_minus_1():
    f = get_field(7, 2)
    assert minimal_polynomial(0, f) == Poly(7, [-1, 1])


def test_minpoly_out_of_range():
    f = get_field(5, 2)
    with pytest.raises(ParameterError):
        minimal_polynomial(-1, f)
    with pytest.raises(ParameterError):
        minimal_polynomial(f.n, f)


def test_minpoly_degree_irreducible_and_roots():
    f = get_field(5, 3)
    rng = random.Random(20240516)
    for i in rng.sample(range(f.n), 25):
        mp = minimal_polynomial(i, f)
        coset = coset_of(i, 5, 3)
        assert mp.degree == coset.size
        assert mp.is_monic()
        assert is_irreducible(mp)
        # every coset member is a root, evaluated in the extension
        for j in coset.members:
            acc = 0
            root = f.exp(j).idx
            for c in reversed(mp.coeffs):
                acc = f.add_idx(f.mul_idx(acc, root), f.pack([c]))
            assert acc == 0


def test_minpoly_same_for_all_coset_members():
    f = get_field(7, 3)
    c = coset_of(10, 7, 3)
    polys = {minimal_polynomial(j, f) for j in c.members}
    assert len(polys) == 1


def test_minpoly_m1_field_is_linear():
    f = get_field(5, 1)
    alpha = f.alpha.idx
    mp = minimal_polynomial(1, f)
    assert mp.degree == 1
    assert poly_eval(mp, alpha) == 0


# ---------------------------------------------------------------- construction


def test_golden_generator_polynomials(golden):
    f = golden_field(golden)
    code = construct_code(golden.e, f)
    assert code.g.coeffs == golden.g
    assert (code.n, code.k) == (golden.n, golden.k)


def test_generator_divides_xn_minus_1(golden):
    f = golden_field(golden)
    code = construct_code(golden.e, f)
    xn1 = Poly(f.p, [-1] + [0] * (f.n - 1) + [1])
    _, rem = poly_divmod(xn1, code.g)
    assert rem.is_zero()


def test_degree_bookkeeping(golden):
    f = golden_field(golden)
    code = construct_code(golden.e, f)
    size_e = coset_of(golden.e, golden.p, golden.m).size
    size_1 = coset_of(1, golden.p, golden.m).size
    assert code.g.degree == 1 + size_1 + size_e
    assert code.k == code.n - code.g.degree
    # all ten published codes have |C_e| = m, hence k = p^m - 2m - 2
    assert code.k == golden.p**golden.m - 2 * golden.m - 2


def test_construct_rejects_e_in_C1():
    f = get_field(5, 3)
    for e in (1, 5, 25):
        with pytest.raises(CosetOverlapError, match="C_1"):
            construct_code(e, f)


def test_construct_rejects_e_equal_s():
    f = get_field(5, 3)
    with pytest.raises(CosetOverlapError, match="C_s"):
        construct_code(f.n // 2, f)


def test_construct_rejects_out_of_range():
    f = get_field(5, 2)
    for e in (-3, f.n, f.n + 7):
        with pytest.raises(ParameterError):
            construct_code(e, f)


def test_construct_p3_m1_degenerate_overlap():
    # s = 1 falls inside C_1; the construction must refuse, not mis-build
    f = get_field(3, 1)
    with pytest.raises(CosetOverlapError):
        construct_code(0, f)


def test_codespec_fields_and_descriptor():
    f = get_field(11, 2, pi=(2, 7, 1))
    code = construct_code(119, f)
    assert isinstance(code, CodeSpec)
    assert code.nonzero_exponents == (1, 119, 60)
    assert code.s == 60
    assert code.coset_e.size == 2
    d = code.descriptor()
    assert d["p"] == 11 and d["m"] == 2 and d["e"] == 119
    assert d["pi"] == [2, 7, 1]
    assert d["g"] == [1, 6, 10, 10, 6, 1]
    assert (d["n"], d["k"]) == (120, 115)


def test_construct_with_small_coset_e():
    # e = 6 over F_25 has |C_e| = 1 (6*5 = 30 = 6 mod 24); construction still
    # succeeds, the code is just shorter on redundancy
    f = get_field(5, 2)
    code = construct_code(6, f)
    assert code.g.degree == 1 + 2 + 1
    assert code.k == f.n - 4


# ---------------------------------------------------------------- sphere packing


def _ball2_volume(n, p):
    return 1 + n * (p - 1) + math.comb(n, 2) * (p - 1) ** 2


def test_bound_624_615_over_F5():
    # V_2 = 1 + 624*4 + C(624,2)*16 = 3,112,513 > 5^9 = 1,953,125
    assert _ball2_volume(624, 5) == 3_112_513
    assert 5**9 == 1_953_125
    assert sphere_packing_optimal(624, 615, 4, 5) is True


def test_bound_120_115_over_F11():
    assert _ball2_volume(120, 11) > 11**5
    assert sphere_packing_optimal(120, 115, 4, 11) is True


def test_bound_all_goldens(golden):
    assert sphere_packing_optimal(golden.n, golden.k, 4, golden.p) is True


def test_bound_can_fail_when_redundancy_is_lavish():
    # with k tiny the radius-2 balls fit easily, so distance 5 is not excluded
    assert sphere_packing_optimal(624, 1, 4, 5) is False


def test_bound_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        sphere_packing_optimal(120, 115, 5, 11)
    with pytest.raises(ParameterError):
        sphere_packing_optimal(120, 120, 4, 11)
    with pytest.raises(ParameterError):
        sphere_packing_optimal(120, 0, 4, 11)
    with pytest.raises(ParameterError):
        sphere_packing_optimal(120, 115, 4, 10)


def test_bound_is_exact_at_the_boundary():
    # hand-built boundary case: find (n, k, p) with V_2 marginally on each side
    p = 5
    for n in range(10, 40):
        v2 = _ball2_volume(n, p)
        r = 1
        while p**r <= v2:
            r += 1
        # p^(r-1) <= v2 < p^r, so redundancy r-1 is beaten, r is not
        if n - (r - 1) >= 1 and r - 1 >= 1 and n > n - (r - 1) >= 1:
            assert sphere_packing_optimal(n, n - (r - 1), 4, p) is True
        if n - r >= 1 and n > n - r:
            assert sphere_packing_optimal(n, n - r, 4, p) is False
