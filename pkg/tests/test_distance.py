import random

import pytest

from cyclopt.codes import construct_code
from cyclopt.cyclotomy import in_C1
from cyclopt.distance import (
    DistanceReport,
    Witness,
    brute_force_min_distance,
    canonical_witness,
    has_weight2,
    has_weight3,
    min_distance,
    verify_witness,
)
from cyclopt.errors import LimitError, ParameterError
from cyclopt.extfield import get_field
from cyclopt.gfpoly import Poly, poly_divmod

from conftest import golden_field


def all_valid_exponents(field):
    s = field.n // 2
    for e in range(field.n):
        if e == s or in_C1(e, field.p, field.m):
            continue
        yield e


# ------------------------------------------------------------------- goldens


def test_golden_codes_have_distance_4(golden):
    code = construct_code(golden.e, golden_field(golden))
    report = min_distance(code)
    assert report.d == 4
    assert report.exact is True
    assert report.witness is None
    assert report.method == "normalized-search"
    assert report.label == "4"


def test_golden_weight2_and_weight3_none_explicitly():
    f = get_field(5, 4, pi=(2, 4, 4, 0, 1))
    code = construct_code(315, f)
    assert has_weight2(code) is None
    assert has_weight3(code) is None


# ------------------------------------------------------------------ weight 2


def test_no_weight2_when_field_size_is_1_mod_4():
    # exhaustive over every admissible e for p=5, m in {2, 4}
    for m in (2, 4):
        f = get_field(5, m)
        assert f.q % 4 == 1
        for e in all_valid_exponents(f):
            assert has_weight2(construct_code(e, f)) is None


def test_weight2_exists_when_field_size_is_3_mod_4_and_e_odd():
    # q = 343 = 3 mod 4: s is odd, so 1 + x vanishes at alpha^r for r in
    # {1, e, s} exactly when e is odd; the searcher must find that word
    f = get_field(7, 3)
    code = construct_code(3, f)
    w = has_weight2(code)
    assert w is not None
    assert w.c == (1, 1)
    assert w.x_logs == (0, f.n // 2)
    assert verify_witness(code, w)
    report = min_distance(code)
    assert report.d == 2 and report.exact


def test_weight2_absent_for_even_e_in_3_mod_4_field():
    f = get_field(7, 3)
    code = construct_code(4, f)
    assert has_weight2(code) is None


# ------------------------------------------------------------------ weight 3


def test_e_congruent_1_mod_p_minus_1_gives_weight3_over_prime_subfield():
    # the classical obstruction: e = 1 mod (p-1) forces a weight-3 word
    # supported inside F_p
    for p, m, es in [(5, 2, (9, 13, 17, 21)), (7, 2, (13, 19, 25, 31, 37, 43))]:
        f = get_field(p, m)
        base_log = f.n // (p - 1)
        for e in es:
            code = construct_code(e, f)
            w = has_weight3(code)
            assert w is not None, (p, m, e)
            assert verify_witness(code, w)
            assert all(j % base_log == 0 for j in w.x_logs), (e, w)


def test_weight3_witness_is_canonical_and_sorted():
    code = construct_code(9, get_field(5, 2))
    w = has_weight3(code)
    assert w.c[0] == 1
    assert w.x_logs[0] == 0
    assert list(w.x_logs) == sorted(w.x_logs)
    assert len(set(w.x_logs)) == 3


def test_witness_survives_orbit_scaling():
    # shifting every support log and rescaling the coefficients preserves
    # membership; re-verification must agree
    code = construct_code(9, get_field(5, 2))
    w = has_weight3(code)
    rng = random.Random(77)
    n, p = code.n, code.p
    for _ in range(25):
        t = rng.randrange(n)
        lam = rng.randrange(1, p)
        moved = Witness(
            c=tuple(c * lam % p for c in w.c),
            x_logs=tuple((j + t) % n for j in w.x_logs),
        )
        assert verify_witness(code, moved)
        back = canonical_witness(code.field, moved.c, moved.x_logs)
        assert back == canonical_witness(code.field, w.c, w.x_logs)


def test_canonical_witness_idempotent():
    f = get_field(5, 2)
    w = has_weight3(construct_code(9, f))
    again = canonical_witness(f, w.c, w.x_logs)
    assert again == w


# ---------------------------------------------------------------- min_distance


def test_min_distance_4_not_exact_for_m1():
    # n = 4, k = 1 code over F_5: every codeword is a multiple of the
    # generator, which has weight 4; the search cannot certify d <= 4 for
    # m = 1, so it reports a bound, while brute force settles it
    f = get_field(5, 1)
    code = construct_code(3, f)
    report = min_distance(code)
    assert report.d == 4 and report.exact is False
    assert report.label == "4+"
    oracle = brute_force_min_distance(code)
    assert oracle.d == 4 and oracle.exact is True


def test_min_distance_4_not_exact_for_small_coset():
    # e = 6 over F_25 has |C_e| = 1 < m, outside the d <= 4 guarantee
    code = construct_code(6, get_field(5, 2))
    report = min_distance(code)
    if report.d == 4:
        assert report.exact is False


def test_report_json_shape():
    code = construct_code(9, get_field(5, 2))
    blob = min_distance(code).to_json()
    assert set(blob) == {"d", "exact", "witness", "method", "elapsed_ms"}
    assert set(blob["witness"]) == {"c", "x_logs"}
    assert blob["elapsed_ms"] >= 0


# ------------------------------------------------------------------- threads


def test_threads_do_not_change_the_answer():
    f = get_field(5, 3)
    code = construct_code(9, f)  # 9 = 1 mod 4, weight 3 exists
    serial = has_weight3(code, threads=1)
    assert serial is not None
    for t in (2, 3, 7):
        assert has_weight3(code, threads=t) == serial
    clean = construct_code(119, get_field(11, 2, pi=(2, 7, 1)))
    assert has_weight3(clean, threads=1) is None
    assert has_weight3(clean, threads=4) is None


def test_thread_env_variable(monkeypatch):
    code = construct_code(9, get_field(5, 2))
    baseline = has_weight3(code)
    monkeypatch.setenv("CYCLOPT_THREADS", "3")
    assert has_weight3(code) == baseline
    monkeypatch.setenv("CYCLOPT_THREADS", "zebra")
    with pytest.raises(ParameterError):
        has_weight3(code)
    # an explicit argument wins over the environment
    assert has_weight3(code, threads=2) == baseline


def test_bad_thread_counts_rejected():
    code = construct_code(9, get_field(5, 2))
    with pytest.raises(ParameterError):
        has_weight3(code, threads=0)
    with pytest.raises(ParameterError):
        has_weight3(code, threads=-2)


# ---------------------------------------------------------------- brute force


def test_brute_force_guards():
    big = construct_code(315, get_field(5, 4, pi=(2, 4, 4, 0, 1)))
    with pytest.raises(LimitError):
        brute_force_min_distance(big)
    small = construct_code(9, get_field(5, 2))
    with pytest.raises(ParameterError):
        brute_force_min_distance(small, weight_cap=0)
    with pytest.raises(ParameterError):
        brute_force_min_distance(small, weight_cap=5)


def test_brute_force_weight_cap_1_finds_nothing():
    code = construct_code(9, get_field(5, 2))
    report = brute_force_min_distance(code, weight_cap=1)
    assert report.d == 2 and report.exact is False and report.witness is None
    assert report.method == "brute-force"


def test_brute_force_witness_weight_matches_d():
    code = construct_code(9, get_field(5, 2))
    report = brute_force_min_distance(code)
    assert report.d == 3
    assert report.witness.weight == 3
    assert verify_witness(code, report.witness)


def _agree(search: DistanceReport, oracle: DistanceReport) -> bool:
    if search.d <= 3:
        return oracle.d == search.d
    if search.exact:
        return oracle.d == 4
    return oracle.d >= 4  # search certified >= 4 without an upper bound


def test_search_agrees_with_brute_force_exhaustively():
    for p, m in [(5, 2), (7, 2)]:
        f = get_field(p, m)
        for e in all_valid_exponents(f):
            code = construct_code(e, f)
            search = min_distance(code)
            oracle = brute_force_min_distance(code)
            assert _agree(search, oracle), (p, m, e, search.d, oracle.d)


def test_parity_evaluation_matches_generator_divisibility():
    # membership via the three parity rows must coincide with g | f; this is
    # the membership test brute force relies on
    f = get_field(7, 2)
    code = construct_code(11, f)
    exp = f.exp_array()
    rng = random.Random(4242)
    for _ in range(300):
        weight = rng.randint(1, 6)
        support = rng.sample(range(f.n), weight)
        coeffs = [rng.randrange(1, 7) for _ in support]
        dense = [0] * f.n
        for i, c in zip(support, coeffs):
            dense[i] = c
        fpoly = Poly(7, dense)
        by_division = poly_divmod(fpoly, code.g)[1].is_zero()
        by_parity = True
        for r in (1, code.e, code.s):
            acc = 0
            for i, c in zip(support, coeffs):
                acc = f.add_idx(acc, f.mul_idx(c, int(exp[i * r % f.n])))
            if acc != 0:
                by_parity = False
                break
        assert by_division == by_parity
