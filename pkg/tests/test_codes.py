import math
from fractions import Fraction

import pytest

from dupcodes import channel
from dupcodes.channel import palindromic_duplicate, tandem_duplicate
from dupcodes.codes import (
    DecodingFailure,
    PalindromicL2Code,
    TandemVTCode,
    c1_best_params,
    c1_codebook,
    c1_decode,
    c1_member,
    c1_size_lower_bound,
    c2_best_params,
    c2_codebook,
    c2_decode,
    c2_member,
    c2_size_lower_bound,
    cpf_codebook,
    cpf_count_closed,
    cpf_count_recursive,
    cpf_decode,
    cpf_lambda,
    cpf_member,
    cpf_rate,
    cpf_rate_table,
    disjoint_ball_violation,
    encode_index,
    oracle_decode,
    vt_member,
)
from dupcodes.words import parse_word, word

from conftest import words_of


def test_vt_member_examples():
    assert vt_member((0, 1, 0), 2)
    assert vt_member((0, 0, 0, 0), 0)
    assert not vt_member((0, 1, 0), 0)
    with pytest.raises(ValueError):
        vt_member((0, -1), 0)


def test_tandem_vt_code_validation():
    TandemVTCode(4, 2, 2, (0, 1, 2))
    with pytest.raises(ValueError):
        TandemVTCode(4, 2, 2, (0, 1))
    with pytest.raises(ValueError):
        TandemVTCode(4, 2, 2, (2, 1, 2))  # a_1 > 1


def test_c1_membership_roundtrip_invariance():
    code = TandemVTCode.best(6, 2, 2)
    from dupcodes.channel import tandem_delete

    for x in words_of(6, 2):
        member = c1_member(x, code)
        for p in range(5):
            y = tandem_duplicate(x, 2, p)
            assert c1_member(tandem_delete(y, 2, p), code) == member


def test_c1_member_length_mismatch():
    code = TandemVTCode.best(6, 2, 2)
    with pytest.raises(ValueError, match="length"):
        c1_member(word((0, 1), 2), code)


def test_c1_decode_roundtrip_exhaustive_small():
    for n, ell, q in [(6, 2, 2), (6, 1, 2), (5, 1, 3)]:
        a, _ = c1_best_params(n, ell, q)
        code = TandemVTCode(n, q, ell, a)
        book = c1_codebook(code)
        kind = channel.tandem_dup(ell)
        for c in book:
            assert c1_decode(c, code) == c
            for p in range(n - ell + 1):
                y = tandem_duplicate(c, ell, p)
                assert c1_decode(y, code) == c
                assert oracle_decode(y, n, kind, lambda w: c1_member(w, code)) == c


def test_c1_decode_failures():
    code = TandemVTCode.best(6, 2, 2)
    # length n+ell word with all-zero signature: no deletable block anywhere
    y = word((0, 0, 1, 1, 0, 0, 1, 1), 2)
    assert channel.deletion_positions(y, channel.tandem_del(2)) == []
    with pytest.raises(DecodingFailure):
        c1_decode(y, code)
    with pytest.raises(DecodingFailure):
        c1_decode(word((0, 1, 0), 2), code)  # bad length
    non_member = next(x for x in words_of(6, 2) if not c1_member(x, code))
    with pytest.raises(DecodingFailure):
        c1_decode(non_member, code)


def test_c1_best_params_cardinality_bounds():
    a, cardinality = c1_best_params(2, 2, 2)
    assert cardinality == 4  # whole space: single signature (0)
    for n, ell, q in [(6, 2, 2), (8, 1, 2)]:
        a, cardinality = c1_best_params(n, ell, q)
        assert cardinality >= c1_size_lower_bound(n, ell, q)
        code = TandemVTCode(n, q, ell, a)
        assert len(c1_codebook(code)) == cardinality


def test_c2_member_examples():
    code = PalindromicL2Code(8, 4, 13)
    x = parse_word("01011001", 2)
    assert c2_member(x, code)
    assert not c2_member(x, PalindromicL2Code(8, 0, 13))
    n = 6
    const = word((0,) * n, 2)
    assert c2_member(const, PalindromicL2Code(n, 0, n % (2 * n + 1)))
    with pytest.raises(ValueError, match="binary"):
        c2_member(word((0, 1, 2), 3), PalindromicL2Code(3, 0, 0))


def test_c2_decode_worked_example():
    code = PalindromicL2Code(8, 4, 13)
    y = parse_word("0101101001", 2)
    assert c2_decode(y, code) == parse_word("01011001", 2)


def test_c2_decode_identity_and_roundtrip_exhaustive():
    for n in (6, 7):
        modulus = 2 * n + 1
        for x in words_of(n, 2):
            from dupcodes.words import run_profile

            prof = run_profile(x)
            code = PalindromicL2Code(n, prof.count_of_length(1) % 5, prof.checksum() % modulus)
            assert c2_decode(x, code) == x
            for p in range(n - 1):
                y = palindromic_duplicate(x, 2, p)
                assert c2_decode(y, code) == x
                assert oracle_decode(y, n, channel.pal_dup(2), lambda w: c2_member(w, code)) == x


def test_c2_size_lower_bound_values():
    assert c2_size_lower_bound(8) == Fraction(256, 85)
    assert c2_size_lower_bound(1) == Fraction(2, 15)
    assert c2_size_lower_bound(12) == Fraction(4096, 125)
    (a, b), best = c2_best_params(8)
    assert best >= math.ceil(Fraction(256, 85))  # >= 4
    code = PalindromicL2Code(8, a, b)
    assert len(c2_codebook(code)) == best


def test_cpf_member_examples():
    assert cpf_member(parse_word("012122", 3))
    assert not cpf_member(parse_word("012212", 3))
    assert cpf_member(word((0, 0, 0), 2))
    assert cpf_member(word((1, 1), 4))
    assert not cpf_member(word((0, 0, 0, 0), 2))


def test_cpf_decode_roundtrip_and_errors():
    n = 7
    for q in (2, 3):
        book = cpf_codebook(n, q)
        for c in book:
            assert cpf_decode(c, n) == c
            for ell in range(2, n + 1):
                for p in range(n - ell + 1):
                    y = palindromic_duplicate(c, ell, p)
                    assert cpf_decode(y, n) == c
    with pytest.raises(ValueError, match="length 1"):
        cpf_decode(word((0, 1, 0, 1, 0, 1, 0, 1), 2), 7)
    with pytest.raises(DecodingFailure):
        cpf_decode(word((0, 0, 0, 0), 2), 4)  # not palindrome-free


def test_cpf_counts():
    assert cpf_count_recursive(3, 2) == 8
    assert cpf_count_recursive(4, 2) == 12
    # true exhaustive count at n=8 is 56 (rate 0.726)
    assert cpf_count_recursive(8, 2) == 56
    for q, max_n in ((2, 12), (3, 7)):
        for n in range(0, max_n + 1):
            assert cpf_count_recursive(n, q) == sum(1 for x in words_of(n, q) if cpf_member(x))


def test_cpf_count_closed_matches_recursive():
    for q in (2, 3, 4, 5):
        for n in range(3, 21):
            rec = cpf_count_recursive(n, q)
            assert cpf_count_closed(n, q) == pytest.approx(rec, rel=1e-6)
    assert cpf_count_closed(3, 7) == pytest.approx(343, rel=1e-9)


def test_cpf_lambda_values():
    import numpy as np

    for q in (2, 3, 4, 5, 10):
        roots = np.roots([-1.0, q - 1.0, q - 2.0, q - 1.0])
        largest = max(r.real for r in roots if abs(r.imag) < 1e-9)
        assert abs(cpf_lambda(q) - largest) < 1e-9
    assert cpf_lambda(2) == pytest.approx(1.465571231876768, abs=1e-12)
    assert math.log2(cpf_lambda(2)) == pytest.approx(0.551463, abs=1e-5)
    assert math.log(cpf_lambda(3), 3) == pytest.approx(0.890157, abs=1e-5)
    assert cpf_lambda(10**6) / 10**6 == pytest.approx(1.0, abs=1e-3)


def test_cpf_rates():
    assert cpf_rate(2, 4) == pytest.approx(0.896, abs=5e-4)
    assert cpf_rate(2, 2) == 1
    assert cpf_rate(5, 16) == pytest.approx(0.979, abs=5e-4)
    assert cpf_rate(2, 8) == pytest.approx(math.log2(56) / 8, abs=1e-12)
    rows = cpf_rate_table([2], [2, None])
    assert rows[0] == {"q": 2, "n": 2, "rate": 1.0}
    assert rows[1]["n"] is None


def test_palindrome_free_cascade():
    # 2-palindrome-free implies ell-palindrome-free for every ell >= 2
    for q, max_n in ((2, 10), (3, 7)):
        for n in range(1, max_n + 1):
            for x in words_of(n, q):
                if not cpf_member(x):
                    continue
                for ell in range(2, n // 2 + 1):
                    assert channel.deletion_positions(x, channel.pal_del(ell)) == []


def test_oracle_decode_errors():
    (a, b), _ = c2_best_params(6)
    code = PalindromicL2Code(6, a, b)

    def member(w):
        return c2_member(w, code)

    uncorrectable = None
    for y in words_of(8, 2):
        try:
            oracle_decode(y, 6, channel.pal_dup(2), member)
        except DecodingFailure as exc:
            if "uncorrectable" in str(exc):
                uncorrectable = y
                break
    assert uncorrectable is not None
    with pytest.raises(ValueError):
        oracle_decode(word((0, 1, 0), 2), 6, channel.pal_dup(2), member)


def test_oracle_decode_detects_non_correcting_set():
    # the del-correcting-but-not-dup-correcting pair: shared dup-ball word
    shared = parse_word("01001101", 2)
    members = {parse_word("010101", 2), parse_word("010011", 2)}
    with pytest.raises(DecodingFailure, match="not a correcting code"):
        oracle_decode(shared, 6, channel.pal_dup(2), lambda w: w in members)


def test_disjoint_ball_violation_reports_pair():
    c1 = parse_word("010101", 2)
    c2 = parse_word("010011", 2)
    clash = disjoint_ball_violation([c1, c2], channel.pal_dup(2), 1)
    assert clash is not None and clash[2] == parse_word("01001101", 2)
    assert disjoint_ball_violation([c1, c2], channel.pal_del(2), 1) is None


def test_encode_index():
    book = cpf_codebook(4, 2)
    assert encode_index(book, 0) == book[0]
    with pytest.raises(ValueError):
        encode_index(book, len(book))


def test_codebook_and_params_serialization():
    import json

    from dupcodes.codes import code_from_params, code_params, format_codebook, parse_codebook

    book = cpf_codebook(4, 2)
    text = format_codebook(book)
    assert text.splitlines()[0] == "0001"  # first palindrome-free word after 0000
    assert parse_codebook(text, 2) == book

    c1 = TandemVTCode(6, 2, 2, (0, 1, 0, 2, 1))
    c2 = PalindromicL2Code(8, 4, 13)
    from dupcodes.codes import PalindromeFreeCode

    cpf = PalindromeFreeCode(5, 3)
    for code in (c1, c2, cpf):
        payload = json.loads(json.dumps(code_params(code)))
        assert code_from_params(payload) == code
    assert code_params(c1)["construction"] == "c1"
    assert code_params(c2)["l"] == 2
