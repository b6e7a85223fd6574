import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercc.encoding import (
    QUATERNARY,
    QUATERNION,
    SCHEMES,
    UNARY,
    DecodeError,
    build_input,
    codeword_length,
    codeword_to_text,
    decode_value,
    encode,
    encode_unary,
    encode_value,
    get_scheme,
    parse_codeword,
)
from hypercc.quaternion import ONE, parse_symbol

# Golden codeword tables: C = 16 (single symbols) and C = 31 (symbol pairs).
TABLE_L1 = [
    "0", "1", "i", "j", "k",
    "1+i", "1+j", "1+k", "i+j", "j+k", "i+k",
    "1+i+j", "1+j+k", "1+i+k", "i+j+k", "1+i+j+k",
]
TABLE_L2 = [
    "0,0", "0,1", "1,1", "1,i", "i,i", "i,j", "j,j", "j,k", "k,k", "k,1+i",
    "1+i,1+i", "1+i,1+j", "1+j,1+j", "1+j,1+k", "1+k,1+k", "1+k,i+j",
    "i+j,i+j", "i+j,j+k", "j+k,j+k", "j+k,i+k", "i+k,i+k", "i+k,1+i+j",
    "1+i+j,1+i+j", "1+i+j,1+j+k", "1+j+k,1+j+k", "1+j+k,1+i+k",
    "1+i+k,1+i+k", "1+i+k,i+j+k", "i+j+k,i+j+k", "i+j+k,1+i+j+k",
    "1+i+j+k,1+i+j+k",
]


class TestSchemes:
    def test_alphabets(self):
        assert UNARY.alphabet == {parse_symbol("0"), parse_symbol("1")}
        assert QUATERNARY.alphabet == {parse_symbol(s) for s in ("0", "1", "i", "1+i")}
        assert len(QUATERNION.alphabet) == 16

    def test_dims_and_arity(self):
        assert (UNARY.dim, UNARY.arity) == (1, 1)
        assert (QUATERNARY.dim, QUATERNARY.arity) == (2, 3)
        assert (QUATERNION.dim, QUATERNION.arity) == (4, 15)

    def test_get_scheme(self):
        assert get_scheme("quaternary") is QUATERNARY
        with pytest.raises(ValueError):
            get_scheme("binary")


class TestCodewordLength:
    def test_quaternion_examples(self):
        assert codeword_length(16, QUATERNION) == 1
        assert codeword_length(31, QUATERNION) == 2
        assert codeword_length(36, QUATERNION) == 3
        assert codeword_length(46, QUATERNION) == 3

    def test_quaternary(self):
        assert codeword_length(16, QUATERNARY) == 5
        assert codeword_length(4, QUATERNARY) == 1

    def test_domain(self):
        with pytest.raises(ValueError):
            codeword_length(1, QUATERNION)
        with pytest.raises(ValueError):
            codeword_length(16, UNARY)


class TestEncodeTables:
    def test_table_l1_byte_exact(self):
        got = [codeword_to_text(encode_value(v, 16, QUATERNION)) for v in range(1, 17)]
        assert got == TABLE_L1

    def test_table_l2_byte_exact(self):
        got = [codeword_to_text(encode_value(v, 31, QUATERNION)) for v in range(1, 32)]
        assert got == TABLE_L2

    def test_full_set_sizes(self):
        for length, count in ((1, 16), (2, 31), (3, 46)):
            words = {encode_value(v, count, QUATERNION) for v in range(1, count + 1)}
            assert len(words) == count
            assert all(len(w) == length for w in words)

    def test_point_examples(self):
        assert codeword_to_text(encode_value(9, 16, QUATERNION)) == "i+j"
        assert codeword_to_text(encode_value(4, 31, QUATERNION)) == "1,i"
        for scheme in (QUATERNARY, QUATERNION):
            for count in (7, 16, 31):
                cw = encode_value(1, count, scheme)
                assert all(s == parse_symbol("0") for s in cw)

    def test_consecutive_differ_in_one_position(self):
        for scheme, count in ((QUATERNION, 46), (QUATERNION, 31), (QUATERNARY, 16)):
            prev = encode_value(1, count, scheme)
            for v in range(2, count + 1):
                cur = encode_value(v, count, scheme)
                diffs = [(a, b) for a, b in zip(prev, cur) if a != b]
                assert len(diffs) == 1
                a, b = diffs[0]
                assert scheme.ladder_index(b) == scheme.ladder_index(a) + 1
                prev = cur

    def test_window_is_first_c_codewords(self):
        # C below the full-set size reuses the leading codewords unchanged.
        for v in range(1, 21):
            assert encode_value(v, 20, QUATERNION) == encode_value(v, 31, QUATERNION)

    def test_value_domain(self):
        with pytest.raises(ValueError):
            encode_value(0, 16, QUATERNION)
        with pytest.raises(ValueError):
            encode_value(17, 16, QUATERNION)


class TestUnary:
    def test_layout(self):
        one, zero = parse_symbol("1"), parse_symbol("0")
        assert encode_unary(1, 16) == (one,) + (zero,) * 15
        assert encode_unary(16, 16) == (one,) * 16
        assert all(len(encode_unary(v, 16)) == 16 for v in range(1, 17))

    def test_domain(self):
        with pytest.raises(ValueError):
            encode_unary(0, 16)
        with pytest.raises(ValueError):
            encode_unary(17, 16)


class TestDecode:
    @given(st.sampled_from(sorted(SCHEMES)), st.integers(2, 64), st.data())
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, name, count, data):
        scheme = SCHEMES[name]
        value = data.draw(st.integers(1, count))
        assert decode_value(encode(value, count, scheme), count, scheme) == value

    def test_table_inverse(self):
        assert decode_value(parse_codeword("i+j"), 16, QUATERNION) == 9

    def test_descending_run_rejected(self):
        with pytest.raises(DecodeError):
            decode_value(parse_codeword("j,i"), 31, QUATERNION)

    def test_malformed(self):
        with pytest.raises(DecodeError):
            decode_value(parse_codeword("0,1,0"), 46, QUATERNION)  # three runs
        with pytest.raises(DecodeError):
            decode_value(parse_codeword("0,0,1"), 31, QUATERNION)  # wrong length
        with pytest.raises(DecodeError):
            decode_value(parse_codeword("0,j"), 31, QUATERNION)  # skipped a step
        with pytest.raises(DecodeError):
            decode_value(parse_codeword("0,1,0,0"), 4, UNARY)  # one after zero
        with pytest.raises(DecodeError):
            decode_value(parse_codeword("0,0,0,0"), 4, UNARY)  # zero ones

    def test_window_overflow_rejected(self):
        # Codeword 25 of the full 31-codeword set is invalid when C = 20.
        cw = encode_value(25, 31, QUATERNION)
        with pytest.raises(DecodeError):
            decode_value(cw, 20, QUATERNION)


class TestBuildInput:
    def test_lengths_for_16(self):
        assert len(build_input(3, 7, 16, UNARY)) == 33
        assert len(build_input(3, 7, 16, QUATERNARY)) == 11
        assert len(build_input(3, 7, 16, QUATERNION)) == 3

    def test_bias_is_last(self):
        vec = build_input(5, 12, 16, QUATERNARY)
        assert vec[-1] == ONE
        assert vec[:5] == encode(5, 16, QUATERNARY)
        assert vec[5:10] == encode(12, 16, QUATERNARY)

    def test_domain(self):
        with pytest.raises(ValueError):
            build_input(0, 3, 16, QUATERNION)


class TestCodewordText:
    def test_round_trip(self):
        for text in ("1+j,1+k", "0", "1,1,i"):
            assert codeword_to_text(parse_codeword(text)) == text
