import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tweetnorm.bytes_literal import (
    MalformedLiteral,
    decode_utf8,
    looks_like_bytes_literal,
    parse_bytes_literal,
    render_bytes_literal,
)
from utf8_oracle import decode_with_replacement, is_valid_utf8


class TestParse:
    def test_ascii_passthrough(self):
        assert parse_bytes_literal("b'RT hi'") == bytes([0x52, 0x54, 0x20, 0x68, 0x69])

    def test_hex_escapes(self):
        assert parse_bytes_literal(r"b'\xF0\x9F\x98\xA0'") == bytes([0xF0, 0x9F, 0x98, 0xA0])

    def test_empty(self):
        assert parse_bytes_literal("b''") == b""

    def test_double_quotes(self):
        assert parse_bytes_literal('b"hi"') == b"hi"

    def test_simple_escapes(self):
        assert parse_bytes_literal(r"b'a\n\r\t\\\'\"z'") == b"a\n\r\t\\'\"z"

    def test_lowercase_hex(self):
        assert parse_bytes_literal(r"b'\xab\xAB'") == b"\xab\xab"

    @pytest.mark.parametrize(
        "bad",
        [
            r"b'\xZZ'",  # non-hex digits
            r"b'\x4'",  # truncated hex at end
            r"b'\x'",  # bare \x
            r"b'\q'",  # unknown escape
            "b'",  # no closing quote
            "b'abc",  # no closing quote
            "'abc'",  # missing b prefix
            "b'abc\"",  # mismatched quote styles
            "b'a'b'",  # unescaped quote mid-literal
            "b'a\\'",  # dangling backslash
            "b'caf\u00e9'",  # non-ASCII code unit outside an escape
            "",
            "b",
        ],
    )
    def test_malformed(self, bad):
        with pytest.raises(MalformedLiteral):
            parse_bytes_literal(bad)

    def test_quote_of_other_style_is_plain(self):
        assert parse_bytes_literal("b'say \"hi\"'") == b'say "hi"'


class TestRender:
    def test_canonical_form(self):
        assert render_bytes_literal(b"RT hi") == "b'RT hi'"
        assert render_bytes_literal(bytes([0xF0, 0x9F, 0x98, 0xA0])) == r"b'\xF0\x9F\x98\xA0'"
        assert render_bytes_literal(b"a'b\\c\nd") == r"b'a\'b\\c\nd'"

    def test_double_quote_style(self):
        assert render_bytes_literal(b'say "hi"', quote='"') == 'b"say \\"hi\\""'

    @given(st.binary(max_size=64))
    def test_round_trip_any_bytes(self, data):
        assert parse_bytes_literal(render_bytes_literal(data)) == data
        assert parse_bytes_literal(render_bytes_literal(data, quote='"')) == data

    @given(st.binary(max_size=64))
    def test_reescape_is_canonical(self, data):
        # parsing the canonical re-escaping of a parse reproduces the bytes
        lit = render_bytes_literal(data)
        assert render_bytes_literal(parse_bytes_literal(lit)) == lit


PRINTABLE_NO_QUOTE_BACKSLASH = st.text(
    alphabet=st.characters(min_codepoint=0x20, max_codepoint=0x7E, exclude_characters="\\'\""),
    max_size=80,
)


@given(PRINTABLE_NO_QUOTE_BACKSLASH)
def test_ascii_round_trip_through_decode(s):
    text = decode_utf8(parse_bytes_literal("b'" + s + "'")).text
    assert text == s


class TestDecode:
    def test_winking_face_bytes(self):
        out = decode_utf8(bytes([0xF0, 0x9F, 0x98, 0x89]))
        assert out.text == "\U0001F609"
        assert out.replacement_count == 0

    def test_plain_ascii(self):
        assert decode_utf8(b"hi") == decode_utf8(b"hi")
        assert decode_utf8(b"hi").text == "hi"

    def test_maximal_subpart(self):
        out = decode_utf8(bytes([0xF0, 0x28]))
        assert out.text == "\ufffd("
        assert out.replacement_count == 1

    def test_preexisting_replacement_char_not_counted(self):
        # EF BF BD is the valid encoding of U+FFFD itself
        out = decode_utf8(b"\xef\xbf\xbd ok \xff")
        assert out.text == "\ufffd ok \ufffd"
        assert out.replacement_count == 1

    def test_lone_continuation_bytes(self):
        out = decode_utf8(b"\x80\x80")
        assert out.text == "\ufffd\ufffd"
        assert out.replacement_count == 2

    def test_truncated_four_byte_prefix_is_one_replacement(self):
        assert decode_utf8(b"\xf0\x9f\x98").replacement_count == 1

    @given(st.binary(max_size=48))
    def test_oracle_validity_agreement(self, data):
        assert (decode_utf8(data).replacement_count == 0) == is_valid_utf8(data)

    @given(st.binary(max_size=48))
    def test_oracle_decode_agreement(self, data):
        got = decode_utf8(data)
        text, count = decode_with_replacement(data)
        assert got.text == text
        assert got.replacement_count == count

    @given(st.binary(max_size=48))
    def test_scalar_count_bounded_by_byte_count(self, data):
        assert len(decode_utf8(data).text) <= len(data)

    # stress the boundary bytes harder than uniform sampling would
    @given(st.lists(st.sampled_from([0x7F, 0x80, 0xBF, 0xC1, 0xC2, 0xE0, 0xA0, 0xED, 0x9F, 0xF0, 0x90, 0xF4, 0x8F, 0xFF]), max_size=12))
    def test_oracle_agreement_on_boundary_bytes(self, vals):
        data = bytes(vals)
        got = decode_utf8(data)
        text, count = decode_with_replacement(data)
        assert (got.text, got.replacement_count) == (text, count)


def test_looks_like_bytes_literal():
    assert looks_like_bytes_literal("b'x'")
    assert looks_like_bytes_literal('b"x"')
    assert looks_like_bytes_literal("b''")
    assert not looks_like_bytes_literal("hello")
    assert not looks_like_bytes_literal("b'x\"")
    assert not looks_like_bytes_literal("b'")
    assert not looks_like_bytes_literal("")
