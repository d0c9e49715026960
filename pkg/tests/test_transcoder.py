"""Decomposition, recomposition, and codec encode/decode."""

import unicodedata

import pytest
from hypothesis import given, settings, strategies as st

from myte.errors import (
    DanglingMarker,
    InvalidUtf8,
    MalformedContinuation,
    TruncatedCodepoint,
    UnknownCodepoint,
)
from myte.transcoder import (
    EMPTY_CODEC,
    MyteCodec,
    decode,
    decompose_bytes,
    encode,
    recompose_bytes,
)

# mixed-script alphabet used by the randomized roundtrips: Latin (with
# capitals and precomposed accents), Cyrillic, Devanagari, CJK, emoji
MIXED = ("abcdefghij ABCDEFGHIJ ÉÀÇÜ éàçü αβΣσ абвгдеАБ "
         "अआकखगच తెలుగు 你好世界漢 ひらがカタ 한국 🙂🚀🎉 ,.!?0123")
MIXED_CHARS = sorted(set(MIXED))
NFKD_STABLE_LOWER = sorted(set(
    c for c in MIXED_CHARS
    if unicodedata.normalize("NFKD", c) == c and c.lower() == c))


def nfkd_bytes(s: str) -> bytes:
    return unicodedata.normalize("NFKD", s).encode("utf-8")


class TestDecompose:
    def test_plain_lowercase_unchanged(self):
        assert decompose_bytes("cat") == b"\x63\x61\x74"

    def test_capital_becomes_marker(self):
        assert decompose_bytes("A") == b"\x41\x61"
        assert decompose_bytes("Z") == b"\x41\x7a"

    def test_accented_capital(self):
        # U+00C9 -> NFKD E + combining acute -> marked lowercase e + mark
        assert decompose_bytes("É") == bytes.fromhex("4165cc81")

    def test_matches_independent_normalization(self):
        for ch in MIXED_CHARS:
            got = decompose_bytes(ch)
            expected = bytearray()
            for c in unicodedata.normalize("NFKD", ch):
                low = c.lower()
                if low != c and len(low) == 1 and low.upper() == c:
                    expected += b"\x41" + low.encode("utf-8")
                else:
                    expected += c.encode("utf-8")
            assert got == bytes(expected)

    def test_no_capital_range_bytes_left(self):
        for ch in MIXED_CHARS:
            stream = decompose_bytes(ch * 3 + "Qx")
            assert not any(0x42 <= b <= 0x5A for b in stream)

    def test_bytes_input_and_invalid_utf8(self):
        assert decompose_bytes(b"cat") == b"cat"
        with pytest.raises(InvalidUtf8):
            decompose_bytes(b"\xff\xfe\x41")

    def test_nfkd_off_keeps_compatibility_chars(self):
        s = "ﬁn"  # fi ligature
        assert decompose_bytes(s, nfkd=False) == s.encode("utf-8")
        assert decompose_bytes(s) == b"fin"

    def test_uppercase_sharp_s_passes_through(self):
        # U+1E9E lowercases to a character that uppercases to "SS", so the
        # marker rewrite would not be invertible; it must stay as-is
        assert decompose_bytes("ẞ", nfkd=False) == "ẞ".encode("utf-8")


class TestRecompose:
    def test_marker_inverts(self):
        assert recompose_bytes(b"\x41\x61") == b"A"

    def test_passthrough(self):
        assert recompose_bytes(b"\x63\x61\x74") == b"cat"

    def test_dangling_at_end(self):
        with pytest.raises(DanglingMarker) as exc:
            recompose_bytes(b"\x41")
        assert exc.value.offset == 0

    def test_marker_before_uppercasable_only(self):
        with pytest.raises(DanglingMarker):
            recompose_bytes(b"ab\x41\x31")  # digit has no uppercase
        with pytest.raises(DanglingMarker):
            recompose_bytes(b"\x41\x80")  # bare continuation byte

    @given(st.text(alphabet=MIXED_CHARS, max_size=40))
    def test_inverts_decompose_without_nfkd(self, s):
        assert recompose_bytes(decompose_bytes(s, nfkd=False)) == s.encode("utf-8")


def two_entry_codec():
    return MyteCodec([(b"cat", bytes([0x42, 0x80])),
                      (b"cats", bytes([0x42, 0x81]))])


class TestEncode:
    def test_empty(self):
        assert encode("", two_entry_codec()) == b""

    def test_no_match_is_identity(self):
        text = "zebra fox"
        assert encode(text, two_entry_codec()) == text.encode("utf-8")
        assert encode(text, EMPTY_CODEC) == text.encode("utf-8")

    def test_longest_match_wins(self):
        assert encode("cats", two_entry_codec()) == bytes([0x42, 0x81])
        assert encode("cat", two_entry_codec()) == bytes([0x42, 0x80])
        assert encode("catsup", two_entry_codec()) == bytes([0x42, 0x81]) + b"up"

    def test_repeated_matches(self):
        assert encode("catcat catsx", two_entry_codec()) == \
            bytes([0x42, 0x80, 0x42, 0x80, 0x20, 0x42, 0x81, 0x78])

    def test_match_can_start_midword(self):
        codec = MyteCodec([(b"at", bytes([0x42, 0x80]))])
        assert encode("bat", codec) == b"b" + bytes([0x42, 0x80])

    def test_marker_inside_morpheme(self):
        # a lexicon trained on decomposed bytes can contain marker bytes
        codec = MyteCodec([(b"\x41\x61b", bytes([0x42, 0x80]))])
        assert encode("Abc", codec) == bytes([0x42, 0x80]) + b"c"
        assert decode(encode("Abc", codec), codec) == b"Abc"

    def test_output_purity(self):
        codec = two_entry_codec()
        out = encode("The CATS chase cats.", codec)
        for b in out:
            assert not 0x43 <= b <= 0x5A or b == 0x42

    def test_lengthening_entries_inactive_by_default(self):
        long_cp = bytes([0x4A, 0x80, 0x80])  # 3-byte code for a 2-byte morpheme
        codec = MyteCodec([(b"ab", long_cp)])
        assert codec.n_active == 0
        assert encode("ab", codec) == b"ab"
        assert decode(long_cp, codec) == b"ab"  # still decodable
        active = MyteCodec([(b"ab", long_cp)], allow_lengthening=True)
        assert encode("ab", active) == long_cp

    def test_streaming_split_at_whitespace(self):
        codec = two_entry_codec()  # no whitespace inside any morpheme
        s1, s2 = "the cats sat ", "on cat mats"
        assert encode(s1 + s2, codec) == encode(s1, codec) + encode(s2, codec)


class TestDecode:
    def test_roundtrip_example(self):
        codec = two_entry_codec()
        assert decode(encode("cats", codec), codec) == b"cats"

    def test_malformed_continuation(self):
        with pytest.raises(MalformedContinuation) as exc:
            decode(bytes([0x42, 0x7F]), two_entry_codec())
        assert exc.value.offset == 1

    def test_truncated(self):
        with pytest.raises(TruncatedCodepoint) as exc:
            decode(b"xy" + bytes([0x4C, 0x80]), two_entry_codec())
        assert exc.value.offset == 2

    def test_unknown_codepoint(self):
        with pytest.raises(UnknownCodepoint):
            decode(bytes([0x42, 0xBF]), two_entry_codec())

    def test_unused_bytes_pass_through(self):
        # FE/FF and the reserved byte 5A are opaque single bytes
        assert decode(b"\xfe\xff", EMPTY_CODEC) == b"\xfe\xff"
        assert decode(b"\x5a", EMPTY_CODEC) == b"\x5a"


class TestRoundtrip:
    @settings(max_examples=400, deadline=None)
    @given(st.text(alphabet=MIXED_CHARS, max_size=60))
    def test_decode_encode_is_nfkd(self, s):
        codec = two_entry_codec()
        assert decode(encode(s, codec), codec) == nfkd_bytes(s)

    @settings(max_examples=400, deadline=None)
    @given(st.text(alphabet=MIXED_CHARS, max_size=60))
    def test_no_nfkd_mode_is_bijective(self, s):
        codec = two_entry_codec()
        assert decode(encode(s, codec, nfkd=False), codec) == s.encode("utf-8")

    @settings(max_examples=200, deadline=None)
    @given(st.text(alphabet=NFKD_STABLE_LOWER, max_size=60))
    def test_nfkd_stable_exact_and_never_longer(self, s):
        codec = two_entry_codec()
        out = encode(s, codec)
        assert decode(out, codec) == s.encode("utf-8")
        assert len(out) <= len(s.encode("utf-8"))
