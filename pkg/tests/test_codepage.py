"""Byte classification, script groups, and rank <-> codepoint mapping."""

import pytest
from hypothesis import given, strategies as st

import oracles
from myte import codepage
from myte.codepage import (
    GROUP_CAPACITY,
    SCRIPT_GROUPS,
    TOTAL_CAPACITY,
    ByteKind,
    Mode,
    classify_byte,
    codepoint_for_rank,
    rank_for_codepoint,
    script_group_of_codepoints,
)
from myte.errors import RankOverflow


class TestClassifyByte:
    def test_utf8_lead_example(self):
        bc = classify_byte(0xC3, Mode.UTF8)
        assert bc.kind is ByteKind.UTF8_LEAD and bc.width == 2

    def test_marker_example(self):
        assert classify_byte(0x41, Mode.MYTE).kind is ByteKind.CAP_MARKER

    def test_myte_lead_example(self):
        bc = classify_byte(0x44, Mode.MYTE)
        assert bc.kind is ByteKind.MYTE_LEAD
        assert bc.group == 2 and bc.width == 2

    @pytest.mark.parametrize("mode", [Mode.UTF8, Mode.MYTE])
    def test_total_function(self, mode):
        for b in range(256):
            assert classify_byte(b, mode) == classify_byte(b, mode)

    def test_utf8_ranges(self):
        for b in range(256):
            bc = classify_byte(b, Mode.UTF8)
            if 0x41 <= b <= 0x5A:
                assert bc.kind is ByteKind.CAPITAL_LATIN
            elif b < 0x80:
                assert bc.kind is ByteKind.ASCII
            elif b < 0xC0:
                assert bc.kind is ByteKind.UTF8_CONTINUATION
            elif 0xC2 <= b <= 0xF4:
                assert bc.kind is ByteKind.UTF8_LEAD
                assert bc.width == (2 if b <= 0xDF else 3 if b <= 0xEF else 4)
            else:
                assert bc.kind is ByteKind.UNUSED
        assert classify_byte(0xFE).kind is ByteKind.UNUSED
        assert classify_byte(0xFF).kind is ByteKind.UNUSED

    def test_myte_capital_range(self):
        assert classify_byte(0x41, Mode.MYTE).kind is ByteKind.CAP_MARKER
        assert classify_byte(0x5A, Mode.MYTE).kind is ByteKind.UNUSED
        for b in range(0x42, 0x5A):
            bc = classify_byte(b, Mode.MYTE)
            assert bc.kind is ByteKind.MYTE_LEAD
        # outside the capital range MYTE matches UTF-8 classification
        for b in list(range(0x41)) + list(range(0x5B, 0x100)):
            assert classify_byte(b, Mode.MYTE) == classify_byte(b, Mode.UTF8)


class TestScriptGroupTable:
    def test_lead_bytes_match_group_table(self):
        for g in SCRIPT_GROUPS:
            assert g.lead_byte_2 == 0x42 + g.id
            assert g.lead_byte_3 == 0x4A + g.id
            assert g.lead_byte_4 == 0x52 + g.id

    def test_24_leads_distinct_in_range(self):
        leads = [b for g in SCRIPT_GROUPS
                 for b in (g.lead_byte_2, g.lead_byte_3, g.lead_byte_4)]
        assert len(leads) == 24
        assert len(set(leads)) == 24
        assert all(0x42 <= b <= 0x59 for b in leads)

    def test_capacity(self):
        assert GROUP_CAPACITY == 64 + 4096 + 262144 == 266304
        assert TOTAL_CAPACITY == 8 * GROUP_CAPACITY == 2_130_432

    def test_group_names(self):
        assert [g.name for g in SCRIPT_GROUPS] == [
            "Latin", "Common", "Non-Latin Alphabetic", "Abjads",
            "Abugidas North", "Abugidas South", "CJK", "Other"]


class TestScriptGroupOfCodepoints:
    def test_cyrillic(self):
        assert script_group_of_codepoints([0x430, 0x431]) == 2

    def test_mixed_scripts(self):
        assert script_group_of_codepoints([0x61, 0x431]) == 1

    def test_only_common(self):
        assert script_group_of_codepoints([0x2E]) == 1

    @pytest.mark.parametrize("text,group", [
        ("word", 0),
        ("λογος", 2),
        (" съешь", 2),
        ("עברית", 3),
        ("العربية", 3),
        ("हिन्दी", 4),
        ("বাংলা", 4),
        ("తెలుగు", 5),
        ("ไทย", 5),
        ("ខ្មែរ", 5),
        ("漢字", 6),
        ("ひらがな", 6),
        ("한국어", 6),
        ("ᱚᱞ", 7),       # Ol Chiki: real script outside groups 0-6
        ("ꆈꌠ", 6),       # Yi
    ])
    def test_single_script_words(self, text, group):
        assert script_group_of_codepoints([ord(c) for c in text]) == group

    def test_diacritics_are_transparent(self):
        # combining acute (Inherited) plus Latin base stays Latin
        assert script_group_of_codepoints([ord("e"), 0x301]) == 0
        # digits and punctuation do not force the mixed group either
        assert script_group_of_codepoints([ord("3"), ord("-"), 0x431]) == 2

    def test_unassigned_is_common_group(self):
        assert script_group_of_codepoints([0x0378]) == 1  # unassigned slot

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            script_group_of_codepoints([])


class TestCodepointForRank:
    def test_first_two_byte_slot(self):
        assert codepoint_for_rank(0, 0) == bytes([0x42, 0x80])

    def test_first_three_byte_slot_group2(self):
        assert codepoint_for_rank(2, 64) == bytes([0x4C, 0x80, 0x80])

    def test_last_four_byte_slot_group7(self):
        assert codepoint_for_rank(7, 266_303) == bytes([0x59, 0xBF, 0xBF, 0xBF])

    def test_overflow(self):
        with pytest.raises(RankOverflow):
            codepoint_for_rank(0, 266_304)

    def test_continuations_in_range(self):
        for rank in (0, 63, 64, 4159, 4160, 266_303):
            cp = codepoint_for_rank(3, rank)
            assert all(0x80 <= b <= 0xBF for b in cp[1:])

    def test_matches_oracle_exhaustive_small_tiers(self):
        for group in range(8):
            for rank in range(4160):
                assert codepoint_for_rank(group, rank) == \
                    oracles.codepoint_direct(group, rank)

    def test_roundtrip_exhaustive_small_tiers(self):
        for group in range(8):
            for rank in range(4160):
                cp = codepoint_for_rank(group, rank)
                assert rank_for_codepoint(cp) == (group, rank)

    @given(st.integers(0, 7), st.integers(4160, 266_303))
    def test_roundtrip_four_byte(self, group, rank):
        cp = codepoint_for_rank(group, rank)
        assert len(cp) == 4
        assert cp == oracles.codepoint_direct(group, rank)
        assert rank_for_codepoint(cp) == (group, rank)

    @given(st.integers(0, 7), st.integers(0, 266_303))
    def test_lexicographic_order_equals_rank_order(self, group, rank):
        # big-endian continuation digits keep byte order aligned with ranks
        if rank + 1 <= 266_303:
            a = codepoint_for_rank(group, rank)
            b = codepoint_for_rank(group, rank + 1)
            if len(a) == len(b):
                assert a < b

    def test_prefix_freeness_sample(self, rng):
        cps = {codepoint_for_rank(g, r)
               for g in range(8) for r in range(0, 4160, 7)}
        cps |= {codepoint_for_rank(rng.randrange(8), rng.randrange(4160, 266_304))
                for _ in range(2000)}
        by_len = sorted(cps, key=len)
        as_set = set(cps)
        for cp in by_len:
            for prefix_len in range(2, len(cp)):
                assert cp[:prefix_len] not in as_set

    def test_leads_disjoint_from_utf8(self):
        for g in range(8):
            for rank in (0, 64, 4160):
                lead = codepoint_for_rank(g, rank)[0]
                assert not 0xC2 <= lead <= 0xF4
                assert 0x42 <= lead <= 0x59
