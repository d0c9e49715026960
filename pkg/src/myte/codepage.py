"""Byte-layout tables for UTF-8 and the morpheme codepage.

UTF-8 splits the 256 byte values into ASCII (``00``-``7F``), multibyte lead
bytes (``C2``-``F4``) and continuation bytes (``80``-``BF``); the remaining
values never occur in well-formed text.  The morpheme codepage (MYTE) keeps
that structure but reclaims the 26 values of the ASCII capital range
(``41``-``5A``), which become free once capital letters are rewritten as a
marker byte plus their lowercase form:

    ===========  ==============================================
    ``41``       capitalization marker
    ``42``-``49``  2-byte morpheme lead, one value per script group
    ``4A``-``51``  3-byte morpheme lead
    ``52``-``59``  4-byte morpheme lead
    ``5A``       reserved
    ===========  ==============================================

Continuation bytes are drawn from the 64-value range ``80``-``BF`` exactly as
in UTF-8, so each of the 8 script groups addresses 64 two-byte, 64**2
three-byte and 64**3 four-byte codepoints: 266,304 per group and 2,130,432 in
total.  Because the morpheme lead bytes lie outside ``C2``-``F4``, no morpheme
codepoint collides with (or is a prefix of) a valid UTF-8 sequence.
"""

import enum
from dataclasses import dataclass
from functools import lru_cache

import regex

from .errors import RankOverflow

CAP_MARKER = 0x41
RESERVED_BYTE = 0x5A
LEAD2_BASE = 0x42
LEAD3_BASE = 0x4A
LEAD4_BASE = 0x52

TIER_CAPACITY = (64, 64**2, 64**3)
#: ranks 0-63 are 2-byte, 64-4159 are 3-byte, 4160-266303 are 4-byte
TIER_OFFSET = (0, 64, 64 + 64**2)
GROUP_CAPACITY = sum(TIER_CAPACITY)
TOTAL_CAPACITY = 8 * GROUP_CAPACITY


class Mode(enum.Enum):
    """Which codepage a byte is classified against."""

    UTF8 = "utf8"
    MYTE = "myte"


class ByteKind(enum.Enum):
    ASCII = "ascii"
    UTF8_LEAD = "utf8-lead"
    UTF8_CONTINUATION = "utf8-continuation"
    CAPITAL_LATIN = "capital-latin"
    UNUSED = "unused"
    MYTE_LEAD = "myte-lead"
    CAP_MARKER = "cap-marker"


@dataclass(frozen=True)
class ByteClass:
    """Classification of one byte value under one codepage mode."""

    kind: ByteKind
    width: int | None = None  # lead bytes only: total codepoint length in bytes
    group: int | None = None  # morpheme leads only: script group id


@dataclass(frozen=True)
class ScriptGroup:
    """One row of the script-group table.

    ``unicode_scripts`` holds Unicode script property values; group 1 also
    lists the pseudo-entries "Mixed" and "Unknown" that name its fallback
    role rather than real scripts.
    """

    id: int
    name: str
    unicode_scripts: frozenset

    @property
    def lead_byte_2(self) -> int:
        return LEAD2_BASE + self.id

    @property
    def lead_byte_3(self) -> int:
        return LEAD3_BASE + self.id

    @property
    def lead_byte_4(self) -> int:
        return LEAD4_BASE + self.id


SCRIPT_GROUPS = (
    ScriptGroup(0, "Latin", frozenset({"Latin"})),
    ScriptGroup(1, "Common", frozenset({"Mixed", "Common", "Inherited", "Unknown"})),
    ScriptGroup(2, "Non-Latin Alphabetic",
                frozenset({"Greek", "Cyrillic", "Armenian", "Georgian"})),
    ScriptGroup(3, "Abjads",
                frozenset({"Hebrew", "Arabic", "Syriac", "Thaana", "Tifinagh"})),
    ScriptGroup(4, "Abugidas North",
                frozenset({"Devanagari", "Gurmukhi", "Gujarati", "Oriya",
                           "Bengali", "Sinhala", "Tibetan"})),
    ScriptGroup(5, "Abugidas South",
                frozenset({"Telugu", "Kannada", "Tamil", "Malayalam", "Thai",
                           "Lao", "Myanmar", "Tai_Le", "New_Tai_Lue",
                           "Tai_Tham", "Tai_Viet", "Tagalog", "Khmer"})),
    ScriptGroup(6, "CJK",
                frozenset({"Hangul", "Han", "Yi", "Katakana", "Hiragana",
                           "Bopomofo"})),
    ScriptGroup(7, "Other", frozenset()),
)

GROUP_MIXED = 1
GROUP_OTHER = 7


def classify_byte(b: int, mode: Mode = Mode.UTF8) -> ByteClass:
    """Classify byte value ``b`` under the given codepage mode.

    Total and deterministic over 0-255.  In MYTE mode the capital range is
    repurposed (marker / morpheme leads / reserved); every other byte keeps
    its UTF-8 classification.
    """
    if not 0 <= b <= 0xFF:
        raise ValueError(f"byte value out of range: {b}")
    if not isinstance(mode, Mode):
        mode = Mode(mode)
    if mode is Mode.MYTE:
        if b == CAP_MARKER:
            return ByteClass(ByteKind.CAP_MARKER)
        if LEAD2_BASE <= b < LEAD2_BASE + 8:
            return ByteClass(ByteKind.MYTE_LEAD, width=2, group=b - LEAD2_BASE)
        if LEAD3_BASE <= b < LEAD3_BASE + 8:
            return ByteClass(ByteKind.MYTE_LEAD, width=3, group=b - LEAD3_BASE)
        if LEAD4_BASE <= b < LEAD4_BASE + 8:
            return ByteClass(ByteKind.MYTE_LEAD, width=4, group=b - LEAD4_BASE)
        if b == RESERVED_BYTE:
            return ByteClass(ByteKind.UNUSED)
    elif 0x41 <= b <= 0x5A:
        return ByteClass(ByteKind.CAPITAL_LATIN)
    if b < 0x80:
        return ByteClass(ByteKind.ASCII)
    if b < 0xC0:
        return ByteClass(ByteKind.UTF8_CONTINUATION)
    if 0xC2 <= b <= 0xDF:
        return ByteClass(ByteKind.UTF8_LEAD, width=2)
    if 0xE0 <= b <= 0xEF:
        return ByteClass(ByteKind.UTF8_LEAD, width=3)
    if 0xF0 <= b <= 0xF4:
        return ByteClass(ByteKind.UTF8_LEAD, width=4)
    # C0, C1, F5-FD can never appear in well-formed UTF-8; FE/FF never at all.
    return ByteClass(ByteKind.UNUSED)


# --- script lookup ----------------------------------------------------------
#
# Script membership is resolved through the regex module's compiled Unicode
# property tables.  One character class is compiled per script group; scripts
# that belong to no group fall through to "Other", and codepoints with script
# Unknown (unassigned, private use, surrogates) land in the Common group.

_TRANSPARENT_RE = regex.compile(r"[\p{Script=Common}\p{Script=Inherited}]")
_UNKNOWN_RE = regex.compile(r"\p{Script=Unknown}")


def _class_pattern(scripts):
    return regex.compile("[" + "".join(rf"\p{{Script={s}}}" for s in sorted(scripts)) + "]")


_GROUP_RES = tuple(
    (g.id, _class_pattern(g.unicode_scripts))
    for g in SCRIPT_GROUPS
    if g.id not in (GROUP_MIXED, GROUP_OTHER)
)


@lru_cache(maxsize=None)
def _codepoint_group(cp: int):
    """Script group of one codepoint, or None for transparent codepoints.

    Common and Inherited codepoints (punctuation, digits, combining marks)
    are transparent: they never force a group on their own.
    """
    ch = chr(cp)
    if _TRANSPARENT_RE.match(ch):
        return None
    for gid, pat in _GROUP_RES:
        if pat.match(ch):
            return gid
    if _UNKNOWN_RE.match(ch):
        return GROUP_MIXED
    return GROUP_OTHER


def script_group_of_codepoints(cps) -> int:
    """Script group shared by a codepoint sequence.

    Transparent (Common/Inherited) codepoints are ignored.  If the remaining
    codepoints span more than one group, or none remain, the mixed/common
    group 1 is returned.
    """
    cps = list(cps)
    if not cps:
        raise ValueError("empty codepoint sequence")
    groups = {g for g in map(_codepoint_group, cps) if g is not None}
    if len(groups) == 1:
        return groups.pop()
    return GROUP_MIXED


# --- rank <-> codepoint -----------------------------------------------------

def codepoint_for_rank(group: int, rank: int) -> bytes:
    """Byte sequence of the codepoint at ``rank`` within ``group``.

    Ranks are dense per group: the first 64 map to 2-byte codepoints, the
    next 64**2 to 3-byte, the final 64**3 to 4-byte.  Continuation digits are
    base-64 big-endian over ``80``-``BF``, so byte order equals rank order.
    """
    if not 0 <= group <= 7:
        raise ValueError(f"script group out of range: {group}")
    if rank < 0:
        raise ValueError(f"negative rank: {rank}")
    if rank < 64:
        return bytes((LEAD2_BASE + group, 0x80 + rank))
    if rank < TIER_OFFSET[2]:
        r = rank - 64
        return bytes((LEAD3_BASE + group, 0x80 + (r >> 6), 0x80 + (r & 63)))
    if rank < GROUP_CAPACITY:
        r = rank - TIER_OFFSET[2]
        return bytes((LEAD4_BASE + group, 0x80 + (r >> 12),
                      0x80 + ((r >> 6) & 63), 0x80 + (r & 63)))
    raise RankOverflow(f"rank {rank} exceeds group capacity {GROUP_CAPACITY}")


def rank_for_codepoint(cp: bytes) -> tuple:
    """Inverse of :func:`codepoint_for_rank`; returns ``(group, rank)``."""
    if not cp:
        raise ValueError("empty codepoint")
    lead = cp[0]
    if LEAD2_BASE <= lead < LEAD2_BASE + 8:
        group, width, base = lead - LEAD2_BASE, 2, 0
    elif LEAD3_BASE <= lead < LEAD3_BASE + 8:
        group, width, base = lead - LEAD3_BASE, 3, TIER_OFFSET[1]
    elif LEAD4_BASE <= lead < LEAD4_BASE + 8:
        group, width, base = lead - LEAD4_BASE, 4, TIER_OFFSET[2]
    else:
        raise ValueError(f"not a morpheme lead byte: {lead:#04x}")
    if len(cp) != width:
        raise ValueError(f"codepoint length {len(cp)} does not match lead width {width}")
    rank = 0
    for b in cp[1:]:
        if not 0x80 <= b <= 0xBF:
            raise ValueError(f"not a continuation byte: {b:#04x}")
        rank = (rank << 6) | (b - 0x80)
    return group, base + rank


def myte_lead_width(b: int):
    """Codepoint width declared by a morpheme lead byte, or None."""
    if LEAD2_BASE <= b < LEAD2_BASE + 8:
        return 2
    if LEAD3_BASE <= b < LEAD3_BASE + 8:
        return 3
    if LEAD4_BASE <= b < LEAD4_BASE + 8:
        return 4
    return None


def utf8_sequence_width(b: int):
    """Length of the UTF-8 sequence started by ``b``, or None if ``b`` cannot
    start one."""
    if b < 0x80:
        return 1
    if 0xC2 <= b <= 0xDF:
        return 2
    if 0xE0 <= b <= 0xEF:
        return 3
    if 0xF0 <= b <= 0xF4:
        return 4
    return None
