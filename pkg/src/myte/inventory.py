"""Multilingual morpheme inventory: merging, ranking, codepoint allocation.

Per-language scored morpheme lists are unioned (a morpheme seen in several
languages keeps its maximum score and remembers every source language), each
morpheme is assigned a script group from its decoded bytes, and group members
are ranked by descending score so that the best 64 receive 2-byte codepoints,
the next 4096 3-byte ones, and the rest 4-byte ones.
"""

from dataclasses import dataclass, replace
from functools import lru_cache

from . import codepage
from .errors import FormatError, GroupOverflow
from .transcoder import MARKER, MyteCodec


@dataclass(frozen=True)
class InventoryEntry:
    morpheme: bytes
    score: float
    languages: tuple
    group: int
    rank: int | None = None
    codepoint: bytes | None = None


@dataclass
class MultilingualInventory:
    entries: list
    allocated: bool = False

    def __len__(self):
        return len(self.entries)

    def group_sizes(self):
        sizes = dict.fromkeys(range(8), 0)
        for e in self.entries:
            sizes[e.group] += 1
        return sizes


# --- script-group assignment -------------------------------------------------

@lru_cache(maxsize=None)
def _prefix_range_group(prefix: bytes):
    """Group implied by an incomplete UTF-8 sequence, or None if ambiguous.

    ``prefix`` is a lead byte plus the continuation bytes seen so far.  The
    missing continuation bytes span a contiguous codepoint range; if every
    assigned, non-transparent codepoint in that range falls in one script
    group, the fragment is attributed to it.
    """
    lead = prefix[0]
    width = codepage.utf8_sequence_width(lead)
    if width is None or width == 1 or len(prefix) >= width:
        return None
    if width == 2:
        value = lead & 0x1F
    elif width == 3:
        value = lead & 0x0F
    else:
        value = lead & 0x07
    for b in prefix[1:]:
        value = (value << 6) | (b & 0x3F)
    missing = width - len(prefix)
    lo = value << (6 * missing)
    hi = lo + (1 << (6 * missing)) - 1
    if hi - lo >= 4096:
        return None  # a span this wide always crosses script groups
    groups = set()
    for cp in range(lo, min(hi, 0x10FFFF) + 1):
        g = codepage._codepoint_group(cp)
        if g is not None and g != codepage.GROUP_MIXED:
            groups.add(g)
            if len(groups) > 1:
                return None
    return groups.pop() if len(groups) == 1 else None


def script_group_of_morpheme(morpheme: bytes) -> int:
    """Script group for raw morpheme bytes.

    Marker bytes are transparent.  Byte-level segmentation can cut through
    multibyte characters, so undecodable fragments are attributed by the
    codepoint range their lead byte pins down when that range is single
    group; anything still ambiguous forces the mixed group.
    """
    data = bytes(b for b in morpheme if b != MARKER)
    if not data:
        return codepage.GROUP_MIXED
    groups = set()
    i = 0
    n = len(data)
    while i < n:
        width = codepage.utf8_sequence_width(data[i])
        if width is None:
            # bare continuation byte or a value UTF-8 never uses
            groups.add(codepage.GROUP_MIXED)
            i += 1
            continue
        j = i + 1
        while j < min(i + width, n) and 0x80 <= data[j] <= 0xBF:
            j += 1
        run = data[i:j]
        if len(run) == width:
            try:
                g = codepage._codepoint_group(ord(run.decode("utf-8")))
            except UnicodeDecodeError:  # overlong or surrogate encodings
                g = codepage.GROUP_MIXED
            if g is not None:
                groups.add(g)
        else:
            g = _prefix_range_group(run)
            groups.add(g if g is not None else codepage.GROUP_MIXED)
        i = j
    if len(groups) == 1:
        return groups.pop()
    return codepage.GROUP_MIXED


# --- merge and allocation ------------------------------------------------------

def merge_inventories(per_language) -> MultilingualInventory:
    """Union per-language ``(morpheme, score)`` lists into one inventory.

    A morpheme contributed by several languages keeps the maximum score and
    records every contributor.  Entries come back unallocated (no ranks or
    codepoints yet).
    """
    if not per_language:
        raise ValueError("no languages to merge")
    merged = {}
    for language in sorted(per_language):
        for morpheme, score in per_language[language]:
            morpheme = bytes(morpheme)
            score = float(score)
            found = merged.get(morpheme)
            if found is None:
                merged[morpheme] = (score, {language})
            else:
                found[1].add(language)
                if score > found[0]:
                    merged[morpheme] = (score, found[1])
    entries = [
        InventoryEntry(m, score, tuple(sorted(langs)),
                       script_group_of_morpheme(m))
        for m, (score, langs) in sorted(merged.items())
    ]
    return MultilingualInventory(entries, allocated=False)


def allocate(inventory: MultilingualInventory) -> MultilingualInventory:
    """Rank every group by descending score and assign codepoints.

    Pure function of the merged inventory; fails atomically (no partial
    allocation) when a group exceeds its codepoint capacity.
    """
    by_group = {}
    for e in inventory.entries:
        by_group.setdefault(e.group, []).append(e)
    for group, members in sorted(by_group.items()):
        if len(members) > codepage.GROUP_CAPACITY:
            raise GroupOverflow(group, len(members))
    allocated = []
    for group in sorted(by_group):
        members = sorted(by_group[group], key=lambda e: (-e.score, e.morpheme))
        for rank, e in enumerate(members):
            allocated.append(replace(
                e, rank=rank, codepoint=codepage.codepoint_for_rank(group, rank)))
    allocated.sort(key=lambda e: (e.group, e.rank))
    return MultilingualInventory(allocated, allocated=True)


def build_codec(inventory: MultilingualInventory, *,
                allow_lengthening: bool = False) -> MyteCodec:
    """Construct the transcoding codec from an allocated inventory."""
    if not inventory.allocated:
        raise ValueError("inventory must be allocated before building a codec")
    return MyteCodec(((e.morpheme, e.codepoint) for e in inventory.entries),
                     allow_lengthening=allow_lengthening)


# --- table serialization --------------------------------------------------------
#
# MYTE-TABLE v1, the canonical text format (bit-exact, sorted by group then
# rank):
#
#   MYTE-TABLE v1 groups=8
#   <group> <rank> <hex-codepoint> <hex-morpheme> <score> <lang,lang,...>

def dumps_table(inventory: MultilingualInventory) -> str:
    if not inventory.allocated:
        raise ValueError("only allocated inventories can be serialized")
    lines = ["MYTE-TABLE v1 groups=8"]
    for e in inventory.entries:
        langs = ",".join(e.languages)
        lines.append(f"{e.group} {e.rank} {e.codepoint.hex()} "
                     f"{e.morpheme.hex()} {e.score!r} {langs}")
    return "\n".join(lines) + "\n"


def loads_table(text: str) -> MultilingualInventory:
    lines = text.splitlines()
    if not lines or lines[0].split() != ["MYTE-TABLE", "v1", "groups=8"]:
        raise FormatError(f"bad table header: {lines[0]!r}" if lines
                          else "empty table file")
    entries = []
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) < 5:
            raise FormatError(f"table line {ln}: too few fields")
        try:
            group = int(fields[0])
            rank = int(fields[1])
            cp = bytes.fromhex(fields[2])
            morpheme = bytes.fromhex(fields[3])
            score = float(fields[4])
        except ValueError:
            raise FormatError(f"table line {ln}: cannot parse {line!r}") from None
        langs = tuple(fields[5].split(",")) if len(fields) > 5 else ()
        if codepage.codepoint_for_rank(group, rank) != cp:
            raise FormatError(
                f"table line {ln}: codepoint {cp.hex()} does not match "
                f"group {group} rank {rank}")
        entries.append(InventoryEntry(morpheme, score, langs, group, rank, cp))
    return MultilingualInventory(entries, allocated=True)


def save_table(inventory: MultilingualInventory, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_table(inventory))


def load_table(path) -> MultilingualInventory:
    with open(path, "r", encoding="ascii") as fh:
        return loads_table(fh.read())
