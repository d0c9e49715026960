"""Bidirectional transcoding between UTF-8 text and morpheme byte streams.

The pipeline has two independent layers:

1. *Decomposition*: NFKD normalization followed by rewriting every capital
   letter as the marker byte ``41`` plus its lowercase form.  This eliminates
   the byte values ``41``-``5A`` from the stream, freeing them for morpheme
   lead bytes.
2. *Merging*: a left-to-right scan that replaces the longest known morpheme
   starting at each position with its 2-4 byte codepoint.  Positions with no
   match emit their byte unchanged, so text outside the morpheme inventory
   passes through verbatim.

Decoding inverts the two layers in reverse order.  Roundtrips restore the
NFKD form of the input with capitals reinstated; NFKD-stable input (and any
input when normalization is switched off) roundtrips byte-exactly.
"""

import unicodedata

from . import codepage
from .errors import (
    DanglingMarker,
    InvalidUtf8,
    MalformedContinuation,
    TruncatedCodepoint,
    UnknownCodepoint,
)

MARKER = 0x41

# Trie nodes are plain dicts keyed by byte value; the payload (codepoint for
# a complete morpheme) hangs off this out-of-band key.
_LEAF = -1


def _to_text(data) -> str:
    if isinstance(data, str):
        return data
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(str(exc)) from None


def _marker_form(ch: str) -> bytes:
    """Decomposed-stream bytes of one post-NFKD character.

    A character is rewritten as ``41`` + lowercase only when the lowercase
    mapping is one-to-one *and* maps back to the original character, so the
    inverse rewrite is exact.  Characters like U+1E9E (uppercase sharp s,
    whose lowercase uppercases to "SS") stay as they are.
    """
    low = ch.lower()
    if low != ch and len(low) == 1 and low.upper() == ch:
        return b"\x41" + low.encode("utf-8")
    return ch.encode("utf-8")


_FORM_CACHE: dict = {}


def decompose_bytes(text, *, nfkd: bool = True) -> bytes:
    """Rewrite UTF-8 ``text`` to the decomposed byte alphabet.

    Applies NFKD (unless ``nfkd=False``), then the capital-marker rewrite.
    The output contains no bytes in ``42``-``5A``, and every ``41`` marks
    exactly one following lowercase codepoint.
    """
    s = _to_text(text)
    if nfkd:
        s = unicodedata.normalize("NFKD", s)
    cache = _FORM_CACHE
    parts = []
    for ch in s:
        form = cache.get(ch)
        if form is None:
            form = cache[ch] = _marker_form(ch)
        parts.append(form)
    return b"".join(parts)


def recompose_bytes(stream: bytes) -> bytes:
    """Inverse of the capital-marker rewrite; all other bytes pass through."""
    out = bytearray()
    i = 0
    n = len(stream)
    while i < n:
        b = stream[i]
        if b != MARKER:
            out.append(b)
            i += 1
            continue
        width = codepage.utf8_sequence_width(stream[i + 1]) if i + 1 < n else None
        if width is None or i + 1 + width > n:
            raise DanglingMarker(i)
        try:
            ch = bytes(stream[i + 1:i + 1 + width]).decode("utf-8")
        except UnicodeDecodeError:
            raise DanglingMarker(i) from None
        up = ch.upper()
        if len(up) != 1 or up == ch:
            raise DanglingMarker(i)
        out += up.encode("utf-8")
        i += 1 + width
    return bytes(out)


class MyteCodec:
    """Morpheme <-> codepoint table with longest-match encoding.

    ``entries`` is an iterable of ``(morpheme_bytes, codepoint_bytes)``.  All
    entries are decodable; an entry participates in encoding only when its
    codepoint is no longer than the morpheme it replaces (entries that would
    lengthen the stream are kept decodable for table stability but skipped by
    the encoder).  Pass ``allow_lengthening=True`` to activate them anyway.

    Instances are immutable after construction and safe for concurrent use.
    """

    def __init__(self, entries, *, allow_lengthening: bool = False):
        self.backward: dict = {}
        self._trie: dict = {}
        self.max_morpheme_len = 0
        self.n_active = 0
        for morpheme, cp in entries:
            morpheme = bytes(morpheme)
            cp = bytes(cp)
            if not morpheme:
                raise ValueError("empty morpheme in codec table")
            codepage.rank_for_codepoint(cp)  # validates lead + continuations
            if cp in self.backward and self.backward[cp] != morpheme:
                raise ValueError(f"codepoint {cp.hex()} assigned twice")
            self.backward[cp] = morpheme
            if len(cp) <= len(morpheme) or allow_lengthening:
                node = self._trie
                for b in morpheme:
                    node = node.setdefault(b, {})
                node[_LEAF] = cp
                self.n_active += 1
                if len(morpheme) > self.max_morpheme_len:
                    self.max_morpheme_len = len(morpheme)

    def __len__(self):
        return len(self.backward)

    def encode(self, text, *, nfkd: bool = True) -> bytes:
        return encode(text, self, nfkd=nfkd)

    def decode(self, data: bytes) -> bytes:
        return decode(data, self)


EMPTY_CODEC = MyteCodec(())


def encode(text, codec: MyteCodec, *, nfkd: bool = True) -> bytes:
    """Transcode UTF-8 ``text`` into a morpheme byte stream.

    The decomposed stream is scanned left to right; at each position the
    longest morpheme known to ``codec`` is replaced by its codepoint, and
    unmatched bytes are emitted unchanged.
    """
    stream = decompose_bytes(text, nfkd=nfkd)
    root = codec._trie
    if not root:
        return stream
    out = bytearray()
    i = 0
    n = len(stream)
    while i < n:
        node = root.get(stream[i])
        if node is None:
            out.append(stream[i])
            i += 1
            continue
        match = node.get(_LEAF)
        mlen = 1
        j = i + 1
        while j < n:
            node = node.get(stream[j])
            if node is None:
                break
            j += 1
            cp = node.get(_LEAF)
            if cp is not None:
                match = cp
                mlen = j - i
        if match is None:
            out.append(stream[i])
            i += 1
        else:
            out += match
            i += mlen
    return bytes(out)


def decode(data: bytes, codec: MyteCodec) -> bytes:
    """Invert :func:`encode`: expand codepoints, then restore capitals.

    Bytes that are not morpheme leads pass through untouched, so streams mix
    morpheme codepoints with raw UTF-8 freely.  Raises the structural errors
    (:class:`TruncatedCodepoint`, :class:`MalformedContinuation`,
    :class:`UnknownCodepoint`, :class:`DanglingMarker`) with byte offsets
    into ``data``.
    """
    backward = codec.backward
    out = bytearray()
    i = 0
    n = len(data)
    while i < n:
        b = data[i]
        width = codepage.myte_lead_width(b)
        if width is None:
            out.append(b)
            i += 1
            continue
        if i + width > n:
            raise TruncatedCodepoint(i)
        for k in range(i + 1, i + width):
            if not 0x80 <= data[k] <= 0xBF:
                raise MalformedContinuation(k)
        cp = bytes(data[i:i + width])
        morpheme = backward.get(cp)
        if morpheme is None:
            raise UnknownCodepoint(i)
        out += morpheme
        i += width
    return recompose_bytes(bytes(out))
