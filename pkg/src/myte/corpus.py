"""Lexicon construction from raw corpora and word lists.

The preparation pipeline: tokenize the corpus on Unicode whitespace with
leading/trailing punctuation and symbols stripped, count frequencies (or take
an externally supplied word list and count its words in the corpus, with a
floor of one), drop words that also appear in an English word list, clip to
the most frequent ``cap`` entries, and rewrite every surviving word to the
decomposed byte alphabet the segmenter trains on.
"""

import codecs
import unicodedata
import warnings
from pathlib import Path

from .errors import EmptyCorpus, FormatError
from .transcoder import decompose_bytes

DEFAULT_CAP = 30_000

# Decoder error handler that skips invalid byte runs but keep count of them.
_dropped_sequences = 0


def _count_and_skip(err):
    global _dropped_sequences
    _dropped_sequences += 1
    return "", err.end


codecs.register_error("myte-drop-count", _count_and_skip)


def iter_corpus_lines(path):
    """Yield text lines from a corpus file or a directory of ``.txt`` files.

    Invalid UTF-8 byte runs are dropped; a single warning with their count is
    emitted at the end of iteration.
    """
    global _dropped_sequences
    path = Path(path)
    files = sorted(path.glob("*.txt")) if path.is_dir() else [path]
    before = _dropped_sequences
    for f in files:
        with open(f, "r", encoding="utf-8", errors="myte-drop-count") as fh:
            yield from fh
    dropped = _dropped_sequences - before
    if dropped:
        warnings.warn(f"dropped {dropped} invalid UTF-8 sequences from {path}")


def _strip_token(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start])[0] in "PS":
        start += 1
    while end > start and unicodedata.category(token[end - 1])[0] in "PS":
        end -= 1
    return token[start:end]


def tokenize(line: str):
    """Whitespace-split with outer punctuation/symbol characters stripped."""
    for token in line.split():
        token = _strip_token(token)
        if token:
            yield token


def read_wordlist(path):
    """One word per line; two-column bilingual files contribute column one."""
    words = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            cols = line.split()
            if cols:
                words.append(cols[0])
    return words


def build_lexicon(corpus_lines, external_wordlist=None, english_wordlist=None,
                  cap: int = DEFAULT_CAP):
    """Build a decomposed-byte lexicon from a corpus line stream.

    Returns ``(lexicon, originals)`` where ``lexicon`` maps decomposed word
    bytes to frequency and ``originals`` maps them back to the (first seen)
    surface form.  When ``external_wordlist`` is given its words become the
    lexicon keys and the corpus only supplies their frequencies (floor 1, so
    absent words still survive training).  Words equal to an
    ``english_wordlist`` entry are removed.  Entries are clipped to the
    ``cap`` most frequent (ties broken lexicographically) before
    decomposition.
    """
    token_counts = {}
    n_tokens = 0
    for line in corpus_lines:
        for token in tokenize(line):
            n_tokens += 1
            token_counts[token] = token_counts.get(token, 0) + 1
    if n_tokens == 0:
        raise EmptyCorpus("corpus yielded no tokens")

    if external_wordlist is not None:
        entries = {w: max(token_counts.get(w, 0), 1) for w in external_wordlist}
    else:
        entries = token_counts
    if english_wordlist:
        english = set(english_wordlist)
        entries = {w: f for w, f in entries.items() if w not in english}

    ranked = sorted(entries.items(),
                    key=lambda item: (-item[1], item[0].encode("utf-8")))
    ranked = ranked[:cap]

    lexicon = {}
    originals = {}
    for word, freq in ranked:
        key = decompose_bytes(word)
        if not key:
            continue
        if key in lexicon:
            lexicon[key] += freq  # distinct surface forms can NFKD-collide
        else:
            lexicon[key] = freq
            originals[key] = word
    return lexicon, originals


# Lexicon files: one entry per line, `<hex-decomposed-bytes> TAB <frequency>
# TAB <original word>`, in clipping order (frequency desc, ties by word).

def dumps_lexicon(lexicon, originals=None) -> str:
    originals = originals or {}
    lines = []
    order = sorted(lexicon.items(), key=lambda kv: (-kv[1], kv[0]))
    for key, freq in order:
        surface = originals.get(key) or key.decode("utf-8", "replace")
        lines.append(f"{key.hex()}\t{freq}\t{surface}")
    return "\n".join(lines) + "\n"


def loads_lexicon(text: str):
    lexicon = {}
    originals = {}
    for ln, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise FormatError(f"lexicon line {ln}: expected tab-separated fields")
        try:
            key = bytes.fromhex(fields[0])
            freq = int(fields[1])
        except ValueError:
            raise FormatError(f"lexicon line {ln}: cannot parse {line!r}") from None
        lexicon[key] = freq
        if len(fields) > 2:
            originals[key] = fields[2]
    return lexicon, originals


def save_lexicon(lexicon, originals, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_lexicon(lexicon, originals))


def load_lexicon(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_lexicon(fh.read())
