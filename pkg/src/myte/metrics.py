"""Cross-lingual segmentation equity measurements.

Given a multi-parallel corpus, every language is measured against a pivot
language (English by default):

* *parity*: encoded length of sentence i in language l divided by the pivot's
  encoded length of the same sentence, under a chosen segmenter (UTF-8
  bytes, characters, or a morpheme codec);
* *compression*: percentage by which the morpheme encoding is shorter than
  the UTF-8 bytes of the same sentence;
* *BPEB* (bits per English byte): total base-2 surprisal of a sentence's
  prediction stream, normalized by the pivot sentence's UTF-8 byte count
  plus one, so scores are comparable across languages and encodings.  The
  probabilities come from an external model; this module only normalizes.

Per-language values are per-sentence arithmetic means; group aggregates are
unweighted means of the per-language means.
"""

import csv
import warnings
from dataclasses import dataclass, field

from .errors import (
    LengthMismatch,
    MissingPivot,
    PositiveLogProb,
    UnlabeledLanguage,
)
from .transcoder import MyteCodec, encode

SEGMENTER_KINDS = ("utf8", "chars", "myte")


@dataclass
class ParallelCorpus:
    """Sentence-aligned corpus: ``sentences[lang][i]`` are mutually parallel."""

    sentences: dict
    pivot: str = "en"

    def __post_init__(self):
        if self.pivot not in self.sentences:
            raise MissingPivot(f"pivot language {self.pivot!r} not in corpus")
        n = len(self.sentences[self.pivot])
        for lang, sents in self.sentences.items():
            if len(sents) != n:
                raise LengthMismatch(
                    f"{lang} has {len(sents)} sentences, pivot has {n}")

    @property
    def n_sentences(self):
        return len(self.sentences[self.pivot])

    @property
    def languages(self):
        return list(self.sentences)


def make_segmenter(kind, codec: MyteCodec | None = None, *, nfkd: bool = True):
    """Return a sentence -> encoded-length function.

    ``kind`` is one of ``utf8`` (byte count), ``chars`` (codepoint count) or
    ``myte`` (morpheme-encoded byte count, requires ``codec``); a
    :class:`MyteCodec` or a callable may be passed directly.
    """
    if callable(kind):
        return kind
    if isinstance(kind, MyteCodec):
        codec, kind = kind, "myte"
    if kind == "utf8":
        return lambda s: len(s.encode("utf-8"))
    if kind == "chars":
        return len
    if kind == "myte":
        if codec is None:
            raise ValueError("the myte segmenter needs a codec")
        return lambda s: len(encode(s, codec, nfkd=nfkd))
    raise ValueError(f"unknown segmenter kind {kind!r}")


@dataclass
class ParityReport:
    """Per-sentence lengths and parities for one segmenter over one corpus."""

    pivot: str
    segmenter: str
    lengths: dict            # lang -> [int] per sentence
    parities: dict           # lang -> [float] per kept sentence
    skipped_sentences: int   # sentences dropped for a zero-length pivot

    @property
    def languages(self):
        return list(self.lengths)

    def mean_length(self, lang):
        vals = self.lengths[lang]
        return sum(vals) / len(vals) if vals else 0.0

    def mean_parity(self, lang):
        vals = self.parities[lang]
        return sum(vals) / len(vals) if vals else 0.0


def parity(segmenter, corpus: ParallelCorpus, codec: MyteCodec | None = None,
           *, nfkd: bool = True) -> ParityReport:
    """Per-sentence length ratios of every language against the pivot."""
    length_of = make_segmenter(segmenter, codec, nfkd=nfkd)
    pivot_lengths = [length_of(s) for s in corpus.sentences[corpus.pivot]]
    keep = [i for i, n in enumerate(pivot_lengths) if n > 0]
    skipped = len(pivot_lengths) - len(keep)
    if skipped:
        warnings.warn(f"skipped {skipped} sentences with zero-length pivot")
    lengths = {}
    parities = {}
    for lang in corpus.sentences:
        lens = [length_of(s) for s in corpus.sentences[lang]]
        lengths[lang] = lens
        parities[lang] = [lens[i] / pivot_lengths[i] for i in keep]
    name = segmenter if isinstance(segmenter, str) else "myte"
    return ParityReport(corpus.pivot, name, lengths, parities, skipped)


def compression(sentences, codec: MyteCodec, *, nfkd: bool = True):
    """Percent shrinkage of each sentence: ``100 * (1 - myte/utf8)``.

    Returns ``(per_sentence, mean)``.  Empty sentences contribute 0 and are
    excluded from the mean.
    """
    per_sentence = []
    kept = []
    for s in sentences:
        raw = len(s.encode("utf-8"))
        if raw == 0:
            per_sentence.append(0.0)
            continue
        value = 100.0 * (1.0 - len(encode(s, codec, nfkd=nfkd)) / raw)
        per_sentence.append(value)
        kept.append(value)
    mean = sum(kept) / len(kept) if kept else 0.0
    return per_sentence, mean


def bpeb_sentence(logprobs, pivot_utf8_len: int) -> float:
    """Bits per pivot byte of one sentence.

    ``logprobs`` holds one base-2 log-probability per prediction event (each
    byte of the sequence plus one end-of-sequence event); the normalizer is
    the pivot sentence's UTF-8 byte count plus one.
    """
    total = 0.0
    for lp in logprobs:
        if lp > 0:
            raise PositiveLogProb(f"log-probability {lp} is positive")
        total += lp
    return -total / (pivot_utf8_len + 1)


def bpeb(logprobs_per_language, pivot_utf8_lengths):
    """Mean BPEB per language.

    ``logprobs_per_language`` maps language -> list of per-sentence log-prob
    sequences; every list must align with ``pivot_utf8_lengths``.
    """
    means = {}
    n = len(pivot_utf8_lengths)
    for lang, streams in logprobs_per_language.items():
        if len(streams) != n:
            raise LengthMismatch(
                f"{lang} has {len(streams)} log-prob streams, expected {n}")
        values = [bpeb_sentence(lp, plen)
                  for lp, plen in zip(streams, pivot_utf8_lengths)]
        means[lang] = sum(values) / len(values) if values else 0.0
    return means


# --- aggregation ----------------------------------------------------------------

@dataclass(frozen=True)
class LanguageLabel:
    """Script class (latin/nonlatin), resource class (hr/lr), seen status."""

    script: str    # "latin" | "nonlatin"
    resource: str  # "hr" | "lr"
    seen: str      # "seen" | "unseen_language" | "unseen_script"


#: summary rows, in output order
GROUP_ROWS = ("latin hr", "latin lr", "nonlatin hr", "nonlatin lr",
              "seen", "unseen_language", "unseen_script", "unseen")


def aggregate(per_language, labels, pivot=None):
    """Group means of per-language metric rows.

    ``per_language`` maps language -> {metric: value}; ``labels`` maps
    language -> :class:`LanguageLabel`.  The pivot language, when given, is
    reported as its own row and excluded from the groups.  Every other
    language must be labeled.  Returns ``[(row_name, n_languages, means)]``.
    """
    rows = {name: [] for name in GROUP_ROWS}
    out = []
    if pivot is not None and pivot in per_language:
        out.append((pivot, 1, dict(per_language[pivot])))
    for lang in sorted(per_language):
        if lang == pivot:
            continue
        label = labels.get(lang)
        if label is None:
            raise UnlabeledLanguage(f"no group label for language {lang!r}")
        metrics = per_language[lang]
        if label.seen == "seen":
            rows[f"{label.script} {label.resource}"].append(metrics)
            rows["seen"].append(metrics)
        else:
            rows[label.seen].append(metrics)
            rows["unseen"].append(metrics)
    for name in GROUP_ROWS:
        members = rows[name]
        if not members:
            continue
        keys = sorted({k for m in members for k in m if m[k] is not None})
        means = {k: sum(m[k] for m in members if m.get(k) is not None)
                    / sum(1 for m in members if m.get(k) is not None)
                 for k in keys}
        out.append((name, len(members), means))
    return out


# --- report assembly and CSV output ------------------------------------------------

REPORT_COLUMNS = ("language", "n_sentences", "mean_utf8_len", "mean_myte_len",
                  "mean_parity_utf8", "mean_parity_myte",
                  "mean_compression_pct", "mean_bpeb")


@dataclass
class EquityReport:
    """Everything the parity command computes, ready for CSV output."""

    pivot: str
    utf8: ParityReport
    myte: ParityReport
    compression_means: dict
    bpeb_means: dict = field(default_factory=dict)

    def language_row(self, lang):
        return {
            "n_sentences": len(self.utf8.lengths[lang]),
            "mean_utf8_len": self.utf8.mean_length(lang),
            "mean_myte_len": self.myte.mean_length(lang),
            "mean_parity_utf8": self.utf8.mean_parity(lang),
            "mean_parity_myte": self.myte.mean_parity(lang),
            "mean_compression_pct": self.compression_means.get(lang),
            "mean_bpeb": self.bpeb_means.get(lang),
        }

    def rows(self):
        return {lang: self.language_row(lang) for lang in sorted(self.utf8.lengths)}


def measure(corpus: ParallelCorpus, codec: MyteCodec,
            logprobs_per_language=None, *, nfkd: bool = True) -> EquityReport:
    """Run parity (both segmenters), compression, and optional BPEB."""
    utf8_report = parity("utf8", corpus)
    myte_report = parity("myte", corpus, codec, nfkd=nfkd)
    comp = {}
    for lang, sents in corpus.sentences.items():
        _, comp[lang] = compression(sents, codec, nfkd=nfkd)
    bpeb_means = {}
    if logprobs_per_language:
        pivot_lengths = [len(s.encode("utf-8"))
                         for s in corpus.sentences[corpus.pivot]]
        bpeb_means = bpeb(logprobs_per_language, pivot_lengths)
    return EquityReport(corpus.pivot, utf8_report, myte_report, comp, bpeb_means)


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def write_report_csv(report: EquityReport, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_COLUMNS)
        for lang, row in report.rows().items():
            writer.writerow([lang] + [_fmt(row[c]) for c in REPORT_COLUMNS[1:]])


def write_summary_csv(report: EquityReport, labels, path):
    grouped = aggregate(report.rows(), labels, pivot=report.pivot)
    columns = ("group", "n_languages") + REPORT_COLUMNS[2:]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        for name, n, means in grouped:
            writer.writerow([name, n] + [_fmt(means.get(c)) for c in columns[2:]])
