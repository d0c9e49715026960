"""Command-line surface for the full pipeline.

Subcommands:

* ``train``        corpus -> segmentation model + scored morpheme list
* ``build-codec``  models -> merged, allocated codepoint table
* ``encode``       UTF-8 in, morpheme byte stream out
* ``decode``       morpheme byte stream in, UTF-8 out
* ``parity``       parallel corpus -> per-language and grouped equity CSVs

Diagnostics go to stderr, data to stdout or the named files.  All randomness
flows from ``--seed``; identical inputs and flags produce byte-identical
outputs.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus as corpus_io
from . import inventory as inventory_mod
from . import metrics as metrics_mod
from . import morphology
from .errors import MyteError
from .transcoder import decode as myte_decode
from .transcoder import encode as myte_encode

SCORES_SUFFIX = ".scores"


@dataclass
class Config:
    target_morphemes: int = 4096
    alpha_tolerance: float = 0.05
    lexicon_cap: int = corpus_io.DEFAULT_CAP
    seed: int = 0
    nfkd: bool = True
    allow_lengthening: bool = False
    pivot: str = "en"

    def __post_init__(self):
        if self.target_morphemes < 1 or self.lexicon_cap < 1:
            raise ValueError("target and cap must be positive")
        if not 0 < self.alpha_tolerance < 1:
            raise ValueError("alpha tolerance must lie in (0, 1)")


def _config_from(args) -> Config:
    return Config(
        target_morphemes=args.target_morphemes,
        alpha_tolerance=args.alpha_tol,
        lexicon_cap=args.lexicon_cap,
        seed=args.seed,
        nfkd=not args.no_nfkd,
        allow_lengthening=args.allow_lengthening,
        pivot=getattr(args, "pivot", "en"),
    )


def _err(message):
    print(message, file=sys.stderr)


def cmd_train(args) -> int:
    cfg = _config_from(args)
    wordlist = corpus_io.read_wordlist(args.wordlist) if args.wordlist else None
    english = (corpus_io.read_wordlist(args.english_wordlist)
               if args.english_wordlist else None)
    lines = corpus_io.iter_corpus_lines(args.corpus)
    lexicon, originals = corpus_io.build_lexicon(
        lines, wordlist, english, cap=cfg.lexicon_cap)
    if args.lexicon_out:
        corpus_io.save_lexicon(lexicon, originals, args.lexicon_out)
    _err(f"lexicon: {len(lexicon)} entries")

    def progress(alpha, count):
        _err(f"alpha={alpha:.6g} -> {count} morphemes")

    model, alpha = morphology.fit_alpha(
        lexicon, target=cfg.target_morphemes, tol=cfg.alpha_tolerance,
        seed=cfg.seed, progress=progress)
    morphology.save_model(model, args.out)
    scores = morphology.score_morphemes(model)
    language = args.lang or Path(args.corpus).stem
    morphology.save_scores(scores, language, str(args.out) + SCORES_SUFFIX)
    _err(f"morphemes: {len(model.morpheme_counts)}  alpha: {alpha!r}  "
         f"loss: {morphology.total_loss(model):.6f}")
    return 0


def cmd_build_codec(args) -> int:
    per_language = {}
    for model_path in args.models:
        scores_path = Path(str(model_path) + SCORES_SUFFIX)
        if scores_path.exists():
            language, scores = morphology.load_scores(scores_path)
        else:
            model = morphology.load_model(model_path)
            language = Path(model_path).stem
            scores = morphology.score_morphemes(model)
        if language in per_language:
            per_language[language].extend(scores)
        else:
            per_language[language] = list(scores)
    merged = inventory_mod.merge_inventories(per_language)
    table = inventory_mod.allocate(merged)
    inventory_mod.save_table(table, args.out)
    sizes = table.group_sizes()
    for group, size in sizes.items():
        free = inventory_mod.codepage.GROUP_CAPACITY - size
        _err(f"group {group}: {size} morphemes, {free} codepoints free")
    _err(f"total: {sum(sizes.values())} entries")
    return 0


def _read_stream(path) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_stream(path, data: bytes):
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def cmd_encode(args) -> int:
    cfg = _config_from(args)
    codec = inventory_mod.build_codec(
        inventory_mod.load_table(args.table),
        allow_lengthening=cfg.allow_lengthening)
    _write_stream(args.output, myte_encode(_read_stream(args.input), codec,
                                           nfkd=cfg.nfkd))
    return 0


def cmd_decode(args) -> int:
    cfg = _config_from(args)
    codec = inventory_mod.build_codec(
        inventory_mod.load_table(args.table),
        allow_lengthening=cfg.allow_lengthening)
    _write_stream(args.output, myte_decode(_read_stream(args.input), codec))
    return 0


def _load_parallel_dir(directory, pivot):
    sentences = {}
    for path in sorted(Path(directory).glob("*.txt")):
        sentences[path.stem] = path.read_text(encoding="utf-8").splitlines()
    if not sentences:
        raise MyteError(f"no .txt corpus files in {directory}")
    return metrics_mod.ParallelCorpus(sentences, pivot=pivot)


def _load_labels(path):
    labels = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = [f.strip() for f in line.split(",")]
            if len(fields) != 4:
                raise MyteError(
                    f"labels line {line!r}: expected lang,script,resource,seen")
            labels[fields[0]] = metrics_mod.LanguageLabel(
                script=fields[1], resource=fields[2], seen=fields[3])
    return labels


def _load_logprobs(directory, languages):
    streams = {}
    for lang in languages:
        path = Path(directory) / f"{lang}.txt"
        if not path.exists():
            continue
        with open(path, "r", encoding="utf-8") as fh:
            streams[lang] = [[float(tok) for tok in line.split()]
                             for line in fh]
    return streams


def cmd_parity(args) -> int:
    cfg = _config_from(args)
    codec = inventory_mod.build_codec(
        inventory_mod.load_table(args.table),
        allow_lengthening=cfg.allow_lengthening)
    corpus = _load_parallel_dir(args.corpus_dir, cfg.pivot)
    logprobs = (_load_logprobs(args.logprob_dir, corpus.languages)
                if args.logprob_dir else None)
    report = metrics_mod.measure(corpus, codec, logprobs, nfkd=cfg.nfkd)
    metrics_mod.write_report_csv(report, args.out)
    summary_path = args.summary_out or str(Path(args.out).with_suffix("")) + "_summary.csv"
    labels = _load_labels(args.groups) if args.groups else {}
    metrics_mod.write_summary_csv(report, labels, summary_path)
    _err(f"wrote {args.out} and {summary_path}")
    return 0


def _add_common(parser):
    parser.add_argument("--target-morphemes", type=int, default=4096)
    parser.add_argument("--alpha-tol", type=float, default=0.05)
    parser.add_argument("--lexicon-cap", type=int, default=corpus_io.DEFAULT_CAP)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--no-nfkd", action="store_true",
                        help="skip NFKD normalization (fully bijective mode)")
    parser.add_argument("--allow-lengthening", action="store_true",
                        help="encode with codepoints longer than their morphemes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="myte",
        description="morphology-driven byte transcoding pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a morpheme inventory on a corpus")
    p.add_argument("corpus", help="text file or directory of .txt files")
    p.add_argument("--out", required=True, help="model output path")
    p.add_argument("--wordlist", help="external word list (first column used)")
    p.add_argument("--english-wordlist",
                   help="words identical to these entries are removed")
    p.add_argument("--lang", help="language tag for the scored morpheme list")
    p.add_argument("--lexicon-out", help="also write the built lexicon here")
    _add_common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("build-codec", help="merge models into a codepoint table")
    p.add_argument("models", nargs="+", help="model files from `myte train`")
    p.add_argument("--out", required=True, help="table output path")
    _add_common(p)
    p.set_defaults(func=cmd_build_codec)

    p = sub.add_parser("encode", help="UTF-8 to morpheme byte stream")
    p.add_argument("--table", required=True)
    p.add_argument("--input", default="-", help="input file (default stdin)")
    p.add_argument("--output", default="-", help="output file (default stdout)")
    _add_common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="morpheme byte stream to UTF-8")
    p.add_argument("--table", required=True)
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    _add_common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("parity", help="equity metrics over a parallel corpus")
    p.add_argument("--table", required=True)
    p.add_argument("--corpus-dir", required=True,
                   help="one <lang>.txt per language, aligned by line")
    p.add_argument("--groups", help="labels CSV: lang,script,resource,seen")
    p.add_argument("--out", required=True, help="per-language CSV path")
    p.add_argument("--summary-out", help="grouped CSV path")
    p.add_argument("--logprob-dir",
                   help="per-language base-2 log-probability files")
    p.add_argument("--pivot", default="en")
    _add_common(p)
    p.set_defaults(func=cmd_parity)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MyteError as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return 1
    except OSError as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
