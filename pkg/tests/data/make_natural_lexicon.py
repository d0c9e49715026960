"""Regenerate the natural-text lexicon fixture.

``natural_lexicon.tsv`` is a 30,000-entry frequency lexicon of real English
prose, used by the acceptance suite to exercise inventory-size targeting on
natural word statistics.  The sandbox this project builds in has no corpus
downloads, so the prose is harvested from the documentation strings of the
local Python installation and its scientific packages: a few million tokens
of human-written English with the usual Zipfian frequency profile.

The committed file is the corpus of record; rerunning this script on a
different installation will produce a (slightly) different lexicon.

Usage: python make_natural_lexicon.py [out.tsv]
"""

import ast
import sys
from pathlib import Path

from myte import corpus as corpus_io

PACKAGES = ["numpy", "scipy", "pandas", "matplotlib", "sklearn",
            "sympy", "statsmodels", "networkx"]


def iter_docstring_lines():
    roots = [Path(f"/usr/lib/python{sys.version_info[0]}.{sys.version_info[1]}")]
    for name in PACKAGES:
        try:
            module = __import__(name)
        except ImportError:
            continue
        if getattr(module, "__file__", None):
            roots.append(Path(module.__file__).parent)
    for root in roots:
        if not root.exists():
            continue
        for py in sorted(root.rglob("*.py")):
            if "/tests/" in str(py) or "/test/" in str(py):
                continue
            try:
                tree = ast.parse(py.read_text(errors="ignore"))
            except SyntaxError:
                continue
            for node in ast.walk(tree):
                if isinstance(node, (ast.Module, ast.ClassDef,
                                     ast.FunctionDef, ast.AsyncFunctionDef)):
                    doc = ast.get_docstring(node)
                    if doc:
                        yield from doc.splitlines()


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else \
        str(Path(__file__).parent / "natural_lexicon.tsv")
    # keep word-shaped tokens only: the fixture should look like text, not
    # like identifiers or math
    def wordlike(lines):
        for line in lines:
            kept = [t for t in corpus_io.tokenize(line)
                    if all(c.isalpha() or c in "'-" for c in t)]
            if kept:
                yield " ".join(kept)

    lexicon, originals = corpus_io.build_lexicon(
        wordlike(iter_docstring_lines()), cap=30_000)
    corpus_io.save_lexicon(lexicon, originals, out)
    print(f"{len(lexicon)} entries -> {out}")


if __name__ == "__main__":
    main()
