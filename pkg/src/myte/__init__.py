"""Morphology-driven byte codepage.

Train per-language morpheme inventories by MDL segmentation over byte atoms,
assemble them into a rearranged byte codepage, transcode UTF-8 text to and
from compact morpheme byte streams, and measure cross-lingual segmentation
equity (parity, compression, bits per pivot byte).
"""

from . import codepage, corpus, errors, inventory, metrics, morphology, transcoder
from .codepage import (
    SCRIPT_GROUPS,
    classify_byte,
    codepoint_for_rank,
    rank_for_codepoint,
    script_group_of_codepoints,
)
from .inventory import allocate, build_codec, load_table, merge_inventories, save_table
from .metrics import ParallelCorpus, aggregate, bpeb, compression, parity
from .morphology import (
    MorphemeScore,
    SegmentationModel,
    corpus_loss,
    fit_alpha,
    lexicon_loss,
    load_model,
    save_model,
    score_morphemes,
    total_loss,
    train,
    viterbi_segment,
)
from .transcoder import MyteCodec, decode, decompose_bytes, encode, recompose_bytes

__version__ = "0.1.0"

_LAZY = {"MorphemeSegmenter", "MyteTranscoder"}


def __getattr__(name):
    # the estimators pull in scikit-learn; import only on demand
    if name in _LAZY:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
