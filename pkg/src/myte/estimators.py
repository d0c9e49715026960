"""Scikit-learn style estimators wrapping the segmentation pipeline.

Two pieces compose with standard tooling (``Pipeline``, ``clone``,
``get_params``/``set_params``):

* :class:`MorphemeSegmenter` — an unsupervised estimator: ``fit`` learns a
  morpheme inventory from raw documents, ``transform`` segments documents
  into morpheme byte sequences.
* :class:`MyteTranscoder` — a stateless transformer: ``transform`` encodes
  documents to morpheme byte streams, ``inverse_transform`` decodes them.

Both accept plain iterables of strings, like the scikit-learn text
vectorizers do.
"""

from sklearn.base import BaseEstimator, TransformerMixin

from . import corpus as corpus_io
from . import inventory as inventory_mod
from . import morphology
from .transcoder import MyteCodec, decode, decompose_bytes, encode


def check_documents(X):
    """Validate an iterable of text documents and return it as a list."""
    if isinstance(X, (str, bytes)):
        raise ValueError("expected an iterable of documents, got a single string")
    docs = list(X)
    for d in docs:
        if not isinstance(d, str):
            raise TypeError(f"documents must be str, got {type(d).__name__}")
    return docs


class MorphemeSegmenter(TransformerMixin, BaseEstimator):
    """Learn a morpheme inventory from raw text by MDL segmentation.

    Parameters mirror the pipeline defaults: when ``alpha`` is None the
    corpus-loss weight is bisected until the inventory holds about
    ``target_morphemes`` morphemes; otherwise training runs once at the
    given weight.

    Attributes after ``fit``: ``model_`` (the segmentation model),
    ``alpha_``, ``n_morphemes_``.
    """

    def __init__(self, target_morphemes=4096, alpha=None, alpha_tol=0.05,
                 lexicon_cap=corpus_io.DEFAULT_CAP, seed=0):
        self.target_morphemes = target_morphemes
        self.alpha = alpha
        self.alpha_tol = alpha_tol
        self.lexicon_cap = lexicon_cap
        self.seed = seed

    def fit(self, X, y=None):
        docs = check_documents(X)
        lexicon, _ = corpus_io.build_lexicon(docs, cap=self.lexicon_cap)
        if self.alpha is None:
            self.model_, self.alpha_ = morphology.fit_alpha(
                lexicon, target=self.target_morphemes, tol=self.alpha_tol,
                seed=self.seed)
        else:
            self.model_ = morphology.train(lexicon, self.alpha, seed=self.seed)
            self.alpha_ = float(self.alpha)
        self.n_morphemes_ = len(self.model_.morpheme_counts)
        return self

    def segment_word(self, word: str):
        """Morpheme byte sequences of one word (decomposed alphabet)."""
        self._check_fitted()
        key = decompose_bytes(word)
        found = self.model_.word_segmentations.get(key)
        if found is not None:
            return list(found)
        return morphology.viterbi_segment(self.model_, key)

    def transform(self, X):
        """Segment each document into a flat list of morpheme byte strings."""
        self._check_fitted()
        docs = check_documents(X)
        out = []
        for doc in docs:
            parts = []
            for token in corpus_io.tokenize(doc):
                parts.extend(self.segment_word(token))
            out.append(parts)
        return out

    def score_morphemes(self):
        self._check_fitted()
        return morphology.score_morphemes(self.model_)

    def _check_fitted(self):
        if not hasattr(self, "model_"):
            raise RuntimeError("MorphemeSegmenter is not fitted yet")


class MyteTranscoder(TransformerMixin, BaseEstimator):
    """Encode documents to morpheme byte streams (and back).

    ``table`` is a codepoint table path, an allocated
    :class:`~myte.inventory.MultilingualInventory`, or a ready
    :class:`~myte.transcoder.MyteCodec`.  ``transform`` maps str -> bytes;
    ``inverse_transform`` maps bytes -> str.
    """

    def __init__(self, table=None, nfkd=True, allow_lengthening=False):
        self.table = table
        self.nfkd = nfkd
        self.allow_lengthening = allow_lengthening

    def fit(self, X=None, y=None):
        self.codec_ = self._build_codec()
        return self

    def _build_codec(self) -> MyteCodec:
        table = self.table
        if table is None:
            return MyteCodec(())
        if isinstance(table, MyteCodec):
            return table
        if isinstance(table, inventory_mod.MultilingualInventory):
            return inventory_mod.build_codec(
                table, allow_lengthening=self.allow_lengthening)
        return inventory_mod.build_codec(
            inventory_mod.load_table(table),
            allow_lengthening=self.allow_lengthening)

    def _codec(self) -> MyteCodec:
        if not hasattr(self, "codec_"):
            self.fit()
        return self.codec_

    def transform(self, X):
        codec = self._codec()
        return [encode(doc, codec, nfkd=self.nfkd)
                for doc in check_documents(X)]

    def inverse_transform(self, X):
        codec = self._codec()
        return [decode(bytes(data), codec).decode("utf-8") for data in X]
