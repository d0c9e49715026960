"""Unsupervised morpheme segmentation over byte atoms, MDL style.

A lexicon (word -> corpus frequency, words already rewritten to the
decomposed byte alphabet) is segmented into a morpheme inventory by
minimizing a two-part description length.  With ``c_m`` the corpus count of
morpheme ``m``, ``M`` the total morpheme tokens, ``C`` the total word tokens,
``K`` the number of unique morphemes, ``a_b`` the per-byte atom counts over
the unique morphemes, ``A`` their total and ``P`` the number of distinct
atoms (natural logs, ``0 log 0 = 0``):

    corpus_loss  = (M+C) log(M+C) - sum_m c_m log c_m + log binom(M-1, K-1)
    lexicon_loss = (A+K) log(A+K) - K log K - sum_b a_b log a_b
                   - log(K!) + log binom(A-1, P-1)
    total_loss   = alpha * corpus_loss + lexicon_loss

``alpha`` trades corpus compression against lexicon size: the larger it is,
the more (and longer) morphemes survive.  :func:`fit_alpha` bisects it until
the inventory size lands near a target count.

Training follows the classic recursive-splitting scheme: each word starts as
a single morpheme; epochs visit the words in seeded-shuffled order, re-derive
each word's segmentation by recursively testing every binary split point, and
keep whatever minimizes the total loss.  Everything is deterministic given
(lexicon, alpha, seed).
"""

import math
import random
import warnings
from collections import Counter
from functools import cached_property
from typing import NamedTuple

from .errors import EmptyLexicon, EmptyModel, FormatError, UnreachableTargetWarning

MAX_EPOCHS = 25
EPOCH_TOL = 1e-6  # relative per-epoch improvement below which training stops
# words no longer than this get their re-segmentation picked by exhaustive
# enumeration (at most 32 candidates) instead of greedy recursive splitting
EXHAUSTIVE_WORD_LIMIT = 6
# lexicons whose joint segmentation space is at most this large are solved
# exactly instead of by coordinate descent
EXACT_JOINT_LIMIT = 1 << 18

_lgamma = math.lgamma
_log = math.log

# n log n values repeat heavily for small counts; large arguments (running
# totals) are computed directly to keep the cache bounded.
_XLOGX: dict = {0: 0.0, 1: 0.0}
_XLOGX_LIMIT = 1 << 20


def _xlogx(n):
    if n < _XLOGX_LIMIT:
        v = _XLOGX.get(n)
        if v is None:
            v = _XLOGX[n] = n * _log(n)
        return v
    return n * _log(n)


def _log_binom(n, k):
    # log of C(n, k); callers guarantee 0 <= k <= n
    return _lgamma(n + 1) - _lgamma(k + 1) - _lgamma(n - k + 1)


class MorphemeScore(NamedTuple):
    """A morpheme and the total-loss increase its removal would cause."""

    morpheme: bytes
    score: float


class SegmentationModel:
    """Morpheme inventory, per-word segmentations, and corpus counts.

    ``morpheme_counts`` maps each unique morpheme to its corpus occurrence
    count (frequency-weighted); ``word_segmentations`` maps each word to the
    ordered morphemes whose concatenation reproduces it; ``word_frequencies``
    is the training lexicon.  ``boundary_count`` is the total number of word
    tokens and defaults to the frequency sum.  Instances are treated as
    immutable once built.
    """

    def __init__(self, morpheme_counts, word_segmentations=None,
                 word_frequencies=None, alpha=1.0, boundary_count=None):
        self.morpheme_counts = dict(morpheme_counts)
        self.word_segmentations = {
            w: tuple(parts) for w, parts in (word_segmentations or {}).items()
        }
        self.word_frequencies = dict(word_frequencies or {})
        self.alpha = float(alpha)
        if boundary_count is None:
            boundary_count = sum(self.word_frequencies.values())
        self.boundary_count = int(boundary_count)

    @cached_property
    def total_tokens(self) -> int:
        return sum(self.morpheme_counts.values())

    @cached_property
    def atom_counts(self) -> Counter:
        """Per-byte counts over the unique morphemes, with multiplicity."""
        atoms = Counter()
        for m in self.morpheme_counts:
            atoms.update(m)
        return atoms

    @cached_property
    def max_morpheme_len(self) -> int:
        return max(map(len, self.morpheme_counts), default=1)

    def check(self):
        """Assert the structural invariants; used by tests and after load."""
        for w, parts in self.word_segmentations.items():
            assert b"".join(parts) == w, f"segmentation does not rebuild {w.hex()}"
            for p in parts:
                assert self.morpheme_counts.get(p, 0) >= 1, \
                    f"segment {p.hex()} missing from the inventory"
        return self


def check_lexicon(lexicon):
    """Validate a word->frequency mapping; raises on structural problems."""
    if not lexicon:
        raise EmptyLexicon("lexicon has no entries")
    for w, f in lexicon.items():
        if not isinstance(w, bytes) or not w:
            raise ValueError(f"lexicon words must be non-empty bytes, got {w!r}")
        if f < 1:
            raise ValueError(f"frequency of {w.hex()} must be >= 1, got {f}")
    return lexicon


# --- loss evaluation ---------------------------------------------------------

def corpus_loss(model: SegmentationModel) -> float:
    """Description length of the corpus given the morpheme inventory."""
    counts = model.morpheme_counts
    if not counts:
        raise EmptyModel("corpus loss of a model with no morphemes")
    m_total = sum(counts.values())
    k = len(counts)
    s = 0.0
    for c in counts.values():
        s += _xlogx(c)
    return _xlogx(m_total + model.boundary_count) - s + _log_binom(m_total - 1, k - 1)


def lexicon_loss(model: SegmentationModel) -> float:
    """Description length of the unique-morpheme inventory itself."""
    counts = model.morpheme_counts
    if not counts:
        raise EmptyModel("lexicon loss of a model with no morphemes")
    atoms = model.atom_counts
    k = len(counts)
    a_total = sum(atoms.values())
    present = len(atoms)
    s = 0.0
    for a in atoms.values():
        s += _xlogx(a)
    return (_xlogx(a_total + k) - _xlogx(k) - s - _lgamma(k + 1)
            + _log_binom(a_total - 1, present - 1))


def total_loss(model: SegmentationModel) -> float:
    """Weighted MDL objective: ``alpha * corpus_loss + lexicon_loss``."""
    return model.alpha * corpus_loss(model) + lexicon_loss(model)


# --- training ----------------------------------------------------------------

class _TrainState:
    """Morpheme counts with incrementally maintained loss terms.

    ``add``/``remove`` keep every running sum in step so :meth:`total` is
    O(1); :meth:`refresh` rebuilds the float sums from the integer counts to
    shed accumulated rounding drift (called once per epoch).
    """

    __slots__ = ("alpha", "boundaries", "counts", "m_total", "n_unique",
                 "sum_clogc", "atoms", "a_total", "n_atoms", "sum_aloga",
                 "_profiles", "_lex_cached")

    def __init__(self, alpha, boundaries):
        self.alpha = alpha
        self.boundaries = boundaries
        self.counts = {}
        self.m_total = 0
        self.n_unique = 0
        self.sum_clogc = 0.0
        self.atoms = {}
        self.a_total = 0
        self.n_atoms = 0
        self.sum_aloga = 0.0
        self._profiles = {}
        self._lex_cached = None  # lexicon loss of the current state

    def _profile(self, m):
        p = self._profiles.get(m)
        if p is None:
            p = self._profiles[m] = tuple(Counter(m).items())
        return p

    def add(self, m, f):
        counts = self.counts
        c0 = counts.get(m, 0)
        c1 = c0 + f
        counts[m] = c1
        self.m_total += f
        self.sum_clogc += _xlogx(c1) - _xlogx(c0)
        if c0 == 0:
            self.n_unique += 1
            self.a_total += len(m)
            self._lex_cached = None
            atoms = self.atoms
            delta = 0.0
            for b, mult in self._profile(m):
                a0 = atoms.get(b, 0)
                a1 = a0 + mult
                atoms[b] = a1
                delta += _xlogx(a1) - _xlogx(a0)
                if a0 == 0:
                    self.n_atoms += 1
            self.sum_aloga += delta

    def remove(self, m, f):
        counts = self.counts
        c0 = counts[m]
        c1 = c0 - f
        self.m_total -= f
        self.sum_clogc += _xlogx(c1) - _xlogx(c0)
        if c1 == 0:
            del counts[m]
            self.n_unique -= 1
            self.a_total -= len(m)
            self._lex_cached = None
            atoms = self.atoms
            delta = 0.0
            for b, mult in self._profile(m):
                a0 = atoms[b]
                a1 = a0 - mult
                if a1 == 0:
                    del atoms[b]
                    self.n_atoms -= 1
                else:
                    atoms[b] = a1
                delta += _xlogx(a1) - _xlogx(a0)
            self.sum_aloga += delta
        else:
            counts[m] = c1

    def _lexicon_part(self):
        k = self.n_unique
        a_total = self.a_total
        p = self.n_atoms
        return (_xlogx(a_total + k) - _xlogx(k) - self.sum_aloga
                - _lgamma(k + 1)
                + _lgamma(a_total) - _lgamma(p) - _lgamma(a_total - p + 1))

    def total(self):
        m_total = self.m_total
        k = self.n_unique
        corpus = (_xlogx(m_total + self.boundaries) - self.sum_clogc
                  + _lgamma(m_total) - _lgamma(k) - _lgamma(m_total - k + 1))
        lex = self._lex_cached
        if lex is None:
            lex = self._lex_cached = self._lexicon_part()
        return self.alpha * corpus + lex

    def refresh(self):
        self.sum_clogc = math.fsum(_xlogx(c) for c in self.counts.values())
        self.sum_aloga = math.fsum(_xlogx(a) for a in self.atoms.values())
        self._lex_cached = None

    def delta_loss(self, items, _xc=_XLOGX, _log=_log, _lg=_lgamma):
        """Total loss if each ``(part, amount)`` in ``items`` were added.

        Read-only equivalent of add-everything / total / remove-everything;
        the split search calls this for every candidate, so no counts are
        touched and nothing needs undoing.  Parts must be pre-merged (no
        duplicates in ``items``); atom interactions between several
        first-seen parts are tracked exactly as sequential adds would.
        """
        counts = self.counts
        xget = _xc.get
        m_total = self.m_total
        sum_clogc = self.sum_clogc
        new_parts = None
        for part, g in items:
            m_total += g
            c0 = counts.get(part, 0)
            c1 = c0 + g
            v1 = xget(c1)
            if v1 is None:
                v1 = c1 * _log(c1)
                if c1 < _XLOGX_LIMIT:
                    _xc[c1] = v1
            if c0 == 0:
                sum_clogc += v1
                if new_parts is None:
                    new_parts = [part]
                else:
                    new_parts.append(part)
            else:
                v0 = xget(c0)
                if v0 is None:
                    v0 = _xc[c0] = c0 * _log(c0)
                sum_clogc += v1 - v0
        k = self.n_unique
        if new_parts is None:
            lex = self._lex_cached
            if lex is None:
                lex = self._lex_cached = self._lexicon_part()
        else:
            atoms = self.atoms
            aget = atoms.get
            a_total = self.a_total
            n_atoms = self.n_atoms
            sum_aloga = self.sum_aloga
            pending = {} if len(new_parts) > 1 else None
            for part in new_parts:
                k += 1
                a_total += len(part)
                for b, mult in self._profile(part):
                    a0 = aget(b, 0)
                    if pending is not None:
                        prior = pending.get(b, 0)
                        a0 += prior
                        pending[b] = prior + mult
                    a1 = a0 + mult
                    v1 = xget(a1)
                    if v1 is None:
                        v1 = _xc[a1] = a1 * _log(a1)
                    if a0 == 0:
                        n_atoms += 1
                        sum_aloga += v1
                    else:
                        v0 = xget(a0)
                        if v0 is None:
                            v0 = _xc[a0] = a0 * _log(a0)
                        sum_aloga += v1 - v0
            ak = a_total + k
            lex = ((ak * _log(ak) if ak >= _XLOGX_LIMIT else _xlogx(ak))
                   - _xlogx(k) - sum_aloga - _lg(k + 1)
                   + _lg(a_total) - _lg(n_atoms) - _lg(a_total - n_atoms + 1))
        mc = m_total + self.boundaries
        corpus = (mc * _log(mc) - sum_clogc
                  + _lg(m_total) - _lg(k) - _lg(m_total - k + 1))
        return self.alpha * corpus + lex

    def resplit(self, seg, f):
        """Re-derive the best segmentation of ``seg`` (currently uncounted).

        Tests every binary split point against keeping ``seg`` whole, adopts
        the minimum, and recurses into both halves of an adopted split.  The
        chosen leaves end up counted; returns them in order.  Ties prefer no
        split, then the leftmost split point.
        """
        n = len(seg)
        if n == 1:
            self.add(seg, f)
            return [seg]
        delta_loss = self.delta_loss
        best_cost = delta_loss(((seg, f),))
        best_split = 0
        for i in range(1, n):
            left = seg[:i]
            right = seg[i:]
            items = ((left, f), (right, f)) if left != right else ((left, 2 * f),)
            cost = delta_loss(items)
            if cost < best_cost:
                best_cost = cost
                best_split = i
        if best_split == 0:
            self.add(seg, f)
            return [seg]
        parts = self.resplit(seg[:best_split], f)
        parts += self.resplit(seg[best_split:], f)
        return parts


def _parts_for_mask(word, mask):
    # bit i-1 of the mask places a boundary after byte i
    parts = []
    start = 0
    n = len(word)
    for i in range(1, n):
        if mask & (1 << (i - 1)):
            parts.append(word[start:i])
            start = i
    parts.append(word[start:])
    return parts


def _best_segmentation(state, word, f):
    """Adopt the loss-minimal segmentation of ``word`` (currently uncounted).

    Evaluates all ``2**(n-1)`` segmentations; ties keep the first in mask
    order, so no split is preferred.  Returns the adopted parts, counted.
    """
    best_cost = None
    best_mask = 0
    delta_loss = state.delta_loss
    for mask in range(1 << (len(word) - 1)):
        parts = _parts_for_mask(word, mask)
        if len(parts) == 1:
            items = ((word, f),)
        else:
            merged = {}
            for p in parts:
                merged[p] = merged.get(p, 0) + f
            items = merged.items()
        cost = delta_loss(items)
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_mask = mask
    parts = _parts_for_mask(word, best_mask)
    for p in parts:
        state.add(p, f)
    return parts


def _joint_space(lexicon):
    size = 1
    for w in lexicon:
        size <<= len(w) - 1
        if size > EXACT_JOINT_LIMIT:
            return None
    return size


def _exact_search(lexicon, alpha):
    """Global minimum by depth-first enumeration of all joint segmentations.

    Feasible only when the configuration space is small (bounded by
    ``EXACT_JOINT_LIMIT``); counts are updated incrementally so each leaf
    costs one loss evaluation.  Ties resolve to the first minimum in
    enumeration order (words sorted, split masks ascending).
    """
    words = sorted(lexicon)
    state = _TrainState(float(alpha), sum(lexicon.values()))
    options = [[tuple(_parts_for_mask(w, mask))
                for mask in range(1 << (len(w) - 1))] for w in words]
    best_loss = math.inf
    best_choice = None
    choice = [0] * len(words)
    add = state.add
    remove = state.remove

    def descend(i):
        nonlocal best_loss, best_choice
        if i == len(words):
            loss = state.total()
            if loss < best_loss:
                best_loss = loss
                best_choice = choice.copy()
            return
        f = lexicon[words[i]]
        for index, parts in enumerate(options[i]):
            for p in parts:
                add(p, f)
            choice[i] = index
            descend(i + 1)
            for p in parts:
                remove(p, f)

    descend(0)
    segmentations = {w: options[i][best_choice[i]] for i, w in enumerate(words)}
    counts = Counter()
    for w, parts in segmentations.items():
        for p in parts:
            counts[p] += lexicon[w]
    return SegmentationModel(dict(counts), segmentations, lexicon, alpha)


def train(lexicon, alpha, seed=0, progress=None) -> SegmentationModel:
    """Segment ``lexicon`` by MDL descent; deterministic given the seed.

    Each word starts unsplit.  Epochs visit the words in seeded-shuffled
    order; every visit removes the word's current counts and re-derives its
    segmentation, testing binary split points recursively (short words are
    re-derived by exhaustive enumeration instead, which searches the same
    space to the bottom).  A visit keeps the old segmentation when the
    re-derivation would raise the loss, so descent is monotone.  Training
    stops when a full epoch improves the loss by less than ``EPOCH_TOL``
    relative, or after ``MAX_EPOCHS`` epochs.

    Coordinate descent cannot coordinate moves across words, so lexicons
    whose joint segmentation space fits under ``EXACT_JOINT_LIMIT`` are
    instead solved exactly by enumeration; at that scale the result is the
    certified global minimum.  ``progress(epoch, loss)`` is called after
    every descent epoch when given.

    The descent starts from fully atomized words rather than unsplit ones:
    merging upward is always a local move (one word adopting one larger
    piece), whereas the first split inside a family of related words is
    never locally profitable, which strands the descent far above the
    morpheme counts that small loss weights should produce.
    """
    check_lexicon(lexicon)
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if _joint_space(lexicon) is not None:
        return _exact_search(lexicon, alpha)
    state = _TrainState(float(alpha), sum(lexicon.values()))
    segmentations = {}
    words = sorted(lexicon)
    for w in words:
        parts = tuple(w[i:i + 1] for i in range(len(w)))
        for p in parts:
            state.add(p, lexicon[w])
        segmentations[w] = parts
    rng = random.Random(seed)
    prev = state.total()
    for epoch in range(MAX_EPOCHS):
        rng.shuffle(words)
        for w in words:
            f = lexicon[w]
            old = segmentations[w]
            before = state.total()
            for m in old:
                state.remove(m, f)
            if len(w) <= EXHAUSTIVE_WORD_LIMIT:
                new = _best_segmentation(state, w, f)
            else:
                new = state.resplit(w, f)
            if state.total() > before:
                for m in new:
                    state.remove(m, f)
                for m in old:
                    state.add(m, f)
            else:
                segmentations[w] = tuple(new)
        state.refresh()
        cur = state.total()
        assert cur <= prev + 1e-9 * max(1.0, abs(prev)), \
            f"loss increased across epoch {epoch}: {prev} -> {cur}"
        if progress is not None:
            progress(epoch, cur)
        if prev - cur < EPOCH_TOL * max(1.0, abs(prev)):
            break
        prev = cur
    return SegmentationModel(state.counts, segmentations, lexicon, alpha)


def fit_alpha(lexicon, target: int = 4096, tol: float = 0.05, seed: int = 0,
              alpha_lo: float = 1e-4, alpha_hi: float = 1e4,
              max_probes: int = 30, progress=None):
    """Bisect the corpus-loss weight until the inventory size nears ``target``.

    Runs :func:`train` at each probe of a log-space bisection over
    ``[alpha_lo, alpha_hi]`` and returns ``(model, alpha)`` for the first
    probe whose unique-morpheme count falls within ``target * (1 +/- tol)``.
    If the endpoints do not bracket the target an
    :class:`UnreachableTargetWarning` is emitted; whenever no probe lands in
    the band, the probe closest to the target is returned.
    """
    check_lexicon(lexicon)
    if target < 1:
        raise ValueError(f"target must be >= 1, got {target}")
    band = tol * target
    probes = []

    def probe(a):
        model = train(lexicon, a, seed)
        n = len(model.morpheme_counts)
        probes.append((n, a, model))
        if progress is not None:
            progress(a, n)
        return n, model

    lo, hi = alpha_lo, alpha_hi
    n_lo, m_lo = probe(lo)
    if abs(n_lo - target) <= band:
        return m_lo, lo
    n_hi, m_hi = probe(hi)
    if abs(n_hi - target) <= band:
        return m_hi, hi

    def closest():
        n, a, model = min(probes, key=lambda p: (abs(p[0] - target), p[1]))
        return model, a

    if (n_lo < target) == (n_hi < target):
        warnings.warn(
            f"morpheme counts at the extreme weights ({n_lo} at {lo:g}, "
            f"{n_hi} at {hi:g}) do not bracket the target {target}",
            UnreachableTargetWarning, stacklevel=2)
        return closest()

    increasing = n_lo < target
    for _ in range(max_probes - 2):
        if hi / lo <= 1 + 1e-12:
            break
        mid = math.sqrt(lo * hi)
        n_mid, m_mid = probe(mid)
        if abs(n_mid - target) <= band:
            return m_mid, mid
        if (n_mid < target) == increasing:
            lo, n_lo = mid, n_mid
        else:
            hi, n_hi = mid, n_mid
        assert (n_lo < target) != (n_hi < target), "bisection lost its bracket"
    return closest()


# --- segmentation and scoring -------------------------------------------------

def _viterbi(counts, m_total, max_len, word):
    """Minimum-cost segmentation of ``word`` under unigram morpheme costs.

    A morpheme with count ``c`` costs ``-log(c / M)``; a single byte absent
    from the inventory costs ``-log(1 / (M + 1))``, so every word remains
    segmentable.  Equal-cost alternatives resolve to the longest first
    segment, then recursively within the remainder.
    """
    n = len(word)
    log_m = _log(m_total) if m_total > 0 else 0.0
    atom_cost = _log(m_total + 1)
    inf = math.inf
    best = [inf] * (n + 1)
    best[n] = 0.0
    nxt = [n + 1] * (n + 1)
    span = max(max_len, 1)
    for i in range(n - 1, -1, -1):
        best_cost = inf
        best_j = i + 1
        for j in range(i + 1, min(n, i + span) + 1):
            c = counts.get(word[i:j])
            if c:
                cost = log_m - _log(c) + best[j]
            elif j == i + 1:
                cost = atom_cost + best[j]
            else:
                continue
            if cost < best_cost or (cost == best_cost and j > best_j):
                best_cost = cost
                best_j = j
        best[i] = best_cost
        nxt[i] = best_j
    parts = []
    i = 0
    while i < n:
        parts.append(word[i:nxt[i]])
        i = nxt[i]
    return parts


def viterbi_segment(model: SegmentationModel, word: bytes):
    """Segment ``word`` against a trained model; see :func:`_viterbi`."""
    if not word:
        raise ValueError("cannot segment an empty word")
    return _viterbi(model.morpheme_counts, model.total_tokens,
                    model.max_morpheme_len, word)


def score_morphemes(model: SegmentationModel):
    """Value of every multi-byte morpheme as a total-loss delta.

    For each morpheme of byte length >= 2: hypothetically drop it from the
    inventory, re-segment every word whose segmentation uses it (Viterbi over
    the remaining morphemes plus single-byte atoms), and record how much the
    total loss rises.  The model is left untouched.  Results are sorted by
    descending score, ties by morpheme bytes.
    """
    counts = model.morpheme_counts
    freqs = model.word_frequencies
    segmentations = model.word_segmentations
    state = _TrainState(model.alpha, model.boundary_count)
    for m, c in counts.items():
        state.add(m, c)
    base = state.total()
    max_len = model.max_morpheme_len

    users = {}
    for w, parts in segmentations.items():
        for p in set(parts):
            users.setdefault(p, []).append(w)
    for wlist in users.values():
        wlist.sort()

    results = []
    for idx, m in enumerate(sorted(k for k in counts if len(k) >= 2)):
        words = users.get(m)
        if not words:
            results.append(MorphemeScore(m, 0.0))
            continue
        journal = []
        cnt = state.counts[m]
        state.remove(m, cnt)
        journal.append((m, cnt))
        resegmented = {w: _viterbi(state.counts, state.m_total, max_len, w)
                       for w in words}
        for w in words:
            f = freqs[w]
            for part in segmentations[w]:
                if part != m:
                    state.remove(part, f)
                    journal.append((part, f))
            for part in resegmented[w]:
                state.add(part, f)
                journal.append((part, -f))
        results.append(MorphemeScore(m, state.total() - base))
        for part, f in reversed(journal):
            if f > 0:
                state.add(part, f)
            else:
                state.remove(part, -f)
        if idx % 256 == 255:
            state.refresh()  # shed float drift from the apply/revert cycles
    results.sort(key=lambda r: (-r.score, r.morpheme))
    return results


# --- serialization -------------------------------------------------------------
#
# MORFESSOR-MODEL v1: one record per line, lexicographic ordering, so equal
# models serialize byte-identically.
#
#   MORFESSOR-MODEL v1 alpha=<decimal>
#   MORPH <hex-bytes> <count>
#   SEG <hex-word> <hex-m1>,<hex-m2>,... <frequency>
#
# The trailing frequency column on SEG records carries the training lexicon;
# without it the word-boundary total and rescoring weights could not be
# rebuilt from the file.

def dumps_model(model: SegmentationModel) -> str:
    lines = [f"MORFESSOR-MODEL v1 alpha={model.alpha!r}"]
    for m in sorted(model.morpheme_counts):
        lines.append(f"MORPH {m.hex()} {model.morpheme_counts[m]}")
    for w in sorted(model.word_segmentations):
        parts = ",".join(p.hex() for p in model.word_segmentations[w])
        freq = model.word_frequencies.get(w, 1)
        lines.append(f"SEG {w.hex()} {parts} {freq}")
    return "\n".join(lines) + "\n"


def loads_model(text: str) -> SegmentationModel:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty model file")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "MORFESSOR-MODEL" or head[1] != "v1" \
            or not head[2].startswith("alpha="):
        raise FormatError(f"bad model header: {lines[0]!r}")
    try:
        alpha = float(head[2][len("alpha="):])
    except ValueError:
        raise FormatError(f"bad alpha in header: {lines[0]!r}") from None
    counts = {}
    segmentations = {}
    frequencies = {}
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        try:
            if fields[0] == "MORPH":
                counts[bytes.fromhex(fields[1])] = int(fields[2])
            elif fields[0] == "SEG":
                word = bytes.fromhex(fields[1])
                parts = tuple(bytes.fromhex(h) for h in fields[2].split(","))
                frequencies[word] = int(fields[3]) if len(fields) > 3 else 1
                segmentations[word] = parts
            else:
                raise FormatError(f"line {ln}: unknown record {fields[0]!r}")
        except (ValueError, IndexError):
            raise FormatError(f"line {ln}: cannot parse {line!r}") from None
    model = SegmentationModel(counts, segmentations, frequencies, alpha)
    model.check()
    return model


def save_model(model: SegmentationModel, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_model(model))


def load_model(path) -> SegmentationModel:
    with open(path, "r", encoding="ascii") as fh:
        return loads_model(fh.read())


# MYTE-SCORES v1: the scored morpheme list for one language.

def dumps_scores(scores, language: str) -> str:
    lines = [f"MYTE-SCORES v1 lang={language}"]
    for item in scores:
        m, s = item
        lines.append(f"{bytes(m).hex()} {float(s)!r}")
    return "\n".join(lines) + "\n"


def loads_scores(text: str):
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty scores file")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "MYTE-SCORES" or head[1] != "v1" \
            or not head[2].startswith("lang="):
        raise FormatError(f"bad scores header: {lines[0]!r}")
    language = head[2][len("lang="):]
    scores = []
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        try:
            scores.append(MorphemeScore(bytes.fromhex(fields[0]), float(fields[1])))
        except (ValueError, IndexError):
            raise FormatError(f"line {ln}: cannot parse {line!r}") from None
    return language, scores


def save_scores(scores, language: str, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_scores(scores, language))


def load_scores(path):
    with open(path, "r", encoding="ascii") as fh:
        return loads_scores(fh.read())
