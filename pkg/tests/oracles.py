"""Independent reference implementations used to check the package.

Everything here is written directly from the defining formulas, using exact
integer combinatorics (``math.comb``/``math.factorial``) instead of the
package's incremental lgamma-based evaluation, and exhaustive enumeration
instead of dynamic programming or greedy search.  Nothing imports the code
under test.
"""

import itertools
import math
from collections import Counter


def corpus_loss_direct(counts, boundaries):
    """(M+C) log(M+C) - sum c log c + log C(M-1, K-1), natural logs."""
    m_total = sum(counts.values())
    k = len(counts)
    value = (m_total + boundaries) * math.log(m_total + boundaries)
    for c in counts.values():
        if c > 0:
            value -= c * math.log(c)
    value += math.log(math.comb(m_total - 1, k - 1))
    return value


def lexicon_loss_direct(counts):
    """(A+K) log(A+K) - K log K - sum a log a - log K! + log C(A-1, P-1)."""
    k = len(counts)
    atoms = Counter()
    for m in counts:
        atoms.update(m)
    a_total = sum(atoms.values())
    p = len(atoms)
    value = (a_total + k) * math.log(a_total + k)
    if k > 1:
        value -= k * math.log(k)
    for a in atoms.values():
        if a > 1:
            value -= a * math.log(a)
    value -= math.log(math.factorial(k))
    value += math.log(math.comb(a_total - 1, p - 1))
    return value


def total_loss_direct(counts, boundaries, alpha):
    return alpha * corpus_loss_direct(counts, boundaries) + lexicon_loss_direct(counts)


def all_segmentations(word):
    """Every split of ``word`` into non-empty contiguous byte parts."""
    n = len(word)
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        start = 0
        for i in range(1, n):
            if mask & (1 << (i - 1)):
                parts.append(word[start:i])
                start = i
        parts.append(word[start:])
        out.append(tuple(parts))
    return out


def counts_for(segmentation_choice, lexicon):
    """Morpheme counts induced by one segmentation per lexicon word."""
    counts = Counter()
    for word, parts in segmentation_choice.items():
        for part in parts:
            counts[part] += lexicon[word]
    return dict(counts)


def brute_force_min(lexicon, alpha):
    """Global minimum of the total loss over all joint segmentations."""
    words = sorted(lexicon)
    boundaries = sum(lexicon.values())
    options = [all_segmentations(w) for w in words]
    best = math.inf
    best_choice = None
    for combo in itertools.product(*options):
        counts = Counter()
        for word, parts in zip(words, combo):
            f = lexicon[word]
            for part in parts:
                counts[part] += f
        loss = total_loss_direct(counts, boundaries, alpha)
        if loss < best:
            best = loss
            best_choice = dict(zip(words, combo))
    return best, best_choice


def codepoint_direct(group, rank):
    """Tiered base-64 expansion, written independently of the package."""
    if rank < 64:
        lead = 0x42 + group
        digits = [rank]
        width = 2
    elif rank < 64 + 64**2:
        lead = 0x4A + group
        r = rank - 64
        digits = [r // 64, r % 64]
        width = 3
    else:
        lead = 0x52 + group
        r = rank - 64 - 64**2
        digits = [r // 64**2, (r // 64) % 64, r % 64]
        width = 4
    seq = bytes([lead] + [0x80 + d for d in digits])
    assert len(seq) == width
    return seq


def viterbi_direct(counts, m_total, word):
    """Enumerate all segmentations, score them, apply the tie-break.

    Cost of a known morpheme with count c is -log(c/M); unknown single bytes
    cost -log(1/(M+1)); unknown longer spans are infeasible.  Ties prefer
    the longest first segment, then recursively.
    """
    best = None
    for parts in all_segmentations(word):
        cost = 0.0
        feasible = True
        for part in parts:
            c = counts.get(part)
            if c:
                cost += math.log(m_total) - math.log(c)
            elif len(part) == 1:
                cost += math.log(m_total + 1)
            else:
                feasible = False
                break
        if not feasible:
            continue
        key = (cost, tuple(-len(p) for p in parts))
        if best is None or key < best[0]:
            best = (key, parts)
    return list(best[1])
