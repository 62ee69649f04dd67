"""Set partitions in canonical word form (restricted growth strings).

A partition of [n] is stored as the word whose i-th letter is the index of
the block containing i, blocks being numbered in order of their minima.
These words are exactly the restricted growth strings: the first letter is 1
and every letter exceeds the maximum of the letters before it by at most one.
"""

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DEFAULT_LIMIT, InvalidObjectError, LimitExceededError


class SetPartition:
    """An immutable set partition of [n] in canonical word form.

    The empty word represents the partition of the empty set; it is a valid
    value but lies outside the domain of the path bijections.
    """

    __slots__ = ("word",)

    def __init__(self, word=()):
        word = tuple(word)
        mx = 0
        for i, c in enumerate(word):
            if not isinstance(c, int) or c < 1:
                raise InvalidObjectError(
                    f"letter at position {i + 1} is not a positive integer: {c!r}"
                )
            if c > mx + 1:
                raise InvalidObjectError(
                    f"restricted-growth violation at position {i + 1}: "
                    f"{c} exceeds previous maximum {mx} by more than one"
                )
            if c > mx:
                mx = c
        self.word = word

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return len(self.word)

    @property
    def block_count(self) -> int:
        return max(self.word) if self.word else 0

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other):
        if isinstance(other, SetPartition):
            return self.word == other.word
        return NotImplemented

    def __hash__(self):
        return hash(self.word)

    def __str__(self):
        return ",".join(str(c) for c in self.word)

    def __repr__(self):
        return f"SetPartition({self.word!r})"


def parse_partition(text: str) -> SetPartition:
    """Parse a partition word.

    Accepts comma-separated decimal block indices, or a contiguous digit
    string when every index is a single digit (so "1,1,2" and "112" name the
    same partition).  The empty string parses to the empty partition.
    """
    text = text.strip()
    if not text:
        return SetPartition()
    if "," in text:
        letters = []
        for i, token in enumerate(text.split(",")):
            token = token.strip()
            if not token.isdecimal():
                raise InvalidObjectError(
                    f"syntax error in partition at token {i + 1}: {token!r}"
                )
            letters.append(int(token))
    else:
        if not text.isdecimal():
            raise InvalidObjectError(f"syntax error in partition: {text!r}")
        letters = [int(ch) for ch in text]
    return SetPartition(letters)


def generate_partitions(n: int, limit: int = DEFAULT_LIMIT) -> Iterator[SetPartition]:
    """Yield every set partition of [n] exactly once, in lexicographic order
    of its canonical word."""
    if n < 0:
        raise InvalidObjectError("partition size must be non-negative")
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the exhaustive limit {limit}")
    if n == 0:
        yield SetPartition()
        return
    word = [1] * n

    def rec(i: int, mx: int) -> Iterator[SetPartition]:
        if i == n:
            yield SetPartition(word)
            return
        for c in range(1, mx + 2):
            word[i] = c
            yield from rec(i + 1, mx if c <= mx else c)

    yield from rec(1, 1)


def find_pattern(p: SetPartition, pattern: SetPartition) -> Optional[tuple]:
    """Return 0-based positions of one occurrence of ``pattern`` in ``p``,
    or None if there is none.

    An occurrence is a subsequence s with s_a = s_b exactly when the pattern
    letters at a and b are equal and s_a < s_b exactly when they are in that
    order.  Plain depth-first search over positions, pruned on remaining
    length; this is the containment oracle, so clarity beats speed.
    """
    word, pat = p.word, pattern.word
    n, k = len(word), len(pat)
    if k == 0:
        return ()
    if k > n:
        return None
    kk = max(pat)
    assign = [0] * (kk + 1)  # pattern letter -> matched word letter, 0 = free
    pos = [0] * k

    def rec(pi: int, wi: int) -> bool:
        if pi == k:
            return True
        t = pat[pi]
        bound = assign[t]
        for j in range(wi, n - (k - pi) + 1):
            c = word[j]
            if bound:
                if c != bound:
                    continue
            else:
                ok = True
                for s in range(1, kk + 1):
                    v = assign[s]
                    if not v or s == t:
                        continue
                    if (s < t and v >= c) or (s > t and v <= c):
                        ok = False
                        break
                if not ok:
                    continue
                assign[t] = c
            pos[pi] = j
            if rec(pi + 1, j + 1):
                return True
            if not bound:
                assign[t] = 0
        return False

    return tuple(pos) if rec(0, 0) else None


def contains_pattern(p: SetPartition, pattern: SetPartition) -> bool:
    """True if some subsequence of ``p`` is order-isomorphic to ``pattern``."""
    return find_pattern(p, pattern) is not None


def avoids(p: SetPartition, pattern: SetPartition) -> bool:
    return find_pattern(p, pattern) is None


@dataclass(frozen=True)
class Decomposition:
    """Factorization of a canonical word as 1 w1 2 w2 ... k wk.

    The first occurrences of 1..k are the left-to-right maxima of the word;
    ``words[i-1]`` collects the letters (all at most i) strictly between the
    first occurrence of i and the first occurrence of i+1.
    ``late_occurrences[i-1]`` counts the occurrences of the letter i that lie
    strictly after the first occurrence of i+1; these counts set the ascent
    heights in the path encoding.
    """

    block_count: int
    maxima_positions: tuple  # 0-based position of the first occurrence of each label
    words: tuple
    late_occurrences: tuple

    def reassemble(self) -> SetPartition:
        letters = []
        for i, w in enumerate(self.words, start=1):
            letters.append(i)
            letters.extend(w)
        return SetPartition(letters)


def decompose(p: SetPartition) -> Decomposition:
    """Compute the unique left-to-right-maxima factorization of a nonempty
    partition word."""
    word = p.word
    if not word:
        raise InvalidObjectError("cannot decompose the empty partition")
    k = p.block_count
    first = [0] * (k + 2)
    seen = 0
    for i, c in enumerate(word):
        if c > seen:
            first[c] = i
            seen = c
    words = tuple(
        tuple(word[first[i] + 1 : first[i + 1]] if i < k else word[first[i] + 1 :])
        for i in range(1, k + 1)
    )
    late = tuple(
        sum(1 for c in word[first[i + 1] + 1 :] if c == i) for i in range(1, k)
    )
    return Decomposition(k, tuple(first[1 : k + 1]), words, late)


def avoids_12312_fast(p: SetPartition) -> bool:
    """Decide 12312-avoidance without subsequence search.

    A word contains 12312 exactly when some block label c can see, after its
    first occurrence, a letter a followed by a strictly larger letter b with
    b still smaller than c (the first occurrences of a, b and c then complete
    the occurrence).  So the word avoids 12312 exactly when, for every label
    c, the letters smaller than c that follow the first occurrence of c are
    weakly decreasing.  In terms of the factorization this scans, for each c,
    the letters below c inside w_c w_{c+1} ... w_k.
    """
    if not p.word:
        return True
    dec = decompose(p)
    k = dec.block_count
    for c in range(3, k + 1):
        prev = None
        for i in range(c, k + 1):
            for x in dec.words[i - 1]:
                if x < c:
                    if prev is not None and x > prev:
                        return False
                    prev = x
    return True


def avoids_12321_fast(p: SetPartition) -> bool:
    """Decide 12321-avoidance without subsequence search.

    The word avoids 12321 exactly when deleting every letter i from its word
    w_i of the factorization leaves a weakly increasing concatenation
    (a descent a > b inside that concatenation always completes to an
    occurrence a' b' c' b a with c' the label of the region holding a).
    """
    if not p.word:
        return True
    dec = decompose(p)
    prev = None
    for i, w in enumerate(dec.words, start=1):
        for x in w:
            if x != i:
                if prev is not None and x < prev:
                    return False
                prev = x
    return True


def is_irreducible(p: SetPartition) -> bool:
    """True if no m in [n-1] splits the partition into a partition of [m]
    and a partition of {m+1, ..., n}."""
    word = p.word
    if not word:
        raise InvalidObjectError("irreducibility is undefined for the empty partition")
    left = set()
    for m in range(1, len(word)):
        left.add(word[m - 1])
        if left.isdisjoint(word[m:]):
            return False
    return True


def is_irreducible_char(p: SetPartition) -> bool:
    """Label-based irreducibility test: every block label i >= 2 must be
    followed, somewhere after its first occurrence, by a smaller letter.

    Agrees with :func:`is_irreducible` on every partition (checked
    exhaustively in the test suite).
    """
    word = p.word
    if not word:
        raise InvalidObjectError("irreducibility is undefined for the empty partition")
    for i in range(2, p.block_count + 1):
        fi = word.index(i)
        if not any(c < i for c in word[fi + 1 :]):
            return False
    return True
