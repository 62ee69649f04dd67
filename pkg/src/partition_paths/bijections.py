"""Bijections between pattern-avoiding partitions and restricted paths.

Three maps are implemented, together with their inverses and compositions:

* ``encode`` sends a 12312-avoiding (or 12321-avoiding) partition of [n+1]
  to a UH-free Schroder path of semilength n.  The forward construction is
  the same for both patterns; only the decoding rule differs.
* ``decode`` inverts it, labeling the steps of the path and reading the
  partition word back off the down and horizontal steps.
* ``to_odd_peaks`` rewrites a UH-free path into a Schroder path of the same
  semilength whose peaks all sit at odd levels; ``to_uh_free`` inverts it.

Composing encode with to_odd_peaks gives bijections from each avoidance
class onto the paths without peaks at even level.
"""

from collections import Counter
from dataclasses import dataclass, field

from .errors import PreconditionError
from .partitions import (
    SetPartition,
    avoids_12312_fast,
    avoids_12321_fast,
    decompose,
    find_pattern,
)
from .paths import LatticePath, peaks

PATTERNS = ("12312", "12321")

_PATTERN_WORDS = {
    "12312": SetPartition((1, 2, 3, 1, 2)),
    "12321": SetPartition((1, 2, 3, 2, 1)),
}
_FAST_CHECK = {"12312": avoids_12312_fast, "12321": avoids_12321_fast}


def _require_pattern(pattern: str) -> None:
    if pattern not in PATTERNS:
        raise PreconditionError(f"unsupported pattern {pattern!r}, expected 12312 or 12321")


def _require_avoids(p: SetPartition, pattern: str) -> None:
    _require_pattern(pattern)
    if len(p) == 0:
        raise PreconditionError("the empty partition is outside the bijection domain")
    if not _FAST_CHECK[pattern](p):
        witness = find_pattern(p, _PATTERN_WORDS[pattern])
        positions = ",".join(str(i + 1) for i in witness)
        raise PreconditionError(
            f"partition contains pattern {pattern} at positions {positions}",
            witness=witness,
        )


def _require_uh_free(p: LatticePath, who: str) -> None:
    if not set(p.steps) <= set("UDH"):
        raise PreconditionError(f"{who} expects a Schroder path over U/D/H")
    if "UH" in p.steps:
        raise PreconditionError(
            f"{who} expects a UH-free path; up step followed by a horizontal "
            f"step at position {p.steps.index('UH') + 1}"
        )


def encode(p: SetPartition, pattern: str = "12312") -> LatticePath:
    """Map an avoiding partition of [n+1] to a UH-free path of semilength n.

    Reading the factorization 1 w1 2 w2 ... k wk left to right: every block
    label i >= 2 contributes one more up step than the number of occurrences
    of i-1 after the first i, followed by one down step; every letter of wi
    equal to i contributes a horizontal step and every smaller letter a down
    step.  The one-element partition maps to the empty path.
    """
    _require_avoids(p, pattern)
    dec = decompose(p)
    out = []
    for i in range(1, dec.block_count + 1):
        if i >= 2:
            out.append("U" * (dec.late_occurrences[i - 2] + 1))
            out.append("D")
        for c in dec.words[i - 1]:
            out.append("H" if c == i else "D")
    return LatticePath("".join(out))


@dataclass
class DecoderState:
    """Step labeling built while decoding a path.

    ``steps`` is the working path (the input with one peak prepended) and
    ``labels[i]`` the label given to step i.  ``up_labels`` and
    ``down_labels`` are the multisets of labels already carried by up and
    down steps during the sweep; a non-peak down step takes the maximum or
    minimum of their difference, which is nonempty for every valid UH-free
    input.
    """

    steps: str
    labels: list
    up_labels: Counter = field(default_factory=Counter)
    down_labels: Counter = field(default_factory=Counter)

    def trace(self) -> str:
        """Line-oriented dump: one "index step label" row per step."""
        return "\n".join(
            f"{i} {s} {lbl}" for i, (s, lbl) in enumerate(zip(self.steps, self.labels))
        )


def _decode(p: LatticePath, pattern: str):
    steps = "UD" + p.steps
    n = len(steps)
    take_max = pattern == "12312"
    peak_up = [
        steps[i] == "U" and i + 1 < n and steps[i + 1] == "D" for i in range(n)
    ]
    state = DecoderState(steps, [0] * n)
    labels = state.labels
    seen_peaks = 0
    for i, s in enumerate(steps):
        if s == "U" and peak_up[i]:
            seen_peaks += 1
            labels[i] = seen_peaks
        elif s in "UH":
            # the largest label to the left is the number of peaks passed
            labels[i] = seen_peaks
    up, down = state.up_labels, state.down_labels
    for i, s in enumerate(steps):
        if s == "U":
            up[labels[i]] += 1
        elif s == "D":
            if peak_up[i - 1]:
                labels[i] = labels[i - 1]
            else:
                free = up - down
                if not free:
                    raise PreconditionError(
                        "not a valid UH-free path: no unmatched up-step label "
                        f"available at step {i}"
                    )
                labels[i] = max(free) if take_max else min(free)
            down[labels[i]] += 1
    word = tuple(labels[i] for i in range(n) if steps[i] in "DH")
    return SetPartition(word), state


def decode(p: LatticePath, pattern: str = "12312") -> SetPartition:
    """Invert :func:`encode`: recover the partition word from a UH-free path.

    A peak is prepended; peak up steps are numbered 1, 2, ... left to right;
    every other up step and every horizontal step copies the largest label to
    its left; a peak down step copies its peak's label; every remaining down
    step takes the maximum (pattern 12312) or minimum (pattern 12321) of the
    multiset of up-step labels to its left minus the multiset of down-step
    labels to its left, multiplicities respected.  The labels of the down and
    horizontal steps, read left to right, spell the partition.  The empty
    path decodes to the one-element partition.
    """
    _require_pattern(pattern)
    _require_uh_free(p, "decode")
    return _decode(p, pattern)[0]


def decode_trace(p: LatticePath, pattern: str = "12312") -> str:
    """The step labeling used by :func:`decode`, as an "index step label"
    dump (debugging aid)."""
    _require_pattern(pattern)
    _require_uh_free(p, "decode_trace")
    return _decode(p, pattern)[1].trace()


def _rewrite_forward(p: str) -> str:
    if not p:
        return ""
    if p[0] == "H":
        return "H" + _rewrite_forward(p[1:])
    if p[1] == "D":
        return "UD" + _rewrite_forward(p[2:])
    k = 0
    while p[k] == "U":
        k += 1
    # UH-free, so the run of k >= 2 up steps is followed by a down step;
    # split the rest at its first passages below each height k-1 ... 1.
    i = k + 1
    factors = []
    for base in range(k - 1, 0, -1):
        start = i
        h = base
        while True:
            h += 1 if p[i] == "U" else (-1 if p[i] == "D" else 0)
            if h == base - 1:
                break
            i += 1
        factors.append(p[start:i])
        i += 1
    tail = p[i:]
    out = ["U"]
    for q in factors:
        out.append("H" if not q else "U" + _rewrite_forward(q) + "D")
    out.append("D")
    out.append(_rewrite_forward(tail))
    return "".join(out)


def _rewrite_backward(p: str) -> str:
    if not p:
        return ""
    if p[0] == "H":
        return "H" + _rewrite_backward(p[1:])
    if p[1] == "D":
        return "UD" + _rewrite_backward(p[2:])
    # p = U B1 ... B_{k-1} D S with each B either H or a U...D bracket at
    # height one; rebuild the ascent U^k D and the bracketed pieces.
    factors = []
    i = 1
    while p[i] != "D":
        if p[i] == "H":
            factors.append("H")
            i += 1
        else:
            start = i
            h = 2
            i += 1
            while h > 1:
                h += 1 if p[i] == "U" else (-1 if p[i] == "D" else 0)
                i += 1
            factors.append(p[start:i])
    tail = p[i + 1 :]
    out = ["U" * (len(factors) + 1), "D"]
    for q in factors:
        out.append("" if q == "H" else _rewrite_backward(q[1:-1]))
        out.append("D")
    out.append(_rewrite_backward(tail))
    return "".join(out)


def to_odd_peaks(p: LatticePath) -> LatticePath:
    """Rewrite a UH-free path into a path of equal semilength whose peaks all
    sit at odd levels.

    Recursive rules: a leading H or UD factor is kept as is; otherwise the
    path starts with k >= 2 up steps and decomposes along the first descents
    below each height as U^k D P1 D P2 ... D Pk, which becomes
    U P1' ... P(k-1)' D followed by the rewrite of Pk, where Pi' is H when Pi
    is empty and the rewrite of Pi wrapped in U...D otherwise.
    """
    _require_uh_free(p, "to_odd_peaks")
    return LatticePath(_rewrite_forward(p.steps))


def to_uh_free(p: LatticePath) -> LatticePath:
    """Invert :func:`to_odd_peaks` on paths without peaks at even level.

    Case analysis on the first steps: leading H and UD factors peel off;
    otherwise the stretch between the initial up step and its matching
    return consists of factors that are each H or bracketed U...D, and these
    rebuild the initial ascent and the subordinate paths.
    """
    if not set(p.steps) <= set("UDH"):
        raise PreconditionError("to_uh_free expects a Schroder path over U/D/H")
    for i, lvl in peaks(p):
        if lvl % 2 == 0:
            raise PreconditionError(
                f"to_uh_free expects no peak at even level; found level {lvl} "
                f"at position {i + 1}"
            )
    return LatticePath(_rewrite_backward(p.steps))


def encode_to_odd_peaks(p: SetPartition, pattern: str = "12312") -> LatticePath:
    """Composition of :func:`encode` and :func:`to_odd_peaks`: avoiding
    partitions of [n+1] onto paths of semilength n without even-level peaks."""
    return to_odd_peaks(encode(p, pattern))


def decode_from_odd_peaks(p: LatticePath, pattern: str = "12312") -> SetPartition:
    """Inverse of :func:`encode_to_odd_peaks`."""
    return decode(to_uh_free(p), pattern)
