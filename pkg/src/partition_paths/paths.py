"""Lattice paths: Schroder, Dyck and skew Dyck paths with their restrictions.

Steps are single letters: U = (1,1), D = (1,-1), H = (2,0), L = (-1,-1).
A path starts at the origin, never drops below the x-axis and ends on it.
Generation order is lexicographic by step string under U < D < H < L.
"""

from dataclasses import dataclass
from typing import Iterator

from .errors import DEFAULT_LIMIT, InvalidObjectError, LimitExceededError

_RISE = {"U": 1, "D": -1, "H": 0, "L": -1}
_RUN = {"U": 1, "D": 1, "H": 2, "L": -1}

PATH_CLASSES = (
    "schroder",
    "uh_free",
    "no_even_peak",
    "uh_free_no_level_one",
    "dyck",
    "skew_dyck",
    "skew_dyck_end_down",
)

_ALPHABET = {
    "schroder": "UDH",
    "uh_free": "UDH",
    "no_even_peak": "UDH",
    "uh_free_no_level_one": "UDH",
    "dyck": "UD",
    "skew_dyck": "UDL",
    "skew_dyck_end_down": "UDL",
}


class LatticePath:
    """An immutable step sequence with nonnegative prefix heights.

    The constructor checks only the height profile and the alphabet; which
    classes a path belongs to (Dyck, UH-free, skew geometry, ...) is decided
    by :func:`parse_path`, :func:`classify` and the generators.
    """

    __slots__ = ("steps",)

    def __init__(self, steps=""):
        if not isinstance(steps, str):
            steps = "".join(steps)
        h = 0
        for i, s in enumerate(steps):
            rise = _RISE.get(s)
            if rise is None:
                raise InvalidObjectError(
                    f"unknown step character {s!r} at position {i + 1}"
                )
            h += rise
            if h < 0:
                raise InvalidObjectError(f"path drops below the axis at position {i + 1}")
        if h != 0:
            raise InvalidObjectError(f"path ends at height {h}, expected 0")
        self.steps = steps

    @property
    def semilength(self) -> int:
        counts = {s: self.steps.count(s) for s in "UDHL"}
        return (counts["U"] + counts["D"] + counts["L"]) // 2 + counts["H"]

    def heights(self) -> list:
        """Prefix heights, starting from 0 (length = step count + 1)."""
        hs = [0]
        for s in self.steps:
            hs.append(hs[-1] + _RISE[s])
        return hs

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        if isinstance(other, LatticePath):
            return self.steps == other.steps
        return NotImplemented

    def __hash__(self):
        return hash(self.steps)

    def __str__(self):
        return self.steps

    def __repr__(self):
        return f"LatticePath({self.steps!r})"


def peaks(p: LatticePath) -> list:
    """All (index, level) pairs where an up step is immediately followed by a
    down step; the level is the height reached by the up step."""
    steps = p.steps
    out = []
    h = 0
    for i, s in enumerate(steps):
        h += _RISE[s]
        if s == "U" and i + 1 < len(steps) and steps[i + 1] == "D":
            out.append((i, h))
    return out


@dataclass(frozen=True)
class PathFlags:
    uh_free: bool
    no_even_peak: bool
    no_level_one_peak: bool
    ends_with_down: bool


def classify(p: LatticePath) -> PathFlags:
    """Compute the restriction flags of a path.

    The empty path satisfies every flag (it belongs to every class at
    semilength 0), including ends_with_down by convention.
    """
    if not p.steps:
        return PathFlags(True, True, True, True)
    levels = [lvl for _, lvl in peaks(p)]
    return PathFlags(
        uh_free="UH" not in p.steps,
        no_even_peak=all(lvl % 2 == 1 for lvl in levels),
        no_level_one_peak=all(lvl != 1 for lvl in levels),
        ends_with_down=p.steps[-1] == "D",
    )


def _check_skew_geometry(steps: str) -> None:
    # Left steps and up steps trace unit diagonal segments in the plane;
    # the two families may never share a segment, and x stays nonnegative.
    x = y = 0
    up_segments = set()
    left_segments = set()
    for i, s in enumerate(steps, start=1):
        if s == "U":
            seg = (x, y)
            if seg in left_segments:
                raise InvalidObjectError(
                    f"up step retraces a left-step segment at position {i}"
                )
            up_segments.add(seg)
            x += 1
            y += 1
        elif s == "D":
            x += 1
            y -= 1
        else:  # L
            if x - 1 < 0:
                raise InvalidObjectError(f"path crosses x = 0 at position {i}")
            seg = (x - 1, y - 1)
            if seg in up_segments:
                raise InvalidObjectError(
                    f"left step retraces an up-step segment at position {i}"
                )
            left_segments.add(seg)
            x -= 1
            y -= 1


def parse_path(text: str, path_class: str = "schroder") -> LatticePath:
    """Parse and validate a step string as a member of the given class."""
    if path_class not in PATH_CLASSES:
        raise InvalidObjectError(f"unknown path class {path_class!r}")
    text = text.strip()
    alphabet = _ALPHABET[path_class]
    for i, s in enumerate(text):
        if s not in alphabet:
            raise InvalidObjectError(
                f"unknown step character {s!r} at position {i + 1} "
                f"(class {path_class} uses {'/'.join(alphabet)})"
            )
    p = LatticePath(text)
    if path_class in ("uh_free", "uh_free_no_level_one") and "UH" in text:
        raise InvalidObjectError(
            f"up step immediately followed by a horizontal step at position "
            f"{text.index('UH') + 1}"
        )
    if path_class == "no_even_peak":
        for i, lvl in peaks(p):
            if lvl % 2 == 0:
                raise InvalidObjectError(f"peak at even level {lvl} at position {i + 1}")
    if path_class == "uh_free_no_level_one":
        for i, lvl in peaks(p):
            if lvl == 1:
                raise InvalidObjectError(f"peak at level one at position {i + 1}")
    if path_class in ("skew_dyck", "skew_dyck_end_down"):
        _check_skew_geometry(text)
    if path_class == "skew_dyck_end_down" and text and not text.endswith("D"):
        raise InvalidObjectError("path does not end with a down step")
    return p


def generate_paths(
    n: int, path_class: str = "schroder", limit: int = DEFAULT_LIMIT
) -> Iterator[LatticePath]:
    """Yield every path of semilength n in the class exactly once, in
    lexicographic order of the step string under U < D < H < L.

    Depth-first search over step choices with height, budget and (for the
    skew classes) segment-overlap pruning.
    """
    if path_class not in PATH_CLASSES:
        raise InvalidObjectError(f"unknown path class {path_class!r}")
    if n < 0:
        raise InvalidObjectError("semilength must be non-negative")
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the exhaustive limit {limit}")

    alphabet = _ALPHABET[path_class]
    uh_free = path_class in ("uh_free", "uh_free_no_level_one")
    no_even = path_class == "no_even_peak"
    no_level_one = path_class == "uh_free_no_level_one"
    skew = path_class in ("skew_dyck", "skew_dyck_end_down")
    end_down = path_class == "skew_dyck_end_down"
    steps = []
    up_segments = set()
    left_segments = set()

    def rec(remaining: int, x: int, y: int) -> Iterator[LatticePath]:
        if remaining == 0:
            if end_down and steps and steps[-1] != "D":
                return
            yield LatticePath("".join(steps))
            return
        for s in alphabet:
            if s == "U":
                if y + 1 > remaining - 1:
                    continue
                if skew:
                    seg = (x, y)
                    if seg in left_segments:
                        continue
                    up_segments.add(seg)
                steps.append("U")
                yield from rec(remaining - 1, x + 1, y + 1)
                steps.pop()
                if skew:
                    up_segments.discard(seg)
            elif s == "D":
                if y < 1:
                    continue
                if steps and steps[-1] == "U":
                    if no_even and y % 2 == 0:
                        continue
                    if no_level_one and y == 1:
                        continue
                steps.append("D")
                yield from rec(remaining - 1, x + 1, y - 1)
                steps.pop()
            elif s == "H":
                if remaining < 2 or y > remaining - 2:
                    continue
                if uh_free and steps and steps[-1] == "U":
                    continue
                steps.append("H")
                yield from rec(remaining - 2, x + 2, y)
                steps.pop()
            else:  # L
                if y < 1 or x < 1:
                    continue
                seg = (x - 1, y - 1)
                if seg in up_segments:
                    continue
                left_segments.add(seg)
                steps.append("L")
                yield from rec(remaining - 1, x - 1, y - 1)
                steps.pop()
                left_segments.discard(seg)

    yield from rec(2 * n, 0, 0)
