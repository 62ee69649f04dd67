"""Cross-module identity suite.

Every structural claim the library makes is checked here exhaustively at
desk scale: generator counts against closed forms, fast predicates against
the containment oracle, bijection roundtrips and image sets, statistic
transport, and the series identities.  Checks report the smallest size and
the lexicographically first counterexample on failure.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import bijections, enumeration, partitions, paths

_SKEW_COUNTS = (1, 1, 3, 10, 36, 137)  # exhaustive-search reference values


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_n: int
    failure: Optional[str]

    @property
    def ok(self) -> bool:
        return self.failure is None


@lru_cache(maxsize=None)
def _partitions(m: int):
    return tuple(partitions.generate_partitions(m, limit=m))


@lru_cache(maxsize=None)
def _avoiders(m: int, pattern: str):
    pat = bijections._PATTERN_WORDS[pattern]
    return tuple(p for p in _partitions(m) if not partitions.contains_pattern(p, pat))


@lru_cache(maxsize=None)
def _paths(n: int, path_class: str):
    return tuple(paths.generate_paths(n, path_class, limit=n))


def _check_partition_generator(max_n: int) -> Optional[str]:
    bells = enumeration.bell_numbers(max_n)
    for n in range(max_n + 1):
        ps = _partitions(n)
        if len(ps) != bells[n]:
            return f"n={n}: generated {len(ps)} partitions, Bell number is {bells[n]}"
        words = [p.word for p in ps]
        if sorted(words) != words:
            return f"n={n}: generation order is not lexicographic"
        if len(set(words)) != len(words):
            return f"n={n}: duplicate partition generated"
    return None


def _check_fast_predicates(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        for p in _partitions(n):
            for pattern, fast in (
                ("12312", partitions.avoids_12312_fast),
                ("12321", partitions.avoids_12321_fast),
            ):
                brute = partitions.avoids(p, bijections._PATTERN_WORDS[pattern])
                if fast(p) != brute:
                    return (
                        f"n={n}: fast {pattern} check disagrees with brute force "
                        f"on {p} (brute says avoids={brute})"
                    )
    return None


def _check_decompose_roundtrip(max_n: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        for p in _partitions(n):
            if partitions.decompose(p).reassemble() != p:
                return f"n={n}: decompose does not reassemble {p}"
    return None


def _check_irreducible_agreement(max_n: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        for p in _partitions(n):
            if partitions.is_irreducible(p) != partitions.is_irreducible_char(p):
                return f"n={n}: irreducibility definitions disagree on {p}"
    return None


def _check_schroder_counts(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        got = len(_paths(n, "schroder"))
        want = enumeration.large_schroder(n)
        if got != want:
            return f"n={n}: generated {got} Schroder paths, recurrence gives {want}"
    return None


def _check_uh_free_matches_no_even_peak(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        a = len(_paths(n, "uh_free"))
        b = len(_paths(n, "no_even_peak"))
        if a != b:
            return f"n={n}: {a} UH-free paths but {b} without even-level peaks"
    return None


def _check_paths_reparse(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        for cls in paths.PATH_CLASSES:
            for p in _paths(n, cls):
                if paths.parse_path(str(p), cls) != p:
                    return f"n={n}: {cls} path {p} does not survive parse"
    return None


def _check_dyck_peaks_narayana(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        census = Counter(len(paths.peaks(p)) for p in _paths(n, "dyck"))
        for k in range(n + 1):
            want = enumeration.narayana(n, k)
            if census.get(k, 0) != want:
                return (
                    f"n={n}: {census.get(k, 0)} Dyck paths with {k} peaks, "
                    f"Narayana number is {want}"
                )
    return None


def _check_skew_counts(max_n: int) -> Optional[str]:
    for n in range(min(max_n, len(_SKEW_COUNTS) - 1) + 1):
        got = len(_paths(n, "skew_dyck"))
        if got != _SKEW_COUNTS[n]:
            return f"n={n}: {got} skew Dyck paths, expected {_SKEW_COUNTS[n]}"
    return None


def _check_encode_decode(pattern: str, max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        avoiders = _avoiders(n + 1, pattern)
        image = []
        for p in avoiders:
            q = bijections.encode(p, pattern)
            if bijections.decode(q, pattern) != p:
                return f"n={n}: decode(encode({p})) roundtrip fails"
            if p.block_count != len(paths.peaks(q)) + 1:
                return f"n={n}: block count of {p} does not map to peak count of {q}"
            irreducible = partitions.is_irreducible(p)
            no_level_one = all(lvl != 1 for _, lvl in paths.peaks(q))
            if irreducible != no_level_one:
                return (
                    f"n={n}: irreducibility of {p} does not match absence of "
                    f"level-one peaks in {q}"
                )
            image.append(q)
        uh_free = _paths(n, "uh_free")
        if sorted(q.steps for q in image) != sorted(p.steps for p in uh_free):
            return f"n={n}: encode image differs from the UH-free path set"
        for q in uh_free:
            if bijections.encode(bijections.decode(q, pattern), pattern) != q:
                return f"n={n}: encode(decode({q})) roundtrip fails"
    return None


def _check_odd_peak_rewrite(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        uh_free = _paths(n, "uh_free")
        image = []
        for p in uh_free:
            q = bijections.to_odd_peaks(p)
            if q.semilength != p.semilength:
                return f"n={n}: rewrite changes semilength of {p}"
            if bijections.to_uh_free(q) != p:
                return f"n={n}: backward rewrite fails on {q}"
            image.append(q)
        target = _paths(n, "no_even_peak")
        if sorted(q.steps for q in image) != sorted(p.steps for p in target):
            return f"n={n}: rewrite image differs from the no-even-peak set"
        for q in target:
            if bijections.to_odd_peaks(bijections.to_uh_free(q)) != q:
                return f"n={n}: forward rewrite fails to invert on {q}"
    return None


def _check_block_counts(max_n: int) -> Optional[str]:
    for n in range(max_n + 1):
        peak_census = Counter(len(paths.peaks(p)) for p in _paths(n, "uh_free"))
        for pattern in bijections.PATTERNS:
            block_census = Counter(p.block_count - 1 for p in _avoiders(n + 1, pattern))
            for k in range(n + 1):
                formula = enumeration.count_blocks(n, k)
                if formula != block_census.get(k, 0):
                    return (
                        f"n={n} k={k}: formula gives {formula}, census of "
                        f"{pattern}-avoiders gives {block_census.get(k, 0)}"
                    )
                if formula != peak_census.get(k, 0):
                    return (
                        f"n={n} k={k}: formula gives {formula}, peak census "
                        f"gives {peak_census.get(k, 0)}"
                    )
                if enumeration.count_uhfree_with_peaks(n, k) != formula:
                    return f"n={n} k={k}: the two refined counts disagree"
    return None


def _check_series_f(max_n: int) -> Optional[str]:
    table = enumeration.series_f(max_n)
    for n in range(max_n + 1):
        want = table.coefficient(n)
        got = len(_paths(n, "uh_free"))
        if got != want:
            return f"n={n}: {got} UH-free paths, series coefficient is {want}"
        for pattern in bijections.PATTERNS:
            avoiders = len(_avoiders(n + 1, pattern))
            if avoiders != want:
                return (
                    f"n={n}: {avoiders} {pattern}-avoiding partitions of "
                    f"[{n + 1}], series coefficient is {want}"
                )
        total = sum(enumeration.count_blocks(n, k) for k in range(n + 1))
        if total != want:
            return f"n={n}: refined counts sum to {total}, series coefficient is {want}"
    return None


def _check_series_f_prime(max_n: int) -> Optional[str]:
    table = enumeration.series_f_prime(max_n)
    for n in range(max_n + 1):
        want = table.coefficient(n)
        no_level_one = len(_paths(n, "uh_free_no_level_one"))
        if no_level_one != want:
            return (
                f"n={n}: {no_level_one} UH-free paths without level-one peaks, "
                f"series coefficient is {want}"
            )
        for pattern in bijections.PATTERNS:
            irr = sum(
                1 for p in _avoiders(n + 1, pattern) if partitions.is_irreducible(p)
            )
            if irr != want:
                return (
                    f"n={n}: {irr} irreducible {pattern}-avoiders, series "
                    f"coefficient is {want}"
                )
        end_down = len(_paths(n, "skew_dyck_end_down"))
        if end_down != want:
            return (
                f"n={n}: {end_down} skew Dyck paths ending with a down step, "
                f"series coefficient is {want}"
            )
    return None


def _check_series_identity(max_n: int) -> Optional[str]:
    order = max(16, max_n)
    f = list(enumeration.series_f(order).coefficients)
    fp = list(enumeration.series_f_prime(order).coefficients)
    # x(1-x)f has coefficients f[n-1] - f[n-2]
    factor = [1] + [
        -(f[n - 1] - (f[n - 2] if n >= 2 else 0)) for n in range(1, order + 1)
    ]
    product = enumeration._mul(fp, factor, order)
    if product != [1] + [0] * order:
        return f"f' * (1 - x(1-x)f) is not 1 up to order {order}: {product}"
    return None


CHECKS = (
    ("partition-generator-bell-count", 10, _check_partition_generator),
    ("fast-avoidance-matches-oracle", 9, _check_fast_predicates),
    ("decompose-reassembles", 10, _check_decompose_roundtrip),
    ("irreducible-definitions-agree", 9, _check_irreducible_agreement),
    ("schroder-count-matches-recurrence", 8, _check_schroder_counts),
    ("uh-free-count-equals-no-even-peak-count", 8, _check_uh_free_matches_no_even_peak),
    ("generated-paths-reparse", 8, _check_paths_reparse),
    ("dyck-peak-distribution-is-narayana", 8, _check_dyck_peaks_narayana),
    ("skew-dyck-counts", 5, _check_skew_counts),
    ("encode-decode-12312", 8, lambda m: _check_encode_decode("12312", m)),
    ("encode-decode-12321", 8, lambda m: _check_encode_decode("12321", m)),
    ("odd-peak-rewrite-bijection", 8, _check_odd_peak_rewrite),
    ("refined-block-counts", 8, _check_block_counts),
    ("series-f-counts", 8, _check_series_f),
    ("series-f-prime-counts", 7, _check_series_f_prime),
    ("series-algebraic-identity", 16, _check_series_identity),
)


def run_checks(max_n: int = 8) -> list:
    """Run every identity check, each capped at min(max_n, its stated range).

    Results come back in the fixed declaration order, so output built from
    them is deterministic.
    """
    results = []
    for name, cap, fn in CHECKS:
        bound = min(max_n, cap)
        results.append(CheckResult(name, bound, fn(bound)))
    return results
