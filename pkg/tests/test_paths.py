from collections import Counter

import pytest

from partition_paths import (
    InvalidObjectError,
    LatticePath,
    LimitExceededError,
    PATH_CLASSES,
    classify,
    generate_paths,
    large_schroder,
    narayana,
    parse_path,
    peaks,
)

REF_PATH = "HUUUDUUDDHUUDDHDD"

_ORDER = {"U": 0, "D": 1, "H": 2, "L": 3}


def _lex_key(p):
    return [_ORDER[s] for s in p.steps]


class TestParse:
    def test_dyck(self):
        p = parse_path("UD", "dyck")
        assert p.semilength == 1

    def test_schroder_with_horizontal(self):
        p = parse_path("UHD", "schroder")
        assert p.heights() == [0, 1, 1, 0]

    def test_left_step_retrace_rejected(self):
        with pytest.raises(InvalidObjectError, match="retraces an up-step"):
            parse_path("UL", "skew_dyck")

    def test_up_step_retrace_rejected(self):
        with pytest.raises(InvalidObjectError, match="retraces a left-step"):
            parse_path("UUDLUD", "skew_dyck")

    def test_unknown_character(self):
        with pytest.raises(InvalidObjectError, match="position 2"):
            parse_path("UX", "schroder")
        with pytest.raises(InvalidObjectError, match="position 3"):
            parse_path("UDL", "dyck")

    def test_negative_prefix(self):
        with pytest.raises(InvalidObjectError, match="below the axis at position 1"):
            parse_path("DU", "dyck")

    def test_nonzero_final_height(self):
        with pytest.raises(InvalidObjectError, match="ends at height 2"):
            parse_path("UU", "dyck")

    def test_uh_free_violation(self):
        with pytest.raises(InvalidObjectError, match="horizontal step at position 1"):
            parse_path("UHD", "uh_free")

    def test_even_peak_violation(self):
        with pytest.raises(InvalidObjectError, match="even level 2"):
            parse_path("UUDD", "no_even_peak")

    def test_level_one_peak_violation(self):
        with pytest.raises(InvalidObjectError, match="level one"):
            parse_path("UD", "uh_free_no_level_one")

    def test_end_down_violation(self):
        with pytest.raises(InvalidObjectError, match="down step"):
            parse_path("UUDL", "skew_dyck_end_down")

    def test_empty_in_every_class(self):
        for cls in PATH_CLASSES:
            assert parse_path("", cls) == LatticePath("")

    def test_unknown_class(self):
        with pytest.raises(InvalidObjectError):
            parse_path("UD", "motzkin")


class TestPeaks:
    def test_single_peak(self):
        assert peaks(LatticePath("UD")) == [(0, 1)]

    def test_reference_path_levels(self):
        assert [lvl for _, lvl in peaks(LatticePath(REF_PATH))] == [3, 4, 4]

    def test_no_peak_across_horizontal(self):
        assert peaks(LatticePath("UHD")) == []


class TestClassify:
    def test_uh_pair(self):
        assert not classify(LatticePath("UHD")).uh_free

    def test_even_peak(self):
        flags = classify(LatticePath("UUDD"))
        assert not flags.no_even_peak
        assert flags.no_level_one_peak
        assert flags.ends_with_down

    def test_reference_path_is_uh_free(self):
        assert classify(LatticePath(REF_PATH)).uh_free

    def test_empty_path_satisfies_everything(self):
        flags = classify(LatticePath(""))
        assert flags == classify(LatticePath(""))
        assert all(
            (flags.uh_free, flags.no_even_peak, flags.no_level_one_peak,
             flags.ends_with_down)
        )


class TestGenerate:
    def test_schroder_counts(self, paths_of):
        assert [len(paths_of(n, "schroder")) for n in range(7)] == [
            1, 2, 6, 22, 90, 394, 1806,
        ]

    def test_semilength_one(self):
        assert [str(p) for p in generate_paths(1, "schroder")] == ["UD", "H"]

    def test_uh_free_semilength_two(self, paths_of):
        got = [str(p) for p in paths_of(2, "uh_free")]
        assert got == ["UUDD", "UDUD", "UDH", "HUD", "HH"]
        assert set(got) == {"HH", "HUD", "UDH", "UDUD", "UUDD"}

    def test_skew_semilength_two(self, paths_of):
        assert {str(p) for p in paths_of(2, "skew_dyck")} == {"UUDD", "UDUD", "UUDL"}

    def test_skew_end_down_semilength_two(self, paths_of):
        assert len(paths_of(2, "skew_dyck_end_down")) == 2

    def test_skew_counts(self, paths_of):
        assert [len(paths_of(n, "skew_dyck")) for n in range(6)] == [
            1, 1, 3, 10, 36, 137,
        ]

    def test_lexicographic_order(self, paths_of):
        for cls in PATH_CLASSES:
            for n in range(5):
                ps = paths_of(n, cls)
                keys = [_lex_key(p) for p in ps]
                assert keys == sorted(keys), (cls, n)
                assert len(set(str(p) for p in ps)) == len(ps)

    def test_generated_paths_reparse(self, paths_of):
        for cls in PATH_CLASSES:
            for n in range(5):
                for p in paths_of(n, cls):
                    assert parse_path(str(p), cls) == p

    def test_uh_free_matches_no_even_peak_count(self, paths_of):
        for n in range(7):
            assert len(paths_of(n, "uh_free")) == len(paths_of(n, "no_even_peak"))

    def test_schroder_count_matches_recurrence(self, paths_of):
        for n in range(7):
            assert len(paths_of(n, "schroder")) == large_schroder(n)

    def test_dyck_peak_census_is_narayana(self, paths_of):
        for n in range(7):
            census = Counter(len(peaks(p)) for p in paths_of(n, "dyck"))
            for k in range(n + 1):
                assert census.get(k, 0) == narayana(n, k), (n, k)

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            list(generate_paths(13, "dyck"))
        with pytest.raises(LimitExceededError):
            list(generate_paths(3, "dyck", limit=2))


class TestLatticePath:
    def test_semilength_counts_horizontals_double(self):
        assert LatticePath("HH").semilength == 2
        assert LatticePath("UDH").semilength == 2
        assert LatticePath("UUDL").semilength == 2

    def test_equality_and_hash(self):
        assert LatticePath("UD") == LatticePath("UD")
        assert len({LatticePath("UD"), LatticePath("UD")}) == 1

    def test_repr(self):
        assert repr(LatticePath("UD")) == "LatticePath('UD')"
