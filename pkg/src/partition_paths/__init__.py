"""Pattern-avoiding set partitions, restricted Schroder paths, and the
bijections between them, with exact enumeration and exhaustive verification."""

from .bijections import (
    DecoderState,
    PATTERNS,
    decode,
    decode_from_odd_peaks,
    decode_trace,
    encode,
    encode_to_odd_peaks,
    to_odd_peaks,
    to_uh_free,
)
from .enumeration import (
    SeriesTable,
    bell_number,
    bell_numbers,
    binomial,
    count_blocks,
    count_uhfree_with_peaks,
    large_schroder,
    narayana,
    series,
    series_f,
    series_f_prime,
)
from .errors import (
    DEFAULT_LIMIT,
    InvalidObjectError,
    LimitExceededError,
    PreconditionError,
)
from .partitions import (
    Decomposition,
    SetPartition,
    avoids,
    avoids_12312_fast,
    avoids_12321_fast,
    contains_pattern,
    decompose,
    find_pattern,
    generate_partitions,
    is_irreducible,
    is_irreducible_char,
    parse_partition,
)
from .paths import (
    LatticePath,
    PATH_CLASSES,
    PathFlags,
    classify,
    generate_paths,
    parse_path,
    peaks,
)
from .rendering import render, render_ascii, render_svg
from .verify import CheckResult, run_checks

__version__ = "0.1.0"
