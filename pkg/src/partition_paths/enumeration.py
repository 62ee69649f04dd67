"""Exact counting: binomials, Narayana numbers, refined block/peak counts,
large Schroder numbers, Bell numbers, and truncated power series.

Everything in this module is integer arithmetic; there is deliberately no
floating point and no radical evaluation anywhere.
"""

import math
from dataclasses import dataclass
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for out-of-range arguments."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def narayana(n: int, k: int) -> int:
    """The number of Dyck paths of semilength n with exactly k peaks:
    C(n,k) * C(n,k-1) / n, which is always an exact integer."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    return binomial(n, k) * binomial(n, k - 1) // n


def count_blocks(n: int, k: int) -> int:
    """The number of 12312-avoiding (equally 12321-avoiding) partitions of
    [n+1] with k+1 blocks.

    For k >= 1 this is sum over j of narayana(j, k) * C(n, j): each block
    beyond the first becomes a peak, and a path with j non-horizontal ascent
    units and k peaks arises from a Dyck path of semilength j by inserting
    n - j horizontal steps.  For k = 0 the only partition is the all-ones
    word.
    """
    if k == 0:
        return 1
    return sum(narayana(j, k) * binomial(n, j) for j in range(k, n + 1))


def count_uhfree_with_peaks(n: int, k: int) -> int:
    """The number of UH-free Schroder paths of semilength n with k peaks:
    sum over j of narayana(j, k) * C(n, j) for k >= 1, and 1 for k = 0
    (the all-horizontal path)."""
    if k == 0:
        return 1
    total = 0
    for j in range(k, n + 1):
        total += narayana(j, k) * binomial(n, j)
    return total


@lru_cache(maxsize=None)
def large_schroder(n: int) -> int:
    """The number of Schroder paths of semilength n, by the first-step
    recurrence r(n) = r(n-1) + sum r(j) r(n-1-j) (leading H, or leading U
    with a first return splitting the remainder)."""
    if n <= 0:
        return 1
    return large_schroder(n - 1) + sum(
        large_schroder(j) * large_schroder(n - 1 - j) for j in range(n)
    )


def bell_numbers(order: int) -> list:
    """Bell numbers B(0) .. B(order), by the Bell triangle."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    out = [1]
    row = [1]
    for _ in range(order):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out[: order + 1]


def bell_number(n: int) -> int:
    return bell_numbers(n)[n]


@dataclass(frozen=True)
class SeriesTable:
    """Truncated power-series coefficients, indexed by semilength."""

    identifier: str
    coefficients: tuple

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> int:
        return self.coefficients[n]


def _mul(a: list, b: list, order: int) -> list:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _shift(a: list, order: int) -> list:
    """Multiply by x, truncated."""
    return [0] + a[:order]


def _sub(a: list, b: list) -> list:
    return [x - y for x, y in zip(a, b)]


def _add(a: list, b: list) -> list:
    return [x + y for x, y in zip(a, b)]


def series_f(order: int = 32) -> SeriesTable:
    """Coefficients of the series f counting UH-free Schroder paths by
    semilength, from the functional equation

        f = 1 + 2xf + xf(f - 1 - xf).

    Computed by coefficientwise fixed-point iteration: substituting the
    current truncation into the right-hand side fixes at least one further
    coefficient per pass, so the truncated fixed point is reached after at
    most order + 1 passes (the loop stops as soon as a pass is stationary).
    """
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    one = [1] + [0] * order
    cur = list(one)
    for _ in range(order + 2):
        inner = _sub(_sub(cur, one), _shift(cur, order))
        rhs = _add(
            _add(one, _shift([2 * c for c in cur], order)),
            _shift(_mul(cur, inner, order), order),
        )
        if rhs == cur:
            break
        cur = rhs
    return SeriesTable("f", tuple(cur))


def series_f_prime(order: int = 32) -> SeriesTable:
    """Coefficients of the series f' counting UH-free Schroder paths without
    peaks at level one, from

        f' = 1 + xf' + xf'(f - 1 - xf)

    with f taken from :func:`series_f`, iterated the same way."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    one = [1] + [0] * order
    f = list(series_f(order).coefficients)
    inner = _sub(_sub(f, one), _shift(f, order))
    cur = list(one)
    for _ in range(order + 2):
        rhs = _add(
            _add(one, _shift(cur, order)), _shift(_mul(cur, inner, order), order)
        )
        if rhs == cur:
            break
        cur = rhs
    return SeriesTable("f_prime", tuple(cur))


def series(identifier: str, order: int = 32) -> SeriesTable:
    """Series lookup by name: f, f_prime, schroder or bell."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    if identifier == "f":
        return series_f(order)
    if identifier == "f_prime":
        return series_f_prime(order)
    if identifier == "schroder":
        return SeriesTable(
            "schroder", tuple(large_schroder(n) for n in range(order + 1))
        )
    if identifier == "bell":
        return SeriesTable("bell", tuple(bell_numbers(order)))
    raise ValueError(f"unknown series {identifier!r}")
