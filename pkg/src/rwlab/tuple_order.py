"""Layered tuple universe: total order, successors, intervals, flat steps.

The universe of depth d >= 1 consists of integer tuples (a_1, ..., a_k) with
1 <= k <= d, every a_i in {1, 3} for i < k, and a_k in {1, 2, 3, 4}.  The
order places a strict prefix before each of its extensions and otherwise
compares at the first differing coordinate, so the sorted universe is the
preorder walk of the extension tree.  Consecutive elements form steps; a step
whose endpoints have equal length is called flat.  The parity of flat steps
inside proper intervals is what forces every cycle of the graph family built
on top of this module to be odd (see gd_builder and verify).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

PREFIX_DIGITS = (1, 3)
FINAL_DIGITS = (1, 2, 3, 4)

LESS = -1
EQUAL = 0
GREATER = 1


def tuple_is_valid(a, d: int | None = None) -> bool:
    """True when a is a universe element (of depth at most d when given)."""
    if not isinstance(a, tuple) or len(a) == 0:
        return False
    if d is not None and not 1 <= len(a) <= d:
        return False
    return all(x in PREFIX_DIGITS for x in a[:-1]) and a[-1] in FINAL_DIGITS


def _require_tuple(a, d: int | None = None) -> None:
    if not tuple_is_valid(a, d):
        where = "" if d is None else f" of depth {d}"
        raise ValueError(f"not a universe element{where}: {a!r}")


def format_tuple(a: Sequence[int]) -> str:
    """Render as "(a1,a2,...)" with no spaces."""
    return "(" + ",".join(str(x) for x in a) + ")"


def parse_tuple(text: str) -> tuple[int, ...]:
    """Parse "(a1,a2,...)"; whitespace around coordinates is tolerated."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed tuple text: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError(f"empty tuple text: {text!r}")
    try:
        return tuple(int(part.strip()) for part in body.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed tuple text: {text!r}") from exc


@lru_cache(maxsize=64)
def enumerate_universe(d: int) -> tuple[tuple[int, ...], ...]:
    """All universe elements of depth d, ascending; size is 4*(2**d - 1)."""
    if d < 1:
        raise ValueError(f"depth must be at least 1, got {d}")
    out: list[tuple[int, ...]] = []

    def emit(prefix: tuple[int, ...]) -> None:
        out.append(prefix)
        if len(prefix) < d and prefix[-1] in PREFIX_DIGITS:
            for x in FINAL_DIGITS:
                emit(prefix + (x,))

    for x in FINAL_DIGITS:
        emit((x,))
    return tuple(out)


@lru_cache(maxsize=64)
def universe_index(d: int) -> dict[tuple[int, ...], int]:
    """Position of each element within enumerate_universe(d).  Do not mutate."""
    return {a: i for i, a in enumerate(enumerate_universe(d))}


def compare(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Three-way comparison returning LESS, EQUAL or GREATER.

    A strict prefix precedes all of its extensions; otherwise the first
    differing coordinate decides.
    """
    _require_tuple(a)
    _require_tuple(b)
    for x, y in zip(a, b):
        if x != y:
            return LESS if x < y else GREATER
    if len(a) == len(b):
        return EQUAL
    return LESS if len(a) < len(b) else GREATER


def successor(a: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Smallest universe element greater than a (by position lookup)."""
    _require_tuple(a, d)
    if a == (4,):
        raise ValueError("(4) is the maximum element and has no successor")
    return enumerate_universe(d)[universe_index(d)[a] + 1]


def predecessor(a: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Greatest universe element smaller than a (by position lookup)."""
    _require_tuple(a, d)
    if a == (1,):
        raise ValueError("(1) is the minimum element and has no predecessor")
    return enumerate_universe(d)[universe_index(d)[a] - 1]


def successor_closed_form(a: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Successor by case analysis; cross-validates the position lookup.

    Extendable elements (last digit 1 or 3 at length below d) descend to
    their first extension; a last digit below 4 bumps in place; a trailing 4
    pops one level and bumps the parent's last digit.
    """
    _require_tuple(a, d)
    if len(a) < d and a[-1] in PREFIX_DIGITS:
        return a + (1,)
    if a[-1] < 4:
        return a[:-1] + (a[-1] + 1,)
    if len(a) == 1:
        raise ValueError("(4) is the maximum element and has no successor")
    return a[:-2] + (a[-2] + 1,)


def predecessor_closed_form(a: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Predecessor by case analysis; inverse of successor_closed_form."""
    _require_tuple(a, d)
    if a == (1,):
        raise ValueError("(1) is the minimum element and has no predecessor")
    if a[-1] == 1 and len(a) > 1:
        return a[:-1]
    prev = a[:-1] + (a[-1] - 1,)
    if len(prev) < d and prev[-1] in PREFIX_DIGITS:
        return prev + (4,)
    return prev


@dataclass(frozen=True)
class Interval:
    """Closed range [lo, hi] within the depth-d universe."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]
    depth: int

    def __post_init__(self) -> None:
        _require_tuple(self.lo, self.depth)
        _require_tuple(self.hi, self.depth)
        if compare(self.lo, self.hi) == GREATER:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")


def interval_elements(iv: Interval) -> tuple[tuple[int, ...], ...]:
    """Elements of the interval in ascending order (a universe slice)."""
    pos = universe_index(iv.depth)
    return enumerate_universe(iv.depth)[pos[iv.lo] : pos[iv.hi] + 1]


def is_proper(iv: Interval) -> bool:
    """True when no interior element shares a length with either endpoint."""
    ends = {len(iv.lo), len(iv.hi)}
    return all(len(c) not in ends for c in interval_elements(iv)[1:-1])


def count_flat_steps(iv: Interval) -> int:
    """Number of equal-length consecutive pairs inside the interval."""
    elems = interval_elements(iv)
    return sum(1 for c, s in zip(elems, elems[1:]) if len(c) == len(s))


def iter_proper_intervals(seq: Sequence[tuple[int, ...]]) -> Iterator[tuple[int, int, int]]:
    """Yield (i, j, flat_count) for every proper interval of the sequence.

    Works over any sequence of tuples since properness and flatness depend
    only on the length profile.  For each start the scan stops at the next
    element of equal length, past which no interval with that start stays
    proper, so a full pass is near-linear rather than cubic.
    """
    n = len(seq)
    lengths = [len(t) for t in seq]
    flat_before = [0] * n
    for i in range(1, n):
        flat_before[i] = flat_before[i - 1] + (lengths[i] == lengths[i - 1])
    for i in range(n - 1):
        li = lengths[i]
        interior: dict[int, int] = {}
        for j in range(i + 1, n):
            lj = lengths[j]
            if not interior.get(lj):
                yield i, j, flat_before[j] - flat_before[i]
            if lj == li:
                break
            interior[lj] = interior.get(lj, 0) + 1


@dataclass(frozen=True)
class ParityCounterexample:
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    flat_steps: int
    expected: str  # "odd" or "zero"

    def as_dict(self) -> dict:
        return {
            "lo": format_tuple(self.lo),
            "hi": format_tuple(self.hi),
            "flat_steps": self.flat_steps,
            "expected": self.expected,
        }


@dataclass(frozen=True)
class ParityReport:
    depth: int | None
    passed: bool
    proper_intervals: int
    equal_endpoint_intervals: int
    mixed_endpoint_intervals: int
    counterexample: ParityCounterexample | None

    def as_dict(self) -> dict:
        return {
            "depth": self.depth,
            "passed": self.passed,
            "proper_intervals": self.proper_intervals,
            "equal_endpoint_intervals": self.equal_endpoint_intervals,
            "mixed_endpoint_intervals": self.mixed_endpoint_intervals,
            "counterexample": self.counterexample.as_dict() if self.counterexample else None,
        }


def scan_flat_step_parity(seq: Sequence[tuple[int, ...]], depth: int | None = None) -> ParityReport:
    """Audit flat-step parity over every proper interval of a sequence.

    Equal-length endpoints must enclose an odd number of flat steps, mixed
    lengths exactly zero.  Stops at the first violation.
    """
    proper = equal = mixed = 0
    for i, j, flats in iter_proper_intervals(seq):
        proper += 1
        if len(seq[i]) == len(seq[j]):
            equal += 1
            if flats % 2 == 0:
                bad = ParityCounterexample(seq[i], seq[j], flats, "odd")
                return ParityReport(depth, False, proper, equal, mixed, bad)
        else:
            mixed += 1
            if flats != 0:
                bad = ParityCounterexample(seq[i], seq[j], flats, "zero")
                return ParityReport(depth, False, proper, equal, mixed, bad)
    return ParityReport(depth, True, proper, equal, mixed, None)


def check_parity_lemmas(d: int) -> ParityReport:
    """Exhaustive parity audit of all proper intervals at depth d."""
    return scan_flat_step_parity(enumerate_universe(d), depth=d)
