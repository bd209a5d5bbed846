"""Finite-support count sequences indexed by ``k >= 3``.

These hold p-vectors (faces by size), v-vectors (vertices by valence) and
the direction vectors ``q`` and ``w`` of a growth family.  The bracket
notation ``[4 x 3, 8]`` is ``bracket([(4, 3), (1, 8)])``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping


class BadIndex(ValueError):
    """A sequence index below 3 or a negative count."""


class CountSequence(Mapping[int, int]):
    """Immutable mapping ``k -> count`` kept in canonical form.

    Zero counts are dropped and keys are kept sorted, so two sequences are
    equal exactly when they agree on every index.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, int] = {}
        for k, c in items:
            k, c = int(k), int(c)
            if k < 3:
                raise BadIndex(f"index {k} < 3")
            acc[k] = acc.get(k, 0) + c
        for k, c in acc.items():
            if c < 0:
                raise BadIndex(f"negative count {c} at index {k}")
        self._entries = {k: acc[k] for k in sorted(acc) if acc[k]}

    def __getitem__(self, k: int) -> int:
        return self._entries[k]

    def get(self, k, default=0):
        return self._entries.get(k, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, CountSequence):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {k: c for k, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"CountSequence({self._entries!r})"

    def __str__(self) -> str:
        return format_sequence(self)

    def __add__(self, other: Mapping[int, int]) -> "CountSequence":
        return add(self, other)

    def __sub__(self, other: Mapping[int, int]) -> "CountSequence":
        return subtract(self, other)

    def __rmul__(self, c: int) -> "CountSequence":
        return scale(c, self)

    def total(self) -> int:
        """Number of counted items, ``sum(count)``."""
        return sum(self._entries.values())

    def weighted_total(self) -> int:
        """``sum(k * count)``; twice the edge count for p- and v-vectors."""
        return sum(k * c for k, c in self._entries.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self._entries)


def bracket(parts: Iterable[tuple[int, int]]) -> CountSequence:
    """Build ``[a1 x k1, a2 x k2, ...]`` from ``(count, k)`` pairs."""
    return CountSequence((k, a) for a, k in parts)


def unit(k: int) -> CountSequence:
    """The sequence ``[k]``."""
    return CountSequence({k: 1})


def add(a: Mapping[int, int], b: Mapping[int, int]) -> CountSequence:
    return CountSequence(list(a.items()) + list(b.items()))


def subtract(a: Mapping[int, int], b: Mapping[int, int]) -> CountSequence:
    """``a - b``; raises :class:`BadIndex` if any count would go negative."""
    return CountSequence(list(a.items()) + [(k, -c) for k, c in b.items()])


def scale(c: int, a: Mapping[int, int]) -> CountSequence:
    if c < 0:
        raise BadIndex(f"negative scale {c}")
    return CountSequence({k: c * v for k, v in a.items()})


def proportional(a: Mapping[int, int], b: Mapping[int, int]) -> Fraction | None:
    """Return ``c`` with ``a == c * b`` over the union of supports, else None.

    ``None`` is also returned when ``b`` is zero, since no unique factor exists.
    """
    a = CountSequence(a)
    b = CountSequence(b)
    if not b:
        return None
    if set(a) - set(b):
        return None
    k0 = next(iter(b))
    c = Fraction(a.get(k0, 0), b[k0])
    if all(Fraction(a.get(k, 0)) == c * b[k] for k in b):
        return c
    return None


def parse_sequence(text: str) -> CountSequence:
    """Parse ``"3:4,8:1"``; the empty string is the zero sequence."""
    text = text.strip()
    if not text:
        return CountSequence()
    pairs = []
    for part in text.split(","):
        k, sep, c = part.partition(":")
        if not sep:
            raise ValueError(f"expected k:count, got {part!r}")
        pairs.append((int(k), int(c)))
    return CountSequence(pairs)


def format_sequence(a: Mapping[int, int]) -> str:
    return ",".join(f"{k}:{c}" for k, c in sorted(a.items()) if c)
