"""Graded Betti tables: sparse maps (homological degree i, internal degree j)
-> rank, with the usual pd/reg read-offs."""

from __future__ import annotations

from typing import Iterable, Mapping


class BettiTable:
    """Immutable-by-convention table of graded Betti numbers.

    Only nonzero entries are stored.  ``pd`` and ``reg`` return ``None`` for
    the empty table (the zero module has neither).
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int]):
        cleaned: dict[tuple[int, int], int] = {}
        for (i, j), r in entries.items():
            r = int(r)
            if r < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if i < 0:
                raise ValueError(f"negative homological degree {(i, j)}")
            if r:
                cleaned[(int(i), int(j))] = r
        self._entries = cleaned

    def get(self, i: int, j: int) -> int:
        return self._entries.get((i, j), 0)

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        return sorted(self._entries.items())

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._entries.items())))

    @property
    def projective_dimension(self) -> int | None:
        if not self._entries:
            return None
        return max(i for i, _ in self._entries)

    @property
    def regularity(self) -> int | None:
        if not self._entries:
            return None
        return max(j - i for i, j in self._entries)

    def total(self, i: int) -> int:
        """The i-th total Betti number."""
        return sum(r for (ii, _), r in self._entries.items() if ii == i)

    def shift_for_quotient(self) -> "BettiTable":
        """Table of R/I from the table of I: beta_{i+1,j}(R/I) = beta_{i,j}(I)
        and beta_{0,0}(R/I) = 1."""
        shifted = {(i + 1, j): r for (i, j), r in self._entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(shifted)

    def as_json_dict(self) -> dict[str, int]:
        return {f"{i},{j}": r for (i, j), r in sorted(self._entries.items())}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, int]) -> "BettiTable":
        entries = {}
        for key, r in data.items():
            i, j = key.split(",")
            entries[(int(i), int(j))] = int(r)
        return cls(entries)

    def __repr__(self) -> str:
        return f"BettiTable({dict(sorted(self._entries.items()))!r})"

    def __str__(self) -> str:
        """Small text grid: rows are j - i (as in Macaulay2), columns i."""
        if not self._entries:
            return "BettiTable(empty)"
        imax = max(i for i, _ in self._entries)
        strands = sorted({j - i for i, j in self._entries})
        width = max(5, max(len(str(r)) for r in self._entries.values()) + 1)
        head = "j-i|" + "".join(f"{i:>{width}}" for i in range(imax + 1))
        lines = [head, "-" * len(head)]
        for s in strands:
            row = f"{s:>3}|" + "".join(
                f"{self.get(i, i + s) or '.':>{width}}" for i in range(imax + 1)
            )
            lines.append(row)
        return "\n".join(lines)
