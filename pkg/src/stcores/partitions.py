"""Partitions, Young diagrams, rim hooks and the brute-force core oracle.

A partition is stored as its weakly decreasing tuple of positive parts; the
empty tuple is the empty partition.  Boxes are 1-based (row, col) pairs with
row growing downwards (English notation).

The rim-hook machinery here is deliberately literal: hooks are found by
sliding a window along the rim path and testing the removal, and
``brute_core`` removes the first hook over and over.  It is the oracle that
the fast abacus implementation is checked against, so it must not share any
machinery with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError

# Sizes and coordinates are kept inside 63-bit signed range so that results
# stay comparable with any fixed-width reimplementation of the text formats.
MAX_SIZE = 2**62 - 1


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Partition:
    """A partition as a weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        total = 0
        prev = None
        for part in self.parts:
            if not isinstance(part, int) or part < 1:
                raise DomainError(f"parts must be positive integers, got {part!r}")
            if prev is not None and part > prev:
                raise DomainError(f"parts must be weakly decreasing: {self.parts}")
            prev = part
            total += part
        if total > MAX_SIZE:
            raise DomainError("partition size exceeds the 63-bit guard")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return to_text(self)

    def row(self, i: int) -> int:
        """The i-th part (1-based), reading 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0


EMPTY = Partition()


def from_text(text: str) -> Partition:
    """Parse the canonical comma-separated form; empty string is ()."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise DomainError(f"malformed partition text: {text!r}") from exc
    return Partition(parts)


def to_text(p: Partition) -> str:
    return ",".join(str(part) for part in p.parts)


def size(p: Partition) -> int:
    return sum(p.parts)


def contains(outer: Partition, inner: Partition) -> bool:
    """Young-diagram containment: every row of inner fits inside outer."""
    return all(inner.row(i) <= outer.row(i) for i in range(1, len(inner) + 1))


def conjugate(p: Partition) -> Partition:
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.row(1) + 1)))


def boxes(p: Partition) -> Iterator[Box]:
    for i, part in enumerate(p.parts, start=1):
        for j in range(1, part + 1):
            yield Box(i, j)


def hook_lengths(p: Partition) -> dict[Box, int]:
    """Hook length (arm + leg + 1) of every box."""
    conj = conjugate(p).parts
    return {
        Box(i, j): (part - j) + (conj[j - 1] - i) + 1
        for i, part in enumerate(p.parts, start=1)
        for j in range(1, part + 1)
    }


def is_s_core_by_hooks(p: Partition, s: int) -> bool:
    """True iff no hook length is divisible by s."""
    if s < 1:
        raise DomainError("s must be a positive integer")
    return all(h % s != 0 for h in hook_lengths(p).values())


def rim(p: Partition) -> set[Box]:
    """Boxes (i,j) of the diagram with (i+1,j+1) outside it."""
    out: set[Box] = set()
    n = len(p.parts)
    for i, part in enumerate(p.parts, start=1):
        lo = p.row(i + 1) if i < n else 0
        out.update(Box(i, j) for j in range(max(1, lo), part + 1))
    return out


def rim_path(p: Partition) -> list[Box]:
    """The rim ordered from (1, first part) down-left to (rows, 1).

    Consecutive boxes share an edge and the antidiagonal j - i drops by one
    per step, so connected rim portions are exactly windows of this path.
    """
    if not p.parts:
        return []
    path = [Box(1, p.parts[0])]
    rows = len(p.parts)
    while path[-1] != Box(rows, 1):
        i, j = path[-1]
        if i < rows and p.parts[i] >= j:
            path.append(Box(i + 1, j))
        else:
            path.append(Box(i, j - 1))
    return path


@dataclass(frozen=True)
class RimHook:
    """A removable rim hook: consecutive rim boxes whose removal is valid.

    Instances produced by ``removable_rim_hooks`` are pre-validated;
    ``remove_rim_hook`` re-validates against the partition it is applied to.
    """

    boxes: tuple[Box, ...]

    def __len__(self) -> int:
        return len(self.boxes)


def _removal_result(p: Partition, hook_boxes: tuple[Box, ...]) -> Partition | None:
    """The partition left after removing the boxes, or None if not a valid removal."""
    by_row: dict[int, list[int]] = {}
    for i, j in hook_boxes:
        by_row.setdefault(i, []).append(j)
    rows = sorted(by_row)
    if rows != list(range(rows[0], rows[-1] + 1)):
        return None
    new_parts = list(p.parts)
    for i in rows:
        cols = sorted(by_row[i])
        # removal must strip a suffix of the row
        if cols != list(range(cols[0], cols[-1] + 1)) or cols[-1] != p.row(i):
            return None
        new_parts[i - 1] = cols[0] - 1
    while new_parts and new_parts[-1] == 0:
        new_parts.pop()
    if any(new_parts[k] > new_parts[k - 1] for k in range(1, len(new_parts))):
        return None
    if any(part == 0 for part in new_parts):
        return None
    return Partition(tuple(new_parts))


def removable_rim_hooks(p: Partition, s: int) -> list[RimHook]:
    """All rim s-hooks, ordered by their start box (top-right end first)."""
    if s < 1:
        raise DomainError("s must be a positive integer")
    path = rim_path(p)
    hooks = []
    for start in range(len(path) - s + 1):
        window = tuple(path[start : start + s])
        if _removal_result(p, window) is not None:
            hooks.append(RimHook(window))
    return hooks


def remove_rim_hook(p: Partition, h: RimHook) -> Partition:
    """Remove a rim hook, validating it against p."""
    box_set = set(boxes(p))
    if not h.boxes or any(b not in box_set for b in h.boxes):
        raise DomainError("hook does not fit the partition")
    for a, b in zip(h.boxes, h.boxes[1:]):
        if (b.row - a.row, b.col - a.col) not in ((1, 0), (0, -1)):
            raise DomainError("hook boxes are not consecutive along the rim")
    result = _removal_result(p, h.boxes)
    if result is None:
        raise DomainError("removing the hook does not leave a Young diagram")
    return result


def brute_core(p: Partition, s: int) -> Partition:
    """The s-core by greedy repeated rim-hook removal (oracle implementation).

    Always removes the first hook in ``removable_rim_hooks`` order; the core
    is independent of the choice, so any fixed order is correct and this one
    makes the oracle deterministic.
    """
    if s < 1:
        raise DomainError("s must be a positive integer")
    while True:
        hooks = removable_rim_hooks(p, s)
        if not hooks:
            return p
        p = remove_rim_hook(p, hooks[0])


def addable_boxes(p: Partition) -> list[Box]:
    """Boxes that can be added leaving a Young diagram."""
    out = []
    for i in range(1, len(p.parts) + 2):
        j = p.row(i) + 1
        if i == 1 or p.row(i - 1) >= j:
            out.append(Box(i, j))
    return out


def removable_boxes(p: Partition) -> list[Box]:
    """Boxes that can be removed leaving a Young diagram (rim 1-hooks)."""
    return [
        Box(i, part)
        for i, part in enumerate(p.parts, start=1)
        if p.row(i + 1) < part
    ]


def boxes_of_residue(p: Partition, k: int, s: int, mode: str) -> set[Box]:
    """Addable or removable boxes whose residue (col - row) mod s equals k."""
    if s < 1 or not 0 <= k < s:
        raise DomainError("need s >= 1 and 0 <= k < s")
    if mode == "addable":
        candidates = addable_boxes(p)
    elif mode == "removable":
        candidates = removable_boxes(p)
    else:
        raise DomainError(f"mode must be 'addable' or 'removable', got {mode!r}")
    return {b for b in candidates if (b.col - b.row) % s == k}


def toggle_residue(p: Partition, k: int, s: int) -> Partition:
    """Add all addable boxes of residue k, else remove all removable ones.

    Defined on s-cores only; an s-core never has addable and removable boxes
    of the same residue, so the two branches cannot clash.
    """
    if not is_s_core_by_hooks(p, s):
        raise DomainError("toggle_residue requires an s-core")
    to_add = boxes_of_residue(p, k, s, "addable")
    if to_add:
        new_parts = list(p.parts)
        for i, j in sorted(to_add):
            if i == len(new_parts) + 1:
                new_parts.append(j)
            else:
                new_parts[i - 1] = j
        return Partition(tuple(new_parts))
    new_parts = list(p.parts)
    for i, j in boxes_of_residue(p, k, s, "removable"):
        new_parts[i - 1] = j - 1
    while new_parts and new_parts[-1] == 0:
        new_parts.pop()
    return Partition(tuple(new_parts))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, largest-part-first recursion."""

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    if n < 0:
        raise DomainError("n must be non-negative")
    for parts in gen(n, n if n else 1, ()):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of size 0..n."""
    for m in range(n + 1):
        yield from partitions_of(m)
