"""Partitions, (k+1)-cores, and the bijection with k-bounded partitions.

Partitions are tuples of weakly decreasing positive integers without
trailing zeros; () is the empty partition.  A (k+1)-core is a partition
with no cell of hook length exactly k+1 (equivalently, no removable rim
hook of length k+1).  The affine symmetric group acts on cores through
the residues (col - row) mod (k+1) of the cells.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .affine import AffinePermutation

Partition = tuple[int, ...]


def as_partition(seq: Iterable[int]) -> Partition:
    """Validate and normalize a partition, dropping trailing zeros."""
    parts = tuple(seq)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    return parts


def is_k_bounded(parts: Sequence[int], k: int) -> bool:
    return not parts or parts[0] <= k


def conjugate(parts: Partition) -> Partition:
    """Transpose of the diagram.

    >>> conjugate((4, 2, 1))
    (3, 2, 1, 1)
    """
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """Row-wise containment inner ⊆ outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def union_partitions(a: Partition, b: Partition) -> Partition:
    """Combine and sort the parts of two partitions."""
    return tuple(sorted(a + b, reverse=True))


def content(row: int, col: int, k: int) -> int:
    """Residue (col - row) mod (k+1) of the cell in the given row and column.

    >>> content(3, 1, 4)
    3
    """
    return (col - row) % (k + 1)


def hook_length(parts: Partition, conj: Partition, row: int, col: int) -> int:
    # 1-indexed cell (row, col) of parts; conj = conjugate(parts)
    return (parts[row - 1] - col) + (conj[col - 1] - row) + 1


def is_core(parts: Sequence[int], k: int) -> bool:
    """True iff no cell has hook length exactly k+1.

    For straight shapes this matches having no removable rim hook of
    length k+1.

    >>> is_core((6, 4, 3, 1), 4)
    True
    >>> is_core((3,), 2)
    False
    """
    parts = as_partition(parts)
    conj = conjugate(parts)
    return all(
        hook_length(parts, conj, i, j) != k + 1
        for i in range(1, len(parts) + 1)
        for j in range(1, parts[i - 1] + 1)
    )


def addable_corners(parts: Partition) -> list[tuple[int, int]]:
    """Cells (row, col) whose addition leaves a partition shape."""
    corners = []
    for i in range(len(parts)):
        if i == 0 or parts[i] < parts[i - 1]:
            corners.append((i + 1, parts[i] + 1))
    corners.append((len(parts) + 1, 1))
    return corners


def removable_corners(parts: Partition) -> list[tuple[int, int]]:
    """Cells (row, col) whose removal leaves a partition shape."""
    corners = []
    for i in range(len(parts)):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if parts[i] > below:
            corners.append((i + 1, parts[i]))
    return corners


def _add_cells(parts: Partition, cells: list[tuple[int, int]]) -> Partition:
    new = list(parts)
    for row, col in cells:
        if row == len(new) + 1:
            new.append(1)
        else:
            new[row - 1] += 1
        assert new[row - 1] == col
    return tuple(new)


def _remove_cells(parts: Partition, cells: list[tuple[int, int]]) -> Partition:
    new = list(parts)
    for row, _ in cells:
        new[row - 1] -= 1
    while new and new[-1] == 0:
        new.pop()
    return tuple(new)


def s_action(parts: Partition, i: int, k: int) -> Partition:
    """Action of s_i on a (k+1)-core.

    Adds every addable corner of residue i if there is one, otherwise
    removes every removable corner of residue i, otherwise fixes the
    core.  An involution.
    """
    add = [c for c in addable_corners(parts) if content(*c, k) == i]
    rem = [c for c in removable_corners(parts) if content(*c, k) == i]
    # a core never has both an addable and a removable corner of one residue
    assert not (add and rem), (parts, i, k)
    if add:
        result = _add_cells(parts, add)
    elif rem:
        result = _remove_cells(parts, rem)
    else:
        return parts
    assert is_core(result, k), (parts, i, k, result)
    return result


def u_action(parts: Partition, i: int, k: int) -> Optional[Partition]:
    """Nil generator u_i on a (k+1)-core: add all addable corners of
    residue i, or None (the zero of the module) if there are none."""
    add = [c for c in addable_corners(parts) if content(*c, k) == i]
    rem = [c for c in removable_corners(parts) if content(*c, k) == i]
    assert not (add and rem), (parts, i, k)
    if not add:
        return None
    result = _add_cells(parts, add)
    assert is_core(result, k), (parts, i, k, result)
    return result


def apply_word(parts: Partition, word: Sequence[int], k: int) -> Partition:
    """Act on a core by a word of s_i, rightmost letter first."""
    for i in reversed(word):
        parts = s_action(parts, i, k)
    return parts


def apply_word_nil(
    parts: Partition, word: Sequence[int], k: int
) -> Optional[Partition]:
    """Act on a core by a word of u_i, rightmost letter first; None if
    any step has no addable corner."""
    for i in reversed(word):
        nxt = u_action(parts, i, k)
        if nxt is None:
            return None
        parts = nxt
    return parts


def skew_reading_word(outer: Partition, inner: Partition, k: int) -> tuple[int, ...]:
    """Residues of the skew cells, rows read from the last row to the
    first, each row from its rightmost cell to its leftmost.

    >>> skew_reading_word((2, 2, 2), (), 4)
    (4, 3, 0, 4, 1, 0)
    """
    outer = as_partition(outer)
    inner = as_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"inner shape {inner} not contained in outer {outer}")
    padded = inner + (0,) * (len(outer) - len(inner))
    word = []
    for i in range(len(outer), 0, -1):
        for j in range(outer[i - 1], padded[i - 1], -1):
            word.append(content(i, j, k))
    return tuple(word)


def reading_word(parts: Partition, k: int) -> tuple[int, ...]:
    return skew_reading_word(parts, (), k)


def w_of_partition(parts: Sequence[int], k: int) -> AffinePermutation:
    """The minimal coset representative sending the empty core to the
    core of a k-bounded partition; its length is the partition size."""
    parts = as_partition(parts)
    if not is_k_bounded(parts, k):
        raise ValueError(f"partition {parts} has a part exceeding {k}")
    return AffinePermutation.from_word(k, reading_word(parts, k))


def bounded_to_core(parts: Sequence[int], k: int) -> Partition:
    """The (k+1)-core corresponding to a k-bounded partition.

    Computed by acting on the empty core with the reading word of the
    partition; every step adds at least one corner.
    """
    parts = as_partition(parts)
    if not is_k_bounded(parts, k):
        raise ValueError(f"partition {parts} has a part exceeding {k}")
    core = apply_word_nil((), reading_word(parts, k), k)
    assert core is not None, parts
    return core


def core_to_bounded(parts: Sequence[int], k: int) -> Partition:
    """The k-bounded partition corresponding to a (k+1)-core: row i keeps
    its cells of hook length at most k."""
    parts = as_partition(parts)
    if not is_core(parts, k):
        raise ValueError(f"{parts} is not a {k + 1}-core")
    conj = conjugate(parts)
    bounded = tuple(
        sum(1 for j in range(1, parts[i - 1] + 1) if hook_length(parts, conj, i, j) <= k)
        for i in range(1, len(parts) + 1)
    )
    return as_partition(bounded)


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n with parts at most max_part, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def k_bounded_partitions(n: int, k: int) -> list[Partition]:
    return list(partitions_of(n, max_part=k))


def partitions_in_box(cols: int, rows: int) -> list[Partition]:
    """Partitions fitting in a cols x rows box, in colex order on the
    padded part vectors.  There are binomial(cols + rows, cols) of them."""

    def gen(maxp: int, slots: int) -> Iterator[Partition]:
        yield ()
        if slots == 0 or maxp == 0:
            return
        for p in range(maxp, 0, -1):
            for rest in gen(p, slots - 1):
                yield (p,) + rest

    key = lambda t: tuple(reversed(t + (0,) * (rows - len(t))))
    return sorted(gen(cols, rows), key=key)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
