"""Exact rational geometry of the affine reflection action.

Points live in V = R^(k+1) modulo the all-ones vector; we store one
representative as a tuple of Fractions and compare modulo the diagonal.
The fundamental alcove is {a : a_1 >= a_2 >= ... >= a_{k+1} >= a_1 - 1};
its images under the group tile V, and each group element w is pinned
down by the centroid of its alcove.  All arithmetic is exact: wall
membership tests would be meaningless in floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .affine import AffinePermutation

Point = tuple[Fraction, ...]
Weight = tuple[int, ...]


def make_point(coords: Iterable) -> Point:
    return tuple(Fraction(x) for x in coords)


def same_point(p: Sequence, q: Sequence) -> bool:
    """Equality modulo the all-ones vector: all coordinate differences agree."""
    if len(p) != len(q):
        return False
    diffs = {Fraction(a) - Fraction(b) for a, b in zip(p, q)}
    return len(diffs) == 1


def add_points(p: Sequence, q: Sequence) -> Point:
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(p, q))


def reflect(i: int, p: Sequence) -> Point:
    """The affine reflection of a point across the i-th wall.

    For i != 0 this swaps coordinates i and i+1; for i = 0 it exchanges
    the first and last coordinates with a unit shift.
    """
    n = len(p)
    q = list(make_point(p))
    if i == 0:
        q[0], q[n - 1] = Fraction(p[n - 1]) + 1, Fraction(p[0]) - 1
    else:
        q[i - 1], q[i] = Fraction(p[i]), Fraction(p[i - 1])
    return tuple(q)


def reflect_linear(i: int, p: Sequence) -> Point:
    """Linear part of reflect: the plain coordinate swap, no shift."""
    n = len(p)
    q = list(make_point(p))
    if i == 0:
        q[0], q[n - 1] = q[n - 1], q[0]
    else:
        q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def act(w: AffinePermutation, p: Sequence) -> Point:
    """The affine action of a group element on a point.

    Folding reflect over any reduced word of w gives the same map; this
    closed form reads the permutation-with-shifts off the window of the
    inverse: coordinate j of the result is p_t - q where
    w^(-1)(j) = t + q(k+1) with t in 1..k+1.
    """
    n = w.k + 1
    winv = w.inverse()
    out = []
    for j in range(1, n + 1):
        q, t = divmod(winv.value(j) - 1, n)
        out.append(Fraction(p[t]) - q)
    return tuple(out)


def act_linear(w: AffinePermutation, p: Sequence) -> Point:
    """Linear part of act; permutes coordinates, preserving 0/1 vectors."""
    n = w.k + 1
    winv = w.inverse()
    return tuple(Fraction(p[(winv.value(j) - 1) % n]) for j in range(1, n + 1))


def label(weight: Sequence[int]) -> int:
    """Sum of the coordinates mod (k+1); constant on vertices of a given
    kind across all alcoves and invariant under the diagonal shift."""
    return sum(weight) % len(weight)


def fundamental_weight(k: int, i: int) -> Weight:
    """The 0/1 vector with i leading ones; the label-i vertex of the
    fundamental alcove (i = 0 gives the origin)."""
    if not 0 <= i <= k:
        raise ValueError(f"weight index must be in 0..{k}, got {i}")
    return (1,) * i + (0,) * (k + 1 - i)


def simple_root(k: int, i: int) -> Weight:
    if not 0 <= i <= k:
        raise ValueError(f"root index must be in 0..{k}, got {i}")
    if i == 0:
        return (-1,) + (0,) * (k - 1) + (1,)
    e = [0] * (k + 1)
    e[i - 1], e[i] = 1, -1
    return tuple(e)


def fundamental_centroid(k: int) -> Point:
    """Average of the k+1 vertices of the fundamental alcove:
    (k/(k+1), (k-1)/(k+1), ..., 1/(k+1), 0).

    >>> fundamental_centroid(1)
    (Fraction(1, 2), Fraction(0, 1))
    """
    n = k + 1
    return tuple(Fraction(n - 1 - t, n) for t in range(n))


def centroid(w: AffinePermutation) -> Point:
    """Centroid of the alcove of w: the inverse of w applied to the
    fundamental centroid."""
    return act(w.inverse(), fundamental_centroid(w.k))


def is_dominant(p: Sequence) -> bool:
    """Weak decrease of the coordinates; well defined modulo the diagonal."""
    q = make_point(p)
    return all(q[i] >= q[i + 1] for i in range(len(q) - 1))


def alcove_of(point: Sequence) -> AffinePermutation:
    """The group element whose alcove contains the point.

    Greedy walk: while a wall inequality of the fundamental alcove
    fails, reflect through the violated wall of smallest index and
    record it.  The recorded word is reduced and the returned w
    satisfies: w applied to the point lands inside the fundamental
    alcove.  A point on any reflection hyperplane raises ValueError.
    """
    p = make_point(point)
    k = len(p) - 1
    n = k + 1
    letters: list[int] = []
    while True:
        if p[0] - p[n - 1] > 1:
            p = reflect(0, p)
            letters.append(0)
            continue
        for i in range(1, n):
            if p[i - 1] < p[i]:
                p = reflect(i, p)
                letters.append(i)
                break
        else:
            break
    on_wall = any(p[i - 1] == p[i] for i in range(1, n)) or p[0] - p[n - 1] == 1
    if on_wall:
        raise ValueError("point on wall")
    return AffinePermutation.from_word(k, reversed(letters))


def pseudo_translation(gamma: Sequence[int]) -> AffinePermutation:
    """The element carrying the fundamental alcove to its translate by
    an integer weight (acting on other alcoves it translates them too,
    generally in different directions)."""
    if any(int(x) != x for x in gamma):
        raise ValueError(f"weight must be integral: {gamma}")
    k = len(gamma) - 1
    target = add_points(fundamental_centroid(k), gamma)
    w = alcove_of(target)
    assert same_point(centroid(w), target)
    return w


def translation(alpha: Sequence[int]) -> AffinePermutation:
    """Translation by the negative of a root lattice vector: the element
    t with t acting on every point p as p - alpha."""
    if any(int(x) != x for x in alpha):
        raise ValueError(f"root lattice vector must be integral: {alpha}")
    if sum(alpha) != 0:
        raise ValueError(f"root lattice vector must sum to 0: {alpha}")
    return pseudo_translation(alpha)


def gamma_vectors(k: int, c: int) -> list[Weight]:
    """All 0/1 vectors of length k+1 with exactly c ones."""
    out = []
    for ones in combinations(range(k + 1), c):
        v = [0] * (k + 1)
        for t in ones:
            v[t] = 1
        out.append(tuple(v))
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
