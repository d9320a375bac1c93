"""Four constructions of the k-Schur function of a maximal rectangle.

A maximal rectangle has c columns and r rows with c + r = k + 1.  Its
k-Schur function admits four closed expansions in the standard basis of
the nilCoxeter algebra, all with binomial(k+1, c) terms of coefficient
one:

  by_readings      sums the reading words of the rectangle shifted over
                   every partition it contains;
  by_translations  sums the pseudo-translations of the fundamental
                   alcove in every 0/1 direction with c ones;
  by_columns       sums, for every c-subset of generator indices, the
                   product of its r consecutive cyclic shifts;
  by_windows       sums basis elements given directly by windows that
                   drop chosen entries by r and raise the rest by c.

The verification sweeps check the four agree, that they equal the
k-Schur function computed from the Pieri recursion, and the commutation
that conjugates a generator index by c across the rectangle element.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .affine import AffinePermutation
from .alcoves import (
    act_linear,
    fundamental_weight,
    gamma_vectors,
    pseudo_translation,
)
from .cores import (
    Partition,
    as_partition,
    bounded_to_core,
    conjugate,
    contains,
    k_bounded_partitions,
    partitions_in_box,
    skew_reading_word,
    union_partitions,
    w_of_partition,
)
from .nilcoxeter import (
    AlgebraElement,
    act_on_core,
    cyclically_decreasing_word,
    kschur,
    negative_terms,
)
from .reports import Check, Report


@dataclass(frozen=True)
class Rectangle:
    """Maximal rectangle with cols + rows = k + 1."""

    k: int
    cols: int
    rows: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"rank parameter must be >= 1, got {self.k}")
        if self.cols < 1 or self.rows < 1 or self.cols + self.rows != self.k + 1:
            raise ValueError(
                f"need cols, rows >= 1 with cols + rows = {self.k + 1}: "
                f"got cols={self.cols}, rows={self.rows}"
            )

    @classmethod
    def with_rows(cls, k: int, rows: int) -> "Rectangle":
        return cls(k, k + 1 - rows, rows)

    def partition(self) -> Partition:
        return (self.cols,) * self.rows

    def transpose(self) -> "Rectangle":
        return Rectangle(self.k, self.rows, self.cols)


def by_readings(rect: Rectangle) -> AlgebraElement:
    """Sum of u(reading word) of the rectangle restacked over each
    contained partition: the shape keeps the partition's rows on top of
    the full rectangle rows, skewed by the partition itself."""
    k, c, r = rect.k, rect.cols, rect.rows
    terms = {}
    for nu in partitions_in_box(c, r):
        outer = (c,) * r + nu
        word = skew_reading_word(outer, nu, k)
        w = AffinePermutation.from_word(k, word)
        assert w.length() == r * c, (nu, word)
        assert w not in terms, nu
        terms[w] = 1
    return AlgebraElement(k, terms)


def by_translations(rect: Rectangle) -> AlgebraElement:
    """Sum of u(z) over the pseudo-translations z of the fundamental
    alcove in the 0/1 directions with cols many ones."""
    k, c = rect.k, rect.cols
    terms = {}
    for gamma in gamma_vectors(k, c):
        w = pseudo_translation(gamma)
        assert w not in terms, gamma
        terms[w] = 1
    return AlgebraElement(k, terms)


def by_columns(rect: Rectangle) -> AlgebraElement:
    """Sum over c-subsets A of generator indices of the product of the
    cyclically decreasing elements of A, A+1, ..., A+rows-1."""
    k, c, r = rect.k, rect.cols, rect.rows
    n = k + 1
    terms = {}
    for subset in combinations(range(n), c):
        word: list[int] = []
        for d in range(r):
            shifted = [(a + d) % n for a in subset]
            word.extend(cyclically_decreasing_word(k, shifted))
        w = AffinePermutation.from_word(k, word)
        assert w.length() == r * c, (subset, word)
        assert w not in terms, subset
        terms[w] = 1
    return AlgebraElement(k, terms)


def by_windows(rect: Rectangle) -> AlgebraElement:
    """Sum over c-subsets B of window positions 1..k+1 of the basis
    element whose window entry is i - rows when i is in B and i + cols
    otherwise."""
    k, c, r = rect.k, rect.cols, rect.rows
    terms = {}
    for chosen in combinations(range(1, k + 2), c):
        in_b = set(chosen)
        window = tuple(i - r if i in in_b else i + c for i in range(1, k + 2))
        w = AffinePermutation(k, window)
        assert w not in terms, chosen
        terms[w] = 1
    return AlgebraElement(k, terms)


def column_choice(rect: Rectangle, nu: Sequence[int]) -> tuple[int, ...]:
    """The c-subset of residues matching a contained partition: labels
    of the horizontal steps of the boundary path of the partition inside
    the rectangle, walked from the upper left corner with the starting
    label -2*rows + 1 and incremented by one per unit step.

    Identifies the by_readings term of the partition with the
    by_columns term of the returned subset.
    """
    k, c, r = rect.k, rect.cols, rect.rows
    nu = as_partition(nu)
    if not contains(rect.partition(), nu):
        raise ValueError(f"{nu} not contained in {rect.partition()}")
    n = k + 1

    def part(d: int) -> int:
        if d == 0:
            return c
        return nu[d - 1] if d <= len(nu) else 0

    labels: list[int] = []
    for j in range(r + 1):
        lo = part(r - j + 1) - 2 * r + 1 + j
        hi = part(r - j) - 2 * r + 1 + j
        labels.extend(i % n for i in range(lo, hi))
    assert len(labels) == c and len(set(labels)) == c, (nu, labels)
    return tuple(sorted(labels))


def translation_weight(rect: Rectangle, nu: Sequence[int]) -> tuple[int, ...]:
    """The 0/1 direction whose pseudo-translation equals the by_readings
    term of a contained partition: the linear action of the partition's
    group element on the dominant 0/1 weight with c ones."""
    nu = as_partition(nu)
    if not contains(rect.partition(), nu):
        raise ValueError(f"{nu} not contained in {rect.partition()}")
    w = w_of_partition(nu, rect.k)
    weight = act_linear(w, fundamental_weight(rect.k, rect.cols))
    return tuple(int(x) for x in weight)


def transpose_weight(rect: Rectangle, gamma: Sequence[int]) -> tuple[int, ...]:
    """The direction for the transposed rectangle whose pseudo-translation
    is the index-reflected image of the pseudo-translation of gamma."""
    gamma = tuple(gamma)
    k, c = rect.k, rect.cols
    if sorted(gamma) != [0] * (rect.rows) + [1] * c:
        raise ValueError(f"direction must be 0/1 with {c} ones: {gamma}")
    for nu in partitions_in_box(c, rect.rows):
        if translation_weight(rect, nu) == gamma:
            return translation_weight(rect.transpose(), conjugate(nu))
    raise AssertionError(f"no partition maps to {gamma}")


def act_on_partition(rect: Rectangle, lam: Sequence[int]) -> Partition:
    """Apply the rectangle element to the core of a k-bounded partition.

    Exactly one term survives and the result is the core of the sorted
    union of the partition with the rectangle.
    """
    k = rect.k
    lam = as_partition(lam)
    image = act_on_core(by_readings(rect), bounded_to_core(lam, k))
    assert len(image) == 1, (rect, lam, image)
    (core, coeff), = image.items()
    assert coeff == 1, (rect, lam, image)
    expected = bounded_to_core(union_partitions(lam, rect.partition()), k)
    assert core == expected, (rect, lam, core, expected)
    return core


def all_rectangles(k: int) -> list[Rectangle]:
    return [Rectangle.with_rows(k, rows) for rows in range(1, k + 1)]


def _binomial(n: int, t: int) -> int:
    out = 1
    for d in range(1, t + 1):
        out = out * (n - d + 1) // d
    return out


def verify_equivalences(kmax: int) -> Report:
    """All four constructions agree, with the expected term count, for
    every rectangle with k up to kmax."""
    checks = []
    for k in range(1, kmax + 1):
        for rect in all_rectangles(k):
            start = time.perf_counter()
            x = by_readings(rect)
            y = by_translations(rect)
            z = by_columns(rect)
            w = by_windows(rect)
            expected = _binomial(k + 1, rect.cols)
            ok = x == y == z == w and len(x) == expected
            checks.append(
                Check(
                    name=f"equivalence k={k} cols={rect.cols} rows={rect.rows}",
                    passed=ok,
                    seconds=time.perf_counter() - start,
                    details={
                        "k": k,
                        "cols": rect.cols,
                        "rows": rect.rows,
                        "terms": len(x),
                        "expected_terms": expected,
                        "readings_eq_translations": x == y,
                        "readings_eq_columns": x == z,
                        "translations_eq_windows": y == w,
                    },
                )
            )
    return Report(tuple(checks))


def verify_main(rect: Rectangle, action_size: int = 4) -> Report:
    """The closed formula equals the k-Schur function of the rectangle,
    and acting on cores multiplies partitions by the rectangle."""
    k = rect.k
    checks = []

    start = time.perf_counter()
    formula = by_readings(rect)
    schur = kschur(k, rect.partition())
    checks.append(
        Check(
            name=f"main k={k} cols={rect.cols} rows={rect.rows}",
            passed=formula == schur,
            seconds=time.perf_counter() - start,
            details={
                "k": k,
                "cols": rect.cols,
                "rows": rect.rows,
                "terms": len(formula),
                "negative_coefficients": len(negative_terms(schur)),
            },
        )
    )

    start = time.perf_counter()
    failures = []
    count = 0
    for n in range(action_size + 1):
        for lam in k_bounded_partitions(n, k):
            count += 1
            try:
                act_on_partition(rect, lam)
            except AssertionError:
                failures.append(list(lam))
    checks.append(
        Check(
            name=f"single-term action k={k} cols={rect.cols} rows={rect.rows}",
            passed=not failures,
            seconds=time.perf_counter() - start,
            details={"partitions_checked": count, "failures": failures},
        )
    )
    return Report(tuple(checks))


def verify_commutation(rect: Rectangle) -> Report:
    """Right multiplication by u_i equals left multiplication by
    u_{i + cols} on the rectangle element, for every generator index."""
    k, c = rect.k, rect.cols
    element = by_readings(rect)
    checks = []
    for i in range(k + 1):
        start = time.perf_counter()
        lhs = element.times_generator(i, side="right")
        rhs = element.times_generator((i + c) % (k + 1), side="left")
        checks.append(
            Check(
                name=f"commutation k={k} cols={c} rows={rect.rows} i={i}",
                passed=lhs == rhs,
                seconds=time.perf_counter() - start,
                details={"i": i, "shifted": (i + c) % (k + 1), "terms": len(lhs)},
            )
        )
    return Report(tuple(checks))
