"""The affine symmetric group of type A, in window notation.

An element w is a bijection of the integers satisfying
w(j + k + 1) = w(j) + k + 1 and sum(w(1), ..., w(k+1)) = (k+1)(k+2)/2;
it is determined by the window [w(1), ..., w(k+1)].  Windows are a
canonical form, one per group element, so equality, hashing and
dictionary keying need no word rewriting.

The group is generated by s_0, ..., s_k where s_i sends j to j+1 when
j = i mod (k+1), to j-1 when j = i+1 mod (k+1), and fixes j otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class AffinePermutation:
    """Element of the affine symmetric group generated by s_0, ..., s_k.

    >>> w = AffinePermutation.from_word(4, (2, 1, 3, 2, 4, 3))
    >>> w.window
    (3, 4, 5, 1, 2)
    >>> w.length()
    6
    """

    k: int
    window: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"rank parameter must be >= 1, got {self.k}")
        n = self.k + 1
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        if len(window) != n:
            raise ValueError(f"window needs {n} entries, got {len(window)}")
        if sorted(a % n for a in window) != list(range(n)):
            raise ValueError(f"window entries are not distinct mod {n}: {window}")
        if sum(window) != n * (n + 1) // 2:
            raise ValueError(f"window sum must be {n * (n + 1) // 2}, got {sum(window)}")

    @classmethod
    def identity(cls, k: int) -> "AffinePermutation":
        return cls(k, tuple(range(1, k + 2)))

    @classmethod
    def from_word(cls, k: int, word: Iterable[int]) -> "AffinePermutation":
        """Product s_{i_1} * ... * s_{i_m} for word (i_1, ..., i_m).

        Total: the word does not have to be reduced.
        """
        w = cls.identity(k)
        for i in word:
            w = w.right_mult(i)
        return w

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.k + 2))

    def value(self, j: int) -> int:
        """w(j) for any integer j, extending the window periodically."""
        q, t = divmod(j - 1, self.k + 1)
        return self.window[t] + q * (self.k + 1)

    def right_mult(self, i: int) -> "AffinePermutation":
        """w * s_i.  Swaps window entries i, i+1; s_0 wraps with a shift of k+1."""
        n = self.k + 1
        if not 0 <= i <= self.k:
            raise ValueError(f"generator index must be in 0..{self.k}, got {i}")
        win = list(self.window)
        if i == 0:
            win[0], win[n - 1] = self.window[n - 1] - n, self.window[0] + n
        else:
            win[i - 1], win[i] = self.window[i], self.window[i - 1]
        return AffinePermutation(self.k, tuple(win))

    def left_mult(self, i: int) -> "AffinePermutation":
        """s_i * w.  Applies the generator bijection to each window value."""
        n = self.k + 1
        if not 0 <= i <= self.k:
            raise ValueError(f"generator index must be in 0..{self.k}, got {i}")
        win = []
        for a in self.window:
            r = a % n
            if r == i % n:
                win.append(a + 1)
            elif r == (i + 1) % n:
                win.append(a - 1)
            else:
                win.append(a)
        return AffinePermutation(self.k, tuple(win))

    def has_right_descent(self, i: int) -> bool:
        """True iff w(i) > w(i+1), i.e. length(w * s_i) = length(w) - 1."""
        if not 0 <= i <= self.k:
            raise ValueError(f"generator index must be in 0..{self.k}, got {i}")
        if i == 0:
            # w(0) = w(k+1) - (k+1)
            return self.window[self.k] - (self.k + 1) > self.window[0]
        return self.window[i - 1] > self.window[i]

    def right_descents(self) -> list[int]:
        return [i for i in range(self.k + 1) if self.has_right_descent(i)]

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def length(self) -> int:
        """Coxeter length, as the periodic inversion count of the window.

        >>> AffinePermutation.identity(3).length()
        0
        """
        n = self.k + 1
        total = 0
        for a in range(n):
            for b in range(a + 1, n):
                total += abs((self.window[b] - self.window[a]) // n)
        return total

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word for w, peeling the smallest right descent.

        Deterministic; from_word(k, w.reduced_word()) == w and the word
        length equals w.length().
        """
        letters = []
        w = self
        while not w.is_identity():
            i = min(w.right_descents())
            letters.append(i)
            w = w.right_mult(i)
        return tuple(reversed(letters))

    def inverse(self) -> "AffinePermutation":
        n = self.k + 1
        win = [0] * n
        for t, a in enumerate(self.window, start=1):
            q, b = divmod(a - 1, n)
            win[b] = t - q * n
        return AffinePermutation(self.k, tuple(win))

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        if self.k != other.k:
            raise ValueError(f"rank mismatch: {self.k} != {other.k}")
        return AffinePermutation(self.k, tuple(self.value(b) for b in other.window))

    def rotate_indices(self, m: int) -> "AffinePermutation":
        """Image under the Dynkin rotation s_i -> s_{i+m}.

        On windows this is conjugation by j -> j + m, so the result does
        not depend on a choice of reduced word.
        """
        n = self.k + 1
        return AffinePermutation(
            self.k, tuple(self.value(j - m) + m for j in range(1, n + 1))
        )

    def reflect_indices(self) -> "AffinePermutation":
        """Image under the Dynkin reflection s_i -> s_{-i}.

        On windows this is conjugation by j -> 1 - j; an involutive
        automorphism of the group.
        """
        n = self.k + 1
        return AffinePermutation(
            self.k, tuple(1 - self.value(1 - j) for j in range(1, n + 1))
        )


def rotate_word(word: Iterable[int], m: int, k: int) -> tuple[int, ...]:
    """Shift every letter of a word by m mod (k+1)."""
    return tuple((i + m) % (k + 1) for i in word)


def reflect_word(word: Iterable[int], k: int) -> tuple[int, ...]:
    """Negate every letter of a word mod (k+1)."""
    return tuple((-i) % (k + 1) for i in word)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
