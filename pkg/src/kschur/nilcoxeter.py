"""The affine nilCoxeter algebra and k-Schur functions in its standard basis.

The algebra is generated by u_0, ..., u_k with the braid relations of
the affine symmetric group and u_i^2 = 0.  Products of generators along
reduced words give the standard basis {u(w)}, indexed by group elements;
a product u(w) u_i is u(w s_i) when the length goes up and 0 otherwise.
Elements are sparse integer combinations keyed by canonical windows.

The complete homogeneous analogues h_i (sums of cyclically decreasing
products over i-subsets of the generator indices) commute pairwise, and
the k-Schur functions are the elements of the subring they generate
that satisfy the k-Pieri rule.
"""

from __future__ import annotations

import threading
import time
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

from .affine import AffinePermutation
from .cores import (
    Partition,
    apply_word_nil,
    as_partition,
    bounded_to_core,
    core_to_bounded,
    is_k_bounded,
    k_bounded_partitions,
    w_of_partition,
)
from .reports import Check, Report


def basis_times_generator(
    w: AffinePermutation, i: int, side: str = "right"
) -> Optional[AffinePermutation]:
    """u(w) * u_i (or u_i * u(w) for side="left"): the length-increasing
    product, or None when the length would drop (u_i^2 = 0)."""
    if side == "right":
        if w.has_right_descent(i):
            return None
        return w.right_mult(i)
    if side == "left":
        if w.has_left_descent(i):
            return None
        return w.left_mult(i)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


class AlgebraElement:
    """Sparse integer combination of standard basis elements u(w).

    Immutable by convention: operations return new elements.  Terms with
    coefficient zero are never stored.
    """

    __slots__ = ("k", "_terms")

    def __init__(
        self,
        k: int,
        terms: Union[Mapping[AffinePermutation, int], Iterable[tuple[AffinePermutation, int]]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[AffinePermutation, int] = {}
        for w, c in items:
            if w.k != k:
                raise ValueError(f"rank mismatch: element has k={k}, term has k={w.k}")
            if c:
                acc[w] = acc.get(w, 0) + c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "_terms", {w: c for w, c in acc.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls, k: int) -> "AlgebraElement":
        return cls(k)

    @classmethod
    def unit(cls, k: int) -> "AlgebraElement":
        return cls(k, [(AffinePermutation.identity(k), 1)])

    @classmethod
    def basis(cls, w: AffinePermutation) -> "AlgebraElement":
        return cls(w.k, [(w, 1)])

    def coefficient(self, w: AffinePermutation) -> int:
        return self._terms.get(w, 0)

    def support(self) -> list[AffinePermutation]:
        return sorted(self._terms, key=lambda w: w.window)

    def items(self) -> list[tuple[AffinePermutation, int]]:
        return [(w, self._terms[w]) for w in self.support()]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_rank(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return AlgebraElement(self.k, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.k, {w: -c for w, c in self._terms.items()})

    def __rmul__(self, scalar: int) -> "AlgebraElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return AlgebraElement(self.k, {w: scalar * c for w, c in self._terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, int):
            return self.__rmul__(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_rank(other)
        # expand each right key into a reduced word once, then fold the
        # letters through every left key, dropping products that die
        acc: dict[AffinePermutation, int] = {}
        right = [(wb, cb, wb.reduced_word()) for wb, cb in other._terms.items()]
        for wa, ca in self._terms.items():
            for wb, cb, word in right:
                cur: Optional[AffinePermutation] = wa
                for i in word:
                    if cur.has_right_descent(i):
                        cur = None
                        break
                    cur = cur.right_mult(i)
                if cur is not None:
                    acc[cur] = acc.get(cur, 0) + ca * cb
        return AlgebraElement(self.k, acc)

    def times_generator(self, i: int, side: str = "right") -> "AlgebraElement":
        """Product with a single generator u_i on the given side."""
        acc: dict[AffinePermutation, int] = {}
        for w, c in self._terms.items():
            res = basis_times_generator(w, i, side)
            if res is not None:
                acc[res] = acc.get(res, 0) + c
        return AlgebraElement(self.k, acc)

    def _check_rank(self, other: "AlgebraElement") -> None:
        if self.k != other.k:
            raise ValueError(f"rank mismatch: {self.k} != {other.k}")

    def __repr__(self) -> str:
        return f"AlgebraElement(k={self.k}, terms={len(self._terms)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for w, c in self.items():
            word = " ".join(f"u{i}" for i in w.reduced_word()) or "1"
            bits.append(f"{c:+d}·{word}")
        return " ".join(bits)


def cyclically_decreasing_word(k: int, indices: Iterable[int]) -> tuple[int, ...]:
    """The canonical word of the cyclically decreasing product of the
    distinct generators u_m, m in the given strict subset of 0..k:
    whenever j and j+1 (mod k+1) both occur, j+1 is written first."""
    n = k + 1
    subset = set(indices)
    if not subset <= set(range(n)):
        raise ValueError(f"indices must lie in 0..{k}: {sorted(subset)}")
    if len(subset) > k:
        raise ValueError(f"subset must be strict in 0..{k}: {sorted(subset)}")
    word: list[int] = []
    for tail in sorted(subset):
        if (tail - 1) % n in subset:
            continue
        run = [tail]
        while (run[-1] + 1) % n in subset:
            run.append((run[-1] + 1) % n)
        word.extend(reversed(run))
    return tuple(word)


def cyclically_decreasing(k: int, indices: Iterable[int]) -> AffinePermutation:
    """Group element of the cyclically decreasing product; its word is
    reduced since the letters are distinct."""
    word = cyclically_decreasing_word(k, indices)
    w = AffinePermutation.from_word(k, word)
    assert w.length() == len(word)
    return w


def h(k: int, i: int) -> AlgebraElement:
    """Sum of the cyclically decreasing products over all i-subsets of
    the generator indices; binomial(k+1, i) terms, all coefficient 1.

    >>> len(h(4, 2))
    10
    """
    if not 0 <= i <= k:
        raise ValueError(f"h index must be in 0..{k}, got {i}")
    terms = {}
    for subset in combinations(range(k + 1), i):
        w = cyclically_decreasing(k, subset)
        assert w not in terms
        terms[w] = 1
    return AlgebraElement(k, terms)


def h_product(k: int, mu: Sequence[int]) -> AlgebraElement:
    """Product h_{mu_1} * h_{mu_2} * ...; the factors commute, so the
    order of the parts does not matter."""
    result = AlgebraElement.unit(k)
    for part in mu:
        if not 1 <= part <= k:
            raise ValueError(f"parts must be in 1..{k}, got {part}")
        result = result * h(k, part)
    return result


def act_on_core(
    x: Union[AlgebraElement, Sequence[int]],
    core: Sequence[int],
    k: Optional[int] = None,
) -> dict[Partition, int]:
    """Linear action on the free abelian group with basis the cores.

    x is an AlgebraElement, or a word of generator indices with k given
    explicitly.  Returns the formal sum as a dict core -> coefficient.
    """
    core = as_partition(core)
    if isinstance(x, AlgebraElement):
        pairs = [(w.reduced_word(), c) for w, c in x.items()]
        k = x.k
    else:
        if k is None:
            raise ValueError("k is required when acting by a word")
        pairs = [(tuple(x), 1)]
    out: dict[Partition, int] = {}
    for word, c in pairs:
        res = apply_word_nil(core, word, k)
        if res is not None:
            out[res] = out.get(res, 0) + c
    return {kappa: c for kappa, c in out.items() if c}


_memo: dict[tuple[int, Partition], AlgebraElement] = {}
_memo_h: dict[tuple[int, Partition], dict[Partition, int]] = {}
_memo_lock = threading.Lock()


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()
        _memo_h.clear()


def _validated(k: int, lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not is_k_bounded(lam, k):
        raise ValueError(f"partition {lam} has a part exceeding {k}")
    return lam


def kschur(k: int, lam: Sequence[int]) -> AlgebraElement:
    """Standard-basis expansion of the k-Schur function of a k-bounded
    partition.

    Peels the h-product: the coefficient of u(w_nu) in any k-Schur
    function indexed by rho is the delta of nu and rho, so the product
    h_{lam_1} ... h_{lam_l} determines its own expansion into k-Schur
    functions and the leading term can be solved for recursively.
    """
    return _kschur(k, _validated(k, lam), frozenset())


def _kschur(k: int, lam: Partition, active: frozenset) -> AlgebraElement:
    key = (k, lam)
    got = _memo.get(key)
    if got is not None:
        return got
    # a cycle would mean the triangularity of the h-to-kschur change of
    # basis failed, i.e. an implementation bug
    assert key not in active, f"cyclic dependency at {key}"
    active = active | {key}
    if not lam:
        result = AlgebraElement.unit(k)
    else:
        hprod = h_product(k, lam)
        assert hprod.coefficient(w_of_partition(lam, k)) == 1, lam
        result = hprod
        for nu in k_bounded_partitions(sum(lam), k):
            if nu == lam:
                continue
            c = hprod.coefficient(w_of_partition(nu, k))
            if c:
                result = result - c * _kschur(k, nu, active)
    with _memo_lock:
        _memo.setdefault(key, result)
    return result


def kschur_h_expansion(k: int, lam: Sequence[int]) -> dict[Partition, int]:
    """Coefficients of the k-Schur function on the products of h's:
    summing coeff * h_product(k, mu) over the returned map gives
    kschur(k, lam)."""
    return dict(_kschur_h(k, _validated(k, lam), frozenset()))


def _kschur_h(k: int, lam: Partition, active: frozenset) -> dict[Partition, int]:
    key = (k, lam)
    got = _memo_h.get(key)
    if got is not None:
        return got
    assert key not in active, f"cyclic dependency at {key}"
    active = active | {key}
    if not lam:
        result = {(): 1}
    else:
        hprod = h_product(k, lam)
        acc = {lam: 1}
        for nu in k_bounded_partitions(sum(lam), k):
            if nu == lam:
                continue
            c = hprod.coefficient(w_of_partition(nu, k))
            if c:
                for mu, d in _kschur_h(k, nu, active).items():
                    acc[mu] = acc.get(mu, 0) - c * d
        result = {mu: d for mu, d in acc.items() if d}
    with _memo_lock:
        _memo_h.setdefault(key, result)
    return result


def negative_terms(elem: AlgebraElement) -> dict[AffinePermutation, int]:
    """Terms with negative coefficient.  Observed empty for every k-Schur
    function computed at small scale; reported, not assumed."""
    return {w: c for w, c in elem.items() if c < 0}


def lr_coefficient(
    k: int, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]
) -> int:
    """Structure constant of nu in the product of the k-Schur functions
    of lam and mu.

    At most one group element can carry the core of mu to the core of
    nu inside the standard basis action; the coefficient is its
    coefficient in kschur(k, lam) when that element exists, else 0.
    """
    lam = _validated(k, lam)
    mu = _validated(k, mu)
    nu = _validated(k, nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    w = w_of_partition(nu, k) * w_of_partition(mu, k).inverse()
    if w.length() != sum(nu) - sum(mu):
        return 0
    if apply_word_nil(bounded_to_core(mu, k), w.reduced_word(), k) != bounded_to_core(nu, k):
        return 0
    return kschur(k, lam).coefficient(w)


def pieri_partitions(k: int, lam: Sequence[int], i: int) -> list[Partition]:
    """The partitions appearing in h_i times the k-Schur function of lam:
    one for each i-subset of generator indices whose cyclically
    decreasing product acts without dying on the core of lam."""
    lam = _validated(k, lam)
    core = bounded_to_core(lam, k)
    seen: set[Partition] = set()
    for subset in combinations(range(k + 1), i):
        res = apply_word_nil(core, cyclically_decreasing_word(k, subset), k)
        if res is not None:
            mu = core_to_bounded(res, k)
            assert mu not in seen, (lam, i, subset)
            seen.add(mu)
    return sorted(seen)


def verify_pieri(k: int, max_size: int) -> Report:
    """Check h_i * kschur(lam) = sum of kschur(mu) over the predicted mu,
    for every k-bounded lam up to the given size and every i."""
    checks = []
    for n in range(max_size + 1):
        for lam in k_bounded_partitions(n, k):
            start = time.perf_counter()
            ok = True
            detail: dict = {"k": k, "partition": list(lam)}
            for i in range(1, k + 1):
                lhs = h(k, i) * kschur(k, lam)
                rhs = AlgebraElement.zero(k)
                for mu in pieri_partitions(k, lam, i):
                    rhs = rhs + kschur(k, mu)
                if lhs != rhs:
                    ok = False
                    detail["failed_at"] = i
                    break
            checks.append(
                Check(
                    name=f"pieri k={k} lam={','.join(map(str, lam)) or '()'}",
                    passed=ok,
                    seconds=time.perf_counter() - start,
                    details=detail,
                )
            )
    return Report(tuple(checks))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
