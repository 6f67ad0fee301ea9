"""
Symmetric-group arithmetic in one-line notation.

A permutation of {1..n} is stored as the tuple of its images, so that
``w(i) == w.images[i - 1]``.  Composition is ``(u * v)(i) = u(v(i))``
throughout the package; simple reflection ``s_i`` swaps ``i`` and ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations as _itperms
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Accept ``"2413"`` (n <= 9) or ``"2,4,1,3"``."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i < n:
            raise ValueError(f"simple reflection s_{i} not in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> Permutation:
        """The product s_{i_1} s_{i_2} ... s_{i_k}."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.images))
        return ",".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def inverse(self) -> Permutation:
        return inverse(self)

    def length(self) -> int:
        return inversions(self)

    def reduced_word(self) -> tuple[int, ...]:
        return length_and_reduced_word(self)[1]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))


def _check_same_size(u: Permutation, v: Permutation):
    if u.n != v.n:
        raise ValueError(f"size mismatch: S_{u.n} vs S_{v.n}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    _check_same_size(u, v)
    return Permutation(tuple(u.images[x - 1] for x in v.images))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, x in enumerate(w.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def inversions(w: Permutation) -> int:
    im = w.images
    return sum(1 for a, b in combinations(range(w.n), 2) if im[a] > im[b])


@cache
def length_and_reduced_word(w: Permutation) -> tuple[int, tuple[int, ...]]:
    """
    Return ``(length(w), word)`` with ``word`` the lexicographically smallest
    reduced word of ``w``.

    Any left descent can start a reduced word, so choosing the smallest one
    greedily at every step yields the lex-min word.
    """
    word = []
    cur = list(w.images)
    while True:
        pos = {x: p for p, x in enumerate(cur)}
        # left descent at i <=> i + 1 appears before i
        for i in range(1, w.n):
            if pos[i + 1] < pos[i]:
                cur[pos[i]], cur[pos[i + 1]] = i + 1, i
                word.append(i)
                break
        else:
            break
    return len(word), tuple(word)


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be positive")
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n, sorted by length and then lexicographically."""
    perms = [Permutation(p) for p in _itperms(range(1, n + 1))]
    return sorted(perms, key=lambda w: (w.length(), w.images))


_PATTERNS = {
    # value order realized by positions i < j < k
    "312": lambda a, b, c: b < c < a,
    "231": lambda a, b, c: c < a < b,
    "132": lambda a, b, c: a < c < b,
}


def contains_pattern(w: Permutation, pattern: str) -> bool:
    try:
        test = _PATTERNS[str(pattern)]
    except KeyError:
        raise ValueError(f"unsupported pattern {pattern!r}") from None
    im = w.images
    return any(test(im[i], im[j], im[k]) for i, j, k in combinations(range(w.n), 3))


def avoids_pattern(w: Permutation, pattern: str) -> bool:
    """Only 312 and 231 are part of the public contract."""
    if str(pattern) not in ("312", "231"):
        raise ValueError(f"unsupported pattern {pattern!r}")
    return not contains_pattern(w, pattern)


def _subword_match(target: Sequence[int], word: Sequence[int], n: int) -> bool:
    """Is ``target`` a product of some (not necessarily reduced) subword of ``word``?"""
    # Walk through the word keeping the set of reachable products; prune by length.
    goal = Permutation(tuple(target))
    goal_len = goal.length()
    reachable = {Permutation.identity(n)}
    for i in word:
        s = Permutation.simple(i, n)
        reachable |= {u * s for u in reachable if (u * s).length() <= goal_len}
    return goal in reachable


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    u <= v in Bruhat order, via the subword property: some reduced subword of
    a fixed reduced word of v multiplies to u.
    """
    _check_same_size(u, v)
    if u.length() > v.length():
        return False
    if u == v:
        return True
    # Any subword product of length length(u) equal to u is a reduced subword.
    return _subword_match(u.images, v.reduced_word(), u.n)


def bruhat_covers(w: Permutation) -> set[Permutation]:
    """All v > w with length(v) = length(w) + 1 (i.e. w * t for transpositions t)."""
    out = set()
    ell = w.length()
    for a, b in combinations(range(w.n), 2):
        im = list(w.images)
        if im[a] < im[b]:
            im[a], im[b] = im[b], im[a]
            v = Permutation(tuple(im))
            if v.length() == ell + 1:
                out.add(v)
    return out


def stabilizer_generators(weight: Sequence[int]) -> list[int]:
    """Indices i with weight_i == weight_{i+1}: generators of the stabilizer of ``weight``."""
    return [i for i in range(1, len(weight)) if weight[i - 1] == weight[i]]


def double_coset(lam: Sequence[int], w: Permutation, mu: Sequence[int]) -> set[Permutation]:
    """The double coset W_lam w W_mu, by orbit sweep."""
    n = w.n
    left = [Permutation.simple(i, n) for i in stabilizer_generators(lam)]
    right = [Permutation.simple(i, n) for i in stabilizer_generators(mu)]
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for v in [s * u for s in left] + [u * s for s in right]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def double_coset_rep(lam: Sequence[int], w: Permutation, mu: Sequence[int]) -> Permutation:
    """Minimal-length element of W_lam w W_mu (ties broken lexicographically; it is unique)."""
    return min(double_coset(lam, w, mu), key=lambda u: (u.length(), u.images))


def block_factor(w: Permutation, blocks: Sequence[int]) -> list[Permutation] | None:
    """
    Split w into factors (w_1, ..., w_p), one per consecutive block, if w lies
    in the Young subgroup S_{n_1} x ... x S_{n_p}; otherwise return None.
    """
    blocks = list(blocks)
    if any(b <= 0 for b in blocks) or sum(blocks) != w.n:
        raise ValueError(f"blocks {blocks} do not compose n={w.n}")
    factors = []
    start = 0
    for size in blocks:
        seg = w.images[start:start + size]
        if sorted(seg) != list(range(start + 1, start + size + 1)):
            return None
        factors.append(Permutation(tuple(x - start for x in seg)))
        start += size
    return factors


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered block structures (n_1, ..., n_p) summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def is_covered(w: Permutation) -> bool:
    """
    True when w = w_1 ... w_p in some Young subgroup with every factor 312- or
    231-avoiding; these are the permutations the saturation theorem covers.
    """
    for blocks in compositions(w.n):
        factors = block_factor(w, blocks)
        if factors is not None and all(
            avoids_pattern(f, "312") or avoids_pattern(f, "231") for f in factors
        ):
            return True
    return False
