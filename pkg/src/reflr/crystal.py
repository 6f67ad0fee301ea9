"""
Words, semistandard tableaux and type-A crystal operators.

A tableau is a tuple of rows (English notation).  Crystal operators act on
words; a tableau is acted on through its reverse row word (rows read right to
left, top row first), and rebuilt from the word using the shape.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Iterator, Sequence

from .partitions import Partition
from .permutations import Permutation, longest_element
from .polyring import IntPolynomial

Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

RAISE = "raise"
LOWER = "lower"


def make_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    return tuple(tuple(r) for r in rows if len(tuple(r)))


def shape(T: Tableau) -> tuple[int, ...]:
    return tuple(len(r) for r in T)


def is_semistandard(T: Tableau) -> bool:
    for r in T:
        if any(a > b for a, b in zip(r, r[1:])):
            return False
    for upper, lower in zip(T, T[1:]):
        if len(lower) > len(upper) or any(lower[c] <= upper[c] for c in range(len(lower))):
            return False
    return True


def reverse_row_word(T: Tableau) -> Word:
    return tuple(x for row in T for x in reversed(row))


def tableau_from_word(word: Sequence[int], mu: Sequence[int]) -> Tableau:
    """Inverse of reverse_row_word for a known shape."""
    rows = []
    pos = 0
    for m in mu:
        if m == 0:
            break
        rows.append(tuple(reversed(word[pos:pos + m])))
        pos += m
    if pos != len(word):
        raise ValueError(f"word of length {len(word)} does not fit shape {tuple(mu)}")
    return tuple(rows)


def weight(word: Iterable[int], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def _unbracketed(i: int, u: Sequence[int]) -> tuple[list[int], list[int]]:
    """
    Positions of the letters i+1 and i that survive bracketing: an i to the left
    of an i+1 cancels with it (innermost pairs first).
    """
    open_i: list[int] = []
    free_up: list[int] = []
    for p, x in enumerate(u):
        if x == i:
            open_i.append(p)
        elif x == i + 1:
            if open_i:
                open_i.pop()
            else:
                free_up.append(p)
    return free_up, open_i


def crystal_step(direction: str, i: int, u: Sequence[int]) -> Word | None:
    """
    Apply e_i ("raise") or f_i ("lower") to the word u; None when the result is 0.

    After bracketing the surviving letters read (i+1)^a i^b.  f_i turns the
    leftmost surviving i into i+1; e_i turns the rightmost surviving i+1 into i.
    """
    free_up, free_down = _unbracketed(i, u)
    u = list(u)
    if direction == LOWER:
        if not free_down:
            return None
        u[free_down[0]] = i + 1
    elif direction == RAISE:
        if not free_up:
            return None
        u[free_up[-1]] = i
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return tuple(u)


def f(i: int, u: Sequence[int]) -> Word | None:
    return crystal_step(LOWER, i, u)


def e(i: int, u: Sequence[int]) -> Word | None:
    return crystal_step(RAISE, i, u)


def string_length(direction: str, i: int, u: Sequence[int]) -> int:
    """epsilon_i (raise) or phi_i (lower): how often the operator can be applied."""
    free_up, free_down = _unbracketed(i, u)
    return len(free_up) if direction == RAISE else len(free_down)


def is_dominant(u: Sequence[int], n: int | None = None) -> bool:
    """Ballot condition: every prefix has at least as many i as i+1."""
    if n is None:
        n = max(u, default=1)
    counts = [0] * (n + 2)
    for x in u:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def highest_tableau(mu: Sequence[int]) -> Tableau:
    return tuple((j,) * m for j, m in enumerate(mu, 1) if m)


def extreme_tableau(mu: Sequence[int], which: str = "highest", n: int | None = None) -> Tableau:
    """
    The highest (killed by every e_i) or lowest (killed by every f_i) tableau of
    shape mu.  The lowest one is reached by lowering the highest to exhaustion.
    """
    mu = tuple(mu)
    if n is None:
        n = len(mu)
    top = highest_tableau(mu)
    if which == "highest":
        return top
    if which != "lowest":
        raise ValueError(f"which must be 'highest' or 'lowest', not {which!r}")
    u = reverse_row_word(top)
    moved = True
    while moved:
        moved = False
        for i in range(1, n):
            v = f(i, u)
            while v is not None:
                u, v, moved = v, f(i, v), True
    low = tableau_from_word(u, mu)
    assert all(f(i, u) is None for i in range(1, n))
    return low


def semistandard_tableaux(mu: Sequence[int], n: int) -> Iterator[Tableau]:
    """All SSYT of shape mu with entries in 1..n, filled cell by cell."""
    mu = [m for m in mu if m]
    cells = [(r, c) for r, m in enumerate(mu) for c in range(m)]
    grid = [[0] * m for m in mu]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        # column below still needs room for len(mu) - r - 1 strictly larger entries
        below = sum(1 for rr in range(r + 1, len(mu)) if mu[rr] > c)
        for x in range(lo, n - below + 1):
            grid[r][c] = x
            yield from rec(k + 1)
        grid[r][c] = 0

    yield from rec(0)


@dataclass(frozen=True)
class DemazureCrystal:
    """Elements are stored as words; tableaux are recovered through the shape."""
    shape: Partition
    w: Permutation
    opposite: bool
    elements: frozenset[Word] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        if item and isinstance(item[0], tuple):
            item = reverse_row_word(item)
        return tuple(item) in self.elements

    def tableaux(self) -> set[Tableau]:
        return {tableau_from_word(u, self.shape) for u in self.elements}

    def character(self) -> IntPolynomial:
        n = self.w.n
        return IntPolynomial(n, Counter(weight(u, n) for u in self.elements))


def string_closure(word: Sequence[int], seed: Iterable[Word], direction: str = LOWER) -> frozenset[Word]:
    """
    Staged closure: S_0 = seed, then for each letter of ``word`` from right to
    left, S_t = {op^m(u) : u in S_{t-1}, m >= 0}.
    """
    current = set(seed)
    for i in reversed(tuple(word)):
        grown = set()
        for u in current:
            v = u
            while v is not None:
                grown.add(v)
                v = crystal_step(direction, i, v)
        current = grown
    return frozenset(current)


@cache
def _demazure_elements(mu: Partition, word: tuple[int, ...], opposite: bool, seed: Word | None, n: int):
    if seed is None:
        which = "lowest" if opposite else "highest"
        seed = reverse_row_word(extreme_tableau(mu, which, n))
    return string_closure(word, [seed], RAISE if opposite else LOWER)


def demazure_crystal(
    mu: Sequence[int],
    w: Permutation,
    opposite: bool = False,
    seed: Sequence[int] | None = None,
    word: Sequence[int] | None = None,
) -> DemazureCrystal:
    """
    B(mu, w) = {f_{i_1}^{m_1} ... f_{i_k}^{m_k} b : m_j >= 0} for a reduced word
    (i_1, ..., i_k) of w, with b the highest tableau's word, or any dominant word
    of weight mu passed as ``seed``.  The opposite crystal raises from the lowest
    tableau instead.  ``word`` overrides the default (lex-min) reduced word.
    """
    mu = tuple(mu)
    if word is None:
        word = w.reduced_word()
    else:
        word = tuple(word)
        if Permutation.from_word(word, w.n) != w or len(word) != w.length():
            raise ValueError(f"{word} is not a reduced word for {w}")
    elems = _demazure_elements(mu, word, opposite, None if seed is None else tuple(seed), w.n)
    return DemazureCrystal(mu, w, opposite, elems)


def opposite_crystal_by_cell(mu: Sequence[int], v: Permutation) -> DemazureCrystal:
    """
    The opposite Demazure crystal indexed by its lowest-weight cell: the raising
    closure of the lowest tableau along a reduced word of v * w0.  With this
    indexing evacuation sends B(mu, w) onto opposite_crystal_by_cell(mu, w0 * w).
    """
    return demazure_crystal(mu, v * longest_element(v.n), opposite=True)


@cache
def crystal_profile(mu: Partition, w: Permutation) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """
    Summary of B(mu, w) for LR counting: triples (weight, margins, multiplicity)
    where margins[i-1] is the minimum over prefixes of (#i - #(i+1)).

    word(T_lam) * b_T is dominant iff lam_i - lam_{i+1} + margins[i-1] >= 0 for all i,
    because the word of T_lam is itself dominant with weight lam.
    """
    n = w.n
    tally: Counter = Counter()
    for u in demazure_crystal(mu, w).elements:
        counts = [0] * (n + 1)
        low = [0] * (n - 1)
        for x in u:
            counts[x] += 1
            if x > 1:
                d = counts[x - 1] - counts[x]
                if d < low[x - 2]:
                    low[x - 2] = d
        tally[(tuple(counts[1:]), tuple(low))] += 1
    return tuple((wt, m, c) for (wt, m), c in sorted(tally.items()))


def refined_lr_crystal_distribution(lam: Partition, mu: Partition, w: Permutation) -> dict[Partition, int]:
    """nu -> c_{lam mu}^nu(w) for every nu at once."""
    gaps = [a - b for a, b in zip(lam, lam[1:])]
    out: Counter = Counter()
    for wt, margins, mult in crystal_profile(tuple(mu), w):
        if all(g + m >= 0 for g, m in zip(gaps, margins)):
            out[tuple(a + b for a, b in zip(lam, wt))] += mult
    return dict(out)


def refined_lr_crystal(lam: Partition, mu: Partition, nu: Partition, w: Permutation) -> int:
    """#{T in B(mu, w) : word(T_lam) * b_T is dominant of weight nu}."""
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    return refined_lr_crystal_distribution(tuple(lam), tuple(mu), w).get(tuple(nu), 0)


def row_insert(T: list[list[int]], x: int) -> None:
    """Schensted row insertion of x into T, in place."""
    for row in T:
        # bump the leftmost entry strictly greater than x
        for c, y in enumerate(row):
            if y > x:
                row[c], x = x, y
                break
        else:
            row.append(x)
            return
    T.append([x])


def insertion_tableau(word: Iterable[int]) -> Tableau:
    T: list[list[int]] = []
    for x in word:
        row_insert(T, x)
    return make_tableau(T)


def evacuation(T: Tableau, n: int) -> Tableau:
    """
    Schuetzenberger evacuation on Tab(mu) with entries in 1..n: rotate by 180
    degrees, complement x -> n+1-x, rectify.  The rotated tableau's row reading
    word is the complement of the reverse row word, so rectification is its
    insertion tableau.
    """
    return insertion_tableau(n + 1 - x for x in reverse_row_word(T))
