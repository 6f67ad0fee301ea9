"""
Hives, Gelfand-Tsetlin patterns, Kogan faces and integer-point enumeration.

Hive labels live on the big triangle with n+1 vertices per side.  Vertex
(i, k) is row i from the top (0..n), column k from the left (0..i).  Its
neighbours are (i, k+-1) in the same row, (i+1, k) down-left and (i+1, k+1)
down-right.  Borders: left edge (i, 0) carries the partial sums of lam, the
right edge (i, i) those of nu, and the bottom row (n, k) carries |lam| plus
the partial sums of mu.

A GT pattern is a tuple of rows a[0..n-1], row i-1 holding (a_{i1}, ..., a_{ii}).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from .crystal import Tableau
from .partitions import Partition, partial_sums
from .permutations import Permutation, avoids_pattern, longest_element

Vertex = tuple[int, int]
GTPattern = tuple[tuple[int, ...], ...]


# --- GT patterns and the bg bijection -------------------------------------

def is_gt_pattern(A: GTPattern) -> bool:
    n = len(A)
    for i in range(2, n + 1):
        for j in range(1, i):
            a_ij, a_up, a_right = A[i - 1][j - 1], A[i - 2][j - 1], A[i - 1][j]
            if a_ij < a_up or a_up < a_right:
                return False
    return True


def gt_to_tableau(A: GTPattern) -> Tableau:
    """Row j holds a_{ij} - a_{i-1,j} copies of i (with a_{i-1,i} = 0)."""
    n = len(A)
    rows = []
    for j in range(1, n + 1):
        row = []
        for i in range(j, n + 1):
            prev = A[i - 2][j - 1] if i > j else 0
            row += [i] * (A[i - 1][j - 1] - prev)
        if row:
            rows.append(tuple(row))
    return tuple(rows)


def tableau_to_gt(T: Tableau, n: int) -> GTPattern:
    """a_{ij} = number of entries <= i in row j."""
    return tuple(
        tuple(sum(1 for x in T[j - 1] if x <= i) if j <= len(T) else 0 for j in range(1, i + 1))
        for i in range(1, n + 1)
    )


def gt_weight(A: GTPattern) -> tuple[int, ...]:
    sums = [0] + [sum(r) for r in A]
    return tuple(b - a for a, b in zip(sums, sums[1:]))


def gt_patterns(mu: Sequence[int]) -> Iterator[GTPattern]:
    """All integer GT patterns with bottom row mu, by interlacing upward."""
    n = len(mu)

    def rec(rows):
        top = rows[0]
        if len(top) == 1:
            yield tuple(rows)
            return

        def fill(prefix, j):
            if j == len(top) - 1:
                yield from rec([tuple(prefix)] + rows)
                return
            for x in range(top[j + 1], top[j] + 1):
                yield from fill(prefix + [x], j + 1)

        yield from fill([], 0)

    if n == 0:
        return
    yield from rec([tuple(mu)])


# --- hives -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Hive:
    labels: tuple[tuple, ...]

    @property
    def n(self) -> int:
        return len(self.labels) - 1

    def __getitem__(self, v: Vertex):
        return self.labels[v[0]][v[1]]

    @property
    def lam(self) -> tuple:
        left = [self.labels[i][0] for i in range(self.n + 1)]
        return tuple(b - a for a, b in zip(left, left[1:]))

    @property
    def nu(self) -> tuple:
        right = [self.labels[i][i] for i in range(self.n + 1)]
        return tuple(b - a for a, b in zip(right, right[1:]))

    @property
    def mu(self) -> tuple:
        bottom = self.labels[self.n]
        return tuple(b - a for a, b in zip(bottom, bottom[1:]))

    def to_json(self) -> str:
        return json.dumps([[_jsonable(x) for x in row] for row in self.labels])

    def scaled(self, p) -> Hive:
        return Hive(tuple(tuple(p * x for x in row) for row in self.labels))

    def shifted(self, S, eps) -> Hive:
        """h + eps * I_S."""
        return Hive(tuple(
            tuple(x + eps if (i, k) in S else x for k, x in enumerate(row))
            for i, row in enumerate(self.labels)
        ))


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def make_hive(rows: Sequence[Sequence]) -> Hive:
    rows = tuple(tuple(r) for r in rows)
    for i, r in enumerate(rows):
        if len(r) != i + 1:
            raise ValueError(f"hive row {i} must have {i + 1} labels, got {len(r)}")
    return Hive(rows)


class Rhombus(NamedTuple):
    kind: str  # "NE", "SE" or "V"
    obtuse: tuple[Vertex, Vertex]
    acute: tuple[Vertex, Vertex]


@cache
def rhombi(n: int) -> tuple[Rhombus, ...]:
    """
    All 3n(n-1)/2 rhombi.  Each is two unit triangles sharing an edge; the
    obtuse vertices are the ends of the shared edge.
      NE: shared edge (i,k)-(i+1,k+1); these are the R_{ij} of GT NE-differences.
      SE: shared edge (i,k)-(i+1,k);   GT SE-differences.
      V:  shared edge (i,k)-(i,k+1);   the vertical diamonds.
    """
    out = []
    for i in range(n):
        for k in range(i + 1):
            if k <= i - 1:
                out.append(Rhombus("NE", ((i, k), (i + 1, k + 1)), ((i + 1, k), (i, k + 1))))
            if k >= 1:
                out.append(Rhombus("SE", ((i, k), (i + 1, k)), ((i + 1, k + 1), (i, k - 1))))
            if 1 <= i and k <= i - 1:
                out.append(Rhombus("V", ((i, k), (i, k + 1)), ((i - 1, k), (i + 1, k + 1))))
    return tuple(out)


def ne_rhombus(i: int, j: int) -> Rhombus:
    """R_{ij} (n >= i > j >= 1): content(R_{ij}) = NE_{ij} of the GT pattern of h."""
    return Rhombus("NE", ((i - 1, j - 1), (i, j)), ((i, j - 1), (i - 1, j)))


def content(h, R: Rhombus):
    lab = h.labels if isinstance(h, Hive) else h
    (a, b), (c, d) = R.obtuse, R.acute
    return lab[a[0]][a[1]] + lab[b[0]][b[1]] - lab[c[0]][c[1]] - lab[d[0]][d[1]]


def border_labels(lam: Sequence, mu: Sequence, nu: Sequence) -> dict[Vertex, object]:
    n = len(lam)
    total = sum(lam)
    fixed = {}
    for i, s in enumerate(partial_sums(lam)):
        fixed[(i, 0)] = s
    for i, s in enumerate(partial_sums(nu)):
        fixed[(i, i)] = s
    for k, s in enumerate(partial_sums(mu)):
        fixed[(n, k)] = total + s
    return fixed


def validate_hive(labels, lam, mu, nu) -> tuple[bool, list]:
    """
    Check borders and all rhombus inequalities.  Returns (ok, problems) where
    problems lists ("border", vertex, expected, found) and (rhombus, content)
    entries for each violation.
    """
    lab = labels.labels if isinstance(labels, Hive) else tuple(tuple(r) for r in labels)
    n = len(lam)
    problems: list = []
    if len(lab) != n + 1 or any(len(r) != i + 1 for i, r in enumerate(lab)):
        return False, [("shape", len(lab))]
    if sum(lam) + sum(mu) != sum(nu):
        problems.append(("border", None, sum(lam) + sum(mu), sum(nu)))
    for (i, k), want in border_labels(lam, mu, nu).items():
        if lab[i][k] != want:
            problems.append(("border", (i, k), want, lab[i][k]))
    for R in rhombi(n):
        c = content(lab, R)
        if c < 0:
            problems.append((R, c))
    return not problems, problems


def is_hive(h: Hive) -> bool:
    return validate_hive(h, h.lam, h.mu, h.nu)[0]


def hive_delta(h: Hive) -> GTPattern:
    """Row-wise successive differences: a_{ij} = h(i, j) - h(i, j-1)."""
    return tuple(
        tuple(row[k] - row[k - 1] for k in range(1, len(row)))
        for row in h.labels[1:]
    )


def delta_inverse(A: GTPattern, lam: Sequence) -> Hive:
    """Rebuild labels from row differences and the left border ps(lam). Not validated."""
    left = partial_sums(lam)
    rows = [(0,)]
    for i, arow in enumerate(A, 1):
        row = [left[i]]
        for a in arow:
            row.append(row[-1] + a)
        rows.append(tuple(row))
    return Hive(tuple(rows))


def hive_delta_ne(h: Hive) -> GTPattern:
    """
    Successive differences down the NE-SW lines (parallel to the left edge).
    Line k runs (k, k), (k+1, k), ..., (n, k); it gives GT row n - k, so the
    left edge yields the bottom row lam.
    """
    n = h.n
    rows = []
    for m in range(1, n + 1):
        k = n - m
        rows.append(tuple(h[(k + t, k)] - h[(k + t - 1, k)] for t in range(1, m + 1)))
    return tuple(rows)


def delta_ne_inverse(A: GTPattern, nu: Sequence) -> Hive:
    """Inverse of hive_delta_ne given the right border ps(nu) (each line starts on it)."""
    n = len(A)
    right = partial_sums(nu)
    grid = [[None] * (i + 1) for i in range(n + 1)]
    for k in range(n + 1):
        grid[k][k] = right[k]
        arow = A[n - k - 1] if k < n else ()
        for t, a in enumerate(arow, 1):
            grid[k + t][k] = grid[k + t - 1][k] + a
    return Hive(tuple(tuple(r) for r in grid))


def interior_vertices(n: int) -> list[Vertex]:
    return [(i, k) for i in range(2, n) for k in range(1, i)]


# --- Kogan faces -------------------------------------------------------------

@dataclass(frozen=True)
class KoganFace:
    """
    Primal faces flatten R_{ij} (pairs n >= i > j >= 1); dual faces impose
    a_{i-1,j-1} = a_{ij} (pairs n >= i >= j >= 2).
    """
    n: int
    flats: frozenset
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "flats", frozenset(tuple(p) for p in self.flats))
        for i, j in self.flats:
            ok = (self.n >= i >= j >= 2) if self.dual else (self.n >= i > j >= 1)
            if not ok:
                raise ValueError(f"pair {(i, j)} out of range for {'dual ' if self.dual else ''}face, n={self.n}")

    def __len__(self):
        return len(self.flats)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.flats)

    def rhombi(self) -> list[Rhombus]:
        if self.dual:
            raise ValueError("dual faces live on the NE-difference pattern; use to_primal()")
        return [ne_rhombus(i, j) for i, j in sorted(self.flats)]

    def to_primal(self) -> KoganFace:
        """
        The hive face with the same flat rhombi.  On the NE-line pattern, dual
        pair (i', j') is the rhombus R_{ij} with j = n + 1 - i', i = j + j' - 1.
        """
        return KoganFace(self.n, frozenset(_dual_to_primal(p, self.n) for p in self.flats), False)

    def to_dual(self) -> KoganFace:
        return KoganFace(self.n, frozenset(_primal_to_dual(p, self.n) for p in self.flats), True)


def _primal_to_dual(p, n):
    i, j = p
    return (n + 1 - j, i - j + 1)


def _dual_to_primal(p, n):
    a, b = p
    j = n + 1 - a
    return (b + j - 1, j)


def face_word(F: KoganFace, order: str = "lex") -> tuple[tuple[int, ...], Permutation, bool]:
    """
    The letters s_{i-j} of a primal face, listed in ``lex`` order (i, then j) or
    ``column`` order (j, then i); returns (word, product, reduced).
    """
    if F.dual:
        raise ValueError("use dual_face_word for dual faces")
    if order == "lex":
        pairs = sorted(F.flats)
    elif order == "column":
        pairs = sorted(F.flats, key=lambda p: (p[1], p[0]))
    else:
        raise ValueError(f"unknown order {order!r}")
    word = tuple(i - j for i, j in pairs)
    sigma = Permutation.from_word(word, F.n)
    return word, sigma, sigma.length() == len(word)


def dual_face_word(F: KoganFace) -> tuple[tuple[int, ...], Permutation, bool]:
    """Letters s_{j-1}, pairs ordered by i ascending then j descending."""
    if not F.dual:
        raise ValueError("dual_face_word needs a dual face")
    pairs = sorted(F.flats, key=lambda p: (p[0], -p[1]))
    word = tuple(j - 1 for _, j in pairs)
    sigma = Permutation.from_word(word, F.n)
    return word, sigma, sigma.length() == len(word)


def varpi(F: KoganFace) -> Permutation:
    """w0 sigma(F) w0 (sigma-bar for dual faces); F must be reduced."""
    _, sigma, reduced = dual_face_word(F) if F.dual else face_word(F)
    if not reduced:
        raise ValueError(f"face {sorted(F.flats)} is not reduced")
    w0 = longest_element(F.n)
    return w0 * sigma * w0


def all_pairs(n: int, dual: bool = False) -> list[tuple[int, int]]:
    if dual:
        return [(i, j) for i in range(2, n + 1) for j in range(2, i + 1)]
    return [(i, j) for i in range(2, n + 1) for j in range(1, i)]


@cache
def reduced_faces_for(u: Permutation, dual: bool = False) -> tuple[KoganFace, ...]:
    """All reduced faces F with varpi(F) = u; only subsets of size length(u) can qualify."""
    n = u.n
    ell = u.length()
    w0 = longest_element(n)
    target = w0 * u * w0  # the required sigma(F)
    out = []
    for subset in combinations(all_pairs(n, dual), ell):
        F = KoganFace(n, frozenset(subset), dual)
        _, sigma, reduced = dual_face_word(F) if dual else face_word(F)
        if reduced and sigma == target:
            out.append(F)
    return tuple(sorted(out, key=lambda G: sorted(G.flats)))


def is_left_bottom_justified(F: KoganFace) -> bool:
    """F = {(i, j) : p <= i <= n, 1 <= j <= m_i} with 1 <= m_p <= ... <= m_n and m_i < i."""
    if F.dual:
        raise ValueError("primal faces only")
    if not F.flats:
        return True
    n = F.n
    rows = {}
    for i, j in F.flats:
        rows.setdefault(i, set()).add(j)
    p = min(rows)
    prev = 0
    for i in range(p, n + 1):
        js = rows.get(i)
        if not js:
            return False
        m = max(js)
        if js != set(range(1, m + 1)) or m < prev or m >= i:
            return False
        prev = m
    return True


def f_w_for_312(w: Permutation) -> KoganFace:
    """The unique reduced face with varpi = w0 w, for 312-avoiding w."""
    if not avoids_pattern(w, "312"):
        raise ValueError(f"{w} contains 312")
    faces = reduced_faces_for(longest_element(w.n) * w)
    if len(faces) != 1 or not is_left_bottom_justified(faces[0]):
        raise AssertionError(f"face structure for {w} is not a single justified region: {faces}")
    return faces[0]


def gt_in_face(A: GTPattern, F: KoganFace) -> bool:
    if F.dual:
        return all(A[i - 2][j - 2] == A[i - 1][j - 1] for i, j in F.flats)
    return all(A[i - 1][j - 1] == A[i - 2][j - 1] for i, j in F.flats)


def hive_in_face(h: Hive, F: KoganFace) -> bool:
    return all(content(h, R) == 0 for R in F.rhombi())


# --- integer-point enumeration ----------------------------------------------

@cache
def _plan(n: int, flats: frozenset) -> tuple:
    """
    Fill order (bottom interior row upward, left to right) and, for each vertex,
    the rhombus constraints whose last unknown vertex it is.
    """
    order = [(i, k) for i in range(n - 1, 1, -1) for k in range(1, i)]
    rank = {v: t for t, v in enumerate(order)}
    flat_rhombi = {ne_rhombus(i, j) for i, j in flats}
    steps = [[] for _ in order]
    upfront = []
    for R in rhombi(n):
        verts = R.obtuse + R.acute
        inner = [v for v in verts if v in rank]
        eq = R in flat_rhombi
        if not inner:
            upfront.append((R, eq))
            continue
        last = max(inner, key=rank.__getitem__)
        coef = 1 if last in R.obtuse else -1
        steps[rank[last]].append((R, coef, eq))
    for v, cons in zip(order, steps):
        if not any(c == 1 for _, c, _ in cons) or not any(c == -1 for _, c, _ in cons):
            raise AssertionError(f"vertex {v} lacks a two-sided bound")
    return tuple(order), tuple(tuple(s) for s in steps), tuple(upfront)


def enumerate_kogan_hives(lam, mu, nu, F: KoganFace | None = None) -> list[Hive]:
    """
    All integer hives in Hive(lam, mu, nu) with R_{ij} flat for (i, j) in F, in
    the order the backtracker meets them.  Mismatched totals give [].
    """
    return list(iter_kogan_hives(lam, mu, nu, F))


def iter_kogan_hives(lam, mu, nu, F: KoganFace | None = None) -> Iterator[Hive]:
    n = len(lam)
    if not (len(mu) == len(nu) == n):
        raise ValueError("lam, mu, nu must have the same length")
    if sum(lam) + sum(mu) != sum(nu):
        return
    flats = F.flats if F is not None else frozenset()
    if F is not None and (F.dual or F.n != n):
        raise ValueError("need a primal face of matching size")
    order, steps, upfront = _plan(n, frozenset(flats))
    grid = [[None] * (i + 1) for i in range(n + 1)]
    for (i, k), val in border_labels(lam, mu, nu).items():
        grid[i][k] = val
    for R, eq in upfront:
        c = content(grid, R)
        if c < 0 or (eq and c != 0):
            return

    def rec(t):
        if t == len(order):
            yield Hive(tuple(tuple(r) for r in grid))
            return
        i, k = order[t]
        lo, hi = None, None
        for R, coef, eq in steps[t]:
            grid[i][k] = 0
            rest = content(grid, R)
            # coef * x + rest >= 0 (or == 0)
            if coef == 1:
                bound_lo = -rest
                lo = bound_lo if lo is None else max(lo, bound_lo)
                if eq:
                    hi = bound_lo if hi is None else min(hi, bound_lo)
            else:
                bound_hi = rest
                hi = bound_hi if hi is None else min(hi, bound_hi)
                if eq:
                    lo = bound_hi if lo is None else max(lo, bound_hi)
        for x in range(lo, hi + 1):
            grid[i][k] = x
            yield from rec(t + 1)
        grid[i][k] = None

    yield from rec(0)


def kogan_hives_for(lam, mu, nu, u: Permutation) -> set[Hive]:
    """Integer points of the union of hive Kogan faces F with varpi(F) = u."""
    out: set[Hive] = set()
    for F in reduced_faces_for(u):
        out.update(iter_kogan_hives(lam, mu, nu, F))
    return out


def refined_lr_hive(lam, mu, nu, w: Permutation) -> int:
    """Number of integer hives on the faces with varpi(F) = w0 w."""
    return len(kogan_hives_for(tuple(lam), tuple(mu), tuple(nu), longest_element(w.n) * w))


# --- increasable subsets -----------------------------------------------------

def increasable_subsets(h: Hive) -> list[tuple[frozenset, Fraction]]:
    """
    Every nonempty set S of interior vertices for which h + eps * I_S stays a
    hive for some eps > 0, paired with the largest such eps.

    Raising S changes content(R) by eps * d_R, d_R = #(obtuse in S) - #(acute in S).
    S is increasable iff no flat rhombus has d_R < 0; the bound on eps is the
    least content(R) / -d_R over rhombi with d_R < 0.
    """
    n = h.n
    inner = interior_vertices(n)
    contents = [(R, content(h, R)) for R in rhombi(n)]
    out = []
    for size in range(1, len(inner) + 1):
        for S in combinations(inner, size):
            S = frozenset(S)
            eps = None
            ok = True
            for R, c in contents:
                d = sum(v in S for v in R.obtuse) - sum(v in S for v in R.acute)
                if d >= 0:
                    continue
                if c == 0:
                    ok = False
                    break
                bound = Fraction(c) / -d
                eps = bound if eps is None else min(eps, bound)
            if ok:
                if eps is None:
                    raise AssertionError("unbounded increase on a hive with fixed border")
                out.append((S, eps))
    return out
