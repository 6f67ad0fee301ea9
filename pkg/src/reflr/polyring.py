"""
Exact integer polynomials in x_1..x_n, Demazure operators and Schur expansions.

This is the polynomial engine for refined LR coefficients: the coefficient of
s_nu in pi_{w0}(x^lam * kappa_{w,mu}), where kappa_{w,mu} = pi_w(x^mu) is the
key polynomial.
"""

from __future__ import annotations

import json
from collections import defaultdict
from functools import cache
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, is_partition
from .permutations import Permutation, longest_element

Exponent = tuple[int, ...]


class InexactDivision(ArithmeticError):
    """Division by (x_i - x_{i+1}) left a remainder; impossible for valid input."""


class IntPolynomial:
    """
    A finitely supported map exponent-vector -> nonzero int.

    Treated as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = defaultdict(int)
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for n={n}")
            acc[exp] += c
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> IntPolynomial:
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def zero(cls, n: int) -> IntPolynomial:
        return cls(n)

    @classmethod
    def variable(cls, i: int, n: int) -> IntPolynomial:
        exp = [0] * n
        exp[i - 1] = 1
        return cls.monomial(exp)

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp, 1) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def _check(self, other: IntPolynomial):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        self._check(other)
        return IntPolynomial(self.n, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return IntPolynomial(self.n, acc)

    __rmul__ = __mul__

    def shift(self, exp: Sequence[int]) -> IntPolynomial:
        """Multiply by the monomial x^exp."""
        return IntPolynomial(
            self.n, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    def permute(self, w: Permutation) -> IntPolynomial:
        """(w f)(x) = f(x_{w(1)}, ..., x_{w(n)}); on exponents, variable i moves to slot w(i)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, a in enumerate(e):
                new[w.images[i] - 1] = a
            out[tuple(new)] = c
        return IntPolynomial(self.n, out)

    def swap(self, i: int) -> IntPolynomial:
        """s_i f: exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return IntPolynomial(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, a in zip(point, e):
                term = term * x ** a
            total += term
        return total

    def to_json(self) -> str:
        return json.dumps([[list(e), c] for e, c in sorted(self.terms.items())])

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> IntPolynomial:
        data = json.loads(text)
        if n is None:
            n = len(data[0][0]) if data else 0
        return cls(n, [(tuple(e), c) for e, c in data])


def divide_by_difference(f: IntPolynomial, i: int) -> IntPolynomial:
    """
    Exact quotient f / (x_i - x_{i+1}) by synthetic division on the (x_i, x_{i+1})
    exponent pairs; raises InexactDivision on a nonzero remainder.
    """
    n = f.n
    # group into binary forms in (x_i, x_{i+1}): key = other exponents + pair degree
    groups: dict[tuple, dict[int, int]] = defaultdict(dict)
    for e, c in f.terms.items():
        p, q = e[i - 1], e[i]
        key = (e[: i - 1] + e[i + 1:], p + q)
        groups[key][p] = c
    out: dict[Exponent, int] = {}
    for (rest, deg), coeffs in groups.items():
        # sum_p c_p x_i^p x_{i+1}^(deg-p) = (x_i - x_{i+1}) * sum_p q_p x_i^p x_{i+1}^(deg-1-p)
        carry = 0
        for p in range(deg, 0, -1):
            carry += coeffs.get(p, 0)  # q_{p-1}
            if carry:
                exp = rest[: i - 1] + (p - 1, deg - p) + rest[i - 1:]
                out[exp] = carry
        if carry + coeffs.get(0, 0) != 0:
            raise InexactDivision(f"remainder dividing by x{i} - x{i + 1}")
    return IntPolynomial(n, out)


def demazure_apply(i: int, f: IntPolynomial) -> IntPolynomial:
    """pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})."""
    n = f.n
    if not 1 <= i < n:
        raise ValueError(f"pi_{i} undefined for n={n}")
    up_i = [0] * n
    up_i[i - 1] = 1
    up_j = [0] * n
    up_j[i] = 1
    numerator = f.shift(up_i) - f.swap(i).shift(up_j)
    return divide_by_difference(numerator, i)


def demazure_word(word: Sequence[int], f: IntPolynomial) -> IntPolynomial:
    """pi_{i_1} ... pi_{i_k} f; the rightmost operator acts first."""
    for i in reversed(word):
        f = demazure_apply(i, f)
    return f


@cache
def demazure_char(w: Permutation, mu: Partition) -> IntPolynomial:
    """Key polynomial kappa_{w,mu} = pi_w(x^mu)."""
    return demazure_word(w.reduced_word(), IntPolynomial.monomial(mu))


def pi_w0(f: IntPolynomial) -> IntPolynomial:
    return demazure_word(longest_element(f.n).reduced_word(), f)


@cache
def schur_poly(nu: Partition) -> IntPolynomial:
    return pi_w0(IntPolynomial.monomial(nu))


def staircase(n: int) -> tuple[int, ...]:
    """rho = (n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def schur_expand(f: IntPolynomial) -> dict[Partition, int]:
    """
    Coefficients of f in the Schur basis, by repeatedly subtracting c * s_nu where
    x^nu is the lexicographically largest monomial left.
    """
    if not f.is_symmetric():
        raise ValueError("schur_expand needs a symmetric polynomial")
    out: dict[Partition, int] = {}
    rest = f
    while rest:
        lead = max(rest.terms)
        if not is_partition(lead):
            raise AssertionError(f"leading exponent {lead} of a symmetric polynomial is not dominant")
        c = rest.terms[lead]
        out[lead] = c
        rest = rest - schur_poly(lead) * c
    return out


def schur_reconstruct(coeffs: Mapping[Partition, int], n: int) -> IntPolynomial:
    total = IntPolynomial.zero(n)
    for nu, c in coeffs.items():
        total = total + schur_poly(tuple(nu)) * c
    return total


@cache
def refined_lr_expansion(lam: Partition, mu: Partition, w: Permutation) -> dict[Partition, int]:
    """Schur expansion of pi_{w0}(x^lam * kappa_{w,mu}): all nu at once."""
    if not (len(lam) == len(mu) == w.n):
        raise ValueError("lam, mu and w must share n")
    return schur_expand(pi_w0(demazure_char(w, mu).shift(lam)))


def refined_lr_demazure(lam: Partition, mu: Partition, nu: Partition, w: Permutation) -> int:
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if w.n > 6:
        raise ValueError("the polynomial engine is limited to n <= 6")
    return refined_lr_expansion(tuple(lam), tuple(mu), w).get(tuple(nu), 0)
