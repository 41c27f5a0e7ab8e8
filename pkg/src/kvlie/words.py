"""Truncated free associative algebra with exact rational coefficients.

Words are tuples of 0-based generator indices.  Every series carries its
alphabet and a hard truncation order; all products silently drop terms of
total degree above the truncation, and mixing different ambients is an
error, never a coercion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Word = Tuple[int, ...]

_DEFAULT_NAMES = ("x", "y", "z", "w")


class AmbientMismatch(ValueError):
    """Raised when two series disagree on alphabet or truncation order."""


class NotPrimitiveError(ValueError):
    """Raised when a word series expected to be a Lie element is not one."""

    def __init__(self, degree: int, message: str = ""):
        self.degree = degree
        super().__init__(message or f"series is not primitive at degree {degree}")


@dataclass(frozen=True)
class Alphabet:
    """Generators x_1..x_n, all of degree one."""

    n: int
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("alphabet needs at least one generator")
        if not self.names:
            if self.n <= len(_DEFAULT_NAMES):
                names = _DEFAULT_NAMES[: self.n]
            else:
                names = tuple(f"x{i + 1}" for i in range(self.n))
            object.__setattr__(self, "names", names)
        if len(self.names) != self.n or len(set(self.names)) != self.n:
            raise ValueError("generator names must be distinct, one per generator")

    def word_name(self, word: Word) -> str:
        return "".join(self.names[i] for i in word)

    def parse_word(self, text: str) -> Word:
        """Inverse of word_name; greedy longest-name match."""
        by_len = sorted(range(self.n), key=lambda i: -len(self.names[i]))
        out = []
        pos = 0
        while pos < len(text):
            for i in by_len:
                name = self.names[i]
                if text.startswith(name, pos):
                    out.append(i)
                    pos += len(name)
                    break
            else:
                raise ValueError(f"cannot parse word {text!r} over {self.names}")
        return tuple(out)


def _as_fraction(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed here")
    return Fraction(c)


class AssocSeries:
    """Finitely supported word -> rational table, truncated at ``degree``.

    ``unital`` records whether the empty word is permitted (the unit of the
    full algebra) or excluded (augmentation ideal).
    """

    __slots__ = ("alphabet", "degree", "coeffs", "unital")

    def __init__(self, alphabet: Alphabet, degree: int,
                 coeffs: Mapping[Word, Fraction] | None = None,
                 unital: bool = True):
        if degree < 1:
            raise ValueError("truncation order must be >= 1")
        self.alphabet = alphabet
        self.degree = degree
        self.unital = unital
        table: Dict[Word, Fraction] = {}
        if coeffs:
            for word, c in coeffs.items():
                word = tuple(word)
                if len(word) > degree:
                    continue
                c = _as_fraction(c)
                if c:
                    if any(i < 0 or i >= alphabet.n for i in word):
                        raise ValueError(f"word {word} outside alphabet")
                    table[word] = c
        if not unital and () in table:
            raise ValueError("augmentation-ideal series cannot carry the empty word")
        self.coeffs = table

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet, degree: int) -> "AssocSeries":
        return cls(alphabet, degree, {})

    @classmethod
    def one(cls, alphabet: Alphabet, degree: int) -> "AssocSeries":
        return cls(alphabet, degree, {(): Fraction(1)})

    @classmethod
    def generator(cls, alphabet: Alphabet, degree: int, i: int) -> "AssocSeries":
        if not 0 <= i < alphabet.n:
            raise ValueError(f"generator index {i} out of range")
        return cls(alphabet, degree, {(i,): Fraction(1)})

    # -- plumbing -----------------------------------------------------

    def _check_same(self, other: "AssocSeries"):
        if self.alphabet != other.alphabet:
            raise AmbientMismatch(
                f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")
        if self.degree != other.degree:
            raise AmbientMismatch(
                f"truncation mismatch: {self.degree} vs {other.degree}")

    def __eq__(self, other):
        if not isinstance(other, AssocSeries):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.alphabet, self.degree, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "<AssocSeries 0>"
        bits = []
        for word in sorted(self.coeffs, key=lambda w: (len(w), w)):
            name = self.alphabet.word_name(word) or "1"
            bits.append(f"{self.coeffs[word]}*{name}")
        return "<AssocSeries " + " + ".join(bits) + ">"

    def coefficient(self, word: Word) -> Fraction:
        return self.coeffs.get(tuple(word), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs.get((), Fraction(0))

    def homogeneous(self, d: int) -> "AssocSeries":
        return AssocSeries(self.alphabet, self.degree,
                           {w: c for w, c in self.coeffs.items() if len(w) == d})

    def min_degree(self) -> int | None:
        return min((len(w) for w in self.coeffs), default=None)

    def truncated(self, degree: int) -> "AssocSeries":
        return AssocSeries(self.alphabet, degree, self.coeffs, unital=self.unital)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "AssocSeries") -> "AssocSeries":
        self._check_same(other)
        table = dict(self.coeffs)
        for w, c in other.coeffs.items():
            table[w] = table.get(w, Fraction(0)) + c
        return AssocSeries(self.alphabet, self.degree, table)

    def __neg__(self) -> "AssocSeries":
        return AssocSeries(self.alphabet, self.degree,
                           {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "AssocSeries") -> "AssocSeries":
        return self + (-other)

    def scale(self, c) -> "AssocSeries":
        c = _as_fraction(c)
        return AssocSeries(self.alphabet, self.degree,
                           {w: c * v for w, v in self.coeffs.items()})

    def __mul__(self, other: "AssocSeries") -> "AssocSeries":
        self._check_same(other)
        by_len: Dict[int, list] = {}
        for w2, c2 in other.coeffs.items():
            by_len.setdefault(len(w2), []).append((w2, c2))
        table: Dict[Word, Fraction] = {}
        get = table.get
        zero = Fraction(0)
        for w1, c1 in self.coeffs.items():
            room = self.degree - len(w1)
            for length, bucket in by_len.items():
                if length > room:
                    continue
                for w2, c2 in bucket:
                    w = w1 + w2
                    table[w] = get(w, zero) + c1 * c2
        return AssocSeries(self.alphabet, self.degree, table)

    def commutator(self, other: "AssocSeries") -> "AssocSeries":
        return self * other - other * self

    def power(self, k: int) -> "AssocSeries":
        result = AssocSeries.one(self.alphabet, self.degree)
        for _ in range(k):
            result = result * self
        return result

    def exp(self) -> "AssocSeries":
        """exp of a series with no constant term."""
        if self.constant_term:
            raise ValueError("exp requires vanishing constant term")
        result = AssocSeries.one(self.alphabet, self.degree)
        term = AssocSeries.one(self.alphabet, self.degree)
        for k in range(1, self.degree + 1):
            term = (term * self).scale(Fraction(1, k))
            if not term:
                break
            result = result + term
        return result

    def log(self) -> "AssocSeries":
        """log of a series with constant term 1."""
        if self.constant_term != 1:
            raise ValueError("log requires constant term 1")
        h = self - AssocSeries.one(self.alphabet, self.degree)
        result = AssocSeries.zero(self.alphabet, self.degree)
        term = AssocSeries.one(self.alphabet, self.degree)
        for k in range(1, self.degree + 1):
            term = term * h
            if not term:
                break
            result = result + term.scale(Fraction((-1) ** (k + 1), k))
        return result

    def substitute(self, images: Sequence["AssocSeries"]) -> "AssocSeries":
        """Algebra-map extension of x_i -> images[i] (no constant terms)."""
        if len(images) != self.alphabet.n:
            raise ValueError("one image per generator required")
        target = images[0]
        for im in images:
            target._check_same(im)
            if im.constant_term:
                raise ValueError("substitution image has a degree-0 term")
        result = AssocSeries.zero(target.alphabet, target.degree)
        cache: Dict[Word, AssocSeries] = {(): AssocSeries.one(target.alphabet, target.degree)}
        for word in sorted(self.coeffs, key=len):
            if word not in cache:
                # walk up to the nearest cached prefix, filling the gaps
                # so sibling words can reuse them
                k = len(word) - 1
                while k > 0 and word[:k] not in cache:
                    k -= 1
                acc = cache[word[:k]]
                for pos in range(k, len(word)):
                    acc = acc * images[word[pos]]
                    cache[word[:pos + 1]] = acc
            result = result + cache[word].scale(self.coeffs[word])
        return result
