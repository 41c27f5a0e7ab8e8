"""Tangential derivations of the free Lie algebra.

A tangential derivation is stored as the tuple (a_1, ..., a_n) acting on
generators by x_i -> [x_i, a_i].  The normalization that a_k carries no
linear x_k term is projected away at construction (strict mode errors
instead); with it, tuples correspond one-to-one to their actions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import linalg
from .cyclic import CycSeries, partial_decompose, tr_project
from .lie import LieSeries
from .lyndon import lyndon_basis
from .words import Alphabet, AmbientMismatch, AssocSeries, Word


class TDer:
    """Tangential derivation u = (a_1, ..., a_n)."""

    __slots__ = ("alphabet", "degree", "components")

    def __init__(self, components: Sequence[LieSeries], strict: bool = False):
        components = tuple(components)
        if not components:
            raise ValueError("a tangential derivation needs components")
        first = components[0]
        for c in components:
            first._check_same(c)
        if len(components) != first.alphabet.n:
            raise ValueError("need one component per generator")
        normalized = []
        for k, a in enumerate(components):
            bad = a.coefficient((k,))
            if bad:
                if strict:
                    raise ValueError(
                        f"component {k} has a linear x_{k + 1} term ({bad})")
                a = a - LieSeries.generator(a.alphabet, a.degree, k).scale(bad)
            normalized.append(a)
        self.alphabet = first.alphabet
        self.degree = first.degree
        self.components = tuple(normalized)

    @classmethod
    def zero(cls, alphabet: Alphabet, degree: int) -> "TDer":
        z = LieSeries.zero(alphabet, degree)
        return cls([z] * alphabet.n)

    def _check_same(self, other: "TDer"):
        if self.alphabet != other.alphabet or self.degree != other.degree:
            raise AmbientMismatch("tangential derivations over different ambients")

    def __eq__(self, other):
        if not isinstance(other, TDer):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __bool__(self):
        return any(self.components)

    def __repr__(self):
        return "<TDer " + ", ".join(repr(c) for c in self.components) + ">"

    def __add__(self, other: "TDer") -> "TDer":
        self._check_same(other)
        return TDer([a + b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "TDer":
        return TDer([-a for a in self.components])

    def __sub__(self, other: "TDer") -> "TDer":
        return self + (-other)

    def scale(self, c) -> "TDer":
        return TDer([a.scale(c) for a in self.components])

    def homogeneous(self, d: int) -> "TDer":
        return TDer([a.homogeneous(d) for a in self.components])

    def min_degree(self) -> Optional[int]:
        degs = [a.min_degree() for a in self.components if a]
        return min(degs) if degs else None

    def truncated(self, degree: int) -> "TDer":
        return TDer([a.truncated(degree) for a in self.components])

    # -- action --------------------------------------------------------

    def generator_images(self) -> List[AssocSeries]:
        """u(x_i) = [x_i, a_i] as word series."""
        out = []
        for i, a in enumerate(self.components):
            xi = AssocSeries.generator(self.alphabet, self.degree, i)
            out.append(xi.commutator(a.to_assoc()))
        return out

    def apply_assoc(self, target: AssocSeries) -> AssocSeries:
        """Leibniz extension to the word algebra."""
        if target.alphabet != self.alphabet or target.degree != self.degree:
            raise AmbientMismatch("derivation and target live over different ambients")
        images = self.generator_images()
        table: Dict[Word, Fraction] = {}
        result = AssocSeries.zero(self.alphabet, self.degree)
        for word, c in target.coeffs.items():
            for pos, letter in enumerate(word):
                room = self.degree - (len(word) - 1)
                if room < 1:
                    continue
                prefix, suffix = word[:pos], word[pos + 1:]
                for w, e in images[letter].coeffs.items():
                    if len(w) > room:
                        continue
                    full = prefix + w + suffix
                    table[full] = table.get(full, Fraction(0)) + c * e
        return AssocSeries(self.alphabet, self.degree, table)

    def apply(self, target: Union[LieSeries, AssocSeries, CycSeries]):
        """Act on a Lie, word, or cyclic series; the result has the same kind."""
        if isinstance(target, LieSeries):
            return LieSeries.from_assoc(self.apply_assoc(target.to_assoc()))
        if isinstance(target, AssocSeries):
            return self.apply_assoc(target)
        if isinstance(target, CycSeries):
            if target.alphabet != self.alphabet or target.degree != self.degree:
                raise AmbientMismatch("derivation and target over different ambients")
            return tr_project(self.apply_assoc(target.representative()))
        raise TypeError(f"cannot apply a derivation to {type(target).__name__}")

    def bracket(self, other: "TDer") -> "TDer":
        """[u, v] with components u(b_k) - v(a_k) + [a_k, b_k].

        The contract is that the action of the result is the commutator of
        the actions.
        """
        self._check_same(other)
        comps = []
        for a, b in zip(self.components, other.components):
            comps.append(self.apply(b) - other.apply(a) + a.bracket(b))
        return TDer(comps)


def tder_bracket(u: TDer, v: TDer) -> TDer:
    return u.bracket(v)


def tder_apply(u: TDer, target):
    return u.apply(target)


def divergence(u: TDer) -> CycSeries:
    """div(u) = sum_i tr(x_i * d_i(a_i))."""
    out = CycSeries.zero(u.alphabet, u.degree)
    for i, a in enumerate(u.components):
        aw = a.to_assoc()
        if not aw:
            continue
        di = partial_decompose(aw, i)
        xi = AssocSeries.generator(u.alphabet, u.degree, i)
        prod = xi * di
        if prod:
            out = out + tr_project(prod)
    return out


@dataclass(frozen=True)
class DerivationFlags:
    tangential_normalized: bool
    special: bool
    krv: bool
    witness_degree: Optional[int] = None


def classify(u: TDer) -> DerivationFlags:
    """special <=> sum_i [x_i, a_i] = 0; krv <=> special with zero divergence.

    When a flag fails, witness_degree is the first degree where it does.
    """
    total = AssocSeries.zero(u.alphabet, u.degree)
    for img in u.generator_images():
        total = total + img
    special = not total
    witness = None
    if not special:
        witness = total.min_degree()
        return DerivationFlags(True, False, False, witness)
    div = divergence(u)
    if div:
        witness = min(len(w) for w in div.coeffs)
        return DerivationFlags(True, True, False, witness)
    return DerivationFlags(True, True, True)


# -- simplicial extensions --------------------------------------------


def parse_pattern(pattern: Union[str, Sequence[Sequence[int]]],
                  arity: Optional[int] = None) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
    """Comma notation like "12,3" or "1,23" into groups of 1-based indices.

    Target generators not covered by any group get the zero component; the
    target arity defaults to the largest index mentioned.
    """
    if isinstance(pattern, str):
        groups = tuple(tuple(int(ch) for ch in part) for part in pattern.split(","))
    else:
        groups = tuple(tuple(g) for g in pattern)
    flat = [i for g in groups for i in g]
    if not groups or not flat or any(i < 1 for i in flat):
        raise ValueError(f"malformed pattern {pattern!r}")
    if len(set(flat)) != len(flat):
        raise ValueError(f"pattern groups must be disjoint: {pattern!r}")
    if any(not g for g in groups):
        raise ValueError(f"pattern has an empty group: {pattern!r}")
    m = arity if arity is not None else max(flat)
    if max(flat) > m:
        raise ValueError(f"pattern {pattern!r} exceeds arity {m}")
    return groups, m


def pattern_sums(groups: Tuple[Tuple[int, ...], ...], alphabet: Alphabet,
                 degree: int) -> List[LieSeries]:
    sums = []
    for group in groups:
        s = LieSeries.zero(alphabet, degree)
        for i in group:
            s = s + LieSeries.generator(alphabet, degree, i - 1)
        sums.append(s)
    return sums


def tder_extend(u: TDer, pattern, arity: Optional[int] = None) -> TDer:
    """Simplicial image of u: inside group k the component is a_k at the
    group sums; generators outside every group get zero."""
    groups, m = parse_pattern(pattern, arity)
    if len(groups) != u.alphabet.n:
        raise ValueError(
            f"pattern has {len(groups)} groups but derivation has arity {u.alphabet.n}")
    target = Alphabet(m)
    sums = pattern_sums(groups, target, u.degree)
    zero = LieSeries.zero(target, u.degree)
    comps = [zero] * m
    for k, group in enumerate(groups):
        image = u.components[k].substitute(sums) if u.components[k] else zero
        for i in group:
            comps[i - 1] = image
    return TDer(comps)


# -- infinitesimal braids ---------------------------------------------


@dataclass(frozen=True)
class BraidGenerator:
    """t^{ij} on n strands; symmetric in i <-> j."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise ValueError("indices out of range")
        if self.i == self.j:
            raise ValueError("braid generator needs distinct indices")


def braid_embed(g: BraidGenerator, degree: int) -> TDer:
    """t^{ij} -> (..., x_j at slot i, ..., x_i at slot j, ...)."""
    alphabet = Alphabet(g.n)
    comps = [LieSeries.zero(alphabet, degree) for _ in range(g.n)]
    comps[g.i - 1] = LieSeries.generator(alphabet, degree, g.j - 1)
    comps[g.j - 1] = LieSeries.generator(alphabet, degree, g.i - 1)
    return TDer(comps)


def tder_coords(u: TDer, d: int) -> List[Fraction]:
    """Coefficient vector of the degree-d part on the per-component Lyndon basis."""
    basis = lyndon_basis(u.alphabet.n, d)
    out: List[Fraction] = []
    for a in u.components:
        out.extend(a.coefficient(w) for w in basis)
    return out


def braid_bracket_basis(n: int, d: int, degree: int) -> List[Tuple[tuple, TDer]]:
    """Independent degree-d brackets of the embedded t^{ij}.

    Spanning set: standard bracketings of Lyndon words over the generator
    pairs; an independent subset is extracted by exact elimination.  Each
    entry is (bracket expression over pairs, embedded derivation).
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    gens = [braid_embed(BraidGenerator(i, j, n), degree) for (i, j) in pairs]

    from .lyndon import bracket_structure, lyndon_basis as lyndon_of

    def realize(struct):
        if isinstance(struct, int):
            return gens[struct]
        return realize(struct[0]).bracket(realize(struct[1]))

    def label(struct):
        if isinstance(struct, int):
            return pairs[struct]
        return (label(struct[0]), label(struct[1]))

    candidates = []
    for word in lyndon_of(len(pairs), d):
        struct = bracket_structure(word)
        candidates.append((label(struct), realize(struct)))
    vectors = [tder_coords(u, d) for (_lbl, u) in candidates]
    keep = linalg.independent_subset(vectors)
    return [candidates[i] for i in keep]


def tn_membership(u: TDer, d: Optional[int] = None):
    """Coordinates of a homogeneous derivation on the degree-d braid bracket
    basis, or None when it lies outside the span."""
    degs = {deg for a in u.components for deg in {len(w) for w in a.coeffs}}
    if d is None:
        if len(degs) != 1:
            raise ValueError("membership input must be homogeneous")
        d = degs.pop()
    elif degs - {d}:
        raise ValueError("membership input must be homogeneous of the stated degree")
    basis = braid_bracket_basis(u.alphabet.n, d, u.degree)
    vectors = [tder_coords(b, d) for (_lbl, b) in basis]
    coords = linalg.in_span(vectors, tder_coords(u, d))
    if coords is None:
        return None
    return [(lbl, c) for (lbl, _), c in zip(basis, coords)]
