"""The prounipotent group of tangential automorphisms.

Elements are stored by their generator images (conjugators are ambiguous
by centralizer factors, images are not).  ``exp`` is the literal series
x_i -> sum_k u^k(x_i)/k!; the distinguished transport elements from the
eyelid/iris picture are provided as ready-made constructors, with their
signs pinned by the R-lemma ch(x,y) -> ch(y,x).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import linalg
from .cyclic import CycSeries, tr_project
from .derivations import TDer, divergence, parse_pattern, pattern_sums
from .lie import LieSeries
from .lyndon import bracket_expansion, lyndon_basis
from .words import Alphabet, AmbientMismatch, AssocSeries, Word


class NotTangentialImage(ValueError):
    """An image tuple is not of the conjugated form Ad_g x_i."""


def _lie_coords(s: LieSeries, d: int, basis) -> List[Fraction]:
    return [s.coefficient(w) for w in basis]


def solve_ad_generator(alphabet: Alphabet, degree: int, i: int,
                       rhs: LieSeries, d: int,
                       exclude_generator: bool = True) -> Optional[LieSeries]:
    """Solve [x_i, a] = rhs for homogeneous a of degree d.

    rhs must be homogeneous of degree d+1.  For d = 1 the kernel of
    ad(x_i) is spanned by x_i itself; excluding it pins the solution.
    """
    unknowns = lyndon_basis(alphabet.n, d)
    if d == 1 and exclude_generator:
        unknowns = [w for w in unknowns if w != (i,)]
    target_basis = lyndon_basis(alphabet.n, d + 1)
    xi = LieSeries.generator(alphabet, degree, i)
    columns = []
    for w in unknowns:
        bw = LieSeries(alphabet, degree, {w: Fraction(1)})
        columns.append(_lie_coords(xi.bracket(bw), d + 1, target_basis))
    a = [[columns[j][r] for j in range(len(unknowns))]
         for r in range(len(target_basis))]
    b = _lie_coords(rhs, d + 1, target_basis)
    sol, _null = linalg.solve_affine(a, b) if unknowns else (None, [])
    if sol is None:
        if not any(b):
            sol = [Fraction(0)] * len(unknowns)
        else:
            return None
    return LieSeries(alphabet, degree,
                     {w: c for w, c in zip(unknowns, sol) if c})


def ad_exponential(c: LieSeries, target: LieSeries) -> LieSeries:
    """e^{ad_c} applied to target, i.e. Ad of the group-like exp(c)."""
    result = target
    term = target
    for k in range(1, c.degree + 1):
        term = c.bracket(term).scale(Fraction(1, k))
        if not term:
            break
        result = result + term
    return result


class TAutElem:
    """Tangential automorphism stored by generator images."""

    __slots__ = ("alphabet", "degree", "images", "log_certificate")

    def __init__(self, images: Sequence[LieSeries],
                 log_certificate: Optional[TDer] = None,
                 check: bool = True):
        images = tuple(images)
        if not images:
            raise ValueError("an automorphism needs generator images")
        first = images[0]
        for im in images:
            first._check_same(im)
        if len(images) != first.alphabet.n:
            raise ValueError("need one image per generator")
        self.alphabet = first.alphabet
        self.degree = first.degree
        self.images = images
        self.log_certificate = log_certificate
        if check:
            for i in range(self.alphabet.n):
                self.conjugator_log(i)  # raises NotTangentialImage on failure

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, alphabet: Alphabet, degree: int) -> "TAutElem":
        return cls(LieSeries.generators(alphabet, degree), check=False)

    # -- plumbing -----------------------------------------------------

    def _check_same(self, other: "TAutElem"):
        if self.alphabet != other.alphabet or self.degree != other.degree:
            raise AmbientMismatch("automorphisms over different ambients")

    def __eq__(self, other):
        if not isinstance(other, TAutElem):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "<TAutElem " + ", ".join(repr(im) for im in self.images) + ">"

    def is_identity(self) -> bool:
        return self == TAutElem.identity(self.alphabet, self.degree)

    def conjugator_log(self, i: int) -> LieSeries:
        """The Lie logarithm c_i with e^{ad_{c_i}} x_i = image_i.

        The centralizer ambiguity (multiples of x_i in degree one) is fixed
        by excluding them, which is the choice under which group-level and
        derivation-level simplicial extensions agree.
        """
        alphabet, degree = self.alphabet, self.degree
        image = self.images[i]
        xi = LieSeries.generator(alphabet, degree, i)
        if image.homogeneous(1) != xi:
            raise NotTangentialImage(
                f"image of generator {i} does not start with the generator")
        c = LieSeries.zero(alphabet, degree)
        for d in range(1, degree):
            residual = (image - ad_exponential(c, xi)).homogeneous(d + 1)
            if not residual:
                continue
            cd = solve_ad_generator(alphabet, degree, i, -residual, d)
            if cd is None:
                raise NotTangentialImage(
                    f"image of generator {i} is not conjugated at degree {d + 1}")
            c = c + cd
        if image != ad_exponential(c, xi):
            raise NotTangentialImage(f"image of generator {i} is not conjugated")
        return c

    # -- group operations ---------------------------------------------

    def apply(self, target: Union[LieSeries, AssocSeries, CycSeries]):
        """Algebra-map extension of the generator images."""
        if isinstance(target, LieSeries):
            if target.alphabet != self.alphabet or target.degree != self.degree:
                raise AmbientMismatch("automorphism and target over different ambients")
            return target.substitute(self.images)
        if isinstance(target, AssocSeries):
            if target.alphabet != self.alphabet or target.degree != self.degree:
                raise AmbientMismatch("automorphism and target over different ambients")
            return target.substitute([im.to_assoc() for im in self.images])
        if isinstance(target, CycSeries):
            if target.alphabet != self.alphabet or target.degree != self.degree:
                raise AmbientMismatch("automorphism and target over different ambients")
            rep = target.representative()
            return tr_project(rep.substitute([im.to_assoc() for im in self.images]))
        raise TypeError(f"cannot apply an automorphism to {type(target).__name__}")

    def compose(self, other: "TAutElem") -> "TAutElem":
        """(g . h)(s) = g(h(s))."""
        self._check_same(other)
        images = [self.apply(im) for im in other.images]
        return TAutElem(images, check=False)

    def invert(self) -> "TAutElem":
        """Degree-by-degree fixed point of g(inv(x_i)) = x_i."""
        gens = LieSeries.generators(self.alphabet, self.degree)
        inv = list(gens)
        for _ in range(self.degree):
            inv = [xi - (self.apply(s) - s) for xi, s in zip(gens, inv)]
        result = TAutElem(inv, check=False)
        composed = self.compose(result)
        if not composed.is_identity():
            raise ValueError("inversion failed to converge")
        log = self.log_certificate
        return TAutElem(inv, log_certificate=(-log if log is not None else None),
                        check=False)


def taut_exp(u: TDer) -> TAutElem:
    """x_i -> sum_k u^k(x_i)/k!, truncated."""
    images = []
    for i in range(u.alphabet.n):
        s = LieSeries.generator(u.alphabet, u.degree, i)
        term = s
        for k in range(1, u.degree + 1):
            term = u.apply(term).scale(Fraction(1, k))
            if not term:
                break
            s = s + term
        images.append(s)
    return TAutElem(images, log_certificate=u, check=False)


def taut_log(g: TAutElem) -> TDer:
    """Inverse of taut_exp, solved degree by degree."""
    if g.log_certificate is not None:
        return g.log_certificate
    alphabet, degree = g.alphabet, g.degree
    u = TDer.zero(alphabet, degree)
    for d in range(1, degree):
        current = taut_exp(u)
        comps = list(u.components)
        progress = False
        for i in range(alphabet.n):
            residual = (g.images[i] - current.images[i]).homogeneous(d + 1)
            if not residual:
                continue
            ad = solve_ad_generator(alphabet, degree, i, residual, d)
            if ad is None:
                raise NotTangentialImage(
                    f"no tangential logarithm at degree {d} (generator {i})")
            comps[i] = comps[i] + ad
            progress = True
        if progress:
            u = TDer(comps)
    if taut_exp(u) != g:
        raise NotTangentialImage("element is not an exponential of a tangential derivation")
    g.log_certificate = u
    return u


def taut_compose(g: TAutElem, h: TAutElem) -> TAutElem:
    return g.compose(h)


def taut_invert(g: TAutElem) -> TAutElem:
    return g.invert()


def taut_apply(g: TAutElem, target):
    return g.apply(target)


def taut_extend(g: TAutElem, pattern, arity: Optional[int] = None) -> TAutElem:
    """Group-level simplicial map: conjugators at the group sums.

    Independent code path from exp(tder_extend(log g)); the two agree
    because the conjugator normalization matches the exponential's.
    """
    groups, m = parse_pattern(pattern, arity)
    if len(groups) != g.alphabet.n:
        raise ValueError(
            f"pattern has {len(groups)} groups but element has arity {g.alphabet.n}")
    target = Alphabet(m)
    sums = pattern_sums(groups, target, g.degree)
    images = LieSeries.generators(target, g.degree)
    images = list(images)
    for k, group in enumerate(groups):
        ck = g.conjugator_log(k).substitute(sums)
        for i in group:
            xi = LieSeries.generator(target, g.degree, i - 1)
            images[i - 1] = ad_exponential(ck, xi)
    return TAutElem(images, check=False)


def j_group_cocycle(g: TAutElem) -> CycSeries:
    """J(exp u) = sum_k u^k(div u)/(k+1)!; satisfies J(gh) = J(g) + g.J(h)."""
    u = taut_log(g)
    term = divergence(u)
    out = term
    for k in range(1, g.degree + 1):
        term = u.apply(term)
        if not term:
            break
        out = out + term.scale(Fraction(1, factorial(k + 1)))
    return out


def inner_automorphism(c: LieSeries) -> TAutElem:
    """Conjugation x_i -> e^{ad_c} x_i = (exp c) x_i (exp -c)."""
    images = [ad_exponential(c, xi)
              for xi in LieSeries.generators(c.alphabet, c.degree)]
    return TAutElem(images, check=False)


def r_element(degree: int) -> TAutElem:
    """The eyelid transport R: x -> Ad_{exp(y)} x, y -> y.

    Satisfies R(ch(x,y)) = ch(y,x); equals taut_exp((-y, 0)).
    """
    alphabet = Alphabet(2)
    x, y = LieSeries.generators(alphabet, degree)
    return TAutElem([ad_exponential(y, x), y],
                    log_certificate=TDer([-y, LieSeries.zero(alphabet, degree)]),
                    check=False)


def iris_derivation(degree: int) -> TDer:
    """t = (y, x), the inner tangential derivation s -> [s, x+y]."""
    alphabet = Alphabet(2)
    x, y = LieSeries.generators(alphabet, degree)
    return TDer([y, x])


# -- involutions ------------------------------------------------------


def _permutation_substitution(alphabet: Alphabet, degree: int,
                              perm: Sequence[int]) -> List[LieSeries]:
    return [LieSeries.generator(alphabet, degree, perm[i])
            for i in range(alphabet.n)]


def _negation(s: LieSeries) -> LieSeries:
    return LieSeries(s.alphabet, s.degree,
                     {w: ((-1) ** len(w)) * c for w, c in s.coeffs.items()})


def symmetry_transform(which: str, target: Union[TDer, TAutElem]):
    """tau1 / tau2 on arity 2, kappa on arity 3; all involutions.

    tau1 swaps the two components and the two variables; tau2 and kappa
    negate every generator (sign (-1)^d on homogeneous degree d).
    """
    which = which.lower()
    n = target.alphabet.n
    if which == "tau1":
        if n != 2:
            raise ValueError("tau1 needs arity 2")
        swap = _permutation_substitution(target.alphabet, target.degree, [1, 0])
        if isinstance(target, TDer):
            a, b = target.components
            return TDer([b.substitute(swap), a.substitute(swap)])
        if isinstance(target, TAutElem):
            images = [target.images[1].substitute(swap),
                      target.images[0].substitute(swap)]
            return TAutElem(images, check=False)
    elif which in ("tau2", "kappa"):
        need = 2 if which == "tau2" else 3
        if n != need:
            raise ValueError(f"{which} needs arity {need}")
        if isinstance(target, TDer):
            return TDer([_negation(a) for a in target.components])
        if isinstance(target, TAutElem):
            # nu o g o nu with nu: x_i -> -x_i
            return TAutElem([-_negation(im) for im in target.images], check=False)
    else:
        raise ValueError(f"unknown symmetry {which!r}")
    raise TypeError(f"cannot transform {type(target).__name__}")


def tau_involution(target: Union[TDer, TAutElem]):
    """tau = tau1 tau2 = tau2 tau1 on arity 2."""
    return symmetry_transform("tau1", symmetry_transform("tau2", target))
