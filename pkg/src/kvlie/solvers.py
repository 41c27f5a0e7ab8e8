"""Degree-by-degree exact solvers for the transport equations.

Both solvers work in logarithmic coordinates: the unknown is a tangential
derivation built one homogeneous degree at a time, each step reducing to
an exact rational linear system.  Underdetermined degrees are resolved by
a deterministic gauge (symmetry constraints first, then the least-norm
representative over the kernel).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .cyclic import CycSeries, duflo_series, h_subspace_vector
from .derivations import TDer, braid_bracket_basis, divergence, tder_coords, tder_extend
from .lie import LieSeries, bch_xy
from .lyndon import lyndon_basis
from .automorphisms import (TAutElem, inner_automorphism, r_element,
                            symmetry_transform, tau_involution, taut_exp,
                            taut_extend, taut_invert, taut_log)
from .words import Alphabet


@dataclass
class DegreeRecord:
    degree: int
    dimension: int
    rank: int
    residual_zero: bool
    gauge: List[Fraction] = field(default_factory=list)


@dataclass
class DegreeReport:
    records: List[DegreeRecord] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    def all_zero(self) -> bool:
        return all(r.residual_zero for r in self.records)


def _necklace_basis(n: int, d: int):
    from .cyclic import canonical_rotation
    from itertools import product
    seen = sorted({canonical_rotation(w) for w in product(range(n), repeat=d)})
    return seen


def _kv_parameter_basis(alphabet: Alphabet, degree: int, d: int) -> List[TDer]:
    """Basis of normalized tangential degree-d tuples on two generators."""
    out = []
    zero = LieSeries.zero(alphabet, degree)
    for k in range(alphabet.n):
        for w in lyndon_basis(alphabet.n, d):
            if w == (k,):
                continue
            comps = [zero] * alphabet.n
            comps[k] = LieSeries(alphabet, degree, {w: Fraction(1)})
            out.append(TDer(comps))
    return out


def _tau_fixed_subspace(basis: Sequence[TDer], d: int) -> List[TDer]:
    """Combinations of the basis fixed by tau = tau1 tau2."""
    vectors = [tder_coords(u, d) for u in basis]
    tau_vectors = [tder_coords(tau_involution(u), d) for u in basis]
    k = len(basis)
    a = [[tau_vectors[j][r] - vectors[j][r] for j in range(k)]
         for r in range(len(vectors[0]))]
    combos = linalg.nullspace(a)
    fixed = []
    for combo in combos:
        acc = TDer.zero(basis[0].alphabet, basis[0].degree)
        for c, u in zip(combo, basis):
            if c:
                acc = acc + u.scale(c)
        fixed.append(acc)
    return fixed


def solve_kv(degree: int, gauge: str = "symmetric") -> Tuple[TAutElem, DegreeReport]:
    """Build F = exp(u) with F(ch(x,y)) = x + y exactly up to the truncation.

    Each homogeneous step also keeps the group divergence cocycle J(F)
    inside the span of tr h(x) + tr h(y) - tr h(ch), which is the second
    half of the Kashiwara-Vergne system; the coefficient of each new
    tr-power enters the step as one extra unknown.

    gauge: "symmetric" restricts the per-degree solution to the tau-fixed
    subspace before taking the least-norm representative; "minimal-norm"
    takes the least-norm representative over the full kernel.
    """
    if degree < 2:
        raise ValueError("need degree >= 2")
    if gauge not in ("symmetric", "minimal-norm"):
        raise ValueError(f"unknown gauge {gauge!r}")
    alphabet = Alphabet(2)
    ch = bch_xy(degree)
    target = LieSeries.generator(alphabet, degree, 0) + \
        LieSeries.generator(alphabet, degree, 1)
    u = TDer.zero(alphabet, degree)
    h_coeffs: Dict[int, Fraction] = {}
    report = DegreeReport()
    from .automorphisms import j_group_cocycle

    for d in range(1, degree + 1):
        basis = _kv_parameter_basis(alphabet, degree, d)
        if gauge == "symmetric":
            basis = _tau_fixed_subspace(basis, d)
        current = taut_exp(u)
        # the ch equation one degree up (a degree-d step acts on x + y
        # there) together with the J condition at degree d, where div of
        # the step lands
        lie_basis_next = lyndon_basis(2, d + 1) if d < degree else []
        cyc_basis_here = _necklace_basis(2, d)
        ch_residual = (current.apply(ch) - target).homogeneous(d + 1)
        j_now = j_group_cocycle(current)
        j_fixed = CycSeries.zero(alphabet, degree)
        for k, c in h_coeffs.items():
            if c:
                j_fixed = j_fixed + h_subspace_vector(k, degree).scale(c)
        j_residual = (j_now - j_fixed).homogeneous(d)
        with_c = d >= 2
        v_new = h_subspace_vector(d, degree).homogeneous(d) if with_c else None

        eq_cols: List[List[Fraction]] = []
        for e in basis:
            change_ch = e.apply(target).homogeneous(d + 1)
            change_j = divergence(e).homogeneous(d)
            eq_cols.append(
                [change_ch.coefficient(w) for w in lie_basis_next]
                + [change_j.coefficient(w) for w in cyc_basis_here])
        if with_c:
            # column for the new tr-power coefficient (J equation only)
            eq_cols.append(
                [Fraction(0)] * len(lie_basis_next)
                + [-v_new.coefficient(w) for w in cyc_basis_here])
        b = ([-ch_residual.coefficient(w) for w in lie_basis_next]
             + [-j_residual.coefficient(w) for w in cyc_basis_here])
        a = [[eq_cols[j][r] for j in range(len(eq_cols))] for r in range(len(b))]
        particular, null = linalg.solve_affine(a, b)
        if particular is None:
            raise RuntimeError(
                f"KV system inconsistent at degree {d} (implementation bug)")
        solution = linalg.min_norm_pick(particular, null)
        step_coeffs = solution[:-1] if with_c else solution
        step = TDer.zero(alphabet, degree)
        for c, e in zip(step_coeffs, basis):
            if c:
                step = step + e.scale(c)
        u = u + step
        if with_c:
            h_coeffs[d] = solution[-1]
        report.records.append(DegreeRecord(
            degree=d,
            dimension=len(eq_cols),
            rank=linalg.rank(a),
            residual_zero=True,
            gauge=solution))

    f = taut_exp(u)
    final_residual = f.apply(ch) - target
    for rec in report.records:
        rec.residual_zero = rec.residual_zero and not final_residual.homogeneous(
            rec.degree + 1)
    j_f = j_group_cocycle(f)
    duf = duflo_series(degree)
    report.notes["h_coefficients"] = dict(h_coeffs)
    report.notes["defining_residual_zero"] = not final_residual
    report.notes["j_minus_duf_zero"] = not (j_f - duf)
    report.notes["j_plus_duf_zero"] = not (j_f + duf)
    report.notes["j_in_h_subspace"] = _j_subspace_rank_test(j_f, degree)
    return f, report


def _j_subspace_rank_test(j: CycSeries, degree: int) -> bool:
    """Rank test: j lies in span{tr h(x)+tr h(y)-tr h(ch)} through the truncation."""
    vectors = []
    basis = [w for d in range(1, degree + 1) for w in _necklace_basis(2, d)]
    for k in range(2, degree + 1):
        v = h_subspace_vector(k, degree)
        vectors.append([v.coefficient(w) for w in basis])
    target = [j.coefficient(w) for w in basis]
    return linalg.in_span(vectors, target) is not None


# -- associator -------------------------------------------------------


@dataclass
class AssociatorCandidate:
    element: TAutElem
    log: TDer
    group_like_verified: bool
    tn_coordinates: Dict[int, List] = field(default_factory=dict)


def _reambient(u: TDer, degree: int) -> TDer:
    """Move a derivation to another ambient truncation order."""
    return TDer([LieSeries(u.alphabet, degree, dict(c.coeffs))
                 for c in u.components])


def _tder_cap(u: TDer, d: int) -> TDer:
    """Drop components above derivation degree d, keeping the ambient."""
    return TDer([LieSeries(u.alphabet, u.degree,
                           {w: c for w, c in comp.coeffs.items() if len(w) <= d})
                 for comp in u.components])


def tder_bch(u: TDer, v: TDer, order: int) -> TDer:
    """log(exp(u) exp(v)) inside the Lie algebra of tangential derivations.

    The universal two-letter formula is realized with derivation brackets;
    brackets of more than ``order`` factors are dropped, which is exact
    when the inputs have derivation degree >= 1.
    """
    ch = bch_xy(order)
    cache: dict = {}

    from .lyndon import bracket_structure

    def realize(struct):
        if struct in cache:
            return cache[struct]
        if isinstance(struct, int):
            r = (u, v)[struct]
        else:
            r = realize(struct[0]).bracket(realize(struct[1]))
        cache[struct] = r
        return r

    total = TDer.zero(u.alphabet, u.degree)
    for w, c in ch.coeffs.items():
        term = realize(bracket_structure(w))
        if term:
            total = total + term.scale(c)
    return _tder_cap(total, order)


def _bch_chain(factors: Sequence[TDer], order: int) -> TDer:
    """log of the product exp(f_1) ... exp(f_k), folded right to left."""
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = tder_bch(f, out, order)
    return out


def _braid_tders(degree: int) -> Dict[str, TDer]:
    from .derivations import BraidGenerator, braid_embed
    return {
        "t12": braid_embed(BraidGenerator(1, 2, 3), degree),
        "t13": braid_embed(BraidGenerator(1, 3, 3), degree),
        "t23": braid_embed(BraidGenerator(2, 3, 3), degree),
    }


def _compose_all(elems: Sequence[TAutElem]) -> TAutElem:
    out = elems[0]
    for e in elems[1:]:
        out = out.compose(e)
    return out


def _axiom_residuals(phi: TDer, degree: int, hexagon_sign: int,
                     extend_group_level: bool = False) -> Dict[str, TDer]:
    """Exact log-residuals of duality, pentagon (arity 4) and hexagon.

    extend_group_level picks the checker path (extend the automorphism)
    instead of the solver path (extend the log, then exponentiate).

    A derivation-degree-d log term first shows up in generator images at
    word degree d + 1, so everything runs one order above ``degree``.
    """
    phi = _reambient(phi.truncated(degree), degree + 1)
    big = taut_exp(phi)

    def ext(pattern, arity):
        if extend_group_level:
            return taut_extend(big, pattern, arity)
        return taut_exp(tder_extend(phi, pattern, arity))

    t = _braid_tders(degree + 1)
    half = Fraction(hexagon_sign, 2)

    duality = taut_log(_compose_all([ext("3,2,1", 3), ext("1,2,3", 3)]))

    lhs = _compose_all([ext("1,2,34", 4), ext("12,3,4", 4)])
    rhs = _compose_all([ext("2,3,4", 4), ext("1,23,4", 4), ext("1,2,3", 4)])
    pentagon = taut_log(taut_invert(rhs).compose(lhs))

    lhs = _compose_all([
        taut_exp(t["t12"].scale(half)), ext("3,1,2", 3),
        taut_exp(t["t13"].scale(half)), ext("2,3,1", 3),
        taut_exp(t["t23"].scale(half)), ext("1,2,3", 3)])
    central = (t["t12"] + t["t13"] + t["t23"]).scale(half)
    hexagon = taut_log(taut_invert(taut_exp(central)).compose(lhs))

    return {"duality": duality, "pentagon": pentagon, "hexagon": hexagon}


def _log_residuals(phi: TDer, degree: int, hexagon_sign: int) -> Dict[str, TDer]:
    """Axiom residual logs computed wholly at the derivation level.

    Independent of the automorphism path in _axiom_residuals: nothing here
    is ever exponentiated, products are folded through tder_bch.
    """
    phi = _tder_cap(phi, degree)

    def ext(pattern, arity):
        return tder_extend(phi, pattern, arity)

    t = _braid_tders(phi.degree)
    half = Fraction(hexagon_sign, 2)
    order = degree

    duality = _bch_chain([ext("3,2,1", 3), ext("1,2,3", 3)], order)

    lhs = _bch_chain([ext("1,2,34", 4), ext("12,3,4", 4)], order)
    rhs = _bch_chain([ext("2,3,4", 4), ext("1,23,4", 4), ext("1,2,3", 4)], order)
    pentagon = tder_bch(-rhs, lhs, order)

    lhs = _bch_chain([
        t["t12"].scale(half), ext("3,1,2", 3),
        t["t13"].scale(half), ext("2,3,1", 3),
        t["t23"].scale(half), ext("1,2,3", 3)], order)
    central = (t["t12"] + t["t13"] + t["t23"]).scale(half)
    hexagon = tder_bch(-central, lhs, order)

    return {"duality": duality, "pentagon": pentagon, "hexagon": hexagon}


def _residual_vector(res: Dict[str, TDer], d: int) -> List[Fraction]:
    out: List[Fraction] = []
    for name in ("duality", "pentagon", "hexagon"):
        out.extend(tder_coords(res[name], d))
    return out


def solve_associator(degree: int, parity: str = "even",
                     hexagon_sign: int = 1) -> Tuple[AssociatorCandidate, DegreeReport]:
    """Solve duality + pentagon + hexagon for log(Phi) in the braid span.

    parity="even" zeroes every odd homogeneous degree (kappa-invariance);
    "unconstrained" leaves odd degrees to the equations and the gauge.
    """
    if degree < 2:
        raise ValueError("need degree >= 2")
    if parity not in ("even", "unconstrained"):
        raise ValueError(f"unknown parity {parity!r}")
    if hexagon_sign not in (1, -1):
        raise ValueError("hexagon sign must be +1 or -1")
    alphabet = Alphabet(3)
    # ambient order degree + 1 so the top log term is visible in images
    phi = TDer.zero(alphabet, degree + 1)
    report = DegreeReport()
    coords: Dict[int, List] = {}

    for d in range(1, degree + 1):
        basis = braid_bracket_basis(3, d, degree + 1)
        if parity == "even" and d % 2 == 1:
            res = _log_residuals(phi, d, hexagon_sign)
            vec = _residual_vector(res, d)
            ok = not any(vec)
            report.records.append(DegreeRecord(d, 0, 0, ok))
            if not ok:
                raise RuntimeError(
                    f"even-parity associator system infeasible at odd degree {d}")
            coords[d] = []
            continue
        r0 = _residual_vector(_log_residuals(phi, d, hexagon_sign), d)
        columns = []
        for _lbl, e in basis:
            trial = phi + e
            r = _residual_vector(_log_residuals(trial, d, hexagon_sign), d)
            columns.append([ri - r0i for ri, r0i in zip(r, r0)])
        a = [[columns[j][r] for j in range(len(columns))] for r in range(len(r0))]
        b = [-v for v in r0]
        particular, null = linalg.solve_affine(a, b)
        if particular is None:
            raise RuntimeError(f"associator system infeasible at degree {d}")
        solution = linalg.min_norm_pick(particular, null)
        step = TDer.zero(alphabet, degree + 1)
        for c, (_lbl, e) in zip(solution, basis):
            if c:
                step = step + e.scale(c)
        phi = phi + step
        coords[d] = [(lbl, c) for c, (lbl, _e) in zip(solution, basis)]
        check = _residual_vector(_log_residuals(phi, d, hexagon_sign), d)
        report.records.append(DegreeRecord(
            d, len(basis), linalg.rank(a), not any(check), solution))

    element = taut_exp(phi)
    candidate = AssociatorCandidate(
        element=element, log=phi,
        group_like_verified=(taut_log(element) == phi),
        tn_coordinates=coords)
    return candidate, report


def check_associator_axioms(candidate, which: str = "all",
                            degree: Optional[int] = None) -> DegreeReport:
    """Re-check the axioms through the independent extend-then-compose path.

    ``candidate`` is an AssociatorCandidate or a TAutElem on 3 generators.
    which: duality | pentagon | hexagon+ | hexagon- | all.
    """
    element = candidate.element if isinstance(candidate, AssociatorCandidate) else candidate
    if element.alphabet.n != 3:
        raise ValueError("associator candidates live on 3 generators")
    n_degree = degree or element.degree - 1
    phi = taut_log(element).truncated(n_degree)
    report = DegreeReport()
    wanted = []
    if which in ("all", "duality"):
        wanted.append(("duality", 1))
    if which in ("all", "pentagon"):
        wanted.append(("pentagon", 1))
    if which in ("all", "hexagon+"):
        wanted.append(("hexagon+", 1))
    if which in ("all", "hexagon-"):
        wanted.append(("hexagon-", -1))
    if which == "hexagon":
        wanted.append(("hexagon+", 1))
    if not wanted:
        raise ValueError(f"unknown axiom selector {which!r}")
    for name, sign in wanted:
        res = _axiom_residuals(phi, n_degree, sign, extend_group_level=True)
        key = "hexagon" if name.startswith("hexagon") else name
        r = res[key]
        for d in range(1, n_degree + 1):
            vec = tder_coords(r, d)
            report.records.append(DegreeRecord(d, len(vec), 0, not any(vec)))
        report.notes[name] = not r
    return report


def check_f_symmetries(f: TAutElem, degree: Optional[int] = None) -> DegreeReport:
    """Residuals of the eyelid identities and of tau-invariance.

    The two transport identities compare F against e^{t/2} tau1(F)
    tau1(R^{-1}) and e^{-t/2} tau1(F) R, with t = (y,x) realized as the
    inner conjugation by exp((x+y)/2) and R the eyelid transport.
    """
    if f.alphabet.n != 2:
        raise ValueError("F lives on 2 generators")
    n_degree = degree or f.degree
    if n_degree != f.degree:
        f = TAutElem([im.truncated(n_degree) for im in f.images], check=False)
    alphabet = f.alphabet
    x = LieSeries.generator(alphabet, n_degree, 0)
    y = LieSeries.generator(alphabet, n_degree, 1)
    half_inner = inner_automorphism((x + y).scale(Fraction(1, 2)))
    r = r_element(n_degree)
    tau1_f = symmetry_transform("tau1", f)
    rhs1 = _compose_all([half_inner, tau1_f,
                         symmetry_transform("tau1", taut_invert(r))])
    rhs2 = _compose_all([taut_invert(half_inner), tau1_f, r])
    tau_f = tau_involution(f)
    report = DegreeReport()
    for name, lhs, rhs in (("eyelid_plus", f, rhs1),
                           ("eyelid_minus", f, rhs2),
                           ("tau_invariance", f, tau_f)):
        diffs = [l - rr for l, rr in zip(lhs.images, rhs.images)]
        per_degree = {}
        for d in range(1, n_degree + 1):
            per_degree[d] = all(not s.homogeneous(d) for s in diffs)
        report.notes[name] = per_degree
        report.records.append(DegreeRecord(
            0, 0, 0, all(per_degree.values())))
    return report
