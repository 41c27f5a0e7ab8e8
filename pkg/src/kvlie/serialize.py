"""JSON encoding and decoding for every value the CLI passes around.

Rationals travel as reduced strings "p/q" with positive q; series are
{"degreeN": int, "terms": [{"word": ..., "coeff": ...}]} with cyclic
series using "necklace" in place of "word".  Term lists are sorted so
equal objects serialize to identical bytes.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from .cyclic import CycSeries
from .derivations import DerivationFlags, TDer
from .graphs import KGraph
from .lie import LieSeries
from .automorphisms import TAutElem
from .weights import WeightEstimate
from .words import Alphabet, AssocSeries


def encode_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def decode_fraction(s: str) -> Fraction:
    return Fraction(s)


def _encode_terms(alphabet: Alphabet, coeffs, key: str) -> List[Dict[str, str]]:
    return [{key: alphabet.word_name(w), "coeff": encode_fraction(coeffs[w])}
            for w in sorted(coeffs, key=lambda w: (len(w), w))]


def encode_series(s: Union[LieSeries, AssocSeries, CycSeries]) -> Dict[str, Any]:
    key = "necklace" if isinstance(s, CycSeries) else "word"
    return {"degreeN": s.degree, "terms": _encode_terms(s.alphabet, s.coeffs, key)}


def _infer_alphabet(doc: Dict[str, Any], n: Optional[int], key: str) -> Alphabet:
    if n is None:
        probe = Alphabet(4)
        highest = 1
        for t in doc["terms"]:
            word = probe.parse_word(t[key])
            if word:
                highest = max(highest, max(word) + 1)
        n = highest
    return Alphabet(n)


def decode_series(doc: Dict[str, Any], kind: str = "lie",
                  n: Optional[int] = None):
    """kind: lie | assoc | cyclic."""
    key = "necklace" if kind == "cyclic" else "word"
    if "degreeN" not in doc or "terms" not in doc:
        raise ValueError("series document needs 'degreeN' and 'terms'")
    alphabet = _infer_alphabet(doc, n, key)
    try:
        table = {alphabet.parse_word(t[key]): decode_fraction(t["coeff"])
                 for t in doc["terms"]}
    except KeyError as exc:
        raise ValueError(f"series term is missing {exc}") from exc
    degree = doc["degreeN"]
    if kind == "lie":
        return LieSeries(alphabet, degree, table)
    if kind == "assoc":
        return AssocSeries(alphabet, degree, table, unital=() in table)
    if kind == "cyclic":
        return CycSeries(alphabet, degree, table)
    raise ValueError(f"unknown series kind {kind!r}")


def encode_tder(u: TDer) -> Dict[str, Any]:
    return {"n": u.alphabet.n,
            "components": [encode_series(c) for c in u.components]}


def decode_tder(doc: Dict[str, Any]) -> TDer:
    n = doc["n"]
    return TDer([decode_series(c, "lie", n) for c in doc["components"]])


def encode_taut(g: TAutElem) -> Dict[str, Any]:
    return {"n": g.alphabet.n,
            "images": [encode_series(im) for im in g.images],
            "log": encode_tder(g.log_certificate) if g.log_certificate else None}


def decode_taut(doc: Dict[str, Any]) -> TAutElem:
    n = doc["n"]
    images = [decode_series(im, "lie", n) for im in doc["images"]]
    log = decode_tder(doc["log"]) if doc.get("log") else None
    return TAutElem(images, log_certificate=log)


def encode_flags(f: DerivationFlags) -> Dict[str, Any]:
    return {"tangential_normalized": f.tangential_normalized,
            "special": f.special, "krv": f.krv,
            "witness_degree": f.witness_degree}


def encode_graph(g: KGraph) -> Dict[str, Any]:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def decode_graph(doc: Dict[str, Any]) -> KGraph:
    edges = tuple((e[0], e[1]) for e in doc["edges"])
    return KGraph(doc["n"], edges, doc.get("m", 2))


def encode_estimate(e: WeightEstimate) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"value": e.value, "stderr": e.stderr,
                           "samples": e.samples, "seed": e.seed,
                           "method": e.method}
    if e.method == "quadrature":
        doc["tolerance"] = e.tolerance
        del doc["stderr"]
    else:
        doc["rejection_rate"] = e.rejection_rate
    return doc


def encode_value(v: Any) -> Any:
    """Best-effort recursive encoding for report notes and gauge vectors."""
    if isinstance(v, Fraction):
        return encode_fraction(v)
    if isinstance(v, dict):
        return {str(k): encode_value(val) for k, val in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    return v


def encode_report(report) -> Dict[str, Any]:
    return {"records": [{"degree": r.degree, "dimension": r.dimension,
                         "rank": r.rank, "residual_zero": r.residual_zero,
                         "gauge": [encode_fraction(c) for c in r.gauge]}
                        for r in report.records],
            "notes": encode_value(report.notes)}
