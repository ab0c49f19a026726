"""JSON encodings for scalars, rational functions, matrices and tableaux.

Fractions are always written as "p/q" strings, never floats.  A generic
scalar num / (const * prod (d + q_s - q_t)) is written as
{"num": "<poly in q1..qm>", "den": [[d, s, t], ...], "const": "p/q"}.
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import StandardTableau, residue_sequence
from .exact import GenericScalar, Parameters, RatFun


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact fraction: {s!r}") from exc


def scalar(x):
    if isinstance(x, GenericScalar):
        return {"num": x.numerator_str(), "den": x.denominator_forms(), "const": frac_str(x.const)}
    if isinstance(x, RatFun):
        return {"num": [scalar(c) for c in x.numerator], "den": [scalar(c) for c in x.denominator]}
    return frac_str(x)


def matrix(a) -> list:
    return [[scalar(x) for x in row] for row in a]


def shape(la) -> list:
    return [list(part) for part in la]


def tableau(t: StandardTableau) -> list:
    return t.rows()


def params(P: Parameters) -> dict:
    return {"m": P.m, "n": P.n, "qmode": P.qmode,
            "q": [scalar(q) for q in P.qvalues]}


def element(E) -> list:
    """Nonzero blocks only, keyed by shape; a zero block carries no information."""
    out = []
    for la, blk in zip(E.rep.shapes, E.blocks):
        if any(x for row in blk for x in row):
            out.append({"shape": shape(la), "matrix": matrix(blk)})
    return out


def fusion_trace(tr) -> dict:
    return {
        "tableau": tableau(tr.tableau),
        "steps": [{"k": s.k, "target": scalar(s.target), "factor": scalar(s.factor),
                   "checksum": scalar(s.checksum)} for s in tr.steps],
        "normalization": scalar(tr.normalization),
    }


def residues(t: StandardTableau, P: Parameters) -> list:
    return [scalar(r) for r in residue_sequence(t, P)]
