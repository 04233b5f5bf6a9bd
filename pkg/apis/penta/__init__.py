"""Penta-valued knowledge representation: Frank t-norms, five-descriptor
decomposition, crisp five-valued logic and FP5 sets."""

from apis.penta.algebra import FrankParameter, conjugate_tnorm, tconorm, tnorm
from apis.penta.decomposition import compose, decompose, decompose_lg
from apis.penta.five_logic import PentaTruthValue, and5, eval_expr, not5, or5, parse_expr, truth_table
from apis.penta.fp5_sets import NormCouple, complement, intersection, union
from apis.penta.models import BipolarPair, FP5Element, FP5Set, PentaCoords

__all__ = [
    "FrankParameter", "tnorm", "tconorm", "conjugate_tnorm",
    "decompose", "decompose_lg", "compose",
    "PentaTruthValue", "or5", "and5", "not5", "parse_expr", "eval_expr", "truth_table",
    "NormCouple", "union", "intersection", "complement",
    "BipolarPair", "PentaCoords", "FP5Element", "FP5Set",
]
