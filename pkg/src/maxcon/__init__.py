"""Maximally edge-connected realizations of degree sequences.

The core modules are pure Python on integer bitsets; ``oracle`` adds
numpy-backed brute force for cross-checking at small orders.
"""

from __future__ import annotations

from .cuts import Cut, classify, edge_connectivity, enumerate_min_cuts, find_critically_weak, potential
from .degseq import DegreeSequence, complement_reverse, edmonds_feasible, havel_hakimi, is_graphic, realize, subtract_k
from .errors import (
    HypothesisViolation,
    MaxconError,
    NoPerfectMatching,
    NotGraphic,
    ParseError,
    PreconditionFailed,
    ScaleError,
    TheoremContradiction,
    ValidationError,
)
from .factors import (
    FactorDecomposition,
    FactorRequest,
    kundu_realize,
    maxcon_with_factor,
    peel_complement_case,
    peel_one_factors,
    perfect_matching,
    verify_decomposition,
)
from .formats import from_graph6, parse_edge_list, read_graph, to_graph6, write_graph
from .graph import ExchangeMove, Graph, cut_size, edge_exchange
from .rewire import Mode, RewireCertificate, RewireProblem, rewire

__version__ = "0.1.0"

__all__ = [
    "Cut",
    "DegreeSequence",
    "ExchangeMove",
    "FactorDecomposition",
    "FactorRequest",
    "Graph",
    "HypothesisViolation",
    "MaxconError",
    "Mode",
    "NoPerfectMatching",
    "NotGraphic",
    "ParseError",
    "PreconditionFailed",
    "RewireCertificate",
    "RewireProblem",
    "ScaleError",
    "TheoremContradiction",
    "ValidationError",
    "classify",
    "complement_reverse",
    "cut_size",
    "edge_connectivity",
    "edge_exchange",
    "edmonds_feasible",
    "enumerate_min_cuts",
    "find_critically_weak",
    "from_graph6",
    "havel_hakimi",
    "is_graphic",
    "kundu_realize",
    "maxcon_with_factor",
    "parse_edge_list",
    "peel_complement_case",
    "peel_one_factors",
    "perfect_matching",
    "potential",
    "read_graph",
    "realize",
    "rewire",
    "subtract_k",
    "to_graph6",
    "verify_decomposition",
    "write_graph",
]
