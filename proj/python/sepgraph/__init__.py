"""Separation-parameter graph toolkit: Python front end over the C++ core."""

import json
from fractions import Fraction

from . import _sepgraph
from ._sepgraph import (
    DomainError,
    Graph,
    ParseError,
    ResourceError,
    adjacency_eigenvalues,
    corpus,
    laplacian_eigenvalues,
    matching_number,
    named_graph,
    normalized_laplacian_eigenvalues,
    parse_graph6,
    random_regular,
    scattering_number,
    write_graph6,
)

__version__ = "0.1.0"


def _fraction(text):
    return None if text == "inf" else Fraction(text)


def separation_profile(g, max_n=18):
    """Exact (beta_sq_weak, beta_sq_strong) as Fractions."""
    weak, strong = _sepgraph.separation_profile(g, max_n)
    return Fraction(weak), Fraction(strong)


def is_beta_graph(g, beta, mode="weak", max_n=18):
    """(holds, counterexample) where the counterexample is (X, Y) or None."""
    return _sepgraph.is_beta_graph(g, str(beta), mode, max_n)


def fractional_matching_number(g):
    return Fraction(_sepgraph.fractional_matching_number(g))


def toughness(g, max_n=20):
    """Exact toughness as a Fraction, or None for complete graphs (t = inf)."""
    return _fraction(_sepgraph.toughness(g, max_n))


def analyze(g, max_exact_n=18, max_tough_n=20):
    """The per-graph record of the `analyze` command, as a dict."""
    return json.loads(_sepgraph.analyze_json(g, max_exact_n, max_tough_n))


def run_cli(args, stdin=""):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _sepgraph.run_cli(list(args), stdin)
