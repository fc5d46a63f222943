"""Exact lattice, positivity and intersection computations for Nikulin surfaces.

Divisor classes are dicts {"a": int, "t": [8 ints]} for D = aL + sum (t_i/2) R_i,
or one of the names "L", "e", "R1".."R8", "L_<m>", "0". Rationals are "p/q"
strings, as in the command-line tool.
"""

import json as _json

from . import _nikulin
from ._nikulin import NikulinError, ampleness_check, expected_rank_ideal_dim

__all__ = [
    "NikulinError",
    "ampleness_check",
    "c1_pushforward_bundle",
    "det_degree",
    "divisor_class",
    "expected_rank_ideal_dim",
    "gram_matrix",
    "intersect",
    "movable_decomposition_search",
    "noether_lefschetz_condition_search",
    "parse_divisor",
    "profile",
    "rational_obstruction_search",
    "very_ample_check",
]


def _divisor(d):
    return d if isinstance(d, str) else _json.dumps(d)


def profile(g):
    return _json.loads(_nikulin.profile(g))


def gram_matrix(g):
    return _json.loads(_nikulin.gram_matrix(g))


def parse_divisor(d):
    return _json.loads(_nikulin.parse_divisor(_divisor(d)))


def intersect(d1, d2, g):
    return _nikulin.intersect(_divisor(d1), _divisor(d2), g)


def very_ample_check(g, m):
    return _json.loads(_nikulin.very_ample_check(g, m))


def rational_obstruction_search(g, m, a_max=2, t_max=10):
    return _json.loads(_nikulin.rational_obstruction_search(g, m, a_max, t_max))


def movable_decomposition_search(g, target, a_max=2, t_max=10):
    return _json.loads(_nikulin.movable_decomposition_search(g, _divisor(target), a_max, t_max))


def noether_lefschetz_condition_search(g, m, condition, a_max=2, t_max=10):
    return _json.loads(_nikulin.noether_lefschetz_condition_search(g, m, condition, a_max, t_max))


def c1_pushforward_bundle(n, m, g):
    return _json.loads(_nikulin.c1_pushforward_bundle(n, m, g))


def divisor_class(g, m):
    return _json.loads(_nikulin.divisor_class(g, m))


def det_degree(r, e):
    return int(_nikulin.det_degree(r, e))
