"""Python interface to the topocode library.

Graphs, colorings and matrices are plain dicts in the same JSON schema the
``topocode`` command line tool uses; linear forms ``a*k + b*d`` are ``[a, b]``.
"""

import json

from . import _core
from ._core import TopocodeError

__all__ = [
    "TopocodeError",
    "families",
    "parse_linform",
    "format_linform",
    "count_partitions",
    "tree_coloring",
    "verify",
    "topcode_matrix",
    "key_string",
    "peel",
    "set_ordered_graceful",
    "set_coloring",
    "group_members",
    "pnbsp",
]


def _dump(obj):
    return json.dumps(obj)


def families():
    return list(_core.families())


def parse_linform(text):
    return _core.linform_parse(text)


def format_linform(k, d):
    return _core.linform_format(k, d)


def count_partitions(m, k):
    return int(_core.count_partitions(m, k))


def tree_coloring(graph, family="graceful", choices=""):
    return json.loads(_core.tree_coloring(_dump(graph), family, choices))


def verify(colored, family="graceful", constant=None, k=None, d=None):
    return json.loads(_core.verify(_dump(colored), family, constant, k, d))


def topcode_matrix(colored):
    return json.loads(_core.topcode_matrix(_dump(colored)))


def key_string(matrix, order="rowmajor", k=0, d=1):
    return _core.key_string(_dump(matrix), order, k, d)


def peel(tree):
    return json.loads(_core.peel(_dump(tree)))


def set_ordered_graceful(graph, budget=5_000_000, seed=0):
    return json.loads(_core.set_ordered_graceful(_dump(graph), budget, seed))


def set_coloring(colored, method="vset", w="abs-difference"):
    return json.loads(_core.set_coloring(_dump(colored), method, w))


def group_members(matrix, modulus, fn="sum"):
    return json.loads(_core.group_members(_dump(matrix), modulus, fn))


def pnbsp(string, q, family="graceful", budget=1_000_000, max_param=1000):
    return json.loads(_core.pnbsp(string, q, family, budget, max_param))
