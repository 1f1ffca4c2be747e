"""2x2 max-plus matrices: Green's relations, idempotents, subgroups, ideals.

Matrices are nested lists of entries; an entry is an int, a Fraction or a
string such as "-3/2" or "-inf". Results come back as lists of strings.
Sets are strings like "[1,3]", "{2}", "[-inf,0]" or "empty".
"""

import json
from fractions import Fraction

from . import _core
from ._core import VerificationFailure

__all__ = [
    "VerificationFailure",
    "mul",
    "add",
    "transpose",
    "solve_right",
    "column_space",
    "row_space",
    "iso_type",
    "isometric",
    "related",
    "leq_r",
    "leq_l",
    "leq_j",
    "witness_z",
    "d_class_witness",
    "is_idempotent",
    "idempotent_in_h",
    "regular_witness",
    "group_type",
    "subgroup_element",
    "principal_ideal",
    "ideal_contains",
    "ideal_compare",
    "ideal_from_generators",
    "suite_names",
    "run_suite",
    "cli",
]


def _entry(x):
    if isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


def _text(a):
    if isinstance(a, str):
        return a
    return json.dumps([[_entry(x) for x in row] for row in a])


def _matrix(text):
    return None if text is None else json.loads(text)


def mul(a, b):
    return _matrix(_core.mul(_text(a), _text(b)))


def add(a, b):
    return _matrix(_core.add(_text(a), _text(b)))


def transpose(a):
    return _matrix(_core.transpose(_text(a)))


def solve_right(b, a):
    """X with B X = A, or None."""
    return _matrix(_core.solve_right(_text(b), _text(a)))


def column_space(a):
    return _core.column_space(_text(a))


def row_space(a):
    return _core.row_space(_text(a))


def iso_type(s):
    return _core.iso_type(s)


def isometric(s, t):
    return _core.isometric(s, t)


def related(rel, a, b):
    """rel is one of R, L, H, D, J, leqR, leqL, leqJ."""
    return _core.related(rel, _text(a), _text(b))


def leq_r(a, b):
    return _core.leq_r(_text(a), _text(b))


def leq_l(a, b):
    return _core.leq_l(_text(a), _text(b))


def leq_j(a, b):
    return _core.leq_j(_text(a), _text(b))


def witness_z(m, n):
    return _matrix(_core.witness_z(m, n))


def d_class_witness(a, b):
    return _matrix(_core.d_class_witness(_text(a), _text(b)))


def is_idempotent(a):
    return _core.is_idempotent(_text(a))


def idempotent_in_h(m, n):
    return _matrix(_core.idempotent_in_h(m, n))


def regular_witness(a):
    return _matrix(_core.regular_witness(_text(a)))


def group_type(m, n):
    return _core.group_type(m, n)


def subgroup_element(family, a, x=None, y=None):
    return _matrix(
        _core.subgroup_element(
            family, _entry(a), None if x is None else _entry(x), None if y is None else _entry(y)
        )
    )


def principal_ideal(a):
    return _core.principal_ideal(_text(a))


def ideal_contains(descriptor, a):
    return _core.ideal_contains(descriptor, _text(a))


def ideal_compare(d1, d2):
    """-1, 0 or 1."""
    return _core.ideal_compare(d1, d2)


def ideal_from_generators(gens):
    return _core.ideal_from_generators([_text(g) for g in gens])


def suite_names():
    return list(_core.suite_names())


def run_suite(name, samples=1000, seed=0):
    return _core.run_suite(name, samples, seed)


def cli(*args):
    """Run a command-line subcommand; returns (exit code, parsed JSON)."""
    code, out = _core.cli([str(a) for a in args])
    return code, json.loads(out)
