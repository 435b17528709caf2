"""Built-in sample data: an eight-element relation and three merging maps.

``sample_relation()`` is a layered chain x1 -> {x2, x3} -> {x4, x5} ->
{x6, x7} -> x8.  ``merge_mapping(i, j)`` sends x_i and x_j to y_i and every
other x_k to y_k; with (2, 3), (4, 5) and (6, 7) it is respectively
pred-only, succ-only and fully consistent for the sample relation.
"""

from .core import FuzzyRelation, Universe
from .mappings import UniverseMapping

SAMPLE_TERMS = {
    ("x1", "x2"): "1",
    ("x1", "x3"): "1",
    ("x2", "x4"): "0.8",
    ("x2", "x5"): "0.8",
    ("x3", "x4"): "0.9",
    ("x3", "x5"): "0.8",
    ("x4", "x6"): "0.7",
    ("x4", "x7"): "0.7",
    ("x5", "x6"): "0.7",
    ("x5", "x7"): "0.7",
    ("x6", "x8"): "0.9",
    ("x7", "x8"): "0.9",
}


def sample_universe():
    return Universe.numbered(8, "x")


def sample_codomain():
    return Universe.numbered(8, "y")


def sample_relation(digits=None):
    return FuzzyRelation.from_grades(sample_universe(), SAMPLE_TERMS, digits)


def merge_mapping(i, j):
    table = {f"x{k}": f"y{i if k == j else k}" for k in range(1, 9)}
    return UniverseMapping.from_dict(sample_universe(), sample_codomain(), table)
