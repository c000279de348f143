"""Triangulated 3-spheres, edge links, link diagrams and crossing-number bounds.

Triangulations, links, realizations and reports are plain dicts in the same
JSON layout the ``trilink`` command line tool reads and writes.
"""

import json

from . import _core
from ._core import TrilinkError, __version__

__all__ = [
    "TrilinkError",
    "__version__",
    "generate",
    "pachner_walk",
    "normalize",
    "validate",
    "enumerate_links",
    "check_link",
    "schlegel",
    "verify_embedding",
    "project",
    "diagram_text",
    "linking_matrix",
    "contract_edge",
    "expand",
    "stellar_subdivide",
    "transport_link",
    "find_shelling",
    "verify_shelling",
    "bounds_report",
    "cr_bound_from_p",
]


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _components(link):
    return link["components"] if isinstance(link, dict) else [list(c) for c in link]


def generate(kind, m=6, steps=0, seed=0):
    """Reference triangulation; polytopal kinds also carry ``coords4``."""
    return json.loads(_core.generate(kind, m, steps, seed))


def pachner_walk(tri, steps, seed):
    return json.loads(_core.pachner_walk(_dump(tri), steps, seed))


def normalize(tri):
    return json.loads(_core.normalize(_dump(tri)))


def validate(tri, strict=True):
    return json.loads(_core.validate(_dump(tri), strict))


def enumerate_links(tri, max_components, max_edges):
    return json.loads(_core.enumerate_links(_dump(tri), max_components, max_edges))


def check_link(tri, link):
    return json.loads(_core.check_link(_dump(tri), _components(link)))


def schlegel(tri, coords4=None, facet=()):
    coords4 = tri if coords4 is None else coords4
    return json.loads(_core.schlegel(_dump(tri), _dump(coords4), list(facet)))


def verify_embedding(tri, realization):
    """Returns ``(ok, message)``."""
    return _core.verify_embedding(_dump(tri), _dump(realization))


def project(tri, realization, link, direction=None):
    d = [] if direction is None else [str(x) for x in direction]
    return json.loads(_core.project(_dump(tri), _dump(realization), _components(link), d))


def diagram_text(diagram, fmt):
    """``fmt`` is one of ``pd``, ``gauss``, ``svg``."""
    return _core.diagram_text(_dump(diagram), fmt)


def linking_matrix(diagram):
    return _core.linking_matrix(_dump(diagram))


def contract_edge(tri, kept, removed):
    return json.loads(_core.contract_edge(_dump(tri), kept, removed))


def expand(tri, spec):
    return json.loads(_core.expand(_dump(tri), _dump(spec)))


def stellar_subdivide(tri, simplex):
    return json.loads(_core.stellar_subdivide(_dump(tri), list(simplex)))


def transport_link(link, record):
    record = record.get("record", record)
    return json.loads(_core.transport_link(_components(link), _dump(record)))


def find_shelling(tri, budget=10_000_000):
    return json.loads(_core.find_shelling(_dump(tri), budget))


def verify_shelling(tri, order):
    """Returns ``(ok, failing_index, message)``."""
    if not isinstance(order, dict):
        order = {"order": [list(t) for t in order]}
    return _core.verify_shelling(_dump(tri), _dump(order))


def bounds_report(tri, link, coords4=None, realization=None, shelling=None, diagram=None):
    evidence = {}
    if coords4 is not None:
        evidence["coords4"] = coords4.get("coords4", coords4)
    if realization is not None:
        evidence["realization"] = realization
    if shelling is not None:
        evidence["order"] = shelling
    if diagram is not None:
        evidence["diagram"] = diagram
    return json.loads(_core.bounds_report(_dump(tri), _components(link), _dump(evidence)))


def cr_bound_from_p(k, p_hi):
    return int(_core.cr_bound_from_p(str(k), str(p_hi)))
