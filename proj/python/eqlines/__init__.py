"""Exact computations with equiangular lines.

Heavy results come back from the extension as JSON text and are decoded
here into plain dicts and lists.
"""

import json
import os
import tempfile

from . import _eqlines
from ._eqlines import (
    FormatError,
    StructureError,
    base_size,
    char_poly,
    coexistence_check,
    degree_class_cap,
    gerzon_bound,
    k3_bound,
    k5_bound,
    max_clique,
    neumann_pairs,
    normalize_scalar,
    per_variable_caps,
    psd_check,
    relative_bound,
    run_cli,
    table2_tsv,
)

__version__ = _eqlines.__version__


def _cache(cache_dir):
    return cache_dir if cache_dir is not None else os.environ.get("EQLINES_CACHE_DIR", "")


def coexistence_bound(n):
    return json.loads(_eqlines.coexistence_bound(n))


def witt276(with_gram=False):
    return json.loads(_eqlines.witt276(with_gram))


def paley_etf(q=17, with_gram=True):
    return json.loads(_eqlines.paley_etf(q, with_gram))


def block52(ell):
    return json.loads(_eqlines.block52(ell))


def simplex(k, alpha):
    return json.loads(_eqlines.simplex(k, str(alpha)))


def m_alpha(rank, alpha, cache_dir=None):
    return json.loads(_eqlines.m_alpha(rank, str(alpha), _cache(cache_dir)))


def m_star(rank, cache_dir=None):
    return json.loads(_eqlines.m_star(rank, _cache(cache_dir)))


def saturate(rank, alpha, cache_dir=None):
    return json.loads(_eqlines.saturate(rank, str(alpha), _cache(cache_dir)))


def switching_equivalence(a, b):
    op = _eqlines.switching_equivalence(a, b)
    return None if op is None else json.loads(op)


def verify(document):
    """Runs the file checker on a dict; returns (exit code, report or None)."""
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "set.json")
        with open(path, "w") as f:
            json.dump(document, f)
        code, out, err = run_cli(["verify", path])
    return code, (json.loads(out) if out.strip() else None)
