"""Exact hyperpfaffian evaluations for beta ensembles.

Integers come back as int, rationals as fractions.Fraction. Reports are
plain dicts with the same layout as the CLI's JSON output.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetExceeded

__all__ = [
    "BudgetExceeded",
    "ct_partition",
    "default_grid",
    "dyson_rhs",
    "gram_vector",
    "hyperpfaffian_2form",
    "pair_correlation",
    "pair_samples",
    "partition_function",
    "r_m",
    "verify",
]


def _frac(s):
    return Fraction(s)


def _gauss(z):
    # exact (re, im) pair
    return Fraction(z["re"]), Fraction(z["im"])


def pair_correlation(beta, M, threads=1, convention="angle"):
    rep = json.loads(_core.pair_correlation(beta, M, threads, convention))
    rep["r_coeffs"] = [int(c) for c in rep["r_coeffs"]]
    rep["fourier"] = [int(c) for c in rep["fourier"]]
    norm = rep["normalization"]
    norm["num"], norm["den"] = int(norm["num"]), int(norm["den"])
    return rep


def pair_samples(beta, M, points=181, convention="angle"):
    return _core.pair_samples(beta, M, points, convention)


def r_m(beta, M, params, threads=1):
    """R_m at the unit-circle points with Pythagorean parameters `params`."""
    res = json.loads(_core.r_m(beta, M, [str(Fraction(t)) for t in params], threads))
    for key in ("phase", "pf", "value"):
        res[key] = _gauss(res[key])
    res["vandermonde_power"] = _frac(res["vandermonde_power"])
    return res


def gram_vector(L, M):
    w = json.loads(_core.gram_vector(L, M))
    for t in w["terms"]:
        t["coeff"] = int(t["coeff"])
    return w


def partition_function(L, M):
    return _frac(_core.partition_function(L, M))


def dyson_rhs(beta, M):
    return _frac(_core.dyson_rhs(beta, M))


def ct_partition(beta, M, signed_form=False):
    return _frac(_core.ct_partition(beta, M, signed_form))


def hyperpfaffian_2form(rows):
    return _frac(_core.hyperpfaffian_2form([[str(Fraction(x)) for x in row] for row in rows]))


_VERIFY = {
    "dyson": _core.verify_dyson,
    "jacobi": _core.verify_jacobi,
    "gaussian": _core.verify_gaussian,
    "hermite": _core.verify_hermite,
    "r1": _core.verify_r1,
    "zero": _core.verify_zero,
}


def verify(identity, *args):
    if identity not in _VERIFY:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(_VERIFY)}")
    return json.loads(_VERIFY[identity](*args))


def default_grid(threads=1):
    return json.loads(_core.default_grid(threads))
