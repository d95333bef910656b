"""Exact singularity spectra, monodromy data and motivic nearby-fiber classes.

Rational numbers are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from . import _core
from ._core import SingspecError

__all__ = [
    "SingspecError",
    "check",
    "fixture_model",
    "infer_weights",
    "nearby",
    "sp",
    "sp_product_formula",
]


def _fractions(values: Iterable[str]) -> list[Fraction]:
    return [Fraction(v) for v in values]


def _weight_strings(weights: Sequence[Any]) -> list[str]:
    return [str(Fraction(w)) for w in weights]


def sp(polynomial: str, variables: Sequence[str], weights: Optional[Sequence[Any]] = None) -> dict:
    """Spectrum report for a weighted-homogeneous isolated singularity."""
    w = None if weights is None else _weight_strings(weights)
    report = json.loads(_core.sp_report(polynomial, list(variables), w))["spectrum"]
    report["weights"] = _fractions(report["weights"])
    for key in ("eigenvalues_gamma_c", "eigenvalues_geometric"):
        report[key] = {Fraction(a): m for a, m in report[key]}
    return report


def nearby(model_json: str, variant: str = "total", dim: Optional[int] = None) -> dict:
    """Nearby-fiber report for an SNC model given as JSON text."""
    return json.loads(_core.nearby_report(model_json, variant, dim))["nearby"]


def check() -> dict:
    """Runs the built-in cross-validation corpus."""
    return json.loads(_core.check_report())["check"]


def infer_weights(polynomial: str, variables: Sequence[str]) -> list[Fraction]:
    return _fractions(_core.infer_weights(polynomial, list(variables)))


def sp_product_formula(weights: Sequence[Any]) -> dict[Fraction, int]:
    """Closed-form spectrum as {exponent: coefficient}."""
    return {Fraction(e): c for e, c in _core.sp_product_formula(_weight_strings(weights))}


def fixture_model(name: str) -> str:
    """Built-in model documents: "i2" or "cusp"."""
    return _core.fixture_model(name)
