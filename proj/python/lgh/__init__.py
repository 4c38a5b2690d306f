"""Eigenfamilies, proper p-harmonic functions and harmonic morphisms on classical Lie groups."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BranchCutError,
    DegreeError,
    DependenceError,
    DimensionError,
    EvaluationError,
    Group,
    HomogeneityError,
    IsotropyError,
    LghError,
    ParameterError,
    SamplingExhaustedError,
    SingularPointError,
    UsageError,
    families,
)

SCHEMA_VERSION = _core.SCHEMA_VERSION

__all__ = [
    "BranchCutError",
    "DegreeError",
    "DependenceError",
    "DimensionError",
    "EvaluationError",
    "Group",
    "HomogeneityError",
    "IsotropyError",
    "LghError",
    "ParameterError",
    "SamplingExhaustedError",
    "SingularPointError",
    "UsageError",
    "eigenvalues",
    "families",
    "build_phi_p",
    "iterate_tau",
    "eval_log_power",
    "verify_eigen",
    "verify_tables",
    "verify_p_harmonic",
    "verify_morphism",
]


def _dump(value):
    if value is None or isinstance(value, str):
        return value
    return json.dumps(value)


def eigenvalues(group):
    """(lambda, mu) of a group as exact fractions."""
    return Fraction(group.lambda_), Fraction(group.mu)


def verify_eigen(group, samples=25, seed=42, tol=1e-8, radius=0.5, family=None):
    return json.loads(_core.verify_eigen(group, samples, seed, tol, radius, _dump(family)))


def verify_tables(samples=25, seed=42, tol=1e-8, format="json"):
    text = _core.verify_tables(samples, seed, tol, format)
    return json.loads(text) if format == "json" else text


def build_phi_p(lam, mu, p, c1="1", c2="0"):
    return json.loads(_core.build_phi_p(str(lam), str(mu), p, str(c1), str(c2)))


def iterate_tau(terms, lam, mu, times):
    return json.loads(_core.iterate_tau(_dump(terms), str(lam), str(mu), times))


def eval_log_power(terms, phi):
    return _core.eval_log_power(_dump(terms), complex(phi))


def verify_p_harmonic(group, p, c1="1", c2="0", samples=10, seed=42, tol=1e-7, family=None, member=0):
    phi_p, chain, report = _core.verify_p_harmonic(
        group, p, str(c1), str(c2), samples, seed, tol, _dump(family), member
    )
    return {
        "phi_p": json.loads(phi_p),
        "tau_chain": [json.loads(c) for c in chain],
        "report": json.loads(report),
    }


def verify_morphism(group, numerator, denominator, family=None, samples=25, seed=42, tol=1e-7, q_floor=0.1):
    return json.loads(
        _core.verify_morphism(
            group, _dump(numerator), _dump(denominator), _dump(family), samples, seed, tol, q_floor
        )
    )
