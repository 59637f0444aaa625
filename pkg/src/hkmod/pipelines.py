"""End-to-end pipelines combining vectors, walls and twists.

A scenario bundles named lattices, vectors and parameters; running it
dispatches to one of the named pipelines and returns a TheoremReport
whose checks gate the verdict and whose data block carries everything
that is merely reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import InputError, MathCheckError
from .jsonio import load_json_file
from .lattice import (
    IntLattice,
    LatVec,
    content,
    lattice_from_json,
    latvec_from_json,
    norm,
    pair,
    primitive_part,
)
from .mukai import MukaiVector, mukai_from_json, mukai_square, numerics
from .report import Check, TheoremReport
from .walls import (
    EllipticNS,
    SuitabilityReport,
    as_elliptic,
    elliptic_from_json,
    enumerate_wall_classes,
    suitability_for,
)


def _suitability(ns: EllipticNS, a: Fraction, h: LatVec) -> SuitabilityReport:
    # A nonpositive level means the wall set is empty by definition.
    if a <= 0:
        return SuitabilityReport(suitable=True, generic=True, witnesses=())
    return suitability_for(ns, a, h)


def vbk3ell_pipeline(ns, v: MukaiVector, h: LatVec | None = None) -> TheoremReport:
    """Gate a vector on an elliptic surface: square above the rigid bound
    and rank coprime to the fiber degree. The wall-control constant, the
    expected dimension and the suitability of h are reported, not gated.
    """
    ns = as_elliptic(ns)
    lat = ns.lattice
    h_use = h if h is not None else ns.h
    num = numerics(lat, v)
    k = pair(lat, v.l, ns.f)
    assert k.denominator == 1
    k = int(k)
    checks = (
        Check(
            "square_at_least_rigid_bound",
            num.v_square >= -2,
            {"v_square": num.v_square},
        ),
        Check("rank_coprime_to_fiber_degree", gcd(v.r, k) == 1, {"r": v.r, "k": k}),
    )
    suit = _suitability(ns, num.a_v, h_use)
    return TheoremReport(
        theorem="vbk3ell",
        checks=checks,
        data={
            "a": num.a_v,
            "n": num.n_v,
            "expected_dim": num.v_square + 2,
            "h": h_use.to_json_dict(),
            "suitability": suit.to_json_dict(),
        },
    )


def casoprim_pipeline(ns, v: MukaiVector, h: LatVec) -> TheoremReport:
    """Gate a vector for primitivity results: square above the rigid
    bound, rank coprime to the content of the middle component, and the
    polarization generic for the wall-control constant."""
    ns = as_elliptic(ns)
    lat = ns.lattice
    if ns.q(h) <= 0:
        raise InputError("polarization must have positive self-pairing")
    num = numerics(lat, v)
    c = 0 if v.l.is_zero else content(v.l)
    orthogonal = []
    if num.a_v > 0:
        for wall in enumerate_wall_classes(ns, num.a_v):
            if pair(lat, wall.lam, h) == 0:
                orthogonal.append(wall)
    checks = (
        Check(
            "square_at_least_rigid_bound",
            num.v_square >= -2,
            {"v_square": num.v_square},
        ),
        Check(
            "rank_coprime_to_content",
            gcd(v.r, c) == 1,
            {"r": v.r, "content": c},
        ),
        Check(
            "polarization_generic",
            not orthogonal,
            {
                "h": h.to_json_dict(),
                "witnesses": [w.to_json_dict() for w in orthogonal],
            },
        ),
    )
    return TheoremReport(
        theorem="casoprim",
        checks=checks,
        data={"a": num.a_v, "n": num.n_v},
    )


@dataclass(frozen=True)
class TwistResult:
    """Outcome of normalizing a twist: the twisted vector, its middle
    component split as x times a primitive ray, and the coprimality facts
    the downstream statements need."""

    vector: MukaiVector
    x: int
    ray: LatVec | None
    gcd_r_x: int
    r_l_coprime: bool

    def to_json_dict(self) -> dict:
        return {
            "vector": self.vector.to_json_dict(),
            "x": self.x,
            "ray": self.ray.to_json_dict() if self.ray is not None else None,
            "gcd_r_x": self.gcd_r_x,
            "r_l_coprime": self.r_l_coprime,
        }


def multacca_normalize(ns: IntLattice, v: MukaiVector, h: LatVec, n: int) -> TwistResult:
    """Twist v by the n-th power of the line bundle with class h and split
    the resulting middle component as x times a primitive class."""
    if v.r < 1:
        raise InputError("twisting needs a positive rank")
    if not h.integral:
        raise InputError("twisting class must be integral")
    q_h = norm(ns, h)
    k = pair(ns, v.l, h)
    assert k.denominator == 1
    s_shift = n * int(k) + Fraction(v.r * n * n) * q_h / 2
    if s_shift.denominator != 1:
        raise MathCheckError(
            f"twist shifts the last component by the non-integer {s_shift}"
        )
    w = MukaiVector(v.r, v.l + (v.r * n) * h, v.s + int(s_shift))
    assert mukai_square(ns, w) == mukai_square(ns, v)
    if w.l.is_zero:
        x, ray = 0, None
    else:
        x, ray = content(w.l), primitive_part(ns, w.l)
    coprime = gcd(v.r, 0 if v.l.is_zero else content(v.l)) == 1
    if coprime and x:
        assert gcd(v.r, x) == 1
    return TwistResult(
        vector=w,
        x=x,
        ray=ray,
        gcd_r_x=gcd(v.r, x),
        r_l_coprime=coprime,
    )


@dataclass(frozen=True)
class Scenario:
    """Named inputs for one pipeline run."""

    lattices: dict = field(default_factory=dict)
    vectors: dict = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)
    pipeline: str = ""


def scenario_from_json(data) -> Scenario:
    if not isinstance(data, dict):
        raise InputError("a scenario is a JSON object")
    pipeline = data.get("pipeline")
    if not isinstance(pipeline, str) or not pipeline:
        raise InputError("scenario needs a pipeline name")
    lattices = {}
    for name, entry in (data.get("lattices") or {}).items():
        if isinstance(entry, dict) and "gram" in entry:
            lattices[name] = lattice_from_json(entry)
        else:
            lattices[name] = elliptic_from_json(entry)
    vectors = {}
    for name, entry in (data.get("vectors") or {}).items():
        if isinstance(entry, dict):
            vectors[name] = mukai_from_json(entry)
        else:
            vectors[name] = latvec_from_json(entry)
    parameters = dict(data.get("parameters") or {})
    return Scenario(
        lattices=lattices, vectors=vectors, parameters=parameters, pipeline=pipeline
    )


def load_scenario(path) -> Scenario:
    return scenario_from_json(load_json_file(path))


def run_scenario(sc: Scenario) -> TheoremReport:
    """Dispatch a scenario to its pipeline.

    Both pipelines want a lattice named 'ns' and a Mukai vector named
    'v'; a polarization 'h' is optional for vbk3ell and required for
    casoprim.
    """
    if "ns" not in sc.lattices:
        raise InputError("scenario needs a lattice named 'ns'")
    if "v" not in sc.vectors:
        raise InputError("scenario needs a vector named 'v'")
    ns = sc.lattices["ns"]
    v = sc.vectors["v"]
    if not isinstance(v, MukaiVector):
        raise InputError("'v' must be a Mukai vector with keys r, l, s")
    h = sc.vectors.get("h")
    if h is not None and isinstance(h, MukaiVector):
        raise InputError("'h' must be a plain lattice vector")
    if sc.pipeline == "vbk3ell":
        return vbk3ell_pipeline(ns, v, h)
    if sc.pipeline == "casoprim":
        if h is None:
            raise InputError("casoprim needs a polarization vector named 'h'")
        return casoprim_pipeline(ns, v, h)
    raise InputError(f"unknown pipeline {sc.pipeline!r}")
