"""Admissible fiber degrees for lattices [[e, d], [d, 0]].

Each predicate packages the arithmetic conditions under which the
lattice admits a unique nef isotropic ray and no walls in the relevant
range; the search routines return the minimal parameter meeting them,
prove the search empty, or stop at an explicit cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    InputError,
    MathCheckError,
    NoAdmissibleParameter,
    SearchCapExceeded,
)
from .lattice import LatVec, primitive_part, vec
from .mukai import MukaiNumerics
from .walls import EllipticNS, enumerate_wall_classes

DEFAULT_SEARCH_CAP = 10**7


@dataclass(frozen=True)
class NefIsotropicClasses:
    """The isotropic rays on the nef boundary: the fiber class and the
    opposite primitive isotropic class alpha'."""

    rays: tuple[tuple[LatVec, int], ...]
    alpha: LatVec
    pairing_alpha_h: int
    unique: bool
    e_divides_d: bool
    e_divides_2d: bool

    def to_json_dict(self) -> dict:
        return {
            "rays": [{"class": v.to_json_dict(), "pair_h": p} for v, p in self.rays],
            "alpha": self.alpha.to_json_dict(),
            "pair_alpha_h": self.pairing_alpha_h,
            "unique": self.unique,
            "e_divides_d": self.e_divides_d,
            "e_divides_2d": self.e_divides_2d,
        }


def nef_isotropic_classes(e: int, d: int) -> NefIsotropicClasses:
    """Both isotropic rays of [[e, d], [d, 0]] and their pairings with h.

    Wants e > 0 even and d > 0. The second ray is the primitive part of
    (2d, -e); the fiber ray is distinguished (unique) exactly when the
    two rays pair differently with h, which happens iff e does not
    divide 2d.
    """
    if d <= 0:
        raise InputError("d must be positive")
    if e <= 0 or e % 2:
        raise InputError("e must be positive and even")
    ns = EllipticNS(e, d)
    alpha = primitive_part(ns.lattice, vec((2 * d, -e)))
    p = ns.q(alpha, ns.h)
    assert p.denominator == 1
    q_alpha_h = int(p)
    assert ns.q(alpha) == 0
    assert q_alpha_h == d * e // gcd(2 * d, e)
    unique = q_alpha_h != d
    assert unique == (2 * d % e != 0)
    return NefIsotropicClasses(
        rays=((ns.f, d), (alpha, q_alpha_h)),
        alpha=alpha,
        pairing_alpha_h=q_alpha_h,
        unique=unique,
        e_divides_d=d % e == 0,
        e_divides_2d=2 * d % e == 0,
    )


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    reasons: tuple[str, ...]
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "reasons": list(self.reasons), "details": self.details}


def _decide(conditions, details) -> Admissibility:
    reasons = tuple(name for name, holds in conditions if not holds)
    return Admissibility(ok=not reasons, reasons=reasons, details=details)


def nl_k3_admissible(e: int, d: int, num: MukaiNumerics) -> Admissibility:
    """Fiber degree large enough that level-a walls vanish and the nef
    isotropic ray is unique, for the surface-case constant a = a(v)."""
    if e <= 0 or e % 2:
        raise InputError("e must be positive and even")
    if d <= 0:
        raise InputError("d must be positive")
    bound = Fraction(e + 1) * num.a_v / 2
    conditions = [
        ("d exceeds (e+1)*a/2", d > bound),
        ("e does not divide d", d % e != 0),
    ]
    out = _decide(conditions, {"e": e, "d": d, "a": num.a_v, "bound": bound})
    if out.ok:
        assert Fraction(2 * d, e + 1) > num.a_v
        if num.a_v > 0:
            assert not enumerate_wall_classes(EllipticNS(e, d), num.a_v)
    return out


def nl_hk_admissible(e: int, d: int, i: int) -> Admissibility:
    """Ambient-divisibility-aware version with the fixed constant 10."""
    if e <= 0:
        raise InputError("e must be positive")
    if d <= 0:
        raise InputError("d must be positive")
    if i not in (1, 2):
        raise InputError(f"divisibility must be 1 or 2, got {i}")
    conditions = [
        ("d exceeds 10*(e+1)", d > 10 * (e + 1)),
        ("e does not divide 2d", 2 * d % e != 0),
    ]
    if i == 2:
        conditions.append(("d is even", d % 2 == 0))
    return _decide(conditions, {"e": e, "d": d, "i": i})


def propriostab_admissible(e: int, d: int, i: int, a0, m: int) -> Admissibility:
    """Joint condition for a polarization of level a0 and a rank multiplier m."""
    if e <= 0:
        raise InputError("e must be positive")
    if d <= 0:
        raise InputError("d must be positive")
    if i not in (1, 2):
        raise InputError(f"divisibility must be 1 or 2, got {i}")
    if d % i:
        raise InputError(f"divisibility {i} must divide d = {d}")
    if m < 1:
        raise InputError("multiplier must be positive")
    a0 = Fraction(a0)
    if a0 <= 0:
        raise InputError("level must be positive")
    bound = max(a0 * (e + 1) / 2, Fraction(10 * (e + 1)))
    conditions = [
        ("d exceeds max(a0*(e+1)/2, 10*(e+1))", d > bound),
        ("e does not divide 2d", 2 * d % e != 0),
        ("gcd(m*i, d/i) = 1", gcd(m * i, d // i) == 1),
    ]
    if i == 2:
        conditions.append(("d is even", d % 2 == 0))
    return _decide(
        conditions, {"e": e, "d": d, "i": i, "a0": a0, "m": m, "bound": bound}
    )


def buonacompt_bound(r0: int, e: int) -> Fraction:
    """Lower bound (5/16)*r0^6*(r0^2-1)*(e+1) that d must exceed."""
    if r0 < 1:
        raise InputError("r0 must be positive")
    return Fraction(5, 16) * r0**6 * (r0**2 - 1) * (e + 1)


def buonacompt_min_d(r0: int, e: int, i: int, cap: int = DEFAULT_SEARCH_CAP) -> int:
    """Minimal d > bound with e not dividing 2d, d divisible by i.

    Raises NoAdmissibleParameter when the congruence condition is empty
    (exactly when e divides 2i), and SearchCapExceeded past the cap.
    """
    if i not in (1, 2):
        raise InputError(f"divisibility must be 1 or 2, got {i}")
    if e <= 0:
        raise InputError("e must be positive")
    if cap < 1:
        raise InputError("cap must be positive")
    if r0 % 2 != i % 2:
        raise MathCheckError(f"parity mismatch: r0 = {r0} and i = {i}")
    from .hilb2 import econ_check  # deferred: hilb2 imports this module

    if not econ_check(r0, e):
        raise MathCheckError(f"e = {e} fails the congruence condition for r0 = {r0}")
    if (2 * i) % e == 0:
        raise NoAdmissibleParameter(
            f"e = {e} divides 2*d for every d divisible by {i}: the search is empty"
        )
    bound = buonacompt_bound(r0, e)
    d = bound.numerator // bound.denominator + 1
    if i == 2 and d % 2:
        d += 1
    step = 2 if i == 2 else 1
    while d <= cap:
        if (2 * d) % e != 0:
            return d
        d += step
    raise SearchCapExceeded(f"no admissible d found up to the cap {cap}")


def rigsuk_bound(m0: int, r0: int) -> Fraction:
    """Lower bound (2*m0+1)*r0^2*(r0^2-1)/4 that d0 must exceed."""
    if r0 < 1:
        raise InputError("r0 must be positive")
    if m0 < 0:
        raise InputError("m0 must be nonnegative")
    return Fraction((2 * m0 + 1) * r0**2 * (r0**2 - 1), 4)


def rigsuk_min_d0(m0: int, r0: int) -> int:
    """Smallest d0 above rigsuk_bound with gcd(d0, r0) = 1."""
    bound = rigsuk_bound(m0, r0)
    d0 = bound.numerator // bound.denominator + 1
    while gcd(d0, r0) != 1:
        d0 += 1
    return d0
