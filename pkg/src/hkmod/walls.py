"""Wall classes in the positive cone of a rank-2 hyperbolic Picard lattice.

The lattice has Gram matrix [[e, d], [d, 0]] in the basis (h, f); f is
isotropic and h.f = d > 0. Wall classes are primitive integral classes
of bounded negative norm; everything downstream (suitability of a
polarization, chamber comparison, thresholds) is a statement about
their signs against the two cone edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError
from .jsonio import to_int, to_rational
from .lattice import IntLattice, LatVec, lattice, norm, pair, primitive_part, vec


@dataclass(frozen=True)
class EllipticNS:
    """Rank-2 lattice [[e, d], [d, 0]] with distinguished basis (h, f)."""

    e: int
    d: int

    def __post_init__(self):
        if not isinstance(self.e, int) or isinstance(self.e, bool):
            raise InputError("e must be an integer")
        if not isinstance(self.d, int) or isinstance(self.d, bool):
            raise InputError("d must be an integer")
        if self.d <= 0:
            raise InputError(f"fiber degree d must be positive, got {self.d}")

    @property
    def lattice(self) -> IntLattice:
        return lattice(((self.e, self.d), (self.d, 0)), label="ns")

    @property
    def h(self) -> LatVec:
        return vec((1, 0))

    @property
    def f(self) -> LatVec:
        return vec((0, 1))

    def q(self, v: LatVec, w: LatVec | None = None) -> Fraction:
        return pair(self.lattice, v, w if w is not None else v)

    def to_json_dict(self) -> dict:
        return {"e": self.e, "d": self.d}


def elliptic_from_json(data) -> EllipticNS:
    if isinstance(data, dict) and "e" in data and "d" in data:
        return EllipticNS(to_int(data["e"], "e"), to_int(data["d"], "d"))
    raise InputError("an elliptic lattice is a JSON object with keys e and d")


def as_elliptic(ns) -> EllipticNS:
    """Coerce an EllipticNS or a matching rank-2 IntLattice."""
    if isinstance(ns, EllipticNS):
        return ns
    if isinstance(ns, IntLattice):
        if ns.rank != 2 or ns.gram[1][1] != 0 or ns.gram[0][1] <= 0:
            raise InputError("lattice is not of the form [[e, d], [d, 0]] with d > 0")
        return EllipticNS(ns.gram[0][0], ns.gram[0][1])
    raise InputError(f"cannot interpret {type(ns).__name__} as an elliptic lattice")


@dataclass(frozen=True)
class WallClass:
    """A primitive class lam = x*h + y*f with -a <= q(lam) < 0 and x >= 1."""

    lam: LatVec
    norm: int
    pair_h: int
    pair_f: int

    def to_json_dict(self) -> dict:
        return {
            "lambda": self.lam.to_json_dict(),
            "norm": self.norm,
            "pair_h": self.pair_h,
            "pair_f": self.pair_f,
        }


@dataclass(frozen=True)
class SuitabilityReport:
    suitable: bool
    generic: bool
    witnesses: tuple[WallClass, ...]

    def __post_init__(self):
        if not self.suitable:
            assert self.witnesses, "an unsuitable report must carry a witness"

    def to_json_dict(self) -> dict:
        return {
            "suitable": self.suitable,
            "generic": self.generic,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def enumerate_wall_classes(ns: EllipticNS, a) -> list[WallClass]:
    """All wall classes of level a, in lexicographic (x, y) order.

    Normalization x >= 1 picks one representative per +-pair; y then
    ranges over the exact interval forced by -a <= x*(e*x + 2*d*y) < 0.
    """
    a = to_rational(a)
    if a <= 0:
        raise InputError(f"level must be positive, got {a}")
    e, d = ns.e, ns.d
    out: list[WallClass] = []
    x = 1
    while x <= a:  # |q| >= x for any admissible y, so x is bounded by a
        lo = _ceil((-a / x - e * x) / (2 * d))
        hi = _floor(Fraction(-1 - e * x, 2 * d))
        for y in range(lo, hi + 1):
            if gcd(x, abs(y)) != 1:
                continue
            q = x * (e * x + 2 * d * y)
            out.append(
                WallClass(
                    lam=vec((x, y)),
                    norm=q,
                    pair_h=e * x + d * y,
                    pair_f=d * x,
                )
            )
        x += 1
    return out


def suitability_for(ns: EllipticNS, a, h: LatVec) -> SuitabilityReport:
    """Sign test of every wall class of level a against h and f.

    Suitable means each wall pairs with h and with f to values of the
    same sign (or both zero); generic means no wall is orthogonal to h.
    """
    if ns.q(h) <= 0:
        raise InputError("polarization must have positive self-pairing")
    lat = ns.lattice
    f = ns.f
    witnesses = []
    generic = True
    for wall in enumerate_wall_classes(ns, a):
        ph = int(pair(lat, wall.lam, h))
        pf = int(pair(lat, wall.lam, f))
        if ph == 0:
            generic = False
        sh = (ph > 0) - (ph < 0)
        sf = (pf > 0) - (pf < 0)
        if sh != sf:
            witnesses.append(wall)
    return SuitabilityReport(
        suitable=not witnesses, generic=generic, witnesses=tuple(witnesses)
    )


def is_suitable(ns: EllipticNS, a) -> SuitabilityReport:
    return suitability_for(ns, a, ns.h)


def same_chamber(ns: EllipticNS, a, h0: LatVec, h1: LatVec) -> bool:
    """True iff no wall of level a separates the two polarizations.

    Both classes must lie in the h-side of the positive cone: positive
    self-pairing and positive pairing with f.
    """
    lat = ns.lattice
    for label, h in (("h0", h0), ("h1", h1)):
        if ns.q(h) <= 0:
            raise InputError(f"{label} must have positive self-pairing")
        if pair(lat, h, ns.f) <= 0:
            raise InputError(f"{label} must pair positively with the fiber class")
    for wall in enumerate_wall_classes(ns, a):
        p0 = pair(lat, wall.lam, h0)
        p1 = pair(lat, wall.lam, h1)
        s0 = (p0 > 0) - (p0 < 0)
        s1 = (p1 > 0) - (p1 < 0)
        if s0 == 0 or s1 == 0 or s0 != s1:
            return False
    return True


def min_negative_norm(ns: EllipticNS) -> int:
    """Smallest |q(w)| over integral classes with q(w) < 0.

    For fixed x >= 1 the minimum of |x*(e*x + 2*d*y)| over y is
    x * t0 where t0 = (-e*x) mod 2d, replacing a zero residue by 2d.
    Only x values below the running best can improve it.
    """
    if ns.e < 0:
        raise InputError("needs e >= 0 so negative-norm classes have x != 0")
    e, d = ns.e, ns.d
    best = None
    x = 1
    while best is None or x <= best:
        t0 = (-e * x) % (2 * d)
        if t0 == 0:
            t0 = 2 * d
        cand = x * t0
        if best is None or cand < best:
            best = cand
        x += 1
    return best


def has_minus_two_class(ns: EllipticNS) -> bool:
    return min_negative_norm(ns) == 2


def no_wall_threshold(e: int, a) -> int:
    """Smallest fiber degree guaranteeing an empty wall set at level a.

    Returns floor(a*(1+e)/2) + 1; the emptiness is re-verified by
    direct enumeration before returning.
    """
    a = to_rational(a)
    if a <= 0:
        raise InputError("level must be positive")
    if e < 0:
        raise InputError("needs e >= 0")
    d = _floor(a * (1 + e) / 2) + 1
    assert not enumerate_wall_classes(EllipticNS(e, d), a)
    return d


def wall_ray(ns: EllipticNS, wall) -> LatVec:
    """Primitive generator of the positive-cone ray orthogonal to a wall."""
    lam = wall.lam if isinstance(wall, WallClass) else wall
    if not isinstance(lam, LatVec) or len(lam) != 2 or not lam.integral:
        raise InputError("wall must be an integral rank-2 class")
    if norm(ns.lattice, lam) >= 0:
        raise InputError("wall classes have negative norm")
    x, y = lam.int_coords()
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    ray = primitive_part(ns.lattice, vec((ns.d * x, -(ns.e * x + ns.d * y))))
    assert ns.q(ray) > 0
    return ray
