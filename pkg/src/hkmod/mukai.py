"""Mukai vectors on a K3 surface and the numerics attached to them.

A vector is a triple (r, l, s) with r the rank, l an integral class in
the Neron-Severi lattice and s an integer. All arithmetic is exact; the
self-pairing is required to be even, which pins the lattice down as an
even one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError, MathCheckError
from .jsonio import to_int
from .lattice import IntLattice, LatVec, latvec_from_json, norm, pair


@dataclass(frozen=True)
class MukaiVector:
    r: int
    l: LatVec
    s: int

    def __post_init__(self):
        if not isinstance(self.r, int) or isinstance(self.r, bool):
            raise InputError("rank must be an integer")
        if self.r < 0:
            raise InputError(f"rank must be nonnegative, got {self.r}")
        if not isinstance(self.l, LatVec):
            raise InputError("middle component must be a lattice vector")
        if not self.l.integral:
            raise InputError("middle component must be integral")
        if not isinstance(self.s, int) or isinstance(self.s, bool):
            raise InputError("last component must be an integer")

    def to_json_dict(self) -> dict:
        return {"r": self.r, "l": self.l.to_json_dict(), "s": self.s}


def mukai_from_json(data, rank: int | None = None) -> MukaiVector:
    if not isinstance(data, dict):
        raise InputError("a Mukai vector is a JSON object with keys r, l, s")
    missing = {"r", "l", "s"} - set(data)
    if missing:
        raise InputError(f"Mukai vector is missing keys: {sorted(missing)}")
    return MukaiVector(
        r=to_int(data["r"], "r"),
        l=latvec_from_json(data["l"], rank),
        s=to_int(data["s"], "s"),
    )


def mukai_pairing(ns: IntLattice, v: MukaiVector, w: MukaiVector) -> int:
    """Pairing <v, w> = (l, l') - r*s' - r'*s."""
    value = pair(ns, v.l, w.l) - v.r * w.s - w.r * v.s
    assert value.denominator == 1
    return int(value)


def mukai_square(ns: IntLattice, v: MukaiVector) -> int:
    value = mukai_pairing(ns, v, v)
    if value % 2:
        raise MathCheckError(
            f"self-pairing {value} is odd; the ambient lattice is not even"
        )
    return value


def from_chern(ns: IntLattice, r: int, c1: LatVec, c2: int) -> MukaiVector:
    """Mukai vector (r, c1, c1^2/2 - c2 + r) of a sheaf with these Chern data."""
    if r < 0:
        raise InputError("rank must be nonnegative")
    if not c1.integral:
        raise InputError("c1 must be integral")
    c1sq = norm(ns, c1)
    if c1sq.denominator != 1 or int(c1sq) % 2:
        raise MathCheckError(f"c1^2 = {c1sq} must be an even integer")
    return MukaiVector(r, c1, int(c1sq) // 2 - c2 + r)


@dataclass(frozen=True)
class MukaiNumerics:
    """Derived quantities of a positive-rank vector: square, moduli
    half-dimension offset n, wall-control constant a, and delta."""

    v_square: int
    n_v: int
    a_v: Fraction
    delta: int

    @classmethod
    def from_square(cls, r: int, v_square: int) -> "MukaiNumerics":
        if r < 1:
            raise InputError("rank must be positive")
        if v_square % 2:
            raise MathCheckError(f"square {v_square} must be even")
        delta = v_square + 2 * r * r
        return cls(
            v_square=v_square,
            n_v=v_square // 2 + 1,
            a_v=Fraction(r * r * delta, 4),
            delta=delta,
        )


def numerics(ns: IntLattice, v: MukaiVector) -> MukaiNumerics:
    if v.r < 1:
        raise InputError("numerics need a positive rank")
    return MukaiNumerics.from_square(v.r, mukai_square(ns, v))


def expected_dim_surface(delta: int, r: int, chi_o: int, q_irr: int) -> int:
    """Expected moduli dimension delta - (r^2 - 1)*chi(O) + q irregularity term."""
    if r < 1:
        raise InputError("rank must be positive")
    return delta - (r * r - 1) * chi_o + q_irr


def twist_by_mf(ns: IntLattice, v: MukaiVector, m: int, f: LatVec) -> MukaiVector:
    """Tensor by the m-th power of the line bundle with isotropic class f."""
    if norm(ns, f) != 0:
        raise InputError("twisting class must be isotropic: q(f,f) = 0")
    if not f.integral:
        raise InputError("twisting class must be integral")
    k = pair(ns, v.l, f)
    assert k.denominator == 1
    w = MukaiVector(v.r, v.l + (m * v.r) * f, v.s + m * int(k))
    assert mukai_pairing(ns, w, w) == mukai_pairing(ns, v, v)
    return w


def normalize_twist(ns: IntLattice, v: MukaiVector, w: MukaiVector, f: LatVec) -> int:
    """Recover the unique m with w = twist_by_mf(v, m, f), or refuse.

    Checks are ordered so the most structural failure is reported first:
    rank, coprimality hypothesis, fiber-direction difference, rank
    divisibility, square, and finally the full round trip.
    """
    if norm(ns, f) != 0:
        raise InputError("twisting class must be isotropic: q(f,f) = 0")
    if f.is_zero:
        raise InputError("twisting class must be nonzero")
    if v.r != w.r:
        raise MathCheckError(f"rank mismatch: {v.r} != {w.r}")
    if v.r < 1:
        raise InputError("normalization needs a positive rank")
    k = pair(ns, v.l, f)
    assert k.denominator == 1
    if gcd(v.r, int(k)) != 1:
        raise MathCheckError(f"gcd(r, q(l,f)) = gcd({v.r}, {int(k)}) != 1")
    diff = w.l - v.l
    x = None
    for a, b in zip(diff.coords, f.coords):
        if b != 0:
            x = a / b
            break
    if x is None or x.denominator != 1 or diff != int(x) * f:
        raise MathCheckError("difference of middle components is not an integer multiple of f")
    x = int(x)
    if x % v.r:
        raise MathCheckError(f"fiber multiple {x} is not divisible by the rank {v.r}")
    if mukai_square(ns, w) != mukai_square(ns, v):
        raise MathCheckError("squares differ; the vectors are not twists of each other")
    m = x // v.r
    if twist_by_mf(ns, v, m, f) != w:
        raise MathCheckError("last component does not match the recovered twist")
    return m
