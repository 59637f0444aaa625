"""Slope-reduction of Mukai vectors along an elliptic fibration.

Starting from a positive-rank vector coprime to the fiber degree, a
Bezout twist produces a rigid vector of square -2; elementary
modifications then walk the square down in controlled strictly
decreasing steps, never below the rigid bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InputError, MathCheckError
from .lattice import IntLattice, LatVec, norm, pair
from .mukai import MukaiVector, mukai_square


@dataclass(frozen=True)
class AtiyahResult:
    """Existence of a stable fiber bundle of coprime rank and degree; such
    a bundle is unique up to isomorphism whenever it exists."""

    exists: bool
    unique: bool

    def __bool__(self) -> bool:
        return self.exists


def atiyah_exists(r: int, deg: int) -> AtiyahResult:
    if r < 1:
        raise InputError("rank must be positive")
    ok = gcd(r, deg) == 1
    return AtiyahResult(exists=ok, unique=ok)


def bezout_r0_d0(r: int, k: int) -> tuple[int, int]:
    """The unique pair with k*r0 - r*d0 = 1 and 0 < r0 < r."""
    if r < 2:
        raise InputError(f"rank must be at least 2, got {r}")
    if gcd(r, k) != 1:
        raise MathCheckError(f"gcd({r}, {k}) != 1: no Bezout pair exists")
    r0 = pow(k, -1, r)
    d0 = (k * r0 - 1) // r
    assert 0 < r0 < r and k * r0 - r * d0 == 1
    return r0, d0


@dataclass(frozen=True)
class ModificationStep:
    """One elementary modification: a subsheaf of fiber rank r_b and degree deg_b."""

    r_b: int
    deg_b: int

    def __post_init__(self):
        if self.r_b < 1:
            raise InputError("fiber rank of a step must be positive")

    def to_json_dict(self) -> dict:
        return {"r_b": self.r_b, "deg_b": self.deg_b}


@dataclass(frozen=True)
class ReductionTrace:
    start: MukaiVector
    final: MukaiVector
    steps: tuple[ModificationStep, ...]
    squares: tuple[int, ...]

    def __post_init__(self):
        assert len(self.squares) == len(self.steps) + 1
        for a, b in zip(self.squares, self.squares[1:]):
            assert b < a, "squares along a trace decrease strictly"
        assert all(s >= -2 for s in self.squares)

    def to_json_dict(self) -> dict:
        return {
            "start": self.start.to_json_dict(),
            "final": self.final.to_json_dict(),
            "steps": [s.to_json_dict() for s in self.steps],
            "squares": list(self.squares),
        }


def _fiber_degree(ns: IntLattice, v: MukaiVector, f: LatVec) -> int:
    if norm(ns, f) != 0:
        raise InputError("fiber class must be isotropic: q(f,f) = 0")
    if f.is_zero or not f.integral:
        raise InputError("fiber class must be a nonzero integral class")
    k = pair(ns, v.l, f)
    assert k.denominator == 1
    return int(k)


def rigid_vector(ns: IntLattice, v: MukaiVector, f: LatVec) -> MukaiVector:
    """Twist v to the vector of square -2 singled out by the Bezout pair."""
    if v.r < 2:
        raise InputError(f"rank must be at least 2, got {v.r}")
    vsq = mukai_square(ns, v)
    if vsq < -2:
        raise MathCheckError(f"square {vsq} is below the rigid bound -2")
    k = _fiber_degree(ns, v, f)
    r0, d0 = bezout_r0_d0(v.r, k)
    n = vsq // 2 + 1
    w = MukaiVector(v.r, v.l + (n * (v.r - r0)) * f, v.s + n * (k - d0))
    assert mukai_square(ns, w) == -2
    return w


def elementary_modification(
    ns: IntLattice,
    w: MukaiVector,
    step: ModificationStep,
    f: LatVec,
    strict: bool = True,
) -> MukaiVector:
    """Apply one modification w -> w - (0, r_b*f, deg_b).

    The step must not increase the slope; by default it must strictly
    decrease it, which makes the square drop by the positive amount
    2*(r_b*k - r*deg_b).
    """
    if w.r < 2:
        raise InputError("modifications need rank at least 2")
    if not 1 <= step.r_b <= w.r - 1:
        raise InputError(f"fiber rank must lie in [1, {w.r - 1}], got {step.r_b}")
    k = _fiber_degree(ns, w, f)
    drop_half = step.r_b * k - w.r * step.deg_b
    if drop_half < 0 or (strict and drop_half == 0):
        raise MathCheckError(
            f"step ({step.r_b}, {step.deg_b}) does not "
            f"{'strictly ' if strict else ''}decrease the slope {k}/{w.r}"
        )
    out = MukaiVector(w.r, w.l - step.r_b * f, w.s - step.deg_b)
    assert mukai_square(ns, out) == mukai_square(ns, w) - 2 * drop_half
    return out


def reduction_trace(
    ns: IntLattice, w0: MukaiVector, steps, f: LatVec
) -> ReductionTrace:
    """Chain strict modifications from w0, tracking the squares.

    Refuses any step that would push the square below -2.
    """
    current = w0
    squares = [mukai_square(ns, w0)]
    applied = []
    for step in steps:
        nxt = elementary_modification(ns, current, step, f, strict=True)
        sq = mukai_square(ns, nxt)
        if sq < -2:
            raise MathCheckError(
                f"step ({step.r_b}, {step.deg_b}) drops the square to {sq}, "
                "below the rigid bound -2"
            )
        current = nxt
        squares.append(sq)
        applied.append(step)
    return ReductionTrace(
        start=w0, final=current, steps=tuple(applied), squares=tuple(squares)
    )


@dataclass(frozen=True)
class HomCountResult:
    value: int
    is_bezout_pair: bool


def hom_count_check(k: int, r: int, r0: int, d0: int) -> HomCountResult:
    """Value k*r0 - r*d0, flagged when (r0, d0) is the canonical Bezout pair."""
    if r < 2:
        raise InputError("rank must be at least 2")
    value = k * r0 - r * d0
    canonical = gcd(r, k) == 1 and (r0, d0) == bezout_r0_d0(r, k)
    if canonical:
        assert value == 1
    return HomCountResult(value=value, is_bezout_pair=canonical)


def nonlocally_free_dim_identity(
    ns: IntLattice, v: MukaiVector, dlen: int
) -> tuple[int, int]:
    """Both sides of the dimension count for sheaves failing local freeness
    along a length-dlen locus; they agree identically, and the common value
    stays below 2*n(v) exactly when the rank is at least 2."""
    if dlen < 1:
        raise InputError("locus length must be positive")
    if v.r < 1:
        raise InputError("rank must be positive")
    shifted = MukaiVector(v.r, v.l, v.s + dlen)
    lhs = mukai_square(ns, shifted) + 2 + dlen * (v.r + 1)
    n = mukai_square(ns, v) // 2 + 1
    rhs = 2 * n - (v.r - 1) * dlen
    assert lhs == rhs
    return lhs, rhs
