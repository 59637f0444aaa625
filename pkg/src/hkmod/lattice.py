"""Exact integer-lattice arithmetic.

A lattice is a finite-rank free module with an integral symmetric Gram
matrix; vectors carry exact rational coordinates. Everything here is
tolerance-free: arbitrary-precision integers and fractions only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError
from .jsonio import to_int, to_rational


@dataclass(frozen=True)
class LatVec:
    """Vector with exact rational coordinates; `integral` is validated at build time."""

    coords: tuple[Fraction, ...]
    integral: bool = False

    def __post_init__(self):
        if not isinstance(self.coords, tuple) or not self.coords:
            raise InputError("coords must be a nonempty tuple")
        if self.integral and any(c.denominator != 1 for c in self.coords):
            raise InputError(f"vector flagged integral has non-integer coordinates {self.coords}")

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "LatVec") -> "LatVec":
        if len(self) != len(other):
            raise InputError("vector length mismatch")
        return vec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "LatVec") -> "LatVec":
        if len(self) != len(other):
            raise InputError("vector length mismatch")
        return vec(a - b for a, b in zip(self.coords, other.coords))

    def __rmul__(self, scalar) -> "LatVec":
        s = Fraction(scalar)
        return vec(s * c for c in self.coords)

    def __neg__(self) -> "LatVec":
        return vec(-c for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def int_coords(self) -> tuple[int, ...]:
        if not self.integral:
            raise InputError(f"vector {self.coords} is not integral")
        return tuple(int(c) for c in self.coords)

    def to_json_dict(self):
        return list(self.coords)


def vec(coords: Iterable) -> LatVec:
    """Build a LatVec from ints, Fractions, or 'p/q' strings; integrality is inferred."""
    cs = tuple(to_rational(c) for c in coords)
    return LatVec(cs, integral=all(c.denominator == 1 for c in cs))


def latvec_from_json(data, rank: int | None = None) -> LatVec:
    if not isinstance(data, (list, tuple)):
        raise InputError(f"vector JSON must be an array, got {data!r}")
    v = vec(data)
    if rank is not None and len(v) != rank:
        raise InputError(f"vector has length {len(v)}, expected {rank}")
    return v


@dataclass(frozen=True)
class IntLattice:
    """Finite-rank lattice with an integral symmetric Gram matrix."""

    rank: int
    gram: tuple[tuple[int, ...], ...]
    label: str = ""
    nondegenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.rank < 1:
            raise InputError("rank must be positive")
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise InputError(f"gram must be {self.rank}x{self.rank}")
        for i in range(self.rank):
            for j in range(self.rank):
                if not isinstance(self.gram[i][j], int) or isinstance(self.gram[i][j], bool):
                    raise InputError("gram entries must be integers")
                if self.gram[i][j] != self.gram[j][i]:
                    raise InputError("gram must be symmetric")
        if self.nondegenerate and discriminant(self) == 0:
            raise InputError("lattice flagged nondegenerate has zero discriminant")

    def basis_vector(self, i: int) -> LatVec:
        return vec(1 if j == i else 0 for j in range(self.rank))

    def to_json_dict(self):
        return {"rank": self.rank, "gram": [list(row) for row in self.gram], "label": self.label}


def lattice(gram: Sequence[Sequence[int]], label: str = "", nondegenerate: bool = False) -> IntLattice:
    rows = tuple(tuple(to_int(x, "gram entry") for x in row) for row in gram)
    return IntLattice(rank=len(rows), gram=rows, label=label, nondegenerate=nondegenerate)


def lattice_from_json(data) -> IntLattice:
    if not isinstance(data, dict) or "gram" not in data:
        raise InputError("lattice JSON must be an object with a 'gram' matrix")
    lat = lattice(data["gram"], label=str(data.get("label", "")))
    if "rank" in data and to_int(data["rank"], "rank") != lat.rank:
        raise InputError(f"declared rank {data['rank']} does not match gram size {lat.rank}")
    return lat


def _check_len(L: IntLattice, v: LatVec):
    if len(v) != L.rank:
        raise InputError(f"vector length {len(v)} does not match lattice rank {L.rank}")


def pair(L: IntLattice, v: LatVec, w: LatVec) -> Fraction:
    """Evaluate the symmetric bilinear form v^T * gram * w."""
    _check_len(L, v)
    _check_len(L, w)
    if v.integral and w.integral:
        # gram entries are ints, so the whole contraction stays in int
        ws = tuple(wj.numerator for wj in w.coords)
        total = 0
        for i, vi in enumerate(v.coords):
            n = vi.numerator
            if n:
                row = L.gram[i]
                total += n * sum(map(int.__mul__, row, ws))
        return Fraction(total)
    total = Fraction(0)
    for i, vi in enumerate(v.coords):
        if vi == 0:
            continue
        row = L.gram[i]
        total += vi * sum(row[j] * wj for j, wj in enumerate(w.coords) if wj != 0)
    return total


def norm(L: IntLattice, v: LatVec) -> Fraction:
    """Self-pairing pair(v, v)."""
    return pair(L, v, v)


def content(v: LatVec) -> int:
    """Gcd of the integer coordinates (0 for the zero vector)."""
    g = 0
    for c in v.int_coords():
        g = gcd(g, abs(c))
    return g


def divisibility(L: IntLattice, v: LatVec) -> int:
    """Nonnegative generator of the pairing ideal: gcd of |pair(v, b_i)| over the basis."""
    _check_len(L, v)
    if not v.integral:
        raise InputError("divisibility requires an integral vector")
    # zero vector pairs to zero with everything: returns 0 by convention
    g = 0
    for i in range(L.rank):
        g = gcd(g, abs(int(pair(L, v, L.basis_vector(i)))))
    return g


def is_primitive(L: IntLattice, v: LatVec) -> bool:
    """True iff the integer coordinates are coprime."""
    _check_len(L, v)
    if v.is_zero:
        raise InputError("primitivity is undefined for the zero vector")
    return content(v) == 1


def primitive_part(L: IntLattice, v: LatVec) -> LatVec:
    """Divide an integral vector by the gcd of its coordinates."""
    _check_len(L, v)
    if v.is_zero:
        raise InputError("the zero vector has no primitive part")
    c = content(v)
    return vec(Fraction(x, c) for x in v.int_coords())


def saturation_check(L: IntLattice, v1: LatVec, v2: LatVec) -> bool:
    """True iff the sublattice spanned by v1, v2 is saturated (gcd of 2x2 minors is 1)."""
    _check_len(L, v1)
    _check_len(L, v2)
    a = v1.int_coords()
    b = v2.int_coords()
    g = 0
    for i in range(L.rank):
        for j in range(i + 1, L.rank):
            g = gcd(g, abs(a[i] * b[j] - a[j] * b[i]))
    if g == 0:
        raise InputError("saturation check requires linearly independent vectors")
    return g == 1


def discriminant(L: IntLattice) -> int:
    """det(gram), computed by fraction-free (Bareiss) elimination."""
    n = L.rank
    a = [list(row) for row in L.gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
