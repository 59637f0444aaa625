"""Top intersection products via the polarized Fujiki relation.

The integral of a product of 2n degree-2 classes equals the normalized
Fujiki constant times the sum, over all perfect matchings of the 2n
slots, of the products of pairwise form values. Matchings are
enumerated canonically (smallest unmatched index first) so each one is
counted exactly once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Sequence

from .errors import InputError
from .lattice import IntLattice, LatVec, pair

# Normalized Fujiki constants of the known deformation types, keyed by
# family name; each entry maps the half-dimension n to c_X.
FUJIKI_CONSTANTS: dict[str, Callable[[int], Fraction]] = {
    "K3": lambda n: Fraction(1),
    "K3^[n]": lambda n: Fraction(1),
    "Kum_n": lambda n: Fraction(n + 1),
    "OG6": lambda n: Fraction(4),
}

_KIND_RE = re.compile(r"^(K3\^\[(\d+)\]|Kum_(\d+))$")


def parse_kind(kind: str, n: int | None = None) -> tuple[str, int]:
    """Resolve a family name like 'K3^[3]' or 'Kum_2' to (table key, n)."""
    m = _KIND_RE.match(kind)
    if m:
        key = "K3^[n]" if m.group(2) else "Kum_n"
        n_from_name = int(m.group(2) or m.group(3))
        if n is not None and n != n_from_name:
            raise InputError(f"kind {kind!r} fixes n = {n_from_name}, got n = {n}")
        return key, n_from_name
    if kind == "K3":
        if n not in (None, 1):
            raise InputError("a K3 surface has n = 1")
        return "K3", 1
    if kind == "OG6":
        if n not in (None, 3):
            raise InputError("OG6 has n = 3")
        return "OG6", 3
    if kind in FUJIKI_CONSTANTS:
        if n is None:
            raise InputError(f"kind {kind!r} needs an explicit n")
        return kind, n
    raise InputError(f"unknown deformation type {kind!r}")


def fujiki_constant(kind: str, n: int | None = None) -> Fraction:
    key, n_val = parse_kind(kind, n)
    if n_val < 1:
        raise InputError("n must be positive")
    return FUJIKI_CONSTANTS[key](n_val)


@dataclass(frozen=True)
class FujikiSetup:
    """Evaluation context: half-dimension n, Fujiki constant, and the pairing lattice."""

    n: int
    c_x: Fraction
    pairing: IntLattice

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be positive")
        if self.c_x <= 0:
            raise InputError("the Fujiki constant must be positive")

    @classmethod
    def for_kind(cls, kind: str, pairing: IntLattice, n: int | None = None) -> "FujikiSetup":
        key, n_val = parse_kind(kind, n)
        return cls(n=n_val, c_x=FUJIKI_CONSTANTS[key](n_val), pairing=pairing)

    def q(self, v: LatVec, w: LatVec) -> Fraction:
        return pair(self.pairing, v, w)


@dataclass(frozen=True)
class ModularClass:
    """Modularity data of a sheaf: the constant d_F and the rank."""

    d_f: Fraction
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InputError("rank must be positive")


def double_factorial(m: int) -> int:
    """Product m(m-2)(m-4)...; equal to 1 for m in {-1, 0}."""
    if m < -1:
        raise InputError(f"double factorial undefined for {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def perfect_matchings(count: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every perfect matching of range(count) once, smallest unmatched index first."""
    if count % 2:
        raise InputError("perfect matchings need an even number of elements")

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for j in range(1, len(remaining)):
            rest = remaining[1:j] + remaining[j + 1:]
            for tail in rec(rest):
                yield ((first, remaining[j]),) + tail

    yield from rec(tuple(range(count)))


def matchings_sum(q_values: Callable[..., Fraction], classes: Sequence) -> Fraction:
    """Sum over all perfect matchings of the product of pairwise form values."""
    items = list(classes)
    if len(items) % 2:
        raise InputError("matchings sum needs an even number of classes")
    total = Fraction(0)
    for matching in perfect_matchings(len(items)):
        prod = Fraction(1)
        for i, j in matching:
            prod *= Fraction(q_values(items[i], items[j]))
            if prod == 0:
                break
        total += prod
    return total


def top_intersection(setup: FujikiSetup, classes: Sequence[LatVec]) -> Fraction:
    """Integral of the product of 2n degree-2 classes."""
    if len(classes) != 2 * setup.n:
        raise InputError(f"expected {2 * setup.n} classes, got {len(classes)}")
    return setup.c_x * matchings_sum(setup.q, classes)


def modular_delta_integral(setup: FujikiSetup, mc: ModularClass, alphas: Sequence[LatVec]) -> Fraction:
    """Integral of the discriminant of a modular sheaf against 2n-2 classes."""
    if len(alphas) != 2 * setup.n - 2:
        raise InputError(f"expected {2 * setup.n - 2} classes, got {len(alphas)}")
    return Fraction(mc.d_f) * matchings_sum(setup.q, alphas)


def lambda_ef(r_e: int, c1_e: LatVec, r_f: int, c1_f: LatVec) -> LatVec:
    """Slope-comparison class r_F*c1(E) - r_E*c1(F)."""
    return r_f * c1_e - r_e * c1_f


def slope_comparison(setup: FujikiSetup, lam: LatVec, h: LatVec) -> int:
    """Sign of q(lambda, h); positive means the first slope is larger."""
    if setup.q(h, h) <= 0:
        raise InputError("slope comparison needs q(h) > 0")
    value = setup.q(lam, h)
    return (value > 0) - (value < 0)


def fiber_restriction_integral(setup: FujikiSetup, lam: LatVec, h: LatVec, f: LatVec) -> Fraction:
    """Integral of lambda * h^(n-1) * f^n against an isotropic fiber class f."""
    if setup.q(f, f) != 0:
        raise InputError("fiber class must be isotropic: q(f,f) = 0")
    n = setup.n
    closed = factorial(n) * setup.c_x * setup.q(h, f) ** (n - 1) * setup.q(lam, f)
    enumerated = top_intersection(setup, [lam] + [h] * (n - 1) + [f] * n)
    assert closed == enumerated, f"closed form {closed} != matching enumeration {enumerated}"
    return closed


def propsemi_bound_check(setup: FujikiSetup, r: int, d_f, lambda_norm) -> bool:
    """True iff lambda's norm lies in [-r^2*d_F/(4*c_X), 0]."""
    if r < 1:
        raise InputError("rank must be positive")
    lo = -Fraction(r * r) * Fraction(d_f) / (4 * setup.c_x)
    return lo <= Fraction(lambda_norm) <= 0


def discriminant_sum_identity(
    setup: FujikiSetup,
    q_h,
    r_e: int,
    int_delta_e,
    r_g: int,
    int_delta_g,
    d_f,
    lambda_norm,
) -> tuple[Fraction, Fraction]:
    """Two sides of the additive discriminant decomposition for an extension.

    For a short exact sequence with outer ranks r_e, r_g and middle term of
    modularity constant d_f, the h-integrals of the outer discriminants
    determine the middle one up to the norm of the slope-comparison class.
    Returns (lhs, rhs); equality holds exactly for consistent data.
    """
    if r_e < 1 or r_g < 1:
        raise InputError("ranks must be positive")
    r_f = r_e + r_g
    scale = double_factorial(2 * setup.n - 3) * Fraction(q_h) ** (setup.n - 1)
    lhs = r_f * r_g * Fraction(int_delta_e) + r_f * r_e * Fraction(int_delta_g)
    rhs = (r_e * r_g * Fraction(d_f) + setup.c_x * Fraction(lambda_norm)) * scale
    return lhs, rhs
