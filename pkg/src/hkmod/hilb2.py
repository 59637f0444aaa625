"""Modular sheaves on the Hilbert square of a K3 surface.

The ambient second cohomology is the K3 lattice plus an exceptional
(-2)-class; we work in the rank-3 sublattice spanned by a degree-e
polarization mu_D, a fiber class mu_C of h-degree d0, and half the
exceptional divisor. The congruence conditions below pick out the
exterior-power sheaves whose slope-zero twists exist, and the check
routines confirm the dictionary between surface data (r0, e, d0) and
ambient data (h, f, divisibility i) identity by identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt

from .errors import InputError, MathCheckError, NoAdmissibleParameter
from .fujiki import fujiki_constant, parse_kind
from .lattice import IntLattice, LatVec, lattice, pair, saturation_check, vec
from .nl import DEFAULT_SEARCH_CAP, buonacompt_bound, buonacompt_min_d, rigsuk_bound, rigsuk_min_d0
from .report import Check, TheoremReport


def _check_r0(r0: int) -> None:
    if not isinstance(r0, int) or isinstance(r0, bool) or r0 < 1:
        raise InputError(f"r0 must be a positive integer, got {r0!r}")


def _check_i(i: int) -> None:
    if i not in (1, 2):
        raise InputError(f"divisibility must be 1 or 2, got {i}")


def divisibility_type(e: int, i: int) -> bool:
    """Arithmetic constraint on the polarization degree for divisibility i:
    e positive and even when i = 1, e positive and congruent to 6 mod 8
    when i = 2."""
    _check_i(i)
    if not isinstance(e, int) or isinstance(e, bool):
        raise InputError("e must be an integer")
    if i == 1:
        return e > 0 and e % 2 == 0
    return e > 0 and e % 8 == 6


def econ_check(r0: int, e: int) -> bool:
    """Congruence on e that makes the twist slope integral, by r0 mod 4:
    e = 4*r0 - 10 (mod 8*r0)   when r0 = 0,
    e = (r0 - 5)/2 (mod 2*r0)  when r0 = 1,
    e = -10 (mod 8*r0)         when r0 = 2,
    e = -(r0 + 5)/2 (mod 2*r0) when r0 = 3."""
    _check_r0(r0)
    if not isinstance(e, int) or isinstance(e, bool):
        raise InputError("e must be an integer")
    m = r0 % 4
    if m == 0:
        return e % (8 * r0) == (4 * r0 - 10) % (8 * r0)
    if m == 1:
        return e % (2 * r0) == ((r0 - 5) // 2) % (2 * r0)
    if m == 2:
        return e % (8 * r0) == (-10) % (8 * r0)
    return e % (2 * r0) == (-(r0 + 5) // 2) % (2 * r0)


def governing_divisibility(r0: int) -> int:
    """Divisibility forced by the rank parity: 1 for odd r0, 2 for even."""
    _check_r0(r0)
    return 1 if r0 % 2 else 2


def m0_s0(r0: int, e: int, sign: str = "+") -> tuple[int, int]:
    """Twist degree m0 and slope s0 = (m0+1)/r0 of the distinguished sheaf.

    m0 = e/2 + (r0 -+ 1)^2/4 for odd r0 and e/8 + (r0 -+ 1)^2/4 for even
    r0. Both integralities are consequences of the congruence conditions
    and are asserted, not re-checked.
    """
    if sign not in ("+", "-"):
        raise InputError(f"sign must be '+' or '-', got {sign!r}")
    i = governing_divisibility(r0)
    if not divisibility_type(e, i):
        raise MathCheckError(f"e = {e} is not a valid degree for divisibility {i}")
    if not econ_check(r0, e):
        raise MathCheckError(f"e = {e} fails the congruence condition for r0 = {r0}")
    offset = (r0 - 1 if sign == "+" else r0 + 1) ** 2
    m0 = Fraction(e, 2 if r0 % 2 else 8) + Fraction(offset, 4)
    assert m0.denominator == 1, f"m0 = {m0} must be integral"
    s0 = Fraction(int(m0) + 1, r0)
    assert s0.denominator == 1, f"s0 = {s0} must be integral"
    return int(m0), int(s0)


@dataclass(frozen=True)
class F2Invariants:
    """Numerical invariants of the exterior-square sheaf of a rank-r0 input."""

    rank: int
    delta_coeff: int
    d_mod: int
    a_mod: int

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "delta_coeff": self.delta_coeff,
            "d_mod": self.d_mod,
            "a_mod": self.a_mod,
        }


def f2_invariants(r0: int) -> F2Invariants:
    """rank r0^2, discriminant coefficient r0^2(r0^2-1)/12, modularity
    constant 5*binom(r0^2, 2), and wall-control constant rank^2*d_mod/4."""
    _check_r0(r0)
    rank = r0 * r0
    delta_coeff = Fraction(rank * (rank - 1), 12)
    assert delta_coeff.denominator == 1
    d_mod = 5 * comb(rank, 2)
    a_mod = Fraction(rank * rank * d_mod, 4)
    assert a_mod.denominator == 1
    assert a_mod == Fraction(5, 8) * r0**6 * (rank - 1)
    return F2Invariants(
        rank=rank, delta_coeff=int(delta_coeff), d_mod=d_mod, a_mod=int(a_mod)
    )


def h_polarization(r0: int, i: int, m0: int, sign: str = "+") -> LatVec:
    """Coordinates (mu_D, mu_C, delta-half) of the slope-zero polarization:
    (i, 0, -i*(r0 -+ 1)/2)."""
    _check_r0(r0)
    _check_i(i)
    if sign not in ("+", "-"):
        raise InputError(f"sign must be '+' or '-', got {sign!r}")
    if not isinstance(m0, int) or isinstance(m0, bool) or m0 < 0:
        raise InputError("m0 must be a nonnegative integer")
    if r0 % 2 != i % 2:
        raise MathCheckError(f"parity mismatch: r0 = {r0} and i = {i}")
    last = Fraction(-i * (r0 - 1 if sign == "+" else r0 + 1), 2)
    assert last.denominator == 1
    return vec((i, 0, int(last)))


@dataclass(frozen=True)
class Hilb2NS:
    """Rank-3 sublattice spanned by (mu_D, mu_C, delta-half)."""

    m0: int
    d0: int
    lattice: IntLattice

    @property
    def mu_d(self) -> LatVec:
        return vec((1, 0, 0))

    @property
    def mu_c(self) -> LatVec:
        return vec((0, 1, 0))

    @property
    def delta_half(self) -> LatVec:
        return vec((0, 0, 1))


def hilb2_ns(m0: int, d0: int) -> Hilb2NS:
    if m0 < 0:
        raise InputError("m0 must be nonnegative")
    if d0 < 1:
        raise InputError("d0 must be positive")
    gram = ((2 * m0, d0, 0), (d0, 0, 0), (0, 0, -2))
    return Hilb2NS(m0=m0, d0=d0, lattice=lattice(gram, label="hilb2"))


def ambient_divisibility(v: LatVec) -> int:
    """Divisibility of a class (a, b, c) inside the full ambient lattice:
    gcd(a, b, 2c), since the delta-half direction pairs evenly with
    everything outside this sublattice."""
    if len(v) != 3 or not v.integral:
        raise InputError("expected an integral rank-3 class")
    a, b, c = v.int_coords()
    g = gcd(gcd(abs(a), abs(b)), 2 * abs(c))
    if g == 0:
        raise InputError("the zero class has no divisibility")
    return g


def rosetta_check(r0: int, i: int, e: int, d0: int) -> TheoremReport:
    """Dictionary between surface data and ambient data, one identity per check:
    the slope-zero polarization has square e and divisibility i, pairs to
    i*d0 with the isotropic fiber class, the fiber class is isotropic, and
    the pair spans a saturated sublattice."""
    _check_r0(r0)
    _check_i(i)
    if d0 < 1:
        raise InputError("d0 must be positive")
    if r0 % 2 != i % 2:
        raise MathCheckError(f"parity mismatch: r0 = {r0} and i = {i}")
    if not divisibility_type(e, i):
        raise MathCheckError(f"e = {e} is not a valid degree for divisibility {i}")
    if not econ_check(r0, e):
        raise MathCheckError(f"e = {e} fails the congruence condition for r0 = {r0}")
    m0, _ = m0_s0(r0, e)
    ns = hilb2_ns(m0, d0)
    h = h_polarization(r0, i, m0)
    f = ns.mu_c
    q_h = pair(ns.lattice, h, h)
    q_hf = pair(ns.lattice, h, f)
    q_f = pair(ns.lattice, f, f)
    div_h = ambient_divisibility(h)
    checks = (
        Check("q_h_equals_e", q_h == e, {"q_h": q_h, "e": e}),
        Check("divisibility_equals_i", div_h == i, {"div": div_h, "i": i}),
        Check("q_h_f_equals_i_d0", q_hf == i * d0, {"q_h_f": q_hf, "i*d0": i * d0}),
        Check("q_f_zero", q_f == 0, {"q_f": q_f}),
        Check(
            "h_f_saturated",
            saturation_check(ns.lattice, h, f),
            {"h": h.to_json_dict(), "f": f.to_json_dict()},
        ),
    )
    return TheoremReport(
        theorem="rosetta",
        checks=checks,
        data={"r0": r0, "i": i, "e": e, "d0": d0, "d": i * d0, "m0": m0},
    )


def restrango_check(kind: str, r: int, m: int) -> bool:
    """Rank constraint for descent of a rank-r sheaf twist: r | m^2 on the
    Hilbert square, r | 3*m^2 on the generalized Kummer fourfold."""
    if r < 1:
        raise InputError("rank must be positive")
    if kind == "K3^[2]":
        return m * m % r == 0
    if kind == "Kum_2":
        return 3 * m * m % r == 0
    raise InputError(f"unsupported deformation type {kind!r}")


def _nth_root_floor(x: int, n: int) -> int:
    if x < 0:
        raise InputError("radicand must be nonnegative")
    if n == 2:
        return isqrt(x)
    root = round(x ** (1.0 / n))
    while root**n > x:
        root -= 1
    while (root + 1) ** n <= x:
        root += 1
    return root


def potenza_solve(n: int, d1: int, d2: int, r: int, a: int) -> list[int]:
    """All r0 >= 1 with r0^n = r*g1*g2, g1*g2 | r0^(n-1), gcd(r, a) =
    r0^(n-1)/(g1*g2), where g1 = gcd(r0, d1) and g2 = gcd(r0, d2)."""
    if n < 1:
        raise InputError("n must be positive")
    if d1 < 1 or d2 < 1 or r < 1 or a < 1:
        raise InputError("d1, d2, r, a must be positive")
    if d2 % d1:
        raise InputError(f"d1 = {d1} must divide d2 = {d2}")
    out = []
    g_ra = gcd(r, a)
    for r0 in range(1, _nth_root_floor(r * d1 * d2, n) + 1):
        g1 = gcd(r0, d1)
        g2 = gcd(r0, d2)
        if r0**n != r * g1 * g2:
            continue
        if r0 ** (n - 1) % (g1 * g2):
            continue
        if g_ra != r0 ** (n - 1) // (g1 * g2):
            continue
        out.append(r0)
    return out


def resemibis_ranks(kind: str, n: int | None = None, r_max: int | None = None) -> list[int]:
    """Ranks r <= r_max of the form r0^n/dd with dd | gcd(r0^n, c_X).

    When the kind carries its own n (like 'K3^[3]'), the two-argument
    form resemibis_ranks(kind, r_max) is accepted.
    """
    if r_max is None:
        n, r_max = None, n
    if r_max is None or r_max < 1:
        raise InputError("r_max must be positive")
    c = fujiki_constant(kind, n)
    assert c.denominator == 1
    c = int(c)
    _, n_val = parse_kind(kind, n)
    found = set()
    r0 = 1
    while r0**n_val <= r_max * c:
        p = r0**n_val
        for dd in range(1, c + 1):
            if c % dd == 0 and p % dd == 0 and p // dd <= r_max:
                found.add(p // dd)
        r0 += 1
    return sorted(found)


def semihom_twist_count(r: int) -> int:
    """Number of twist classes acting on a rank-r semihomogeneous family."""
    if r < 1:
        raise InputError("rank must be positive")
    return r * r


@dataclass(frozen=True)
class McKaySquare:
    """Ext dimensions in degrees 0..4 on the Hilbert square, plus whether
    the traceless degree-0 part vanishes (the simple-sheaf pattern)."""

    dims: tuple[int, int, int, int, int]
    end0_vanishing: bool

    def to_json_dict(self) -> dict:
        return {"dims": list(self.dims), "end0_vanishing": self.end0_vanishing}


def mckay_ext_dims(ext_dims) -> McKaySquare:
    """Ext dimensions of the induced sheaf on the Hilbert square from those
    on the surface.

    Input: surface Ext dimensions, either (a0, a2, a4) in even degrees or
    all five degrees 0..4 with zero odd entries. The output in degree 2k is
    the symmetric-square coefficient: the sum of a_{2p}*a_{2q} over p < q
    with p + q = k, plus binom(a_k + 1, 2) when k is even.
    """
    dims = tuple(ext_dims)
    if len(dims) == 5:
        if dims[1] != 0 or dims[3] != 0:
            raise InputError("odd-degree Ext dimensions must vanish on a surface")
        dims = (dims[0], dims[2], dims[4])
    if len(dims) != 3:
        raise InputError("expected 3 even-degree or 5 graded Ext dimensions")
    for x in dims:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise InputError("Ext dimensions must be nonnegative integers")
    a = dims
    out = []
    for k in range(5):
        total = 0
        for p in range(0, k // 2 + (0 if k % 2 == 0 else 1)):
            q = k - p
            if p < q and q <= 2:
                total += a[p] * a[q]
        if k % 2 == 0:
            total += comb(a[k // 2] + 1, 2)
        out.append(total)
    dims5 = tuple(out)
    return McKaySquare(dims=dims5, end0_vanishing=dims5 == (1, 0, 1, 0, 1))


def unicita_report(
    i: int, r0: int, e: int, cap: int = DEFAULT_SEARCH_CAP
) -> TheoremReport:
    """Full admissibility pipeline for the exterior-square construction.

    Runs the checks in dependency order and stops at the first failure:
    parity of (r0, i), degree type, slope congruence, twist numerics,
    exterior-square invariants, the two minimal-parameter searches, and
    the ambient dictionary at the found parameter.
    """
    _check_i(i)
    _check_r0(r0)
    checks: list[Check] = []

    def report() -> TheoremReport:
        return TheoremReport(
            theorem="unicita", checks=tuple(checks), data={"i": i, "r0": r0, "e": e}
        )

    parity_ok = r0 % 2 == i % 2
    checks.append(Check("parity", parity_ok, {"r0": r0, "i": i}))
    if not parity_ok:
        return report()

    type_ok = divisibility_type(e, i)
    checks.append(
        Check(
            "divisibility_type",
            type_ok,
            {"e": e, "rule": "e > 0 even" if i == 1 else "e > 0 and e = 6 mod 8"},
        )
    )
    if not type_ok:
        return report()

    econ_ok = econ_check(r0, e)
    checks.append(Check("econ", econ_ok, {"r0": r0, "e": e, "r0_mod_4": r0 % 4}))
    if not econ_ok:
        return report()

    m0, s0 = m0_s0(r0, e)
    checks.append(Check("m0_s0", True, {"m0": m0, "s0": s0}))

    inv = f2_invariants(r0)
    assert r0 % i == 0
    checks.append(
        Check(
            "f2_invariants",
            True,
            {
                "rank": inv.rank,
                "delta_coeff": inv.delta_coeff,
                "d_mod": inv.d_mod,
                "a_mod": inv.a_mod,
                "c1_coeff": r0 // i,
                "hypothesis": "chi(End F) = 2",
            },
        )
    )

    d0_min = rigsuk_min_d0(m0, r0)
    checks.append(
        Check("rigsuk_min_d0", True, {"d0": d0_min, "bound": rigsuk_bound(m0, r0)})
    )

    try:
        min_d = buonacompt_min_d(r0, e, i, cap=cap)
    except NoAdmissibleParameter as exc:
        checks.append(Check("buonacompt_min_d", False, {"error": str(exc)}))
        return report()
    checks.append(
        Check(
            "buonacompt_min_d",
            True,
            {"min_d": min_d, "bound": buonacompt_bound(r0, e)},
        )
    )

    sub = rosetta_check(r0, i, e, min_d // i)
    checks.append(
        Check(
            "rosetta",
            sub.verdict,
            {
                "d0": min_d // i,
                "d": min_d,
                "checks": {c.name: c.passed for c in sub.checks},
            },
        )
    )
    return report()
