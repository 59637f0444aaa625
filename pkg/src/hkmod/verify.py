"""Randomized and exhaustive self-checks, grouped by module.

Every suite re-derives identities from first principles on small or
random inputs with a fixed seed, so a corrupted constant or a broken
formula anywhere in the package turns at least one check red. Suites
run in deterministic name order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import fujiki, hilb2, nl, pipelines, reduction, walls
from .errors import InputError
from .lattice import (
    content,
    discriminant,
    lattice,
    norm,
    pair,
    primitive_part,
    saturation_check,
    vec,
)
from .mukai import MukaiVector, from_chern, mukai_square, normalize_twist, numerics, twist_by_mf
from .report import Check, TheoremReport

_SEED = 20240817


@dataclass(frozen=True)
class VerifySummary:
    suites: tuple[TheoremReport, ...]

    @property
    def ok(self) -> bool:
        return all(s.verdict for s in self.suites)

    def failures(self) -> list[str]:
        return [
            f"{s.theorem}.{c.name}"
            for s in self.suites
            for c in s.checks
            if not c.passed
        ]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "suites": [s.to_json_dict() for s in self.suites],
            "failures": self.failures(),
        }


def _run(checks: list[Check], name: str, fn) -> None:
    try:
        out = fn()
    except Exception as exc:  # a crash is a failed check, not a crash of the runner
        checks.append(Check(name, False, {"error": f"{type(exc).__name__}: {exc}"}))
        return
    if isinstance(out, tuple):
        ok, data = out
    else:
        ok, data = out, {}
    checks.append(Check(name, bool(ok), data))


def _rand_sym(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> tuple:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return tuple(tuple(r) for r in rows)


def _rand_even_sym(rng: random.Random, n: int) -> tuple:
    rows = [list(r) for r in _rand_sym(rng, n)]
    for i in range(n):
        rows[i][i] = 2 * rng.randint(-4, 4)
    return tuple(tuple(r) for r in rows)


def _suite_lattice() -> TheoremReport:
    rng = random.Random(_SEED)
    checks: list[Check] = []

    def bilinear():
        for _ in range(200):
            n = rng.randint(1, 4)
            lat = lattice(_rand_sym(rng, n))
            u = vec(tuple(rng.randint(-6, 6) for _ in range(n)))
            v = vec(tuple(rng.randint(-6, 6) for _ in range(n)))
            w = vec(tuple(rng.randint(-6, 6) for _ in range(n)))
            c = rng.randint(-3, 3)
            if pair(lat, u, v) != pair(lat, v, u):
                return False, {"gram": lat.gram}
            if pair(lat, u + c * v, w) != pair(lat, u, w) + c * pair(lat, v, w):
                return False, {"gram": lat.gram}
        return True

    def disc_rank2():
        for m0 in range(0, 8):
            for d in range(1, 8):
                lat = lattice(((2 * m0, d), (d, 0)))
                if discriminant(lat) != -d * d:
                    return False, {"m0": m0, "d": d}
        return True

    def primitive_idempotent():
        for _ in range(200):
            n = rng.randint(1, 4)
            lat = lattice(_rand_sym(rng, n))
            coords = tuple(rng.randint(-9, 9) for _ in range(n))
            if all(c == 0 for c in coords):
                continue
            p = primitive_part(lat, vec(coords))
            if content(p) != 1 or primitive_part(lat, p) != p:
                return False, {"coords": coords}
        return True

    def saturation_scaling():
        lat = lattice(((2, 1, 0), (1, 0, 0), (0, 0, -2)))
        u, v = vec((1, 0, 0)), vec((0, 1, 0))
        if not saturation_check(lat, u, v):
            return False, {}
        return not saturation_check(lat, 2 * u, v)

    _run(checks, "pairing_bilinear_symmetric", bilinear)
    _run(checks, "rank2_discriminant", disc_rank2)
    _run(checks, "primitive_part_idempotent", primitive_idempotent)
    _run(checks, "saturation_detects_imprimitive_span", saturation_scaling)
    return TheoremReport(theorem="lattice", checks=tuple(checks))


def _suite_fujiki() -> TheoremReport:
    rng = random.Random(_SEED + 1)
    checks: list[Check] = []

    def table_integrity():
        expect = [("K3", 1, 1), ("OG6", 3, 4)]
        expect += [(f"K3^[{n}]", n, 1) for n in range(1, 7)]
        expect += [(f"Kum_{n}", n, n + 1) for n in range(1, 7)]
        for kind, n, value in expect:
            if fujiki.fujiki_constant(kind, n) != value:
                return False, {"kind": kind, "n": n, "expected": value}
        return True

    def matchings_count():
        for k in range(1, 5):
            got = sum(1 for _ in fujiki.perfect_matchings(2 * k))
            if got != fujiki.double_factorial(2 * k - 1):
                return False, {"k": k, "count": got}
        return True

    def power_integral():
        for _ in range(20):
            n = rng.randint(1, 3)
            lat = lattice(_rand_sym(rng, 2))
            setup = fujiki.FujikiSetup(n=n, c_x=Fraction(rng.randint(1, 4)), pairing=lat)
            h = vec((rng.randint(-3, 3), rng.randint(-3, 3)))
            got = fujiki.top_intersection(setup, [h] * (2 * n))
            want = setup.c_x * fujiki.double_factorial(2 * n - 1) * norm(lat, h) ** n
            if got != want:
                return False, {"gram": lat.gram, "n": n}
        return True

    def permutation_invariance():
        lat = lattice(((4, 1), (1, 0)))
        setup = fujiki.FujikiSetup(n=2, c_x=Fraction(3), pairing=lat)
        classes = [vec((1, 0)), vec((0, 1)), vec((1, -1)), vec((2, 3))]
        base = fujiki.top_intersection(setup, classes)
        for _ in range(10):
            rng.shuffle(classes)
            if fujiki.top_intersection(setup, classes) != base:
                return False, {}
        return True

    def fiber_closed_form():
        for e in (2, 4, 6):
            for d in (1, 2, 5):
                lat = lattice(((e, d), (d, 0)))
                for n in (2, 3):
                    setup = fujiki.FujikiSetup(n=n, c_x=Fraction(n + 1), pairing=lat)
                    lam = vec((rng.randint(-4, 4), rng.randint(-4, 4)))
                    fujiki.fiber_restriction_integral(setup, lam, vec((1, 0)), vec((0, 1)))
        return True

    def modular_scaling():
        lat = lattice(((6, 1), (1, 0)))
        setup = fujiki.FujikiSetup(n=2, c_x=Fraction(1), pairing=lat)
        mc1 = fujiki.ModularClass(d_f=Fraction(30), r=2)
        mc2 = fujiki.ModularClass(d_f=Fraction(60), r=2)
        h = vec((1, 0))
        a1 = fujiki.modular_delta_integral(setup, mc1, [h, h])
        a2 = fujiki.modular_delta_integral(setup, mc2, [h, h])
        return a2 == 2 * a1 and a1 == 180, {"a1": a1}

    def propsemi_endpoints():
        lat = lattice(((2, 1), (1, 0)))
        setup = fujiki.FujikiSetup(n=2, c_x=Fraction(1), pairing=lat)
        lo = -Fraction(4 * 8, 4)
        inside = fujiki.propsemi_bound_check(setup, 2, 8, lo)
        zero = fujiki.propsemi_bound_check(setup, 2, 8, 0)
        below = fujiki.propsemi_bound_check(setup, 2, 8, lo - 1)
        above = fujiki.propsemi_bound_check(setup, 2, 8, 1)
        return inside and zero and not below and not above

    def discriminant_balance():
        for _ in range(40):
            n = rng.randint(2, 3)
            lat = lattice(_rand_sym(rng, 2))
            c_x = Fraction(rng.randint(1, 4))
            setup = fujiki.FujikiSetup(n=n, c_x=c_x, pairing=lat)
            q_h = rng.randint(1, 9)
            r_e, r_g = rng.randint(1, 4), rng.randint(1, 4)
            r_f = r_e + r_g
            d_e, d_g = Fraction(rng.randint(0, 30)), Fraction(rng.randint(0, 30))
            lam_sq = rng.randint(-20, 0)
            # middle constant chosen so the decomposition balances
            d_f = (Fraction(r_f * r_g) * d_e + Fraction(r_f * r_e) * d_g - c_x * lam_sq) / (r_e * r_g)
            scale = fujiki.double_factorial(2 * n - 3) * Fraction(q_h) ** (n - 1)
            lhs, rhs = fujiki.discriminant_sum_identity(
                setup, q_h, r_e, d_e * scale, r_g, d_g * scale, d_f, lam_sq
            )
            if lhs != rhs:
                return False, {"n": n, "q_h": q_h}
        return True

    _run(checks, "constants_table", table_integrity)
    _run(checks, "matchings_count_double_factorial", matchings_count)
    _run(checks, "top_power_closed_form", power_integral)
    _run(checks, "matchings_sum_permutation_invariant", permutation_invariance)
    _run(checks, "fiber_integral_closed_form", fiber_closed_form)
    _run(checks, "modular_integral_scales_linearly", modular_scaling)
    _run(checks, "semistable_bound_interval", propsemi_endpoints)
    _run(checks, "discriminant_decomposition_balance", discriminant_balance)
    return TheoremReport(theorem="fujiki", checks=tuple(checks))


def _suite_mukai() -> TheoremReport:
    rng = random.Random(_SEED + 2)
    checks: list[Check] = []

    def _rand_vec(n):
        return vec(tuple(rng.randint(-5, 5) for _ in range(n)))

    def square_even():
        for _ in range(100):
            n = rng.randint(1, 3)
            lat = lattice(_rand_even_sym(rng, n))
            v = MukaiVector(rng.randint(0, 4), _rand_vec(n), rng.randint(-5, 5))
            if mukai_square(lat, v) % 2:
                return False, {"gram": lat.gram}
        return True

    def twist_iso():
        lat = lattice(((4, 1), (1, 0)))
        f = vec((0, 1))
        for _ in range(100):
            v = MukaiVector(rng.randint(1, 5), _rand_vec(2), rng.randint(-5, 5))
            m = rng.randint(-4, 4)
            w = twist_by_mf(lat, v, m, f)
            if mukai_square(lat, w) != mukai_square(lat, v):
                return False, {}
        return True

    def normalize_roundtrip():
        lat = lattice(((2, 1), (1, 0)))
        f = vec((0, 1))
        for _ in range(100):
            r = rng.randint(1, 5)
            x = rng.randint(-5, 5)
            if gcd(r, x) != 1:
                continue
            v = MukaiVector(r, vec((x, rng.randint(-5, 5))), rng.randint(-5, 5))
            m = rng.randint(-4, 4)
            w = twist_by_mf(lat, v, m, f)
            if normalize_twist(lat, v, w, f) != m:
                return False, {"r": r, "m": m}
        return True

    def chern_cases():
        lat = lattice(((2, 1), (1, 0)))
        zero = vec((0, 0))
        if from_chern(lat, 1, zero, 0) != MukaiVector(1, zero, 1):
            return False, {"case": "structure sheaf"}
        if from_chern(lat, 1, zero, 3) != MukaiVector(1, zero, -2):
            return False, {"case": "colength 3"}
        if from_chern(lat, 2, zero, 2) != MukaiVector(2, zero, 0):
            return False, {"case": "rank 2"}
        h = vec((1, 0))
        got = from_chern(lat, 2, h, 1)
        return got == MukaiVector(2, h, 2), {"got": got.to_json_dict()}

    def numerics_identities():
        lat = lattice(((4, 1), (1, 0)))
        for _ in range(100):
            v = MukaiVector(rng.randint(1, 5), _rand_vec(2), rng.randint(-5, 5))
            num = numerics(lat, v)
            if num.delta != num.v_square + 2 * v.r * v.r:
                return False, {}
            if 4 * num.a_v != v.r * v.r * num.delta:
                return False, {}
            if 2 * (num.n_v - 1) != num.v_square:
                return False, {}
        return True

    _run(checks, "square_even_on_even_lattices", square_even)
    _run(checks, "twist_preserves_square", twist_iso)
    _run(checks, "normalize_recovers_twist", normalize_roundtrip)
    _run(checks, "chern_dictionary_cases", chern_cases)
    _run(checks, "derived_numerics_identities", numerics_identities)
    return TheoremReport(theorem="mukai", checks=tuple(checks))


def _brute_walls(e: int, d: int, a: Fraction) -> list[tuple[int, int]]:
    out = []
    x = 1
    while x <= a:
        for y in range(-10 * (abs(e) + 2 * d) * int(a) - 10, 10 * (abs(e) + 2 * d) * int(a) + 11):
            q = x * (e * x + 2 * d * y)
            if -a <= q < 0 and gcd(x, abs(y)) == 1:
                out.append((x, y))
        x += 1
    return sorted(out)


def _suite_walls() -> TheoremReport:
    checks: list[Check] = []

    def box_oracle():
        for e in (2, 4):
            for d in (1, 3):
                for a in (Fraction(6), Fraction(12), Fraction(7, 2)):
                    ns = walls.EllipticNS(e, d)
                    got = [tuple(w.lam.int_coords()) for w in walls.enumerate_wall_classes(ns, a)]
                    if got != _brute_walls(e, d, a):
                        return False, {"e": e, "d": d, "a": a}
        return True

    def stored_pairings():
        ns = walls.EllipticNS(4, 3)
        lat = ns.lattice
        for w in walls.enumerate_wall_classes(ns, 25):
            if w.norm != norm(lat, w.lam):
                return False, {}
            if w.pair_h != pair(lat, w.lam, ns.h) or w.pair_f != pair(lat, w.lam, ns.f):
                return False, {}
        return True

    def threshold_guarantee():
        for e in (0, 2, 4, 8):
            for a in (Fraction(3), Fraction(12), Fraction(5, 2)):
                thr = walls.no_wall_threshold(e, a)
                for d in (thr, thr + 1, thr + 5):
                    if walls.enumerate_wall_classes(walls.EllipticNS(e, d), a):
                        return False, {"e": e, "a": a, "d": d}
        return True

    def minnorm_brute():
        for e in (0, 2, 4, 6):
            for d in range(1, 8):
                ns = walls.EllipticNS(e, d)
                got = walls.min_negative_norm(ns)
                best = min(
                    -(x * (e * x + 2 * d * y))
                    for x in range(1, 2 * d + 2)
                    for y in range(-4 * (e + 2 * d), 4 * (e + 2 * d))
                    if x * (e * x + 2 * d * y) < 0
                )
                if got != best:
                    return False, {"e": e, "d": d, "got": got, "best": best}
        return True

    def ray_orthogonal():
        ns = walls.EllipticNS(4, 1)
        for w in walls.enumerate_wall_classes(ns, 12):
            ray = walls.wall_ray(ns, w)
            if ns.q(ray, w.lam) != 0 or ns.q(ray) <= 0 or content(ray) != 1:
                return False, {"wall": w.to_json_dict()}
        return True

    def witnesses_violate():
        for e, d, a in ((2, 3, 6), (4, 1, 12), (6, 5, 20)):
            ns = walls.EllipticNS(e, d)
            rep = walls.is_suitable(ns, a)
            lat = ns.lattice
            for w in rep.witnesses:
                ph, pf = pair(lat, w.lam, ns.h), pair(lat, w.lam, ns.f)
                sh = (ph > 0) - (ph < 0)
                sf = (pf > 0) - (pf < 0)
                if sh == sf:
                    return False, {"e": e, "d": d}
        return True

    _run(checks, "enumeration_matches_box_scan", box_oracle)
    _run(checks, "wall_fields_match_lattice", stored_pairings)
    _run(checks, "threshold_guarantees_empty", threshold_guarantee)
    _run(checks, "min_negative_norm_brute_force", minnorm_brute)
    _run(checks, "rays_orthogonal_positive_primitive", ray_orthogonal)
    _run(checks, "unsuitability_witnesses_violate_signs", witnesses_violate)
    return TheoremReport(theorem="walls", checks=tuple(checks))


def _suite_reduction() -> TheoremReport:
    rng = random.Random(_SEED + 3)
    checks: list[Check] = []

    def bezout_sweep():
        for r in range(2, 41):
            for k in range(-20, 21):
                if gcd(r, k) != 1:
                    continue
                r0, d0 = reduction.bezout_r0_d0(r, k)
                if not (0 < r0 < r and k * r0 - r * d0 == 1):
                    return False, {"r": r, "k": k}
        return True

    def rigid_random():
        for _ in range(200):
            e = 2 * rng.randint(1, 5)
            d = rng.randint(1, 6)
            lat = lattice(((e, d), (d, 0)))
            r = rng.randint(2, 5)
            l = vec((rng.randint(-4, 4), rng.randint(-4, 4)))
            v = MukaiVector(r, l, rng.randint(-4, 4))
            k = int(pair(lat, l, vec((0, 1))))
            if gcd(r, k) != 1 or mukai_square(lat, v) < -2:
                continue
            w = reduction.rigid_vector(lat, v, vec((0, 1)))
            if mukai_square(lat, w) != -2 or w.r != r:
                return False, {"v": v.to_json_dict()}
        return True

    def drop_law():
        lat = lattice(((4, 1), (1, 0)))
        f = vec((0, 1))
        for _ in range(200):
            r = rng.randint(2, 5)
            w = MukaiVector(r, vec((rng.randint(1, 6), rng.randint(-4, 4))), rng.randint(-4, 4))
            k = int(pair(lat, w.l, f))
            r_b = rng.randint(1, r - 1)
            lo = None
            for deg in range(-6, 7):
                if r_b * k - r * deg > 0:
                    lo = deg
            if lo is None:
                continue
            step = reduction.ModificationStep(r_b, lo)
            out = reduction.elementary_modification(lat, w, step, f)
            want = mukai_square(lat, w) - 2 * (r_b * k - r * lo)
            if mukai_square(lat, out) != want:
                return False, {}
        return True

    def atiyah_cases():
        good = reduction.atiyah_exists(3, 5)
        bad = reduction.atiyah_exists(4, 6)
        return good.exists and good.unique and not bad.exists and not bad.unique

    def dim_identity():
        lat = lattice(((2, 1), (1, 0)))
        for _ in range(100):
            r = rng.randint(1, 5)
            v = MukaiVector(r, vec((rng.randint(-4, 4), rng.randint(-4, 4))), rng.randint(-4, 4))
            dlen = rng.randint(1, 6)
            lhs, rhs = reduction.nonlocally_free_dim_identity(lat, v, dlen)
            n = mukai_square(lat, v) // 2 + 1
            if lhs != rhs:
                return False, {}
            if (lhs < 2 * n) != (r >= 2):
                return False, {"r": r, "dlen": dlen}
        return True

    _run(checks, "bezout_pair_sweep", bezout_sweep)
    _run(checks, "rigid_vector_square_minus_two", rigid_random)
    _run(checks, "modification_drop_law", drop_law)
    _run(checks, "coprime_fiber_bundle_cases", atiyah_cases)
    _run(checks, "nonlocally_free_dimension_identity", dim_identity)
    return TheoremReport(theorem="reduction", checks=tuple(checks))


def _suite_nl() -> TheoremReport:
    checks: list[Check] = []

    def unique_iff():
        for e in (2, 4, 6, 8, 10, 12):
            for d in range(1, 41):
                rep = nl.nef_isotropic_classes(e, d)
                if rep.unique != (2 * d % e != 0):
                    return False, {"e": e, "d": d}
                if rep.e_divides_d != (d % e == 0):
                    return False, {"e": e, "d": d}
        return True

    def search_minimal():
        for r0, e, i in ((2, 6, 2), (1, 4, 1), (2, 22, 2)):
            got = nl.buonacompt_min_d(r0, e, i)
            bound = nl.buonacompt_bound(r0, e)
            if not (got > bound and 2 * got % e != 0 and got % i == 0):
                return False, {"r0": r0, "e": e}
            d = bound.numerator // bound.denominator + 1
            while d < got:
                if d % i == 0 and 2 * d % e != 0:
                    return False, {"r0": r0, "e": e, "smaller": d}
                d += 1
        return True

    def rigsuk_minimal():
        for m0 in range(0, 6):
            for r0 in range(1, 7):
                got = nl.rigsuk_min_d0(m0, r0)
                bound = nl.rigsuk_bound(m0, r0)
                if not (got > bound and gcd(got, r0) == 1):
                    return False, {"m0": m0, "r0": r0}
                d0 = bound.numerator // bound.denominator + 1
                while d0 < got:
                    if gcd(d0, r0) == 1:
                        return False, {"m0": m0, "r0": r0, "smaller": d0}
                    d0 += 1
        return True

    def admissible_examples():
        from .mukai import MukaiNumerics

        num = MukaiNumerics.from_square(2, 4)
        if not nl.nl_k3_admissible(4, 31, num).ok:
            return False, {"case": 31}
        if nl.nl_k3_admissible(4, 30, num).ok or nl.nl_k3_admissible(4, 32, num).ok:
            return False, {"case": "30/32"}
        if not nl.nl_hk_admissible(6, 74, 2).ok or nl.nl_hk_admissible(6, 72, 2).ok:
            return False, {"case": "hk"}
        return nl.nl_hk_admissible(6, 71, 1).ok

    _run(checks, "isotropic_ray_unique_iff_indivisible", unique_iff)
    _run(checks, "min_d_search_is_minimal", search_minimal)
    _run(checks, "min_d0_search_is_minimal", rigsuk_minimal)
    _run(checks, "admissibility_examples", admissible_examples)
    return TheoremReport(theorem="nl", checks=tuple(checks))


def _suite_hilb2() -> TheoremReport:
    rng = random.Random(_SEED + 4)
    checks: list[Check] = []

    def integrality_sweep():
        count = 0
        for r0 in range(1, 9):
            i = hilb2.governing_divisibility(r0)
            for e in range(1, 401):
                if not (hilb2.divisibility_type(e, i) and hilb2.econ_check(r0, e)):
                    continue
                for sign in ("+", "-"):
                    m0, s0 = hilb2.m0_s0(r0, e, sign)
                    if (m0 + 1) != s0 * r0:
                        return False, {"r0": r0, "e": e, "sign": sign}
                    hilb2.h_polarization(r0, i, m0, sign)
                count += 1
        return count > 0, {"cases": count}

    def f2_closed_form():
        for r0 in range(1, 31):
            inv = hilb2.f2_invariants(r0)
            if inv.rank != r0 * r0 or 12 * inv.delta_coeff != inv.rank * (inv.rank - 1):
                return False, {"r0": r0}
            if 8 * inv.a_mod != 5 * r0**6 * (inv.rank - 1):
                return False, {"r0": r0}
            if 4 * inv.a_mod != inv.rank * inv.rank * inv.d_mod:
                return False, {"r0": r0}
        return True

    def rosetta_sweep():
        cases = 0
        for r0 in range(1, 6):
            i = hilb2.governing_divisibility(r0)
            for e in range(1, 200):
                if not (hilb2.divisibility_type(e, i) and hilb2.econ_check(r0, e)):
                    continue
                for d0 in (1, 7, 211):
                    rep = hilb2.rosetta_check(r0, i, e, d0)
                    if not rep.verdict:
                        return False, {"r0": r0, "e": e, "d0": d0}
                    cases += 1
                break
        return cases > 0, {"cases": cases}

    def mckay_generating_function():
        for _ in range(50):
            a = [rng.randint(0, 6) for _ in range(3)]
            got = hilb2.mckay_ext_dims(a).dims
            # coefficient k of (P(t)^2 + P(t^2)) / 2 with P supported in 0..2
            want = []
            for k in range(5):
                tot = sum(
                    a[p] * a[k - p] for p in range(3) if 0 <= k - p <= 2
                )
                if k % 2 == 0:
                    tot += a[k // 2]
                if tot % 2:
                    return False, {"a": a, "k": k}
                want.append(tot // 2)
            if got != tuple(want):
                return False, {"a": a, "got": got, "want": want}
        return True

    def mckay_vanishing():
        if not hilb2.mckay_ext_dims((1, 0, 1)).end0_vanishing:
            return False, {"case": "rigid simple"}
        for a in ((1, 1, 1), (1, 0, 0), (2, 0, 2)):
            if hilb2.mckay_ext_dims(a).end0_vanishing:
                return False, {"case": a}
        return True

    def potenza_bruteforce():
        for _ in range(60):
            n = rng.randint(1, 3)
            d1 = rng.randint(1, 4)
            d2 = d1 * rng.randint(1, 4)
            r = rng.randint(1, 30)
            a = rng.randint(1, 12)
            got = hilb2.potenza_solve(n, d1, d2, r, a)
            want = []
            for r0 in range(1, r * d1 * d2 + 2):
                g1, g2 = gcd(r0, d1), gcd(r0, d2)
                if r0**n != r * g1 * g2:
                    continue
                if r0 ** (n - 1) % (g1 * g2):
                    continue
                if gcd(r, a) != r0 ** (n - 1) // (g1 * g2):
                    continue
                want.append(r0)
            if got != want:
                return False, {"input": (n, d1, d2, r, a), "got": got, "want": want}
        return True

    def resemibis_known():
        cases = (
            (("K3^[2]", 2, 20), [1, 4, 9, 16]),
            (("Kum_2", 2, 10), [1, 3, 4, 9]),
            (("K3^[3]", 30), [1, 8, 27]),
        )
        for args, want in cases:
            if hilb2.resemibis_ranks(*args) != want:
                return False, {"args": args}
        return True

    def restrango_cases():
        ok = hilb2.restrango_check("K3^[2]", 4, 2)
        ok = ok and not hilb2.restrango_check("K3^[2]", 8, 2)
        ok = ok and hilb2.restrango_check("Kum_2", 3, 1)
        ok = ok and hilb2.restrango_check("Kum_2", 12, 2)
        return ok and not hilb2.restrango_check("Kum_2", 8, 2)

    def governing_parity():
        for r0 in range(1, 12):
            if hilb2.governing_divisibility(r0) % 2 != r0 % 2:
                return False, {"r0": r0}
        return True

    _run(checks, "twist_numerics_integral_sweep", integrality_sweep)
    _run(checks, "exterior_square_invariants_closed_form", f2_closed_form)
    _run(checks, "ambient_dictionary_sweep", rosetta_sweep)
    _run(checks, "induced_ext_generating_function", mckay_generating_function)
    _run(checks, "induced_ext_vanishing_pattern", mckay_vanishing)
    _run(checks, "rank_equation_brute_force", potenza_bruteforce)
    _run(checks, "power_rank_lists", resemibis_known)
    _run(checks, "descent_rank_constraint", restrango_cases)
    _run(checks, "parity_of_governing_divisibility", governing_parity)
    return TheoremReport(theorem="hilb2", checks=tuple(checks))


def _suite_pipelines() -> TheoremReport:
    rng = random.Random(_SEED + 5)
    checks: list[Check] = []

    def deterministic():
        from .jsonio import canonical_json

        sc = pipelines.scenario_from_json(
            {
                "pipeline": "vbk3ell",
                "lattices": {"ns": {"e": 4, "d": 1}},
                "vectors": {"v": {"r": 2, "l": [1, 0], "s": 0}},
            }
        )
        a = canonical_json(pipelines.run_scenario(sc).to_json_dict())
        b = canonical_json(pipelines.run_scenario(sc).to_json_dict())
        return a == b and b == canonical_json(pipelines.run_scenario(sc).to_json_dict())

    def example_verdicts():
        ns = walls.EllipticNS(4, 1)
        v = MukaiVector(2, vec((1, 0)), 0)
        rep = pipelines.vbk3ell_pipeline(ns, v)
        if not rep.verdict or rep.data["a"] != 12 or rep.data["expected_dim"] != 6:
            return False, {"stage": "vbk3ell"}
        if rep.data["suitability"]["suitable"]:
            return False, {"stage": "vbk3ell suitability"}
        bad = pipelines.casoprim_pipeline(ns, v, vec((1, 4)))
        if bad.verdict or not any(
            c.name == "polarization_generic" and not c.passed for c in bad.checks
        ):
            return False, {"stage": "casoprim"}
        good = pipelines.casoprim_pipeline(ns, v, vec((1, 5)))
        return good.verdict, {"stage": "casoprim generic"}

    def multacca_squares():
        lat = lattice(((4, 1), (1, 0)))
        from .mukai import mukai_square as msq

        for _ in range(100):
            v = MukaiVector(
                rng.randint(1, 4),
                vec((rng.randint(-4, 4), rng.randint(-4, 4))),
                rng.randint(-4, 4),
            )
            out = pipelines.multacca_normalize(lat, v, vec((1, 0)), rng.randint(-3, 3))
            if msq(lat, out.vector) != msq(lat, v):
                return False, {}
            if out.ray is not None and out.vector.l != out.x * out.ray:
                return False, {}
        return True

    _run(checks, "reports_are_deterministic", deterministic)
    _run(checks, "pipeline_example_verdicts", example_verdicts)
    _run(checks, "twist_normalization_squares", multacca_squares)
    return TheoremReport(theorem="pipelines", checks=tuple(checks))


SUITES = {
    "fujiki": _suite_fujiki,
    "hilb2": _suite_hilb2,
    "lattice": _suite_lattice,
    "mukai": _suite_mukai,
    "nl": _suite_nl,
    "pipelines": _suite_pipelines,
    "reduction": _suite_reduction,
    "walls": _suite_walls,
}


def verify_all(name_filter: str | None = None) -> VerifySummary:
    """Run every registered suite (or those whose name contains the filter)."""
    names = sorted(SUITES)
    if name_filter is not None:
        names = [n for n in names if name_filter in n]
        if not names:
            raise InputError(f"no verification suite matches {name_filter!r}")
    return VerifySummary(suites=tuple(SUITES[n]() for n in names))
