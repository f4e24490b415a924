"""Executable identity checks for the curve ideals, plus exploration mode."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .curve import Curve, CurveError, CurveParams
from .groebner import QQ, Field, PolyIdeal, toric_ideal
from .monomial import INFINITE, MonomialIdeal, quotient_dim
from .orders import WeightedGradedLex
from .poly import Polynomial

SUITES = ("membership", "colon", "dimension", "chain", "rees", "lengths", "symbolic", "explore")


@dataclass
class CheckResult:
    name: str
    q: int | None
    m: int | None
    n: int | None
    k: int | None
    expected: Any
    computed: Any
    verdict: str
    ms: float
    formula: str = field(default="", compare=False)

    @property
    def suite(self) -> str:
        return self.name.split(".", 1)[0]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        d = asdict(self)
        del d["formula"]
        return d


def _jsonable(v):
    if v == INFINITE:
        return "inf"
    return v


def run_check(name, params, n, expected, compute: Callable[[], Any], k=None, formula="") -> CheckResult:
    start = time.perf_counter()
    computed = compute()
    ms = (time.perf_counter() - start) * 1000.0
    expected, computed = _jsonable(expected), _jsonable(computed)
    q = params.q if params is not None else None
    m = params.m if params is not None else None
    return CheckResult(
        name, q, m, n, k, expected, computed,
        "pass" if expected == computed else "fail", round(ms, 3), formula,
    )


def ideal_equal(lhs: PolyIdeal, rhs: PolyIdeal):
    """True, or a diagnostic string carrying both reduced bases."""
    if lhs == rhs:
        return True
    rhs = rhs.with_order(lhs.order)
    return f"lhs=[{', '.join(lhs.to_strs())}] rhs=[{', '.join(rhs.to_strs())}]"


def monomial_equal(lhs: MonomialIdeal, rhs: MonomialIdeal):
    return True if lhs == rhs else f"lhs={lhs} rhs={rhs}"


def binom(n: int, k: int) -> int:
    return math.comb(n, k) if n >= 0 else 0


def length_formula(q: int, n: int) -> int:
    return (2 * q + 1) * binom(n + 1, 2)


# suites -------------------------------------------------------------------


def check_membership(curve: Curve, nmax_gb: int = 4) -> list[CheckResult]:
    P = curve.params
    q = P.q
    x1, f1, f2 = curve.x1, curve.f1, curve.f2
    out = [
        run_check("membership.x3f2_identity", P, None, True,
                  lambda: curve.identity_residual().is_zero,
                  formula="x3*f2 = -g1^2 + x1^(m+q-1)*g2*g3"),
        run_check("membership.minors_are_toric", P, None, True,
                  lambda: ideal_equal(curve.prime, toric_ideal(*P.weights, curve.field).with_order(curve.order))),
        run_check("membership.multiplicity", P, None, 2 * q + 1,
                  lambda: (curve.prime + x1).length(), formula="l(T/(p + (x1))) = 2q+1"),
        run_check("membership.huneke_length", P, None, 2 * (2 * q + 1),
                  lambda: curve.ideal([x1, f1, f2]).length(), formula="l(T/(x1, f1, f2)) = 2(2q+1)"),
        run_check("membership.f2_in_symbolic_square", P, 2, True,
                  lambda: f2 in curve.symbolic_power(2)),
        run_check("membership.f2_not_in_square", P, 2, True,
                  lambda: f2 not in curve.prime_power(2)),
    ]
    for n in range(1, nmax_gb + 1):
        out.append(run_check("membership.calI_in_symbolic", P, n, True,
                             lambda n=n: curve.calI(n) <= curve.symbolic_power(n)))
        out.append(run_check("membership.calI_x1_artinian", P, n, True,
                             lambda n=n: (curve.calI(n) + x1).length() != INFINITE))
    return out


def check_colons(curve: Curve, nmax: int = 10) -> list[CheckResult]:
    P = curve.params
    q = P.q
    x2sq = (2, 0)
    x3pow = (0, 2 * q + 1)
    out = []
    for n in range(2, nmax + 1):
        out.append(run_check("colon.colon_x2sq", P, n, True,
                             lambda n=n: monomial_equal(curve.I(n).colon(x2sq), curve.I(n - 1)),
                             formula="(I_n : x2^2) = I_(n-1)"))
    for n in range(1, nmax - 1):
        def colon_x3(n=n):
            lhs = (curve.I(n + 2) + curve.I(n + 1) * x2sq).colon(x3pow)
            rhs = curve.I(n) + curve.I(n - 1) * x2sq
            return monomial_equal(lhs, rhs)
        out.append(run_check("colon.colon_x3pow", P, n, True, colon_x3,
                             formula="((I_(n+2) + x2^2 I_(n+1)) : x3^(2q+1)) = I_n + x2^2 I_(n-1)"))
    x2_ideal = MonomialIdeal([x2sq])
    x2x3_ideal = MonomialIdeal([x2sq, x3pow])
    for n in range(1, nmax + 1):
        L = curve.length_I
        out.append(run_check("colon.length_plus_x2sq", P, n, L(n) - L(n - 1),
                             lambda n=n: (curve.I(n) + x2_ideal).length(), k=1,
                             formula="l(I_n) - l(I_(n-1))"))
        out.append(run_check("colon.length_plus_x2sq_x3pow", P, n,
                             L(n) - L(n - 1) - L(n - 2) + L(n - 3),
                             lambda n=n: (curve.I(n) + x2x3_ideal).length(), k=2,
                             formula="l(I_n) - l(I_(n-1)) - l(I_(n-2)) + l(I_(n-3))"))
    return out


def check_dimension(curve: Curve, nmax: int = 10) -> list[CheckResult]:
    P = curve.params
    x3q = (0, P.q)
    out = []
    for n in range(1, nmax + 1):
        out.append(run_check("dimension.colon_x3q_subset", P, n, True,
                             lambda n=n: curve.I(n).colon(x3q) <= curve.I(n - 1),
                             formula="(I_n : x3^q) in I_(n-1)"))
        out.append(run_check("dimension.quotient_dim", P, n, n,
                             lambda n=n: quotient_dim(curve.I(n - 1), curve.I(n).colon(x3q)),
                             formula="dim I_(n-1)/(I_n : x3^q) = n"))

        def parity(n=n):
            target = curve.I(n - 1)
            matches = [f for f in ("odd", "even") if curve.parity_form(n, f) == target]
            printed = Curve.printed_parity(n)
            if printed in matches:
                return printed
            return "+".join(matches) or "none"
        out.append(run_check("dimension.parity_split", P, n, Curve.printed_parity(n), parity,
                             formula="branch of the I_(n-1) decomposition that holds"))
    return out


def check_length_chain(curve: Curve, nmax: int = 10, nmax_gb: int = 4) -> list[CheckResult]:
    P = curve.params
    q = P.q
    x1, f1, f2 = curve.x1, curve.f1, curve.f2
    x2_ideal = MonomialIdeal([(2, 0)])
    x2x3_ideal = MonomialIdeal([(2, 0), (0, 2 * q + 1)])
    out = []
    for n in range(1, nmax + 1):
        out.append(run_check("chain.length_formula", P, n, length_formula(q, n),
                             lambda n=n: curve.I(n).length(), formula="(2q+1)*C(n+1,2)"))
    for n in range(1, nmax_gb + 1):
        lI = curve.length_I(n)
        out += [
            run_check("chain.shadow", P, n, True,
                      lambda n=n: monomial_equal(curve.shadow(curve.calI(n)), curve.I(n)),
                      formula="calI_n mod x1 = I_n"),
            run_check("chain.length_calI_x1", P, n, lI,
                      lambda n=n: (curve.calI(n) + x1).length(), formula="l(T/(calI_n, x1)) = l(T'/I_n)"),
            run_check("chain.length_symbolic_x1", P, n, lI,
                      lambda n=n: (curve.symbolic_power(n) + x1).length(),
                      formula="l(T/(p^(n), x1)) = l(T'/I_n)"),
            run_check("chain.length_calI_f", P, n, (curve.I(n) + x2_ideal).length(),
                      lambda n=n: (curve.calI(n) + [x1, f1]).length(), k=1,
                      formula="l(T/(calI_n, x1, f1)) = l(T'/(I_n + (x2^2)))"),
            run_check("chain.length_symbolic_f", P, n, (curve.I(n) + x2_ideal).length(),
                      lambda n=n: (curve.symbolic_power(n) + [x1, f1]).length(), k=1,
                      formula="l(T/(p^(n), x1, f1)) = l(T'/(I_n + (x2^2)))"),
            run_check("chain.length_calI_f", P, n, (curve.I(n) + x2x3_ideal).length(),
                      lambda n=n: (curve.calI(n) + [x1, f1, f2]).length(), k=2,
                      formula="l(T/(calI_n, x1, f1, f2)) = l(T'/(I_n + (x2^2, x3^(2q+1))))"),
            run_check("chain.length_symbolic_f", P, n, (curve.I(n) + x2x3_ideal).length(),
                      lambda n=n: (curve.symbolic_power(n) + [x1, f1, f2]).length(), k=2,
                      formula="l(T/(p^(n), x1, f1, f2)) = l(T'/(I_n + (x2^2, x3^(2q+1))))"),
            run_check("chain.symbolic_equals_calI", P, n, True,
                      lambda n=n: ideal_equal(curve.symbolic_power(n), curve.calI(n)),
                      formula="(p^n : x1^inf) = calI_n"),
            run_check("chain.saturation_x3_agrees", P, n, True,
                      lambda n=n: ideal_equal(curve.symbolic_power(n), curve.prime_power(n).saturate(curve.x3)[0]),
                      formula="(p^n : x1^inf) = (p^n : x3^inf)"),
            run_check("chain.symbolic_equals_rees_sum", P, n, True,
                      lambda n=n: ideal_equal(curve.symbolic_power(n), curve.rees_sum(n)),
                      formula="p^(n) = sum p^a1 (p^(2))^a2"),
        ]
        if n >= 2:
            out.append(run_check("chain.symbolic_strict", P, n, True,
                                 lambda n=n: curve.prime_power(n) != curve.symbolic_power(n),
                                 formula="p^n != p^(n)"))
    return out


def check_rees(curve: Curve, nmax_gb: int = 4) -> list[CheckResult]:
    P = curve.params
    x1, f1, f2 = curve.x1, curve.f1, curve.f2
    out = []
    for n in range(1, nmax_gb + 1):
        out.append(run_check(
            "rees.colon_f1", P, n, True,
            lambda n=n: ideal_equal((curve.symbolic_power(n + 1) + x1).colon(f1),
                                    curve.symbolic_power(n) + x1),
            formula="((p^(n+1), x1) : f1) = (p^(n), x1)"))
    for n in range(2, nmax_gb + 1):
        out.append(run_check(
            "rees.colon_f2", P, n, True,
            lambda n=n: ideal_equal((curve.symbolic_power(n + 1) + [x1, f1]).colon(f2),
                                    curve.symbolic_power(n - 1) + [x1, f1]),
            formula="((p^(n+1), x1, f1) : f2) = (p^(n-1), x1, f1)"))
    for n in range(1, nmax_gb + 1):
        out.append(run_check(
            "rees.rees_generation", P, n, True,
            lambda n=n: ideal_equal(curve.symbolic_power(n), curve.calI(n)),
            formula="p^(n) = sum p^a1 f2^a2"))
    return out


def run_all(params: CurveParams, nmax: int = 10, nmax_gb: int = 4, field: Field = QQ) -> list[CheckResult]:
    curve = Curve(params, field)
    return (
        check_membership(curve, nmax_gb)
        + check_colons(curve, nmax)
        + check_dimension(curve, nmax)
        + check_length_chain(curve, nmax, nmax_gb)
        + check_rees(curve, nmax_gb)
    )


# exploration ----------------------------------------------------------------


def validate_curve(a: int, b: int, c: int) -> None:
    if min(a, b, c) < 1:
        raise CurveError("curve exponents must be positive")
    if len({a, b, c}) != 3:
        raise CurveError("curve exponents must be distinct")
    for u, v in ((a, b), (a, c), (b, c)):
        if math.gcd(u, v) != 1:
            raise CurveError(f"gcd({u}, {v}) = {math.gcd(u, v)}; exponents must be pairwise coprime")


def explore_curve(a: int, b: int, c: int, nmax: int = 3, field: Field = QQ):
    """Data on the symbolic powers of the curve (t^a, t^b, t^c).

    Returns ``(checks, data)``.  No conclusion about finite generation is drawn.
    """
    validate_curve(a, b, c)
    weights = (a, b, c)
    order = WeightedGradedLex(weights)
    prime = toric_ideal(a, b, c, field).with_order(order)
    x1 = Polynomial.variable(0, 3)
    x3 = Polynomial.variable(2, 3)
    prime_gens = prime.minimal_generators(weights)
    data: dict = {
        "curve": [a, b, c],
        "prime": [g.to_str(order) for g in prime_gens],
        "complete_intersection": len(prime_gens) == 2,
        "powers": [],
    }
    checks = [run_check("explore.multiplicity", None, None, a,
                        lambda: (prime + x1).length(), formula="l(T/(p, x1)) = a")]
    power = PolyIdeal.unit(3, order, field)
    symbolic = {}
    for n in range(1, nmax + 1):
        power = power * prime
        sat, steps = power.saturate(x1)
        symbolic[n] = (power, sat)
        gens = sat.minimal_generators(weights)
        data["powers"].append({
            "n": n,
            "symbolic_generators": len(gens),
            "power_generators": len(power.minimal_generators(weights)),
            "equals_ordinary_power": sat == power,
            "length_x1": _jsonable((sat + x1).length()),
            "saturation_steps": steps,
        })
        checks.append(run_check("explore.power_in_symbolic", None, n, True, lambda p=power, s=sat: p <= s))
        checks.append(run_check("explore.saturation_x3_agrees", None, n, True,
                                lambda p=power, s=sat: ideal_equal(s, p.saturate(x3)[0])))

    # certificate search over generator pairs
    target = 2 * (prime + x1).length()
    cert: dict = {"target": _jsonable(target), "tested": 0, "found": []}
    if nmax >= 2:
        square, sym2 = symbolic[2]
        vs = [v for v in sym2.minimal_generators(weights) if v not in square] or list(sym2.basis)
        for u in prime_gens:
            for v in vs:
                cert["tested"] += 1
                ell = PolyIdeal([x1, u, v], order, field).length()
                if ell == target:
                    cert["found"].append({"u": u.to_str(order), "v": v.to_str(order), "length": ell})
    data["certificate"] = cert
    return checks, data
