"""End-to-end verification of the BSO(3) / BG identities, as a structured report.

Every check is bounded (degrees, Milnor indices) and runs against an algebra
registry, so the same checks can be replayed on deliberately corrupted
presentations.  Negative controls are ordinary report entries whose ``pass``
means "the corruption was detected".
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional

from . import milnor
from .builtins import REL_D5, REL_D9, builtin_homs, builtin_presentations
from .checks import CheckResult
from .errors import BoundExceeded, SqAlgError
from .groebner import (
    GREVLEX,
    MonomialOrder,
    buchberger,
    mult_injective,
    hom_rank_check,
    poincare_check,
    quotient_basis,
    regular_sequence_check,
    span_check,
)
from .poly import Poly
from .series import series_coefficients
from .steenrod import AlgebraPresentation, check_instability, check_sq1_sq1, check_sq_equivariance

N_SERIES = "(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)"
X13 = "w2'^3*w2''^2*w3' + w2'*w2''^4*w3'"

# claim id -> (statement, formula checked), registry order = report order
CLAIMS: Dict[str, tuple] = {
    "Wu-table": ("Wu formula values on w2, w3 and the first Milnor operations",
                 "Sq^1 w2 = w3, Sq^2 w3 = w2*w3, Q_1 w2 = w2*w3, Q_0 Q_1 w2 = w3^2"),
    "Presentations": ("built-in presentations are consistent and the factor inclusions commute with squares",
                      "Sq^0 g = g, Sq^deg(g) g = g^2, Sq^1 Sq^1 = 0"),
    "Bi-equivariance": ("restriction BSO(3) -> B(Z/2)^2 commutes with every Sq^i",
                        "Bi(w2) = s1^2 + s1*s2 + s2^2, Bi(w3) = s1^2*s2 + s1*s2^2"),
    "Q-naturality": ("Milnor operations commute with the restriction", "Bi(Q_m x) = Q_m Bi(x)"),
    "D-vanishing": ("D_m vanishes on B(Z/2)^2",
                    "Q_m x + Bi(w2)^(2^(m-1)) Q_(m-1) x + Bi(w3)^(2^(m-1)) Q_(m-2) x = 0"),
    "D-vanishing-control": ("a corrupted restriction map breaks D_m = 0", "D_m x != 0"),
    "Q-recurrence": ("Q_m through Q_1 and Q_0 via the product matrix A_m", "Q_m x = f_m1 Q_1 x + f_m0 Q_0 x"),
    "QQ1-factorization": ("Q_m Q_1 w2 factors through w3^4", "Q_m Q_1 w2 = g_m w3^4, g_m = f_m0 / w3^2"),
    "d3-identity": ("Sq^1 of the diagonal w2 class", "Sq^1(w2' + w2'' + w2''') = w3' + w3'' + w3'''"),
    "d5-identity": ("Sq^2 of the diagonal w3 class, modulo the diagonal classes",
                    "Sq^2(w3' + w3'' + w3''') = w2'*w3'' + w2''*w3'"),
    "d9-identity": ("Sq^4 of the weight-1 relation",
                    "Sq^4(w2'*w3'' + w2''*w3') = w2'*w2''*(w2'*w3'' + w2''*w3') + w3'*w3''^2 + w3''*w3'^2"),
    "d17-identity": ("Sq^8 of the weight-3 relation vanishes in N",
                     "Sq^8(w3'*w3''^2 + w3'^2*w3'') = w2'*w3'*w3''^4 + w2''*w3''*w3'^4 = 0"),
    "N-low-weight-bases": ("monomial bases of N in weights 0, 1, 2",
                           "N_1 = span{w2'^m*w3', w2'^m*w2''^n*w3''}"),
    "N-rewriting": ("mixed w3 monomials collapse in N",
                    "w2'^m*w2''^n*w3'^i*w3''^(k-i) = w2''^(m+n)*w3'*w3''^(k-1), 3 <= k"),
    "N-high-weight-bases": ("monomial bases of N in weights k >= 3",
                            "N_k = span{w2'^m*w3'^k, w2''^n*w3'*w3''^(k-1), w2''^n*w3''^k}"),
    "N-poincare-series": ("Poincare series of N", N_SERIES),
    "regular-sequence": ("the two relations of N form a regular sequence",
                         "w2'*w3'' + w2''*w3', w3'*w3''^2 + w3''*w3'^2"),
    "phi-bar-injective": ("phi induces an injective weight-preserving map on M",
                          "phi(w3'*w3''^2 + w3''*w3'^2) = t1^3*w2'*w2''*(w2' + w2'')"),
    "M-injectivity": ("the weight-3 relation is a non-zero-divisor on M",
                      "ker(x -> (w3'*w3''^2 + w3''*w3'^2) x) = 0"),
    "N-Q-stability": ("the relation ideal of N is stable under Q_m", "Q_m(I) in I"),
    "x13-annihilated": ("a nonzero degree-13 class of N killed by every Q_m, m >= 1",
                        "x13 = Bpi1(Q_1 w2)*w2''^2*(w2'^2 + w2''^2), Q_m x13 = 0"),
    "x13-control": ("without the weight-3 relation Q_2 x13 survives", "Q_2 x13 != 0 in M"),
    "Sq-table-control": ("a corrupted square table is caught at the corrupted generator", "Sq^1 w2 := 0"),
}


@dataclass
class ClaimEntry:
    id: str
    status: str
    params: Dict[str, Any]
    witness: str
    ms: float = 0.0
    statement: str = ""
    formula: str = ""
    bound_abort: bool = False

    def __post_init__(self):
        if not self.statement and self.id in CLAIMS:
            self.statement, self.formula = CLAIMS[self.id]


@dataclass
class VerifyConfig:
    """Bounds for every check; ``max_degree`` caps all degree bounds at once (0 skips them)."""

    max_degree: Optional[int] = None
    max_m: int = 12
    factorization_max_m: int = 10
    d_vanishing_max_m: int = 6
    d_vanishing_degree: int = 24
    recurrence_max_m: int = 6
    recurrence_degree: int = 20
    series_degree: int = 40
    span_degree: int = 40
    regular_degree: int = 30
    phi_degree: int = 30
    injectivity_degree: int = 30
    stability_degree: int = 20
    stability_max_m: int = 4
    equivariance_degree: int = 40
    sq1_degree: int = 30
    naturality_max_m: int = 5
    naturality_degree: int = 20
    order: MonomialOrder = GREVLEX

    def bound(self, value: int) -> int:
        return value if self.max_degree is None else min(value, self.max_degree)


@dataclass
class VerificationReport:
    entries: List[ClaimEntry] = field(default_factory=list)

    @property
    def status(self) -> str:
        if any(e.status == "fail" for e in self.entries):
            return "fail"
        if any(e.status == "skipped" for e in self.entries):
            return "skipped"
        return "pass"

    @property
    def exit_code(self) -> int:
        if any(e.bound_abort for e in self.entries):
            return 3
        return {"pass": 0, "fail": 1, "skipped": 4}[self.status]

    def __getitem__(self, claim_id: str) -> ClaimEntry:
        for e in self.entries:
            if e.id == claim_id:
                return e
        raise KeyError(claim_id)

    def ids(self) -> List[str]:
        return [e.id for e in self.entries]

    def to_dict(self, timings: bool = True) -> dict:
        claims = []
        for e in self.entries:
            # wire names: statement -> "paper_ref", formula -> "quote"
            d = {"id": e.id, "paper_ref": e.statement, "quote": e.formula, "params": e.params,
                 "status": e.status, "witness": e.witness}
            if timings:
                d["ms"] = e.ms
            claims.append(d)
        return {"status": self.status, "claims": claims}

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True)

    def table(self) -> str:
        width = max((len(e.id) for e in self.entries), default=10)
        lines = [f"{'claim'.ljust(width)}  status   ms      witness"]
        for e in self.entries:
            wit = e.witness if len(e.witness) <= 90 else e.witness[:87] + "..."
            lines.append(f"{e.id.ljust(width)}  {e.status.ljust(7)}  {e.ms:7.1f}  {wit}")
        lines.append(f"overall: {self.status}")
        return "\n".join(lines)


class Context:
    """Algebra registry plus derived homomorphisms and Groebner bases."""

    def __init__(self, algebras: Optional[Mapping[str, AlgebraPresentation]] = None,
                 order: MonomialOrder = GREVLEX):
        self.algebras = dict(algebras) if algebras is not None else builtin_presentations()
        self.homs = builtin_homs(self.algebras, validate=False)
        self.order = order

    def __getitem__(self, name: str) -> AlgebraPresentation:
        return self.algebras[name]

    def gb(self, name: str):
        return quotient_basis(self.algebras[name], self.order)


def _entry(claim_id: str, params: Dict[str, Any], fn: Callable[[], CheckResult],
           skip: bool = False) -> ClaimEntry:
    if skip:
        return ClaimEntry(claim_id, "skipped", params, "warning: bounds leave nothing to check")
    t0 = time.perf_counter()
    abort = False
    try:
        res = fn()
        status = "pass" if res.ok else "fail"
        witness = res.data.get("witness", "") if res.ok else (res.failure or "failed")
    except BoundExceeded as exc:
        status, witness, abort = "fail", f"bound guard: {exc}", True
    except (SqAlgError, AssertionError, KeyError) as exc:
        status, witness = "fail", f"{type(exc).__name__}: {exc}"
    ms = (time.perf_counter() - t0) * 1000
    return ClaimEntry(claim_id, status, params, str(witness), round(ms, 1), bound_abort=abort)


def _expect(checks: List[tuple]) -> CheckResult:
    """``checks`` are (label, computed, expected); the first mismatch fails."""
    for n, (label, got, want) in enumerate(checks, 1):
        if got != want:
            return CheckResult(False, n, f"{label}: computed {got}, expected {want}")
    return CheckResult(True, len(checks))


# individual claims


def verify_wu_table(ctx: Optional[Context] = None) -> ClaimEntry:
    ctx = ctx or Context()

    def run():
        a = ctx["BSO3"]
        w2, w3 = a.gen("w2"), a.gen("w3")
        checks = [
            ("Sq^1 w2", a.sq(1, w2), w3), ("Sq^2 w2", a.sq(2, w2), w2 ** 2),
            ("Sq^1 w3", a.sq(1, w3), a.ring.zero()), ("Sq^2 w3", a.sq(2, w3), w2 * w3),
        ]
        for qf in (milnor.q_recursive, milnor.q_derivation):
            tag = qf.__name__
            checks += [
                (f"Q_0 w2 [{tag}]", qf(0, w2, a), w3),
                (f"Q_1 w2 [{tag}]", qf(1, w2, a), w2 * w3),
                (f"Q_0 Q_1 w2 [{tag}]", qf(0, qf(1, w2, a), a), w3 ** 2),
                (f"Q_0 w3 [{tag}]", qf(0, w3, a), a.ring.zero()),
                (f"Q_1 w3 [{tag}]", qf(1, w3, a), w3 ** 2),
                (f"Q_0 Q_1 w3 [{tag}]", qf(0, qf(1, w3, a), a), a.ring.zero()),
            ]
        res = _expect(checks)
        res.data["witness"] = "Q_1 w2 = w2*w3, Q_0 Q_1 w2 = w3^2, Q_1 w3 = w3^2"
        return res

    return _entry("Wu-table", {}, run)


def verify_presentations(ctx: Optional[Context] = None, config: Optional[VerifyConfig] = None) -> ClaimEntry:
    ctx, config = ctx or Context(), config or VerifyConfig()
    deg = config.bound(config.sq1_degree)
    fdeg = config.bound(12)

    def run():
        checked = 0
        for name, alg in ctx.algebras.items():
            bad = alg.problems()
            if bad:
                return CheckResult(False, checked, f"{name}: {bad[0]}")
            for res in (check_instability(alg), check_sq1_sq1(alg, deg)):
                checked += res.checked
                if not res.ok:
                    return CheckResult(False, checked, f"{name}: {res.failure}")
        for hname, h in ctx.homs.items():
            bad = h.problems()
            if bad:
                return CheckResult(False, checked, f"{hname}: {bad[0]}")
            if hname.startswith("Bpi"):
                res = check_sq_equivariance(h, fdeg)
            elif hname == "phi":
                res = check_sq_equivariance(h, fdeg, ops=[1])
            else:
                continue
            checked += res.checked
            if not res.ok:
                return CheckResult(False, checked, f"{hname}: {res.failure}")
        return CheckResult(True, checked, data={"witness": f"{len(ctx.algebras)} algebras, {checked} checks"})

    return _entry("Presentations", {"sq1_degree": deg, "factor_degree": fdeg}, run)


def verify_bi_equivariance(ctx: Optional[Context] = None, config: Optional[VerifyConfig] = None) -> ClaimEntry:
    ctx, config = ctx or Context(), config or VerifyConfig()
    deg = config.bound(config.equivariance_degree)

    def run():
        res = check_sq_equivariance(ctx.homs["Bi"], deg)
        res.data["witness"] = f"{res.checked} squares compared"
        return res

    return _entry("Bi-equivariance", {"max_degree": deg}, run)


def verify_q_naturality(ctx: Optional[Context] = None, config: Optional[VerifyConfig] = None) -> ClaimEntry:
    ctx, config = ctx or Context(), config or VerifyConfig()
    deg, mm = config.bound(config.naturality_degree), config.naturality_max_m
    bi, a, b = ctx.homs["Bi"], ctx["BSO3"], ctx["BZ2xBZ2"]

    def run():
        checked = 0
        for d in range(1, deg + 1):
            for mono in a.ring.monomials(d):
                x = a.ring.monomial(mono)
                bx = bi(x)
                for m in range(mm + 1):
                    lhs = bi(milnor.q_derivation(m, x, a))
                    rhs = milnor.q_derivation(m, bx, b)
                    checked += 1
                    if lhs != rhs:
                        return CheckResult(False, checked, f"Bi(Q_{m} {x}) != Q_{m} Bi({x})")
        return CheckResult(True, checked, data={"witness": f"{checked} pairs (m, x) compared"})

    return _entry("Q-naturality", {"max_m": mm, "max_degree": deg}, run, skip=deg < 1)


def _d_all_monomials(ctx: Context, max_m: int, deg: int, restriction) -> CheckResult:
    b = ctx["BZ2xBZ2"]
    checked = 0
    for m in range(2, max_m + 1):
        for d in range(deg + 1):
            for mono in b.ring.monomials(d):
                x = b.ring.monomial(mono)
                y = milnor.d_operator(m, x, b, restriction)
                checked += 1
                if y:
                    return CheckResult(False, checked, f"D_{m}({x}) = {y}")
    return CheckResult(True, checked)


def verify_d_vanishing(max_m: int = 6, max_degree: int = 24, ctx: Optional[Context] = None) -> ClaimEntry:
    ctx = ctx or Context()

    def run():
        b = ctx["BZ2xBZ2"]
        bi = ctx.homs["Bi"]
        c2, c3 = bi(ctx["BSO3"].gen("w2")), bi(ctx["BSO3"].gen("w3"))
        # generator replay of the proof: Q_m s = s^(2^(m+1)) and the 2^(m-1)-th power factorization
        for s in (b.gen("s1"), b.gen("s2")):
            core = s ** 4 + c2 * s ** 2 + c3 * s
            if core:
                return CheckResult(False, 0, f"s^4 + Bi(w2) s^2 + Bi(w3) s = {core} for s = {s}")
            for m in range(2, max_m + 1):
                h = 1 << (m - 1)
                if milnor.q_derivation(m, s, b) != s ** (1 << (m + 1)):
                    return CheckResult(False, 0, f"Q_{m} {s} != {s}^{1 << (m + 1)}")
                expanded = s ** (4 * h) + c2 ** h * s ** (2 * h) + c3 ** h * s ** h
                if expanded != core ** h or milnor.d_operator(m, s, b, bi):
                    return CheckResult(False, 0, f"D_{m} {s} factorization fails")
        res = _d_all_monomials(ctx, max_m, max_degree, bi)
        res.data["witness"] = f"D_m x = 0 on {res.checked} (m, monomial) pairs"
        return res

    return _entry("D-vanishing", {"max_m": max_m, "max_degree": max_degree}, run, skip=max_degree < 1)


def verify_d_vanishing_control(ctx: Optional[Context] = None, max_degree: int = 6) -> ClaimEntry:
    ctx = ctx or Context()

    def run():
        bad = ctx.homs["Bi"].with_image("w2", "s1^2 + s2^2", name="Bi_corrupt")
        res = _d_all_monomials(ctx, 3, max_degree, bad)
        if res.ok:
            return CheckResult(False, res.checked, "corrupted Bi(w2) went undetected")
        return CheckResult(True, res.checked, data={"witness": f"detected: {res.failure}"})

    return _entry("D-vanishing-control", {"mutation": "Bi(w2) := s1^2 + s2^2", "max_degree": max_degree}, run,
                  skip=max_degree < 1)


def verify_q_recurrence(ctx: Optional[Context] = None, config: Optional[VerifyConfig] = None) -> ClaimEntry:
    ctx, config = ctx or Context(), config or VerifyConfig()
    deg, mm = config.bound(config.recurrence_degree), config.recurrence_max_m

    def run():
        a = ctx["BSO3"]
        r = a.ring
        w2, w3 = a.gen("w2"), a.gen("w3")
        checks = [
            ("f_2", milnor.f_polys(2), (w2 ** 2, w3 ** 2)),
            ("f_3", milnor.f_polys(3), (w2 ** 6 + w3 ** 4, w2 ** 4 * w3 ** 2)),
            ("f_4", milnor.f_polys(4), (w2 ** 14 + w2 ** 8 * w3 ** 4 + w2 ** 2 * w3 ** 8,
                                        (w2 ** 12 + w3 ** 8) * w3 ** 2)),
        ]
        for m in range(2, max(mm, 2) + 1):
            mat = milnor.a_matrix(m)
            mod = tuple(Poly(r, frozenset(t for t in e.terms if t[1] < 2)) for e in mat.entries())
            checks.append((f"A_{m} mod w3^2", mod,
                           (w2 ** ((1 << m) - 2), r.zero(), w2 ** ((1 << (m - 1)) - 2), r.zero())))
            if any(not e.only_even_exponents() for e in mat.entries()):
                return CheckResult(False, 0, f"A_{m} has an entry outside GF(2)[w2^2, w3^2]")
        res = _expect(checks)
        if not res.ok:
            return res
        checked = res.checked
        for m in range(2, mm + 1):
            f1, f0 = milnor.f_polys(m)
            for d in range(1, deg + 1):
                for mono in r.monomials(d):
                    x = r.monomial(mono)
                    lhs = milnor.q_derivation(m, x, a)
                    rhs = f1 * milnor.q_derivation(1, x, a) + f0 * milnor.q_derivation(0, x, a)
                    checked += 1
                    if lhs != rhs:
                        return CheckResult(False, checked, f"Q_{m}({x}) = {lhs} but recurrence gives {rhs}")
        return CheckResult(True, checked, data={"witness": f"identity on {checked} cases; f_4 = {milnor.f_polys(4)[0]}"})

    return _entry("Q-recurrence", {"max_m": mm, "max_degree": deg}, run)


def verify_qq1_factorization(max_m: int = 10, ctx: Optional[Context] = None) -> ClaimEntry:
    ctx = ctx or Context()

    def run():
        a = ctx["BSO3"]
        w2, w3 = a.gen("w2"), a.gen("w3")
        checks = [("g_2", milnor.g_poly(2), a.ring.one()), ("g_3", milnor.g_poly(3), w2 ** 4),
                  ("g_4", milnor.g_poly(4), w2 ** 12 + w3 ** 8)]
        q1w2 = milnor.q_derivation(1, w2, a)
        for m in range(2, max_m + 1):
            g = milnor.g_poly(m)
            if not g.only_even_exponents():
                return CheckResult(False, 0, f"g_{m} = {g} is not a polynomial in w2^2, w3^2")
            checks.append((f"Q_{m} Q_1 w2", milnor.q_derivation(m, q1w2, a, max_m=max(max_m, 12)), g * w3 ** 4))
        res = _expect(checks)
        res.data["witness"] = f"g_4 = {milnor.g_poly(4)}; identity for 2 <= m <= {max_m}"
        return res

    return _entry("QQ1-factorization", {"max_m": max_m}, run)


def verify_transgression_chain(ctx: Optional[Context] = None) -> List[ClaimEntry]:
    ctx = ctx or Context()
    cubed, m_alg, n_alg = ctx["BSO3_cubed"], ctx["M"], ctx["N"]

    def d3():
        p = cubed.parse
        got = cubed.sq(1, p("w2' + w2'' + w2'''"))
        res = _expect([("Sq^1(w2'+w2''+w2''')", got, p("w3' + w3'' + w3'''"))])
        res.data["witness"] = str(got)
        return res

    def d5():
        p = cubed.parse
        sq2 = cubed.sq(2, p("w3' + w3'' + w3'''"))
        exact = p("w2'*w3' + w2''*w3'' + w2'''*w3'''")
        order = MonomialOrder("grevlex", ("w2'''", "w3'''", "w2'", "w2''", "w3'", "w3''"))
        gb = buchberger([p("w2' + w2'' + w2'''"), p("w3' + w3'' + w3'''")], order, ring=cubed.ring)
        red = gb.normal_form(sq2)
        res = _expect([("Sq^2(w3'+w3''+w3''')", sq2, exact), ("after eliminating w2''', w3'''", red, p(REL_D5))])
        res.data["witness"] = str(red)
        return res

    def d9():
        p = m_alg.parse
        got = m_alg.sq(4, p(REL_D5))
        want = p("w2'*w2''") * p(REL_D5) + p(REL_D9)
        gb = ctx.gb("M")
        res = _expect([("Sq^4(w2'w3''+w2''w3')", got, want),
                       ("normal form in M", gb.normal_form(got), gb.normal_form(p(REL_D9)))])
        res.data["witness"] = str(got)
        return res

    def d17():
        p = n_alg.parse
        got = n_alg.sq(8, p(REL_D9))
        factored = (p(REL_D5) * p("w3'*w3''^3")
                    + p("w2''*w3'") * p("w3' + w3''") * p("w3'*w3''^2 + w3'^2*w3''"))
        res = _expect([("Sq^8(w3'w3''^2+w3'^2w3'')", got, p("w2'*w3'*w3''^4 + w2''*w3''*w3'^4")),
                       ("factorization", factored, got),
                       ("normal form in N", ctx.gb("N").normal_form(got), n_alg.ring.zero())])
        res.data["witness"] = f"{got} = 0 in N"
        return res

    return [_entry("d3-identity", {}, d3), _entry("d5-identity", {}, d5),
            _entry("d9-identity", {}, d9), _entry("d17-identity", {}, d17)]


def _low_weight_elements(n_alg: AlgebraPresentation, weight: int, degree: int) -> List[Poly]:
    p = n_alg.parse
    tmpl = {
        0: ["w2'^{m}*w2''^{n}"],
        1: ["w2'^{m}*w3'", "w2'^{m}*w2''^{n}*w3''"],
        2: ["w2'^{m}*w3'^2", "w2'^{m}*w2''^{n}*w3'*w3''", "w2''^{n}*w3''^2"],
    }[weight]
    return _instances(p, tmpl, degree)


def _high_weight_elements(n_alg: AlgebraPresentation, k: int, degree: int) -> List[Poly]:
    tmpl = [f"w2'^{{m}}*w3'^{k}", f"w2''^{{n}}*w3'*w3''^{k - 1}", f"w2''^{{n}}*w3''^{k}"]
    return _instances(n_alg.parse, tmpl, degree)


def _instances(parse, templates: List[str], degree: int) -> List[Poly]:
    out = []
    seen = set()
    for t in templates:
        ms = range(degree // 2 + 1) if "{m}" in t else [0]
        ns = range(degree // 2 + 1) if "{n}" in t else [0]
        for m in ms:
            for n in ns:
                x = parse(t.format(m=m, n=n))
                if x.degree() == degree and x not in seen:
                    seen.add(x)
                    out.append(x)
    return out


def verify_bases_and_series(max_degree: int = 40, ctx: Optional[Context] = None,
                            config: Optional[VerifyConfig] = None) -> List[ClaimEntry]:
    ctx, config = ctx or Context(), config or VerifyConfig()
    n_alg, m_alg = ctx["N"], ctx["M"]
    span_deg = min(max_degree, config.bound(config.span_degree))
    ser_deg = min(max_degree, config.bound(config.series_degree))
    reg_deg = config.bound(config.regular_degree)
    phi_deg = config.bound(config.phi_degree)
    inj_deg = config.bound(config.injectivity_degree)

    def low_weight():
        gn, gm = ctx.gb("N"), ctx.gb("M")
        checked = 0
        for w in (0, 1, 2):
            for d in range(span_deg + 1):
                res = span_check(gn, _low_weight_elements(n_alg, w, d), d, w)
                checked += 1
                if not res.ok:
                    return CheckResult(False, checked, f"N_{w}: {res.failure}")
                if len(gn.standard_monomials(d, w)) != len(gm.standard_monomials(d, w)):
                    return CheckResult(False, checked, f"dim N_{w} != dim M_{w} in degree {d}")
        n7 = span_check(gn, [n_alg.parse(s) for s in ("w2'^2*w3'", "w2'^2*w3''", "w2'*w2''*w3''", "w2''^2*w3''")], 7, 1)
        if not n7.ok or n7.data["dimension"] != 4:
            return CheckResult(False, checked, f"weight-1 degree-7 slice: {n7.failure}")
        return CheckResult(True, checked, data={"witness": f"bases of N_0, N_1, N_2 through degree {span_deg}; "
                                                           f"dim N_1 in degree 7 = 4"})

    def rewriting():
        gn = ctx.gb("N")
        p = n_alg.parse
        checked = 0
        for k in range(3, 7):
            for i in range(1, k):
                for m in range(4):
                    for n in range(4):
                        lhs = p(f"w2'^{m}*w2''^{n}*w3'^{i}*w3''^{k - i}")
                        rhs = p(f"w2''^{m + n}*w3'*w3''^{k - 1}")
                        checked += 1
                        if not gn.equal(lhs, rhs):
                            return CheckResult(False, checked, f"{lhs} != {rhs} in N")
        return CheckResult(True, checked, data={"witness": f"{checked} rewriting identities"})

    def high_weight():
        gn = ctx.gb("N")
        checked = 0
        for k in range(3, 7):
            for d in range(span_deg + 1):
                res = span_check(gn, _high_weight_elements(n_alg, k, d), d, k)
                checked += 1
                if not res.ok:
                    return CheckResult(False, checked, f"N_{k}: {res.failure}")
        return CheckResult(True, checked, data={"witness": f"bases of N_3..N_6 through degree {span_deg}"})

    def series_match():
        res = poincare_check(ctx.gb("N"), series_coefficients(N_SERIES, ser_deg))
        if res.ok:
            res.data["witness"] = "dims " + ",".join(map(str, res.data["dims"][:12])) + ",..."
        return res

    def regular():
        res = regular_sequence_check(n_alg, [n_alg.parse(REL_D5), n_alg.parse(REL_D9)], reg_deg, ctx.order)
        res.data["witness"] = f"{res.checked} images checked"
        return res

    def phi_bar():
        phi = ctx.homs["phi"]
        img = phi(m_alg.parse(REL_D9))
        want = phi.target.parse("t1^3*w2'*w2''^2 + t1^3*w2'^2*w2''")
        if img != want:
            return CheckResult(False, 0, f"phi(d9) = {img}, expected {want}")
        res = hom_rank_check(phi, ctx.gb("M"), phi_deg)
        res.data["witness"] = f"phi(w3'w3''^2 + w3''w3'^2) = {img}"
        return res

    def m_inj():
        res = mult_injective(ctx.gb("M"), m_alg.parse(REL_D9), inj_deg)
        res.data["witness"] = f"full rank in degrees 0..{inj_deg}"
        return res

    return [
        _entry("N-low-weight-bases", {"weights": [0, 1, 2], "max_degree": span_deg}, low_weight, skip=span_deg < 1),
        _entry("N-rewriting", {"k": [3, 6], "m_n_max": 3}, rewriting),
        _entry("N-high-weight-bases", {"k": [3, 6], "max_degree": span_deg}, high_weight, skip=span_deg < 1),
        _entry("N-poincare-series", {"series": N_SERIES, "max_degree": ser_deg}, series_match, skip=ser_deg < 1),
        _entry("regular-sequence", {"max_degree": reg_deg}, regular, skip=reg_deg < 1),
        _entry("phi-bar-injective", {"max_degree": phi_deg}, phi_bar, skip=phi_deg < 1),
        _entry("M-injectivity", {"max_degree": inj_deg}, m_inj, skip=inj_deg < 1),
    ]


def verify_q_stability(ctx: Optional[Context] = None, config: Optional[VerifyConfig] = None) -> ClaimEntry:
    """``Q_m`` sends every monomial multiple of every relation of N into the ideal."""
    ctx, config = ctx or Context(), config or VerifyConfig()
    deg, mm = config.bound(config.stability_degree), config.stability_max_m
    n_alg = ctx["N"]

    def run():
        gn = ctx.gb("N")
        ring = n_alg.ring
        checked = 0
        for r in n_alg.relations:
            dr = r.degree()
            for d in range(dr, deg + 1):
                for u in ring.monomials(d - dr):
                    x = ring.monomial(u) * r
                    for m in range(mm + 1):
                        checked += 1
                        y = gn.normal_form(milnor.q_derivation(m, x, n_alg))
                        if y:
                            return CheckResult(False, checked, f"Q_{m}({x}) = {y} mod N")
        return CheckResult(True, checked, data={"witness": f"{checked} ideal elements stay in the ideal"})

    return _entry("N-Q-stability", {"max_m": mm, "max_degree": deg}, run, skip=deg < 5)


def x13_from_definition(ctx: Optional[Context] = None) -> Poly:
    """``Bpi_1^*(Q_1 w2) * w2''^2 * (w2'^2 + w2''^2)`` in the ring of N."""
    ctx = ctx or Context()
    n_alg = ctx["N"]
    bso = ctx["BSO3"]
    pi1 = ctx.homs["Bpi1_N"]
    return pi1(milnor.q_derivation(1, bso.gen("w2"), bso)) * n_alg.parse("w2''^2 * (w2'^2 + w2''^2)")


def verify_x13(max_m: int = 12, ctx: Optional[Context] = None) -> ClaimEntry:
    ctx = ctx or Context()

    def run():
        n_alg = ctx["N"]
        p = n_alg.parse
        gn = ctx.gb("N")
        bso = ctx["BSO3"]
        pi1 = ctx.homs["Bpi1_N"]
        x = x13_from_definition(ctx)
        nf = gn.normal_form(x)
        checks = [
            ("Bpi1(Q_1 w2)", pi1(milnor.q_derivation(1, bso.gen("w2"), bso)), p("w2'*w3'")),
            ("x13 expansion", x, p(X13)),
            ("degree of x13", x.degree(), 13),
            ("weight components", {k: v for k, v in x.weight_components().items()}, {1: x}),
            ("second form of x13", gn.equal(x, p("w2'^4*w2''*w3'' + w2'^2*w2''^3*w3''")), True),
            ("x13 != 0 in N", bool(nf), True),
            ("two-term normal form", len(nf), 2),
            ("w3'^4 w2''^2 w2'^2 = w2''^4 w3' w3''^3", gn.equal(p("w3'^4*w2''^2*w2'^2"), p("w2''^4*w3'*w3''^3")), True),
            ("w3'^4 w2''^4 = w2''^4 w3' w3''^3", gn.equal(p("w3'^4*w2''^4"), p("w2''^4*w3'*w3''^3")), True),
        ]
        tail = p("w3'^4 * w2''^2 * (w2'^2 + w2''^2)")
        checks.append(("w3'^4 w2''^2 (w2'^2 + w2''^2) in N", gn.normal_form(tail), n_alg.ring.zero()))
        for m in range(1, max_m + 1):
            qx = milnor.q_derivation(m, x, n_alg, max_m=max(max_m, 12))
            checks.append((f"Q_{m} x13 in N", gn.normal_form(qx), n_alg.ring.zero()))
            if m >= 2:
                checks.append((f"Q_{m} x13 = Bpi1(g_{m}) w3'^4 w2''^2 (w2'^2+w2''^2)", qx,
                               pi1(milnor.g_poly(m)) * tail))
        res = _expect(checks)
        q0 = gn.normal_form(milnor.q_derivation(0, x, n_alg))
        res.data["witness"] = f"x13 = {nf} in N; Q_0 x13 = {q0} in N (informational)"
        res.data["q0"] = str(q0)
        return res

    return _entry("x13-annihilated", {"max_m": max_m}, run)


def verify_x13_control(ctx: Optional[Context] = None) -> ClaimEntry:
    """In M, where the weight-3 relation is absent, ``Q_2 x13`` must survive."""
    ctx = ctx or Context()

    def run():
        m_alg = ctx["M"]
        x = m_alg.parse(X13)
        y = ctx.gb("M").normal_form(milnor.q_derivation(2, x, m_alg))
        if not y:
            return CheckResult(False, 1, "Q_2 x13 vanishes already in M; the N reduction would be vacuous")
        return CheckResult(True, 1, data={"witness": f"Q_2 x13 = {y} in M"})

    return _entry("x13-control", {"algebra": "M", "m": 2}, run)


def verify_sq_table_control(ctx: Optional[Context] = None) -> ClaimEntry:
    ctx = ctx or Context()

    def run():
        bad = ctx["BSO3"].with_sq_entry("w2", 1, None, name="BSO3_corrupt")
        bi = ctx.homs["Bi"]
        from .steenrod import RingHom

        h = RingHom("Bi", bad, bi.target, bi.images, validate=False)
        res = check_sq_equivariance(h, 0)
        if res.ok:
            return CheckResult(False, res.checked, "Sq^1 w2 := 0 went undetected")
        if res.data.get("element") != "w2" or res.data.get("i") != 1:
            return CheckResult(False, res.checked, f"detected at the wrong place: {res.failure}")
        return CheckResult(True, res.checked, data={"witness": f"detected at (w2, 1): {res.failure}"})

    return _entry("Sq-table-control", {"mutation": "Sq^1 w2 := 0"}, run)


def run_all(config: Optional[VerifyConfig] = None,
            algebras: Optional[Mapping[str, AlgebraPresentation]] = None) -> VerificationReport:
    """Run every claim check; entries appear in registry order, each exactly once."""
    config = config or VerifyConfig()
    ctx = Context(algebras, config.order)
    cap = config.max_degree
    entries = [
        verify_wu_table(ctx),
        verify_presentations(ctx, config),
        verify_bi_equivariance(ctx, config),
        verify_q_naturality(ctx, config),
        verify_d_vanishing(config.d_vanishing_max_m, config.bound(config.d_vanishing_degree), ctx),
        verify_d_vanishing_control(ctx, config.bound(6)),
        verify_q_recurrence(ctx, config),
        verify_qq1_factorization(config.factorization_max_m, ctx),
        *verify_transgression_chain(ctx),
        *verify_bases_and_series(config.bound(40), ctx, config),
        verify_q_stability(ctx, config),
        verify_x13(config.max_m, ctx),
        verify_x13_control(ctx),
        verify_sq_table_control(ctx),
    ]
    by_id = {e.id: e for e in entries}
    assert list(by_id) == list(CLAIMS), "claim registry and run order disagree"
    for e in entries:
        if cap is not None:
            e.params = dict(e.params, degree_cap=cap)
    return VerificationReport(entries)


def single_mutations(algebras: Optional[Mapping[str, AlgebraPresentation]] = None):
    """Yield ``(label, name, corrupted)`` for every single-entry corruption of the registry.

    Each nonzero square-table entry is zeroed (and, if it has several terms,
    loses one term); each zero entry becomes the first monomial of the right
    degree.  Each relation is removed, and separately loses each of its terms.
    """
    base = dict(algebras) if algebras is not None else builtin_presentations()
    for an, a in base.items():
        for g in a.generators:
            for i, p in enumerate(a.sq_table[g.name]):
                if p:
                    yield f"{an}: Sq^{i} {g.name} := 0", an, a.with_sq_entry(g.name, i, None)
                    if len(p) > 1:
                        t = p.sorted_terms()[0]
                        yield (f"{an}: Sq^{i} {g.name} drops {a.ring.format_monomial(t)}", an,
                               a.with_sq_entry(g.name, i, p + a.ring.monomial(t)))
                else:
                    mono = a.ring.monomials(g.degree + i)[0]
                    yield (f"{an}: Sq^{i} {g.name} := {a.ring.format_monomial(mono)}", an,
                           a.with_sq_entry(g.name, i, a.ring.monomial(mono)))
        for k, r in enumerate(a.relations):
            rest = list(a.relations[:k]) + list(a.relations[k + 1:])
            yield f"{an}: relation {r} removed", an, a.with_relations(rest)
            for t in r.sorted_terms():
                changed = list(a.relations)
                changed[k] = r + a.ring.monomial(t)
                yield f"{an}: relation {r} drops {a.ring.format_monomial(t)}", an, a.with_relations(changed)
