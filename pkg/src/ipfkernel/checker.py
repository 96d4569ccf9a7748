"""Rule-by-rule validation of deductions, and elaboration of the primed rules."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .deduction import (DISCHARGE_PREMISES, EIGEN_PREMISES, MACROS, Assume,
                        Deduction, EqRefl, Hole, LLAxiom, Rule, RuleApp,
                        iter_nodes, labels_of, leaves, node_formulas,
                        open_assumptions, params_in, refresh_internal,
                        uniquify_parameters, validate_structure)
from .errors import NotElaborable
from .syntax import (And, Bottom, Eq, Exists, ExistsBang, Forall, I, Iff, Imp, Or,
                     Param, Var, alpha_eq, alpha_key, contains_I,
                     contains_iota, fresh_name, free_vars, is_atomic,
                     leibniz_match, params_of, print_any, restriction_violations,
                     substitute)
from .systems import System

CODES = {
    "NotAtomic": "minor formula of the rule must be atomic",
    "VacuousEq": "=E requires its two terms to be distinct",
    "EigenNotFresh": "eigenparameter occurs in the quantified formula or in the instantiating term",
    "EigenInConclusion": "eigenparameter occurs in the conclusion",
    "EigenInOpenAssumption": "eigenparameter occurs in an undischarged assumption of its subdeduction",
    "WrongPremiseShape": "premises and conclusion do not fit the rule",
    "WrongDischarge": "discharged class does not fit the rule",
    "RuleNotInSystem": "rule or notation not available in this system",
    "LLVariablesNotDistinct": "Lambert's Law instance needs distinct variables",
    "RestrictedLeibniz": "=E with a definite description term is not allowed in this system",
    "RestrictedScope": "formula outside the restricted fragment of this system",
}

_I_RULES = frozenset({Rule.II, Rule.IE1p, Rule.IE2p, Rule.IE3p, Rule.IE4p, Rule.IE5p,
                      Rule.IE1pPrime, Rule.IE2pPrime, Rule.IE4pPrime})


@dataclass(frozen=True)
class Diagnostic:
    position: tuple
    code: str
    message: str

    def __str__(self) -> str:
        where = ".".join(map(str, self.position)) or "root"
        return f"{where}: {self.code}: {self.message}"


@dataclass
class CheckReport:
    system: System
    diagnostics: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.diagnostics

    @property
    def verdict(self) -> str:
        return "valid" if self.valid else "invalid"

    @property
    def codes(self) -> list:
        return [d.code for d in self.diagnostics]

    def __str__(self) -> str:
        return "\n".join([self.verdict] + [str(d) for d in self.diagnostics])


class _Fail(Exception):
    def __init__(self, code, detail=""):
        super().__init__(code)
        self.code = code
        self.detail = detail


def _need(cond, code="WrongPremiseShape", detail=""):
    if not cond:
        raise _Fail(code, detail)


def _inst(q, t):
    """Body of a quantifier-like formula with its variable replaced by ``t``."""
    return substitute(q.body, q.var, t)


def _exbang(f):
    _need(isinstance(f, ExistsBang), detail="expected an existence premise")
    return f.arg


def _roles(app: RuleApp, P) -> dict:
    """Dischargeable formulas per premise index."""
    r, e = app.rule, app.eigen
    c = app.conclusion
    if r is Rule.ImpI:
        return {0: [c.left]}
    if r is Rule.OrE:
        return {1: [P[0].left], 2: [P[0].right]}
    if r is Rule.IffI:
        return {0: [c.left], 1: [c.right]}
    if r is Rule.ForallI:
        return {0: [ExistsBang(Param(e[0]))]}
    if r is Rule.ExistsE:
        a = Param(e[0])
        return {1: [_inst(P[0], a), ExistsBang(a)]}
    if r is Rule.II:
        a = Param(e[0])
        return {3: [substitute(c.restrictor, c.var, a), ExistsBang(a)]}
    if r is Rule.IE1p:
        a, b = Param(e[0]), Param(e[1])
        f = P[0]
        return {3: [substitute(f.restrictor, f.var, a), ExistsBang(a)],
                4: [substitute(f.restrictor, f.var, b), substitute(f.scope, f.var, b), ExistsBang(b)]}
    if r in (Rule.IE3p, Rule.IE5p):
        a = Param(e[0])
        f = P[0]
        return {1 if r is Rule.IE3p else 2: [substitute(f.restrictor, f.var, a), ExistsBang(a)]}
    if r is Rule.IE1pPrime:
        a = Param(e[0])
        f = P[0]
        return {2: [substitute(f.restrictor, f.var, a), substitute(f.scope, f.var, a), ExistsBang(a)]}
    return {}


def _check_discharges(app: RuleApp, P):
    if not app.discharged:
        return
    roles = _roles(app, P)
    for lab in app.discharged:
        where = set()
        formula = None
        for i, prem in enumerate(app.premises):
            for _, leaf in leaves(prem):
                if leaf.label == lab:
                    where.add(i)
                    formula = leaf.formula
        if not where:
            continue
        _need(len(where) == 1, "WrongDischarge", f"class {lab} spans several premises")
        i = where.pop()
        _need(i in roles, "WrongDischarge", f"premise {i} of {app.rule.value} discharges nothing")
        _need(any(alpha_eq(formula, g) for g in roles[i]), "WrongDischarge",
              f"class {lab} ({print_any(formula)}) is not dischargeable here")


def _open_params(app: RuleApp, i: int) -> set:
    out = set()
    for lab, f in open_assumptions(app.premises[i]):
        if lab not in app.discharged:
            out |= params_of(f)
    return out


def _fresh(a: str, *, not_in=(), not_concl=None, region=None, app=None):
    for f in not_in:
        _need(a not in params_of(f), "EigenNotFresh", f"{a} occurs in {print_any(f)}")
    if not_concl is not None:
        _need(a not in params_of(not_concl), "EigenInConclusion", f"{a} occurs in the conclusion")
    if region is not None:
        _need(a not in _open_params(app, region), "EigenInOpenAssumption",
              f"{a} occurs in an open assumption above premise {region}")


def _leibniz(p0, minor, concl, system, code_atomic=True):
    _need(isinstance(p0, Eq), detail="major premise must be an identity")
    t1, t2 = p0.lhs, p0.rhs
    if code_atomic:
        _need(is_atomic(minor) and is_atomic(concl), "NotAtomic")
    _need(not alpha_eq(t1, t2), "VacuousEq")
    if system is System.IPF_iotaR:
        _need(not (contains_iota(t1) or contains_iota(t2)), "RestrictedLeibniz")
    _need(leibniz_match(minor, concl, t1, t2), detail="conclusion is not a Leibniz instance of the minor premise")


def _I_shape(f, scope=None):
    _need(isinstance(f, I), detail="major premise must be an I-formula")
    if scope == "exbang":
        _need(f.scope == ExistsBang(Var(f.var)), detail="major premise must have scope ex! x")
    if scope == "eq":
        s = f.scope
        _need(isinstance(s, Eq) and s.lhs == Var(f.var) and f.var not in free_vars(s.rhs),
              detail="major premise must have scope x = t")
        return s.rhs
    return None


def _check_rule(app: RuleApp, system: System, allow_holes: bool):
    r = app.rule
    P = [p.conclusion for p in app.premises]
    C = app.conclusion
    e = app.eigen

    if r in MACROS or r in _I_RULES:
        _need(system.has_I, "RuleNotInSystem", f"{r.value} needs the binary quantifier")
    if r is Rule.EqEGen:
        _need(allow_holes, "RuleNotInSystem", "EqEGen is a template device")
    need_eigen = {Rule.ForallI: 1, Rule.ExistsE: 1, Rule.II: 1, Rule.IE1p: 2,
                  Rule.IE3p: 1, Rule.IE5p: 1, Rule.IE1pPrime: 1}.get(r, 0)
    _need(len(e) == need_eigen, detail=f"{r.value} takes {need_eigen} eigenparameter(s)")
    if app.discharged and r not in DISCHARGE_PREMISES:
        raise _Fail("WrongDischarge", f"{r.value} discharges nothing")

    if r is Rule.AndI:
        _need(alpha_eq(C, And(P[0], P[1])))
    elif r in (Rule.AndEL, Rule.AndER):
        _need(isinstance(P[0], And))
        _need(alpha_eq(C, P[0].left if r is Rule.AndEL else P[0].right))
    elif r is Rule.ImpI:
        _need(isinstance(C, Imp) and alpha_eq(C.right, P[0]))
    elif r is Rule.ImpE:
        _need(isinstance(P[0], Imp) and alpha_eq(P[0].left, P[1]) and alpha_eq(P[0].right, C))
    elif r in (Rule.OrIL, Rule.OrIR):
        _need(isinstance(C, Or) and alpha_eq(C.left if r is Rule.OrIL else C.right, P[0]))
    elif r is Rule.OrE:
        _need(isinstance(P[0], Or) and alpha_eq(P[1], C) and alpha_eq(P[2], C))
    elif r is Rule.BotE:
        _need(isinstance(P[0], Bottom), detail="premise must be bot")
        _need(is_atomic(C), "NotAtomic")
    elif r is Rule.IffI:
        _need(isinstance(C, Iff) and alpha_eq(C.right, P[0]) and alpha_eq(C.left, P[1]))
    elif r in (Rule.IffE1, Rule.IffE2):
        _need(isinstance(P[0], Iff))
        src, dst = (P[0].left, P[0].right) if r is Rule.IffE1 else (P[0].right, P[0].left)
        _need(alpha_eq(src, P[1]) and alpha_eq(dst, C))
    elif r is Rule.ForallI:
        _need(isinstance(C, Forall) and alpha_eq(P[0], _inst(C, Param(e[0]))))
        _fresh(e[0], not_in=[C], region=0, app=app)
    elif r is Rule.ForallE:
        _need(isinstance(P[0], Forall))
        t = _exbang(P[1])
        _need(alpha_eq(C, _inst(P[0], t)))
    elif r is Rule.ExistsI:
        _need(isinstance(C, Exists))
        t = _exbang(P[1])
        _need(alpha_eq(P[0], _inst(C, t)))
    elif r is Rule.ExistsE:
        _need(isinstance(P[0], Exists) and alpha_eq(P[1], C))
        _fresh(e[0], not_in=[P[0]], not_concl=C, region=1, app=app)
    elif r in (Rule.EqE, Rule.EqEGen):
        _leibniz(P[0], P[1], C, system, code_atomic=r is Rule.EqE)
    elif r is Rule.II:
        _need(isinstance(C, I))
        t = _exbang(P[2])
        _need(alpha_eq(P[0], substitute(C.restrictor, C.var, t)), detail="first premise must be F_t")
        _need(alpha_eq(P[1], substitute(C.scope, C.var, t)), detail="second premise must be G_t")
        _need(alpha_eq(P[3], Eq(Param(e[0]), t)), detail="fourth premise must be a = t")
        _need(e[0] not in params_of(t), "EigenNotFresh", "eigenparameter occurs in t")
        _fresh(e[0], not_in=[C], region=3, app=app)
    elif r is Rule.IE1p:
        f = P[0]
        _I_shape(f)
        t = _exbang(P[2])
        _need(alpha_eq(P[1], substitute(f.restrictor, f.var, t)), detail="second premise must be F_t")
        _need(alpha_eq(P[3], Eq(Param(e[0]), t)), detail="fourth premise must be a = t")
        _need(alpha_eq(P[4], C))
        _need(e[0] not in params_of(t), "EigenNotFresh", "eigenparameter occurs in t")
        _fresh(e[0], not_in=[f], region=3, app=app)
        _fresh(e[1], not_in=[f], not_concl=C, region=4, app=app)
    elif r in (Rule.IE2p, Rule.IE2pPrime):
        f = P[0]
        _I_shape(f, "exbang")
        t1, t2 = _exbang(P[1]), _exbang(P[2])
        _need(alpha_eq(P[3], substitute(f.restrictor, f.var, t1)), detail="fourth premise must be F_t1")
        _need(alpha_eq(P[4], substitute(f.restrictor, f.var, t2)), detail="fifth premise must be F_t2")
        if r is Rule.IE2pPrime:
            _need(alpha_eq(C, Eq(t1, t2)))
        else:
            _need(is_atomic(P[5]) and is_atomic(C), "NotAtomic")
            _need(leibniz_match(P[5], C, t1, t2), detail="conclusion is not A_t2 for the minor A_t1")
    elif r in (Rule.IE4p, Rule.IE4pPrime):
        f = P[0]
        t2 = _I_shape(f, "eq")
        t1 = _exbang(P[1])
        _need(alpha_eq(_exbang(P[2]), t2), detail="third premise must be ex! t2")
        _need(alpha_eq(P[3], substitute(f.restrictor, f.var, t1)), detail="fourth premise must be F_t1")
        if r is Rule.IE4pPrime:
            _need(alpha_eq(C, Eq(t1, t2)))
        else:
            _need(is_atomic(P[4]) and is_atomic(C), "NotAtomic")
            _need(leibniz_match(P[4], C, t1, t2), detail="conclusion is not A_t2 for the minor A_t1")
    elif r is Rule.IE3p:
        f = P[0]
        _I_shape(f, "exbang")
        _need(alpha_eq(P[1], C))
        _fresh(e[0], not_in=[f], not_concl=C, region=1, app=app)
    elif r is Rule.IE5p:
        f = P[0]
        t = _I_shape(f, "eq")
        _need(alpha_eq(_exbang(P[1]), t), detail="second premise must be ex! t")
        _need(alpha_eq(P[2], C))
        _fresh(e[0], not_in=[f], not_concl=C, region=2, app=app)
    elif r is Rule.IE1pPrime:
        f = P[0]
        _I_shape(f)
        _need(alpha_eq(P[1], I(f.var, f.restrictor, ExistsBang(Var(f.var)))),
              detail="second premise must be Ix[F, ex! x] for the same F")
        _need(alpha_eq(P[2], C))
        _fresh(e[0], not_in=[f], not_concl=C, region=2, app=app)
    else:
        raise _Fail("RuleNotInSystem", f"{r.value} is not a rule of {system}")
    _check_discharges(app, P)


def _gate_formula(f, system: System):
    if contains_iota(f) and not system.has_iota:
        raise _Fail("RuleNotInSystem", "definite description term outside the iota systems")
    if contains_I(f) and not system.has_I:
        raise _Fail("RuleNotInSystem", "binary quantifier outside the I systems")


def check(d: Deduction, system: System, allow_holes: bool = False) -> CheckReport:
    """Validate every node of ``d`` against the rules of ``system``.

    One diagnostic is reported per faulty node (the first failed condition);
    restriction violations are reported once per offending subformula.
    """
    if isinstance(system, str):
        system = System.parse(system)
    validate_structure(d)
    report = CheckReport(system)
    seen_bad = set()

    def diag(pos, code, detail):
        msg = CODES[code] + (f": {detail}" if detail else "")
        report.diagnostics.append(Diagnostic(pos, code, msg))

    for pos, n in iter_nodes(d):
        try:
            for f in node_formulas(n):
                _gate_formula(f, system)
            if isinstance(n, EqRefl):
                _gate_formula(Eq(n.term, n.term), system)
            if isinstance(n, LLAxiom):
                _need(system.has_iota, "RuleNotInSystem", "Lambert's Law needs the iota operator")
                _need(n.x != n.y, "LLVariablesNotDistinct")
            elif isinstance(n, Hole):
                _need(allow_holes, "RuleNotInSystem", "holes are a template device")
            elif isinstance(n, RuleApp):
                _check_rule(n, system, allow_holes)
        except _Fail as fail:
            diag(pos, fail.code, fail.detail)
            continue
        if system.restricted:
            fs = list(node_formulas(n))
            if isinstance(n, LLAxiom):
                fs = [n.conclusion]
            for f in fs:
                for bad in restriction_violations(f):
                    k = alpha_key(bad)
                    if k not in seen_bad:
                        seen_bad.add(k)
                        diag(pos, "RestrictedScope", print_any(bad))
    return report


# -- macro elaboration -----------------------------------------------------

def _elab_node(app: RuleApp, used_params: set, used_labels: set) -> Deduction:
    P = [p.conclusion for p in app.premises]
    if app.rule is Rule.IE2pPrime:
        t1 = P[1].arg
        return RuleApp(Rule.IE2p, app.premises + (EqRefl(t1),), app.conclusion)
    if app.rule is Rule.IE4pPrime:
        t1 = P[1].arg
        return RuleApp(Rule.IE4p, app.premises + (EqRefl(t1),), app.conclusion)
    # IE1p' via IE2p, IE1p and IE3p
    f, ex = P[0], P[1]
    if not (isinstance(f, I) and alpha_eq(ex, I(f.var, f.restrictor, ExistsBang(Var(f.var))))):
        raise NotElaborable("IE1pPrime premises do not fit the construction")
    if len(app.eigen) != 1:
        raise NotElaborable("IE1pPrime needs one eigenparameter")
    a = app.eigen[0]
    b = fresh_name("b", used_params)
    used_params.add(b)
    c = fresh_name("c", used_params)
    used_params.add(c)
    lb_f, lb_e = fresh_name("Fb", used_labels), fresh_name("Eb", used_labels)
    used_labels |= {lb_f, lb_e}
    lc_f, lc_e = fresh_name("Fc", used_labels), fresh_name("Ec", used_labels)
    used_labels |= {lc_f, lc_e}
    F = lambda t: substitute(f.restrictor, f.var, t)
    pb, pc = Param(b), Param(c)
    ex_copy = refresh_internal(app.premises[1], used_labels)
    bc = RuleApp(Rule.IE2p,
                 (ex_copy, Assume(lb_e, ExistsBang(pb)), Assume(lc_e, ExistsBang(pc)),
                  Assume(lb_f, F(pb)), Assume(lc_f, F(pc)), EqRefl(pb)),
                 Eq(pb, pc))
    inner = RuleApp(Rule.IE1p,
                    (app.premises[0], Assume(lc_f, F(pc)), Assume(lc_e, ExistsBang(pc)), bc,
                     app.premises[2]),
                    app.conclusion, (lb_f, lb_e) + app.discharged, (b, a))
    return RuleApp(Rule.IE3p, (app.premises[1], inner), app.conclusion, (lc_f, lc_e), (c,))


def elaborate_macros(d: Deduction) -> Deduction:
    """Replace every primed rule by primitive rules of the binary-quantifier system."""
    used_params = set(params_in(d))
    used_labels = set(labels_of(d))

    def go(n):
        if not isinstance(n, (RuleApp, Hole)):
            return n
        prem = tuple(go(p) for p in n.premises)
        n = replace(n, premises=prem) if prem != n.premises else n
        if isinstance(n, RuleApp) and n.rule in MACROS:
            return _elab_node(n, used_params, used_labels)
        return n

    out = go(d)
    if out is d:
        return d
    return uniquify_parameters(out)
