"""Combinators that assemble deductions and fill in conclusions.

Formulas and terms may be given as strings in the script notation; schematic
letters are accepted. Each combinator mirrors one rule and takes its premises
in the rule's fixed order.
"""

from __future__ import annotations

from .deduction import Assume, EqRefl, Hole, LLAxiom, Rule, RuleApp
from .sexpr import read_one
from .syntax import (And, FormulaReader, Eq, Exists, ExistsBang, Forall, Iff, Imp, Or, Param,
                     Var, parse_formula, parse_term, replace_param, replace_term,
                     substitute)


def _f(x, free=()):
    if not isinstance(x, str):
        return x
    if free:
        return FormulaReader(None, True, free).formula(read_one(x))
    return parse_formula(x, schematic=True)


def _t(x):
    return parse_term(x, schematic=True) if isinstance(x, str) else x


def _c(d):
    return d.conclusion


def _dis(labels):
    if labels is None:
        return ()
    if isinstance(labels, str):
        return (labels,)
    return tuple(labels)


def assume(label, formula):
    return Assume(str(label), _f(formula))


def refl(term):
    return EqRefl(_t(term))


def ll(x, y, body):
    return LLAxiom(x, y, _f(body, (x,)))


def rule(r: Rule, *premises, concl, eigen=(), dis=()):
    if isinstance(eigen, str):
        eigen = (eigen,)
    return RuleApp(r, tuple(premises), _f(concl), _dis(dis), tuple(eigen))


def and_i(p, q):
    return rule(Rule.AndI, p, q, concl=And(_c(p), _c(q)))


def and_el(p):
    return rule(Rule.AndEL, p, concl=_c(p).left)


def and_er(p):
    return rule(Rule.AndER, p, concl=_c(p).right)


def imp_i(p, label=None, antecedent=None):
    if antecedent is None:
        from .deduction import class_formula
        antecedent = class_formula(p, label)
    return rule(Rule.ImpI, p, concl=Imp(_f(antecedent), _c(p)), dis=label)


def imp_e(p, q):
    return rule(Rule.ImpE, p, q, concl=_c(p).right)


def or_il(p, right):
    return rule(Rule.OrIL, p, concl=Or(_c(p), _f(right)))


def or_ir(left, p):
    return rule(Rule.OrIR, p, concl=Or(_f(left), _c(p)))


def or_e(p, q, r, lq=None, lr=None):
    return rule(Rule.OrE, p, q, r, concl=_c(q), dis=_dis(lq) + _dis(lr))


def bot_e(p, concl):
    return rule(Rule.BotE, p, concl=concl)


def iff_i(p, q, lp=None, lq=None):
    """``p`` proves B from [A]^lp, ``q`` proves A from [B]^lq."""
    return rule(Rule.IffI, p, q, concl=Iff(_c(q), _c(p)), dis=_dis(lp) + _dis(lq))


def iff_e1(p, q):
    return rule(Rule.IffE1, p, q, concl=_c(p).right)


def iff_e2(p, q):
    return rule(Rule.IffE2, p, q, concl=_c(p).left)


def all_i(p, a, x, label=None):
    return rule(Rule.ForallI, p, concl=Forall(x, replace_param(_c(p), a, Var(x))),
                eigen=a, dis=label)


def all_e(p, q):
    f = _c(p)
    return rule(Rule.ForallE, p, q, concl=substitute(f.body, f.var, _c(q).arg))


def ex_i(p, q, x, body=None):
    t = _c(q).arg
    b = _f(body, (x,)) if body is not None else replace_term(_c(p), t, Var(x))
    return rule(Rule.ExistsI, p, q, concl=Exists(x, b))


def ex_e(p, q, a, labels=()):
    return rule(Rule.ExistsE, p, q, concl=_c(q), eigen=a, dis=labels)


def eq_e(p, q, concl=None):
    e = _c(p)
    c = _f(concl) if concl is not None else replace_term(_c(q), e.lhs, e.rhs)
    return rule(Rule.EqE, p, q, concl=c)


def eq_e_gen(p, q, concl=None):
    e = _c(p)
    c = _f(concl) if concl is not None else replace_term(_c(q), e.lhs, e.rhs)
    return rule(Rule.EqEGen, p, q, concl=c)


def symm(p):
    """From s = t derive t = s."""
    e = _c(p)
    return eq_e(p, refl(e.lhs), concl=Eq(e.rhs, e.lhs))


def trans(p, q):
    """From r = s and s = t derive r = t."""
    return eq_e(q, p, concl=Eq(_c(p).lhs, _c(q).rhs))


def ii(p0, p1, p2, p3, a, labels, concl):
    return rule(Rule.II, p0, p1, p2, p3, concl=concl, eigen=a, dis=labels)


def ie1p(p0, p1, p2, p3, p4, a, b, labels):
    return rule(Rule.IE1p, p0, p1, p2, p3, p4, concl=_c(p4), eigen=(a, b), dis=labels)


def ie2p(p0, p1, p2, p3, p4, p5, concl=None):
    t1, t2 = _c(p1).arg, _c(p2).arg
    c = _f(concl) if concl is not None else replace_term(_c(p5), t1, t2)
    return rule(Rule.IE2p, p0, p1, p2, p3, p4, p5, concl=c)


def ie2p_prime(p0, p1, p2, p3, p4):
    return rule(Rule.IE2pPrime, p0, p1, p2, p3, p4, concl=Eq(_c(p1).arg, _c(p2).arg))


def ie3p(p0, p1, a, labels):
    return rule(Rule.IE3p, p0, p1, concl=_c(p1), eigen=a, dis=labels)


def ie4p(p0, p1, p2, p3, p4, concl=None):
    t1, t2 = _c(p1).arg, _c(p2).arg
    c = _f(concl) if concl is not None else replace_term(_c(p4), t1, t2)
    return rule(Rule.IE4p, p0, p1, p2, p3, p4, concl=c)


def ie4p_prime(p0, p1, p2, p3):
    return rule(Rule.IE4pPrime, p0, p1, p2, p3, concl=Eq(_c(p1).arg, _c(p2).arg))


def ie5p(p0, p1, p2, a, labels):
    return rule(Rule.IE5p, p0, p1, p2, concl=_c(p2), eigen=a, dis=labels)


def ie1p_prime(p0, p1, p2, a, labels):
    return rule(Rule.IE1pPrime, p0, p1, p2, concl=_c(p2), eigen=a, dis=labels)


def hole(name, concl, *premises):
    return Hole(name, _f(concl), tuple(premises))


def exbang(t):
    return ExistsBang(_t(t))


def par(name):
    return Param(name)
