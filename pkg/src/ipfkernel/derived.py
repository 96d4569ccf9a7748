"""Leibniz's law for arbitrary formulas, expanded into atomic =E steps."""

from __future__ import annotations

from dataclasses import replace

from .deduction import (Assume, Deduction, EqRefl, Hole, Rule, RuleApp,
                        labels_of, params_in, refresh_internal)
from .errors import NotElaborable
from .syntax import (And, Atom, Bottom, Eq, Exists, ExistsBang, Forall, Iff,
                     Imp, Or, Param, SchemaFormula, alpha_eq, fresh_name,
                     substitute)


class _Ctx:
    def __init__(self, d: Deduction):
        self.labels = set(labels_of(d))
        self.params = set(params_in(d))

    def label(self, base="g") -> str:
        n = fresh_name(base, self.labels)
        self.labels.add(n)
        return n

    def param(self, base="c") -> str:
        n = fresh_name(base, self.params)
        self.params.add(n)
        return n

    def copy(self, d: Deduction) -> Deduction:
        return refresh_internal(d, self.labels)


def _sym(major: Deduction) -> Deduction:
    e = major.conclusion
    return RuleApp(Rule.EqE, (major, EqRefl(e.lhs)), Eq(e.rhs, e.lhs))


def _app(rule, premises, concl, dis=(), eigen=()):
    return RuleApp(rule, tuple(premises), concl, tuple(dis), tuple(eigen))


def leibniz(major: Deduction, minor: Deduction, concl, ctx: _Ctx) -> Deduction:
    """From ``s = t`` and ``A`` derive ``concl`` (``A`` with some ``s`` replaced by ``t``)."""
    a = minor.conclusion
    if alpha_eq(a, concl):
        return minor
    if isinstance(a, (Atom, Eq, ExistsBang, Bottom, SchemaFormula)):
        return _app(Rule.EqE, (major, minor), concl)
    if type(a) is not type(concl):
        raise NotElaborable("premise and conclusion of Leibniz's law differ in shape")
    if isinstance(a, And):
        left = leibniz(major, _app(Rule.AndEL, (minor,), a.left), concl.left, ctx)
        right = leibniz(ctx.copy(major), _app(Rule.AndER, (ctx.copy(minor),), a.right),
                        concl.right, ctx)
        return _app(Rule.AndI, (left, right), concl)
    if isinstance(a, Or):
        l1, l2 = ctx.label(), ctx.label()
        left = _app(Rule.OrIL, (leibniz(major, Assume(l1, a.left), concl.left, ctx),), concl)
        right = _app(Rule.OrIR, (leibniz(ctx.copy(major), Assume(l2, a.right), concl.right, ctx),),
                     concl)
        return _app(Rule.OrE, (minor, left, right), concl, (l1, l2))
    if isinstance(a, Imp):
        l = ctx.label()
        back = leibniz(_sym(ctx.copy(major)), Assume(l, concl.left), a.left, ctx)
        body = leibniz(major, _app(Rule.ImpE, (minor, back), a.right), concl.right, ctx)
        return _app(Rule.ImpI, (body,), concl, (l,))
    if isinstance(a, Iff):
        l1, l2 = ctx.label(), ctx.label()
        back1 = leibniz(_sym(ctx.copy(major)), Assume(l1, concl.left), a.left, ctx)
        p = leibniz(ctx.copy(major), _app(Rule.IffE1, (minor, back1), a.right), concl.right, ctx)
        back2 = leibniz(_sym(ctx.copy(major)), Assume(l2, concl.right), a.right, ctx)
        q = leibniz(ctx.copy(major), _app(Rule.IffE2, (ctx.copy(minor), back2), a.left),
                    concl.left, ctx)
        return _app(Rule.IffI, (p, q), concl, (l1, l2))
    if isinstance(a, Forall):
        c, l = ctx.param(), ctx.label()
        inst = substitute(a.body, a.var, Param(c))
        goal = substitute(concl.body, concl.var, Param(c))
        e = _app(Rule.ForallE, (minor, Assume(l, ExistsBang(Param(c)))), inst)
        return _app(Rule.ForallI, (leibniz(major, e, goal, ctx),), concl, (l,), (c,))
    if isinstance(a, Exists):
        c, l1, l2 = ctx.param(), ctx.label(), ctx.label()
        inst = substitute(a.body, a.var, Param(c))
        goal = substitute(concl.body, concl.var, Param(c))
        w = leibniz(major, Assume(l1, inst), goal, ctx)
        intro = _app(Rule.ExistsI, (w, Assume(l2, ExistsBang(Param(c)))), concl)
        return _app(Rule.ExistsE, (minor, intro), concl, (l1, l2), (c,))
    raise NotElaborable(f"Leibniz's law through {type(a).__name__} is not expanded")


def expand_general_leibniz(d: Deduction) -> Deduction:
    """Replace every EqEGen node by atomic =E steps."""
    ctx = _Ctx(d)

    def go(n):
        if not isinstance(n, (RuleApp, Hole)):
            return n
        prem = tuple(go(p) for p in n.premises)
        if isinstance(n, RuleApp) and n.rule is Rule.EqEGen:
            return leibniz(prem[0], prem[1], n.conclusion, ctx)
        return n if prem == n.premises else replace(n, premises=prem)

    return go(d)
