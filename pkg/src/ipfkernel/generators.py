"""Random valid deductions and random restricted formulas.

Deductions are built goal-first: for a target formula the generator picks an
introduction, an elimination whose major premise is built by the same
procedure (so introductions above it make detours and OR/EXISTS/I
eliminations make segments), or a leaf. Open assumptions never mention an
eigenparameter that is in scope.
"""

from __future__ import annotations

import random

from .deduction import (Assume, Deduction, EqRefl, Rule, RuleApp, size,
                        uniquify_parameters)
from .syntax import (BOT, And, Atom, Bottom, Eq, Exists, ExistsBang, Forall, I,
                     Iff, Imp, Or, Param, Var, bound_vars, free_vars, params_of,
                     replace_param, substitute)

POOL = ("a", "b", "c")


def _p(n):
    return Param(n)


class FormulaGen:
    def __init__(self, rng: random.Random, pool=POOL, binary_quantifier: bool = True):
        self.rng = rng
        self.pool = pool
        self.with_I = binary_quantifier

    def term(self, bound=()):
        if bound and self.rng.random() < 0.5:
            return Var(self.rng.choice(bound))
        return _p(self.rng.choice(self.pool))

    def atom(self, bound=()):
        r = self.rng.random()
        if r < 0.2:
            return Atom(self.rng.choice("PQ"), ())
        if r < 0.55:
            return Atom(self.rng.choice("FG"), (self.term(bound),))
        if r < 0.7:
            return Atom("R", (self.term(bound), self.term(bound)))
        if r < 0.85:
            return Eq(self.term(bound), self.term(bound))
        return ExistsBang(self.term(bound))

    def restrictor(self, var="x", bound=()):
        """A description-free formula in which ``var`` occurs."""
        b = bound + (var,)
        r = self.rng.random()
        if r < 0.5:
            return Atom(self.rng.choice("FG"), (Var(var),))
        if r < 0.75:
            return Atom("R", (Var(var), self.term(bound)))
        op = self.rng.choice((And, Or))
        return op(self.restrictor(var, bound), self.formula(1, b, allow_I=False))

    def formula(self, depth: int, bound=(), allow_I: bool = True):
        if depth <= 0 or self.rng.random() < 0.3:
            return self.atom(bound)
        r = self.rng.random()
        if r < 0.45:
            op = self.rng.choice((And, Or, Imp, Iff))
            return op(self.formula(depth - 1, bound, allow_I),
                      self.formula(depth - 1, bound, allow_I))
        if r < 0.75:
            v = "xyzw"[len(bound) % 4]
            op = self.rng.choice((Forall, Exists))
            return op(v, self.formula(depth - 1, bound + (v,), allow_I))
        if self.with_I and allow_I:
            return self.I_formula(bound)
        return self.atom(bound)

    def I_formula(self, bound=()):
        v = "xyzw"[len(bound) % 4]
        f = self.restrictor(v, bound)
        r = self.rng.random()
        if r < 0.4:
            g = ExistsBang(Var(v))
        elif r < 0.8:
            g = Eq(Var(v), self.term(bound))
        else:
            g = Atom("G", (Var(v),))
        return I(v, f, g)

    def restricted(self, depth: int = 3, bound=()):
        """A formula of the restricted binary-quantifier fragment."""
        if depth <= 0 or self.rng.random() < 0.3:
            if self.rng.random() < 0.4:
                v = "xyzw"[len(bound) % 4]
                f = self.restrictor(v, bound)
                g = ExistsBang(Var(v)) if self.rng.random() < 0.5 else Eq(Var(v), self.term(bound))
                return I(v, f, g)
            return self.atom(bound)
        r = self.rng.random()
        if r < 0.6:
            op = self.rng.choice((And, Or, Imp, Iff))
            return op(self.restricted(depth - 1, bound), self.restricted(depth - 1, bound))
        v = "xyzw"[len(bound) % 4]
        op = self.rng.choice((Forall, Exists))
        return op(v, self.restricted(depth - 1, bound + (v,)))


class DeductionGen:
    """Goal-directed generator of valid deductions of the binary-quantifier system."""

    def __init__(self, rng: random.Random, budget: int = 30, binary_quantifier: bool = True,
                 detour_bias: float = 0.5):
        self.rng = rng
        self.fg = FormulaGen(rng, binary_quantifier=binary_quantifier)
        self.budget = budget
        self.with_I = binary_quantifier
        self.bias = detour_bias
        self._n = 0

    # -- names
    def _label(self):
        self._n += 1
        return f"h{self._n}"

    def _eigen(self):
        self._n += 1
        return f"e{self._n}"

    # -- leaves
    def _leaf(self, goal, hyps, eig):
        for lab, f in hyps:
            if f == goal:
                return Assume(lab, f)
        if isinstance(goal, Eq) and goal.lhs == goal.rhs:
            return EqRefl(goal.lhs)
        if not (params_of(goal) & eig):
            return Assume(self._label(), goal)
        return None

    def _closing(self, goal, hyps, eig):
        """A deduction of ``goal`` without further budget (leaf or decomposition)."""
        leaf = self._leaf(goal, hyps, eig)
        if leaf is not None:
            return leaf
        if isinstance(goal, (Atom, Eq, ExistsBang, Bottom)):
            bot = self._leaf(BOT, hyps, eig)
            return bot if isinstance(goal, Bottom) else RuleApp(Rule.BotE, (bot,), goal)
        return self._intro(goal, hyps, eig, 0)

    # -- main entry
    def goal(self, goal, hyps=(), eig=frozenset(), budget=None) -> Deduction:
        budget = self.budget if budget is None else budget
        if budget <= 1:
            return self._closing(goal, hyps, eig)
        r = self.rng.random()
        if r < 0.15:
            leaf = self._leaf(goal, hyps, eig)
            if leaf is not None:
                return leaf
        if r < 0.15 + self.bias:
            d = self._elim(goal, hyps, eig, budget)
            if d is not None:
                return d
        if not isinstance(goal, (Atom, Eq, ExistsBang, Bottom)):
            return self._intro(goal, hyps, eig, budget)
        d = self._elim(goal, hyps, eig, budget)
        return d if d is not None else self._closing(goal, hyps, eig)

    def _split(self, budget, k):
        rest = max(budget - 1, 0)
        cuts = sorted(self.rng.randint(0, rest) for _ in range(k - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [rest])]
        return parts

    # -- introductions
    def _intro(self, goal, hyps, eig, budget):
        g = self.goal
        if isinstance(goal, And):
            b1, b2 = self._split(budget, 2)
            return RuleApp(Rule.AndI, (g(goal.left, hyps, eig, b1), g(goal.right, hyps, eig, b2)), goal)
        if isinstance(goal, Or):
            side = self.rng.random() < 0.5
            rule = Rule.OrIL if side else Rule.OrIR
            sub = goal.left if side else goal.right
            return RuleApp(rule, (g(sub, hyps, eig, budget - 1),), goal)
        if isinstance(goal, Imp):
            l = self._label()
            return RuleApp(Rule.ImpI, (g(goal.right, hyps + ((l, goal.left),), eig, budget - 1),),
                           goal, (l,))
        if isinstance(goal, Iff):
            l1, l2 = self._label(), self._label()
            b1, b2 = self._split(budget, 2)
            p = g(goal.right, hyps + ((l1, goal.left),), eig, b1)
            q = g(goal.left, hyps + ((l2, goal.right),), eig, b2)
            return RuleApp(Rule.IffI, (p, q), goal, (l1, l2))
        if isinstance(goal, Forall):
            a, l = self._eigen(), self._label()
            body = substitute(goal.body, goal.var, _p(a))
            sub = g(body, hyps + ((l, ExistsBang(_p(a))),), eig | {a}, budget - 1)
            return RuleApp(Rule.ForallI, (sub,), goal, (l,), (a,))
        if isinstance(goal, Exists):
            t = self._witness(eig, hyps)
            b1, b2 = self._split(budget, 2)
            body = substitute(goal.body, goal.var, t)
            return RuleApp(Rule.ExistsI, (g(body, hyps, eig, b1), g(ExistsBang(t), hyps, eig, b2)), goal)
        if isinstance(goal, I):
            return self._ii(goal, hyps, eig, budget)
        return self._closing(goal, hyps, eig)

    def _witness(self, eig, hyps):
        cands = [_p(n) for n in POOL]
        cands += [f.arg for _, f in hyps if isinstance(f, ExistsBang) and isinstance(f.arg, Param)]
        return self.rng.choice(cands)

    def _pi_to(self, restrictor, var, t, a, la, ea):
        """a = t from [F a]^la, [ex! a]^ea and an open all x (F x -> x = t)."""
        hyp = Forall(var, Imp(restrictor, Eq(Var(var), t)))
        fa = substitute(restrictor, var, _p(a))
        inst = RuleApp(Rule.ForallE, (Assume(self._label(), hyp), Assume(ea, ExistsBang(_p(a)))),
                       Imp(fa, Eq(_p(a), t)))
        return RuleApp(Rule.ImpE, (inst, Assume(la, fa)), Eq(_p(a), t))

    def _ii(self, goal: I, hyps, eig, budget):
        t = self._witness(eig, hyps)
        if params_of(t) & eig or params_of(goal) & eig:
            return self._ii_forced(goal, hyps, eig)
        a, la, ea = self._eigen(), self._label(), self._label()
        b1, b2, b3 = self._split(budget, 3)
        f_t = substitute(goal.restrictor, goal.var, t)
        g_t = substitute(goal.scope, goal.var, t)
        prem = (self.goal(f_t, hyps, eig, b1), self.goal(g_t, hyps, eig, b2),
                self.goal(ExistsBang(t), hyps, eig, b3),
                self._pi_to(goal.restrictor, goal.var, t, a, la, ea))
        return RuleApp(Rule.II, prem, goal, (la, ea), (a,))

    def _ii_forced(self, goal, hyps, eig):
        # II with a pool witness; if the formula mentions an eigenparameter in
        # scope, the open assumption of the usual subdeduction is replaced by bottom
        t = _p(self.rng.choice(POOL))
        a, la, ea = self._eigen(), self._label(), self._label()
        f_t = substitute(goal.restrictor, goal.var, t)
        g_t = substitute(goal.scope, goal.var, t)
        hyp_ok = not (params_of(goal) & eig)
        prem = (self._closing(f_t, hyps, eig), self._closing(g_t, hyps, eig),
                self._closing(ExistsBang(t), hyps, eig))
        if hyp_ok:
            pi = self._pi_to(goal.restrictor, goal.var, t, a, la, ea)
        else:
            pi = RuleApp(Rule.BotE, (self._leaf(BOT, hyps, eig),), Eq(_p(a), t))
        return RuleApp(Rule.II, prem + (pi,), goal, (la, ea), (a,))

    # -- eliminations
    def _elim(self, goal, hyps, eig, budget):
        g = self.goal
        atomic = isinstance(goal, (Atom, Eq, ExistsBang, Bottom))
        opts = ["and", "imp", "or", "iff", "all", "ex"]
        if atomic and not isinstance(goal, Bottom):
            opts += ["eq", "bot"]
        if self.with_I:
            opts += ["ie3", "ie5", "ie1"]
            if atomic and not isinstance(goal, Bottom):
                opts += ["ie2", "ie4"]
        kind = self.rng.choice(opts)
        rf = lambda: self.fg.formula(1)
        if kind == "and":
            other = rf()
            left = self.rng.random() < 0.5
            conj = And(goal, other) if left else And(other, goal)
            return RuleApp(Rule.AndEL if left else Rule.AndER, (g(conj, hyps, eig, budget - 1),), goal)
        if kind == "imp":
            a = rf()
            b1, b2 = self._split(budget, 2)
            return RuleApp(Rule.ImpE, (g(Imp(a, goal), hyps, eig, b1), g(a, hyps, eig, b2)), goal)
        if kind == "iff":
            a = rf()
            b1, b2 = self._split(budget, 2)
            if self.rng.random() < 0.5:
                return RuleApp(Rule.IffE1, (g(Iff(a, goal), hyps, eig, b1), g(a, hyps, eig, b2)), goal)
            return RuleApp(Rule.IffE2, (g(Iff(goal, a), hyps, eig, b1), g(a, hyps, eig, b2)), goal)
        if kind == "or":
            a, b = rf(), rf()
            l1, l2 = self._label(), self._label()
            b0, b1, b2 = self._split(budget, 3)
            return RuleApp(Rule.OrE, (g(Or(a, b), hyps, eig, b0),
                                      g(goal, hyps + ((l1, a),), eig, b1),
                                      g(goal, hyps + ((l2, b),), eig, b2)), goal, (l1, l2))
        if kind == "all":
            ps = sorted(params_of(goal))
            if not ps:
                return None
            t = self.rng.choice(ps)
            v = _unused_var(goal)
            body = replace_param(goal, t, Var(v))
            b1, b2 = self._split(budget, 2)
            return RuleApp(Rule.ForallE, (g(Forall(v, body), hyps, eig, b1),
                                          g(ExistsBang(_p(t)), hyps, eig, b2)), goal)
        if kind == "ex":
            a, l1, l2 = self._eigen(), self._label(), self._label()
            v = _unused_var(goal)
            body = self._body_with(v)
            inst = substitute(body, v, _p(a))
            b1, b2 = self._split(budget, 2)
            return RuleApp(Rule.ExistsE, (g(Exists(v, body), hyps, eig, b1),
                                          g(goal, hyps + ((l1, inst), (l2, ExistsBang(_p(a)))),
                                            eig | {a}, b2)), goal, (l1, l2), (a,))
        if kind == "eq":
            ps = sorted(params_of(goal))
            if not ps:
                return None
            t = self.rng.choice(ps)
            s = _p(self.rng.choice([n for n in POOL if n != t] or ["d"]))
            if s.name == t or s.name in params_of(goal):
                return None
            minor = replace_param(goal, t, s)
            b1, b2 = self._split(budget, 2)
            return RuleApp(Rule.EqE, (g(Eq(s, _p(t)), hyps, eig, b1), g(minor, hyps, eig, b2)), goal)
        if kind == "bot":
            return RuleApp(Rule.BotE, (g(BOT, hyps, eig, budget - 1),), goal)
        return self._elim_I(kind, goal, hyps, eig, budget)

    def _body_with(self, v):
        f = self.fg.atom((v,))
        if v not in free_vars(f):
            f = Atom("F", (Var(v),))
        return f

    def _elim_I(self, kind, goal, hyps, eig, budget):
        g = self.goal
        v = "x"
        f = self.fg.restrictor(v)
        if kind in ("ie3", "ie5", "ie1"):
            b = self._eigen()
            fb = substitute(f, v, _p(b))
            lf, le = self._label(), self._label()
            if kind == "ie3":
                major = I(v, f, ExistsBang(Var(v)))
                b0, b1 = self._split(budget, 2)
                xi = g(goal, hyps + ((lf, fb), (le, ExistsBang(_p(b)))), eig | {b}, b1)
                return RuleApp(Rule.IE3p, (g(major, hyps, eig, b0), xi), goal, (lf, le), (b,))
            if kind == "ie5":
                t = _p(self.rng.choice(POOL))
                major = I(v, f, Eq(Var(v), t))
                b0, b1, b2 = self._split(budget, 3)
                xi = g(goal, hyps + ((lf, fb), (le, ExistsBang(_p(b)))), eig | {b}, b2)
                return RuleApp(Rule.IE5p, (g(major, hyps, eig, b0), g(ExistsBang(t), hyps, eig, b1), xi),
                               goal, (lf, le), (b,))
            # ie1: IE1p with scope G x
            scope = Atom("G", (Var(v),))
            major = I(v, f, scope)
            t = _p(self.rng.choice(POOL))
            a, la, ea, lg = self._eigen(), self._label(), self._label(), self._label()
            b0, b1, b2, b4 = self._split(budget, 4)
            pi = self._pi_to(f, v, t, a, la, ea)
            xi = g(goal, hyps + ((lf, fb), (lg, Atom("G", (_p(b),))), (le, ExistsBang(_p(b)))),
                   eig | {b}, b4)
            prem = (g(major, hyps, eig, b0), g(substitute(f, v, t), hyps, eig, b1),
                    g(ExistsBang(t), hyps, eig, b2), pi, xi)
            return RuleApp(Rule.IE1p, prem, goal, (la, ea, lf, lg, le), (a, b))
        # ie2 / ie4: atomic goal A t2 from A t1
        ps = sorted(params_of(goal))
        if not ps:
            return None
        t2 = ps[0]
        t1 = self.rng.choice([n for n in POOL if n != t2 and n not in params_of(goal)] or [None])
        if t1 is None:
            return None
        minor = replace_param(goal, t2, _p(t1))
        f1 = substitute(f, v, _p(t1))
        if kind == "ie2":
            major = I(v, f, ExistsBang(Var(v)))
            parts = self._split(budget, 6)
            prem = (g(major, hyps, eig, parts[0]), g(ExistsBang(_p(t1)), hyps, eig, parts[1]),
                    g(ExistsBang(_p(t2)), hyps, eig, parts[2]), g(f1, hyps, eig, parts[3]),
                    g(substitute(f, v, _p(t2)), hyps, eig, parts[4]), g(minor, hyps, eig, parts[5]))
            return RuleApp(Rule.IE2p, prem, goal)
        major = I(v, f, Eq(Var(v), _p(t2)))
        parts = self._split(budget, 5)
        prem = (g(major, hyps, eig, parts[0]), g(ExistsBang(_p(t1)), hyps, eig, parts[1]),
                g(ExistsBang(_p(t2)), hyps, eig, parts[2]), g(f1, hyps, eig, parts[3]),
                g(minor, hyps, eig, parts[4]))
        return RuleApp(Rule.IE4p, prem, goal)


def _unused_var(f) -> str:
    taken = bound_vars(f) | free_vars(f)
    return next(v for v in "xyzwuvst" if v not in taken)


def random_deduction(seed: int, max_nodes: int = 40, budget: int | None = None,
                     binary_quantifier: bool = True, tries: int = 50,
                     detour_bias: float = 0.5) -> Deduction:
    """A valid deduction with at most ``max_nodes`` nodes, determined by ``seed``."""
    rng = random.Random(seed)
    for _ in range(tries):
        b = budget if budget is not None else rng.randint(3, max(4, max_nodes // 2))
        gen = DeductionGen(rng, b, binary_quantifier, detour_bias)
        goal = gen.fg.formula(2)
        d = gen.goal(goal)
        if size(d) <= max_nodes:
            return uniquify_parameters(d)
    raise RuntimeError("could not generate a small enough deduction")


def random_restricted(seed: int, depth: int = 3):
    return FormulaGen(random.Random(seed)).restricted(depth)


def random_restrictor(seed: int):
    """A description-free formula with the single free variable ``x``."""
    return FormulaGen(random.Random(seed)).restrictor("x")
