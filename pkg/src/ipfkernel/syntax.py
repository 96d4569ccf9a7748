"""Terms, formulas, substitution, alpha-equivalence and the S-expression grammar.

Terms are constants ``(c NAME)``, parameters ``(p NAME)``, bound variables
``NAME`` and, in the iota systems, descriptions ``(iota NAME formula)``.
Formulas follow the grammar::

    bot | (PRED term*) | (= t t) | (ex! t) | (and f f) | (or f f)
        | (imp f f) | (iff f f) | (not f) | (all NAME f) | (ex NAME f)
        | (I NAME f f)

``(not f)`` is read as ``(imp f bot)``; there is no negation node.

Template scripts may additionally use schematic letters: ``?t`` in term
position and ``(?F term*)`` in formula position. These never occur in
ordinary proofs and are removed by :func:`instantiate_schema`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import IotaNotAllowed, ParseError, RestrictionViolation
from .sexpr import SList, Sym, pos_of, read_one
from .systems import System

NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
RESERVED = frozenset({"bot", "=", "ex!", "and", "or", "imp", "iff", "not",
                      "all", "ex", "I", "iota", "c", "p"})


# -- terms -----------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Iota:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class SchemaTerm:
    name: str


Term = Union[Const, Param, Var, Iota, SchemaTerm]


# -- formulas --------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class ExistsBang:
    arg: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class I:
    var: str
    restrictor: "Formula"
    scope: "Formula"


@dataclass(frozen=True)
class SchemaFormula:
    name: str
    args: tuple = ()


Formula = Union[Atom, Bottom, Eq, ExistsBang, And, Or, Imp, Iff, Forall,
                Exists, I, SchemaFormula]

BOT = Bottom()
ATOMIC = (Atom, Bottom, Eq, ExistsBang)
BINARY = (And, Or, Imp, Iff)
QUANT = (Forall, Exists)


def Not(f: Formula) -> Imp:
    return Imp(f, BOT)


def is_atomic(f: Formula) -> bool:
    return isinstance(f, ATOMIC)


# -- traversal helpers -----------------------------------------------------

def term_children_formulas(t: Term):
    if isinstance(t, Iota):
        yield t.body


def formula_terms(f: Formula):
    """Terms occurring directly in an atomic formula."""
    if isinstance(f, (Atom, SchemaFormula)):
        return f.args
    if isinstance(f, Eq):
        return (f.lhs, f.rhs)
    if isinstance(f, ExistsBang):
        return (f.arg,)
    return ()


def subformulas(f: Formula):
    """Immediate proper subformulas (ignoring those inside iota terms)."""
    if isinstance(f, BINARY):
        return (f.left, f.right)
    if isinstance(f, QUANT):
        return (f.body,)
    if isinstance(f, I):
        return (f.restrictor, f.scope)
    return ()


def degree(f: Formula) -> int:
    """Number of connective and quantifier nodes; atomic formulas have degree 0."""
    if isinstance(f, BINARY):
        return degree(f.left) + degree(f.right) + 1
    if isinstance(f, QUANT):
        return degree(f.body) + 1
    if isinstance(f, I):
        return degree(f.restrictor) + degree(f.scope) + 1
    return 0


def _collect(x, kind, out: set):
    if isinstance(x, kind):
        out.add(x.name)
    if isinstance(x, Iota):
        _collect(x.body, kind, out)
    elif isinstance(x, (Atom, Eq, ExistsBang, SchemaFormula)):
        for t in formula_terms(x):
            _collect(t, kind, out)
    else:
        for g in subformulas(x) if not isinstance(x, (Const, Param, Var, SchemaTerm)) else ():
            _collect(g, kind, out)


def params_of(x) -> frozenset:
    """Names of all parameters occurring in a term or formula, iota bodies included."""
    out: set = set()
    _collect(x, Param, out)
    return frozenset(out)


def consts_of(x) -> frozenset:
    out: set = set()
    _collect(x, Const, out)
    return frozenset(out)


def free_vars(x, bound: frozenset = frozenset()) -> frozenset:
    if isinstance(x, Var):
        return frozenset() if x.name in bound else frozenset({x.name})
    if isinstance(x, Iota):
        return free_vars(x.body, bound | {x.var})
    if isinstance(x, (Const, Param, SchemaTerm)):
        return frozenset()
    if isinstance(x, (Atom, Eq, ExistsBang, SchemaFormula)):
        out = frozenset()
        for t in formula_terms(x):
            out |= free_vars(t, bound)
        return out
    if isinstance(x, BINARY):
        return free_vars(x.left, bound) | free_vars(x.right, bound)
    if isinstance(x, QUANT):
        return free_vars(x.body, bound | {x.var})
    if isinstance(x, I):
        b = bound | {x.var}
        return free_vars(x.restrictor, b) | free_vars(x.scope, b)
    return frozenset()


def bound_vars(x) -> frozenset:
    out: set = set()

    def walk(y):
        if isinstance(y, Iota):
            out.add(y.var)
            walk(y.body)
        elif isinstance(y, (Atom, Eq, ExistsBang, SchemaFormula)):
            for t in formula_terms(y):
                walk(t)
        elif isinstance(y, (QUANT, I)) or isinstance(y, QUANT):
            out.add(y.var)
            for g in subformulas(y):
                walk(g)
        elif isinstance(y, BINARY):
            walk(y.left)
            walk(y.right)

    walk(x)
    return frozenset(out)


def contains_iota(x) -> bool:
    if isinstance(x, Iota):
        return True
    if isinstance(x, (Const, Param, Var, SchemaTerm)):
        return False
    if isinstance(x, (Atom, Eq, ExistsBang, SchemaFormula)):
        return any(contains_iota(t) for t in formula_terms(x))
    return any(contains_iota(g) for g in subformulas(x))


def contains_I(f) -> bool:
    if isinstance(f, I):
        return True
    if isinstance(f, Iota):
        return contains_I(f.body)
    if isinstance(f, (Const, Param, Var, SchemaTerm)):
        return False
    if isinstance(f, (Atom, Eq, ExistsBang, SchemaFormula)):
        return any(contains_I(t) for t in formula_terms(f))
    return any(contains_I(g) for g in subformulas(f))


def fresh_name(base: str, used: Iterable[str]) -> str:
    used = set(used)
    name = base
    while name in used:
        name += "'"
    return name


# -- substitution ----------------------------------------------------------

def _rebuild_atomic(f, terms):
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(terms))
    if isinstance(f, SchemaFormula):
        return SchemaFormula(f.name, tuple(terms))
    if isinstance(f, Eq):
        return Eq(terms[0], terms[1])
    return ExistsBang(terms[0])


def _subst_binder(var, bodies, x, t, tfv):
    """Push substitution x:=t under a binder of ``var``; rename on clash."""
    if var == x:
        return var, bodies
    if var in tfv and any(x in free_vars(b) for b in bodies):
        avoid = set(tfv) | {x}
        for b in bodies:
            avoid |= free_vars(b) | bound_vars(b)
        new = fresh_name(var, avoid)
        bodies = [_subst(b, var, Var(new), frozenset({new})) for b in bodies]
        var = new
    return var, [_subst(b, x, t, tfv) for b in bodies]


def _subst_term(s: Term, x: str, t: Term, tfv) -> Term:
    if isinstance(s, Var):
        return t if s.name == x else s
    if isinstance(s, Iota):
        v, (body,) = _subst_binder(s.var, [s.body], x, t, tfv)
        return Iota(v, body)
    return s


def _subst(f, x, t, tfv):
    if isinstance(f, (Const, Param, Var, Iota, SchemaTerm)):
        return _subst_term(f, x, t, tfv)
    if isinstance(f, (Atom, Eq, ExistsBang, SchemaFormula)):
        return _rebuild_atomic(f, [_subst_term(a, x, t, tfv) for a in formula_terms(f)])
    if isinstance(f, Bottom):
        return f
    if isinstance(f, BINARY):
        return type(f)(_subst(f.left, x, t, tfv), _subst(f.right, x, t, tfv))
    if isinstance(f, QUANT):
        v, (body,) = _subst_binder(f.var, [f.body], x, t, tfv)
        return type(f)(v, body)
    if isinstance(f, I):
        v, (r, s) = _subst_binder(f.var, [f.restrictor, f.scope], x, t, tfv)
        return I(v, r, s)
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, x: str, t: Term) -> Formula:
    """Replace the free variable ``x`` by ``t`` in ``f``, renaming binders that would capture."""
    return _subst(f, x, t, free_vars(t))


def substitute_term(s: Term, x: str, t: Term) -> Term:
    return _subst_term(s, x, t, free_vars(t))


def _replace(f, match, t):
    """Replace every closed subterm satisfying ``match`` by ``t`` (no binder issues: t is closed)."""
    if isinstance(f, (Const, Param, Var, SchemaTerm)):
        return t if match(f) else f
    if isinstance(f, Iota):
        if match(f):
            return t
        return Iota(f.var, _replace(f.body, match, t))
    if isinstance(f, (Atom, Eq, ExistsBang, SchemaFormula)):
        return _rebuild_atomic(f, [_replace(a, match, t) for a in formula_terms(f)])
    if isinstance(f, Bottom):
        return f
    if isinstance(f, BINARY):
        return type(f)(_replace(f.left, match, t), _replace(f.right, match, t))
    if isinstance(f, QUANT):
        return type(f)(f.var, _replace(f.body, match, t))
    if isinstance(f, I):
        return I(f.var, _replace(f.restrictor, match, t), _replace(f.scope, match, t))
    raise TypeError(f"not a formula: {f!r}")


def replace_param(f, name: str, t: Term):
    """Replace parameter ``name`` by the closed term ``t`` everywhere in ``f``."""
    if name not in params_of(f):
        return f
    target = Param(name)
    return _replace(f, lambda s: s == target, t)


def replace_term(f, s: Term, t: Term):
    """Replace every occurrence of the closed term ``s`` by ``t``."""
    key = alpha_key(s)
    return _replace(f, lambda u: alpha_key(u) == key, t)


def rename_param(f, old: str, new: str):
    return replace_param(f, old, Param(new))


# -- alpha equivalence -----------------------------------------------------

def _tkey(t, env):
    if isinstance(t, Var):
        for i in range(len(env) - 1, -1, -1):
            if env[i] == t.name:
                return ("b", len(env) - 1 - i)
        return ("v", t.name)
    if isinstance(t, Const):
        return ("c", t.name)
    if isinstance(t, Param):
        return ("p", t.name)
    if isinstance(t, Iota):
        return ("iota", _fkey(t.body, env + (t.var,)))
    if isinstance(t, SchemaTerm):
        return ("?", t.name)
    raise TypeError(f"not a term: {t!r}")


def _fkey(f, env):
    if isinstance(f, Atom):
        return ("A", f.pred, tuple(_tkey(a, env) for a in f.args))
    if isinstance(f, SchemaFormula):
        return ("?", f.name, tuple(_tkey(a, env) for a in f.args))
    if isinstance(f, Bottom):
        return ("bot",)
    if isinstance(f, Eq):
        return ("=", _tkey(f.lhs, env), _tkey(f.rhs, env))
    if isinstance(f, ExistsBang):
        return ("E!", _tkey(f.arg, env))
    if isinstance(f, BINARY):
        return (type(f).__name__, _fkey(f.left, env), _fkey(f.right, env))
    if isinstance(f, QUANT):
        return (type(f).__name__, _fkey(f.body, env + (f.var,)))
    if isinstance(f, I):
        e = env + (f.var,)
        return ("I", _fkey(f.restrictor, e), _fkey(f.scope, e))
    raise TypeError(f"not a formula: {f!r}")


def alpha_key(x):
    """A hashable key equal for exactly the alpha-equivalent terms/formulas."""
    if isinstance(x, (Const, Param, Var, Iota, SchemaTerm)):
        return _tkey(x, ())
    return _fkey(x, ())


def alpha_eq(a, b) -> bool:
    if a is b or a == b:
        return True
    return alpha_key(a) == alpha_key(b)


# -- Leibniz matching ------------------------------------------------------

def _lm(p, q, t1k, t2k, envp, envq=None):
    envq = envp if envq is None else envq
    # bound variables are aligned positionally, so key comparison is done per side
    if type(p) is not type(q):
        return False
    if isinstance(p, Bottom):
        return True
    if isinstance(p, (Atom, Eq, ExistsBang, SchemaFormula)):
        if isinstance(p, (Atom, SchemaFormula)) and (
                getattr(p, "pred", None) != getattr(q, "pred", None)
                or getattr(p, "name", None) != getattr(q, "name", None)
                or len(p.args) != len(q.args)):
            return False
        for a, b in zip(formula_terms(p), formula_terms(q)):
            ka, kb = _tkey(a, envp), _tkey(b, envq)
            if ka == kb or (ka == t1k and kb == t2k):
                continue
            if isinstance(a, Iota) and isinstance(b, Iota):
                if _lm(a.body, b.body, t1k, t2k, envp + (a.var,), envq + (b.var,)):
                    continue
            return False
        return True
    if isinstance(p, BINARY):
        return _lm(p.left, q.left, t1k, t2k, envp, envq) and _lm(p.right, q.right, t1k, t2k, envp, envq)
    if isinstance(p, QUANT):
        return _lm(p.body, q.body, t1k, t2k, envp + (p.var,), envq + (q.var,))
    if isinstance(p, I):
        ep, eq = envp + (p.var,), envq + (q.var,)
        return _lm(p.restrictor, q.restrictor, t1k, t2k, ep, eq) and _lm(p.scope, q.scope, t1k, t2k, ep, eq)
    return False


def leibniz_match(premise: Formula, conclusion: Formula, t1: Term, t2: Term) -> bool:
    """True iff some A, x give premise = A[x:=t1] and conclusion = A[x:=t2].

    Any subset of the occurrences of ``t1`` may be replaced.
    """
    return _lm(premise, conclusion, _tkey(t1, ()), _tkey(t2, ()), ())


# -- restrictions ----------------------------------------------------------

def _scope_ok(f: I) -> bool:
    s = f.scope
    if isinstance(s, ExistsBang):
        return s.arg == Var(f.var)
    if isinstance(s, Eq):
        return s.lhs == Var(f.var) and f.var not in free_vars(s.rhs)
    return False


def I_restriction_violations(f: Formula) -> list:
    """Subformulas of ``f`` breaking restriction (1) in binary-quantifier notation."""
    bad = []

    def walk(g):
        if isinstance(g, I):
            if not _scope_ok(g) or contains_I(g.restrictor) or contains_iota(g):
                bad.append(g)
                return
            walk(g.restrictor)
        else:
            for h in subformulas(g):
                walk(h)

    walk(f)
    return bad


def iota_restriction_violations(f: Formula) -> list:
    """Iota terms of ``f`` breaking restriction (1) in term-forming notation."""
    bad = []

    def ok_iota(t):
        return isinstance(t, Iota) and not contains_iota(t.body) and not contains_I(t.body)

    def walk(g):
        if isinstance(g, ExistsBang):
            if isinstance(g.arg, Iota) and not ok_iota(g.arg):
                bad.append(g.arg)
        elif isinstance(g, Eq):
            if isinstance(g.lhs, Iota) and isinstance(g.rhs, Iota):
                bad.append(g.rhs)
            for t in (g.lhs, g.rhs):
                if isinstance(t, Iota) and not ok_iota(t):
                    bad.append(t)
        elif isinstance(g, (Atom, SchemaFormula)):
            for t in g.args:
                if contains_iota(t):
                    bad.append(t)
        else:
            for h in subformulas(g):
                walk(h)

    walk(f)
    return bad


def restriction_violations(f: Formula) -> list:
    return I_restriction_violations(f) + iota_restriction_violations(f)


# -- parsing ---------------------------------------------------------------

def _name(sx, what="name") -> str:
    if not isinstance(sx, Sym) or not NAME_RE.match(sx):
        raise ParseError(f"expected {what}, got {render_sexpr(sx)!r}", pos_of(sx))
    return str(sx)


class FormulaReader:
    """Converts S-expressions into formulas, honouring the system's gates."""

    def __init__(self, mode: System | None = None, schematic: bool = False,
                 free: Iterable[str] = ()):
        self.mode = mode
        self.schematic = schematic
        self.free = frozenset(free)

    def term(self, sx, bound: tuple) -> Term:
        if isinstance(sx, Sym):
            if sx.startswith("?") and self.schematic:
                return SchemaTerm(_name(Sym(sx[1:], sx.pos), "schematic letter"))
            name = _name(sx, "term")
            if name not in bound and name not in self.free:
                raise ParseError(f"unbound variable {name!r}", sx.pos)
            return Var(name)
        if not sx:
            raise ParseError("empty term", pos_of(sx))
        head = sx[0]
        if head == "c" and len(sx) == 2:
            return Const(_name(sx[1]))
        if head == "p" and len(sx) == 2:
            return Param(_name(sx[1]))
        if head == "iota" and len(sx) == 3:
            if self.mode is not None and not self.mode.has_iota:
                raise IotaNotAllowed(f"iota term in system {self.mode}", pos_of(sx))
            v = _name(sx[1], "variable")
            return Iota(v, self.formula(sx[2], bound + (v,)))
        raise ParseError(f"malformed term {render_sexpr(sx)!r}", pos_of(sx))

    def formula(self, sx, bound: tuple = ()) -> Formula:
        if isinstance(sx, Sym):
            if sx == "bot":
                return BOT
            raise ParseError(f"expected formula, got {str(sx)!r}", sx.pos)
        if not sx or not isinstance(sx[0], Sym):
            raise ParseError("malformed formula", pos_of(sx))
        head, args = str(sx[0]), sx[1:]

        def need(n):
            if len(args) != n:
                raise ParseError(f"{head!r} takes {n} arguments", pos_of(sx))

        if head == "=":
            need(2)
            return Eq(self.term(args[0], bound), self.term(args[1], bound))
        if head == "ex!":
            need(1)
            return ExistsBang(self.term(args[0], bound))
        if head in ("and", "or", "imp", "iff"):
            need(2)
            cls = {"and": And, "or": Or, "imp": Imp, "iff": Iff}[head]
            return cls(self.formula(args[0], bound), self.formula(args[1], bound))
        if head == "not":
            need(1)
            return Imp(self.formula(args[0], bound), BOT)
        if head in ("all", "ex"):
            need(2)
            v = _name(args[0], "variable")
            cls = Forall if head == "all" else Exists
            return cls(v, self.formula(args[1], bound + (v,)))
        if head == "I":
            need(3)
            v = _name(args[0], "variable")
            b = bound + (v,)
            return I(v, self.formula(args[1], b), self.formula(args[2], b))
        if head.startswith("?") and self.schematic:
            return SchemaFormula(_name(Sym(head[1:], sx[0].pos), "schematic letter"),
                                 tuple(self.term(a, bound) for a in args))
        if head in RESERVED:
            raise ParseError(f"malformed {head!r} formula", pos_of(sx))
        return Atom(_name(sx[0], "predicate"), tuple(self.term(a, bound) for a in args))


def check_mode_restrictions(f: Formula, mode: System | None, position=None) -> None:
    if mode is None or not mode.restricted:
        return
    bad = restriction_violations(f)
    if bad:
        raise RestrictionViolation(
            f"formula violates the {mode} restriction at {print_any(bad[0])}", position)


def parse_formula(text: str, mode: System | None = None, schematic: bool = False) -> Formula:
    """Parse a closed formula; ``mode`` gates iota terms and the restricted shapes."""
    sx = read_one(text)
    f = FormulaReader(mode, schematic).formula(sx)
    check_mode_restrictions(f, mode, pos_of(sx))
    return f


def parse_term(text: str, mode: System | None = None, schematic: bool = False) -> Term:
    return FormulaReader(mode, schematic).term(read_one(text), ())


# -- printing --------------------------------------------------------------

def render_sexpr(sx) -> str:
    if isinstance(sx, list):
        return "(" + " ".join(render_sexpr(x) for x in sx) + ")"
    return str(sx)


def print_term(t: Term) -> str:
    if isinstance(t, Const):
        return f"(c {t.name})"
    if isinstance(t, Param):
        return f"(p {t.name})"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Iota):
        return f"(iota {t.var} {print_formula(t.body)})"
    if isinstance(t, SchemaTerm):
        return f"?{t.name}"
    raise TypeError(f"not a term: {t!r}")


_BIN_NAMES = {And: "and", Or: "or", Imp: "imp", Iff: "iff"}


def print_formula(f: Formula) -> str:
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Atom):
        return "(" + " ".join([f.pred] + [print_term(a) for a in f.args]) + ")"
    if isinstance(f, SchemaFormula):
        return "(" + " ".join(["?" + f.name] + [print_term(a) for a in f.args]) + ")"
    if isinstance(f, Eq):
        return f"(= {print_term(f.lhs)} {print_term(f.rhs)})"
    if isinstance(f, ExistsBang):
        return f"(ex! {print_term(f.arg)})"
    if isinstance(f, BINARY):
        return f"({_BIN_NAMES[type(f)]} {print_formula(f.left)} {print_formula(f.right)})"
    if isinstance(f, Forall):
        return f"(all {f.var} {print_formula(f.body)})"
    if isinstance(f, Exists):
        return f"(ex {f.var} {print_formula(f.body)})"
    if isinstance(f, I):
        return f"(I {f.var} {print_formula(f.restrictor)} {print_formula(f.scope)})"
    raise TypeError(f"not a formula: {f!r}")


def print_any(x) -> str:
    if isinstance(x, (Const, Param, Var, Iota, SchemaTerm)):
        return print_term(x)
    return print_formula(x)


# -- schematic instantiation -----------------------------------------------

def instantiate_schema(f, formulas: dict, terms: dict):
    """Replace schematic letters.

    ``formulas`` maps a letter to ``(vars, body)``: ``(?F t1 .. tn)`` becomes
    ``body`` with ``vars[i]`` replaced by ``ti``. ``terms`` maps a letter to a Term.
    """
    from .errors import MissingBinding

    def term(t):
        if isinstance(t, SchemaTerm):
            if t.name not in terms:
                raise MissingBinding(f"no binding for ?{t.name}")
            return terms[t.name]
        if isinstance(t, Iota):
            return Iota(t.var, form(t.body))
        return t

    def form(g):
        if isinstance(g, SchemaFormula):
            if g.name not in formulas:
                raise MissingBinding(f"no binding for ?{g.name}")
            vs, body = formulas[g.name]
            if len(vs) != len(g.args):
                raise MissingBinding(f"?{g.name} expects {len(vs)} arguments")
            args = [term(a) for a in g.args]
            # rename the schema's own variables first so arguments cannot clash with them
            tmp = []
            avoid = set(free_vars(body)) | bound_vars(body)
            for a in args:
                avoid |= free_vars(a)
            for v in vs:
                nv = fresh_name("_" + v, avoid)
                avoid.add(nv)
                tmp.append(nv)
                body = substitute(body, v, Var(nv))
            for nv, a in zip(tmp, args):
                body = substitute(body, nv, a)
            return body
        if isinstance(g, (Atom, Eq, ExistsBang)):
            return _rebuild_atomic(g, [term(a) for a in formula_terms(g)])
        if isinstance(g, Bottom):
            return g
        if isinstance(g, BINARY):
            return type(g)(form(g.left), form(g.right))
        if isinstance(g, QUANT):
            return type(g)(g.var, form(g.body))
        if isinstance(g, I):
            return I(g.var, form(g.restrictor), form(g.scope))
        raise TypeError(f"not a formula: {g!r}")

    if isinstance(f, (Const, Param, Var, Iota, SchemaTerm)):
        return term(f)
    return form(f)
