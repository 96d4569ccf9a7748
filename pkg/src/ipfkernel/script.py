"""Reading and writing ``.fpl`` proof scripts.

Grammar::

    (proof NAME :system SYS :decls (DECL*) BODY)
    BODY := (assume LABEL FORMULA)
          | (eq-refl TERM)
          | (ll VAR VAR FORMULA)
          | (rule RULEID :conclusion FORMULA [:eigen PARAM | :eigen (PARAM*)]
                  [:discharge (LABEL*)] BODY*)
          | (hole NAME :conclusion FORMULA BODY*)        ; templates only

Schematic letters ``?t`` and ``(?F args)`` are accepted in templates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .deduction import (ARITY, Assume, Deduction, EqRefl, Hole, LLAxiom,
                        Rule, RuleApp, iter_nodes, validate_structure)
from .errors import ParseError
from .sexpr import SList, Sym, pos_of, read_all
from .syntax import (FormulaReader, consts_of, params_of, print_formula,
                     print_term, render_sexpr)
from .systems import System

LABEL_RE = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_']*$")
PARAM_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


@dataclass
class ProofScript:
    name: str
    system: System
    body: Deduction
    decls: dict = field(default_factory=dict)


def _keywords(items, allowed, where):
    """Split ``:key value`` pairs from trailing positional items."""
    opts = {}
    i = 0
    while i < len(items) and isinstance(items[i], Sym) and items[i].startswith(":"):
        key = str(items[i])[1:]
        if key not in allowed:
            raise ParseError(f"unknown keyword :{key} in {where}", items[i].pos)
        if key in opts:
            raise ParseError(f"repeated keyword :{key}", items[i].pos)
        if i + 1 >= len(items):
            raise ParseError(f"missing value for :{key}", items[i].pos)
        opts[key] = items[i + 1]
        i += 2
    return opts, items[i:]


def _label(sx) -> str:
    if not isinstance(sx, Sym) or not LABEL_RE.match(sx):
        raise ParseError(f"bad label {render_sexpr(sx)!r}", pos_of(sx))
    return str(sx)


def _param(sx) -> str:
    if not isinstance(sx, Sym) or not PARAM_RE.match(sx):
        raise ParseError(f"bad parameter {render_sexpr(sx)!r}", pos_of(sx))
    return str(sx)


class _NodeReader:
    def __init__(self, system: System | None, schematic: bool, allow_holes: bool):
        self.fr = FormulaReader(system, schematic)
        self.allow_holes = allow_holes

    def node(self, sx) -> Deduction:
        if not isinstance(sx, SList) or not sx or not isinstance(sx[0], Sym):
            raise ParseError(f"expected a deduction node, got {render_sexpr(sx)!r}", pos_of(sx))
        head, args = str(sx[0]), sx[1:]
        if head == "assume":
            if len(args) != 2:
                raise ParseError("assume takes a label and a formula", sx.pos)
            return Assume(_label(args[0]), self.fr.formula(args[1]))
        if head == "eq-refl":
            if len(args) != 1:
                raise ParseError("eq-refl takes one term", sx.pos)
            return EqRefl(self.fr.term(args[0], ()))
        if head == "ll":
            if len(args) != 3:
                raise ParseError("ll takes two variables and a formula", sx.pos)
            x, y = _param(args[0]), _param(args[1])
            return LLAxiom(x, y, self.fr.formula(args[2], (x,)))
        if head == "rule":
            if not args or not isinstance(args[0], Sym):
                raise ParseError("rule needs a rule name", sx.pos)
            try:
                rule = Rule(str(args[0]))
            except ValueError:
                raise ParseError(f"unknown rule {str(args[0])!r}", args[0].pos) from None
            if rule in (Rule.EqI, Rule.LLAxiom):
                raise ParseError(f"{rule.value} is written as an axiom leaf", args[0].pos)
            if rule is Rule.EqEGen and not self.allow_holes:
                raise ParseError("EqEGen is only allowed in templates", args[0].pos)
            opts, rest = _keywords(args[1:], {"conclusion", "eigen", "discharge"}, "rule")
            if "conclusion" not in opts:
                raise ParseError("rule node needs :conclusion", sx.pos)
            concl = self.fr.formula(opts["conclusion"])
            eig = opts.get("eigen")
            if eig is None:
                eigen = ()
            elif isinstance(eig, SList):
                eigen = tuple(_param(e) for e in eig)
            else:
                eigen = (_param(eig),)
            dis = opts.get("discharge", SList())
            if not isinstance(dis, SList):
                raise ParseError(":discharge takes a list of labels", pos_of(dis))
            discharged = tuple(_label(l) for l in dis)
            premises = tuple(self.node(p) for p in rest)
            if len(premises) != ARITY[rule]:
                raise ParseError(f"{rule.value} takes {ARITY[rule]} premises, got {len(premises)}", sx.pos)
            return RuleApp(rule, premises, concl, discharged, eigen)
        if head == "hole":
            if not self.allow_holes:
                raise ParseError("hole nodes are only allowed in templates", sx.pos)
            if not args:
                raise ParseError("hole needs a name", sx.pos)
            opts, rest = _keywords(args[1:], {"conclusion"}, "hole")
            if "conclusion" not in opts:
                raise ParseError("hole needs :conclusion", sx.pos)
            return Hole(str(args[0]), self.fr.formula(opts["conclusion"]),
                        tuple(self.node(p) for p in rest))
        raise ParseError(f"unknown node kind {head!r}", sx.pos)


def _read_decls(sx) -> dict:
    if not isinstance(sx, SList):
        raise ParseError(":decls takes a list", pos_of(sx))
    out = {"consts": [], "params": []}
    seen = set()
    for d in sx:
        if not isinstance(d, SList) or not d or d[0] not in ("consts", "params"):
            raise ParseError("declaration must be (consts ...) or (params ...)", pos_of(d))
        for name in d[1:]:
            n = _param(name)
            if n in seen:
                raise ParseError(f"name {n!r} declared twice", name.pos)
            seen.add(n)
            out[str(d[0])].append(n)
    return out


def parse_script(text: str, schematic: bool = False, allow_holes: bool = False,
                 validate: bool = True) -> ProofScript:
    exprs = read_all(text)
    if len(exprs) != 1:
        raise ParseError(f"expected one proof form, found {len(exprs)}", 0)
    sx = exprs[0]
    if not isinstance(sx, SList) or not sx or sx[0] != "proof":
        raise ParseError("script must start with (proof NAME ...)", pos_of(sx))
    if len(sx) < 2 or not isinstance(sx[1], Sym):
        raise ParseError("proof needs a name", pos_of(sx))
    opts, rest = _keywords(sx[2:], {"system", "decls"}, "proof")
    if "system" not in opts:
        raise ParseError("proof needs :system", sx.pos)
    try:
        system = System.parse(str(opts["system"]))
    except ValueError as e:
        raise ParseError(str(e), pos_of(opts["system"])) from None
    decls = _read_decls(opts["decls"]) if "decls" in opts else {}
    if len(rest) != 1:
        raise ParseError("proof needs exactly one body", sx.pos)
    body = _NodeReader(system, schematic, allow_holes).node(rest[0])
    if validate:
        validate_structure(body)
    return ProofScript(str(sx[1]), system, body, decls)


def parse_proof(text: str, system: System | None = None, schematic: bool = False,
                allow_holes: bool = False) -> Deduction:
    """Parse either a full ``(proof ...)`` script or a bare deduction node."""
    exprs = read_all(text)
    if len(exprs) == 1 and isinstance(exprs[0], SList) and exprs[0] and exprs[0][0] == "proof":
        return parse_script(text, schematic, allow_holes).body
    if len(exprs) != 1:
        raise ParseError(f"expected one deduction, found {len(exprs)}", 0)
    body = _NodeReader(system, schematic, allow_holes).node(exprs[0])
    validate_structure(body)
    return body


# -- printing --------------------------------------------------------------

def _node_head(d: Deduction) -> str:
    if isinstance(d, Assume):
        return f"(assume {d.label} {print_formula(d.formula)})"
    if isinstance(d, EqRefl):
        return f"(eq-refl {print_term(d.term)})"
    if isinstance(d, LLAxiom):
        return f"(ll {d.x} {d.y} {print_formula(d.body)})"
    if isinstance(d, Hole):
        return f"(hole {d.name} :conclusion {print_formula(d.conclusion)}"
    parts = [f"(rule {d.rule.value} :conclusion {print_formula(d.conclusion)}"]
    if len(d.eigen) == 1:
        parts.append(f":eigen {d.eigen[0]}")
    elif d.eigen:
        parts.append(f":eigen ({' '.join(d.eigen)})")
    if d.discharged:
        parts.append(f":discharge ({' '.join(d.discharged)})")
    return " ".join(parts)


def print_proof(d: Deduction, indent: int = 0) -> str:
    pad = "  " * indent
    head = _node_head(d)
    if isinstance(d, (Assume, EqRefl, LLAxiom)):
        return pad + head
    if not d.premises:
        return pad + head + ")"
    body = "\n".join(print_proof(p, indent + 1) for p in d.premises)
    return f"{pad}{head}\n{body})"


def compute_decls(d: Deduction) -> dict:
    consts, params = set(), set()
    for _, n in iter_nodes(d):
        fs = [n.term] if isinstance(n, EqRefl) else [n.body if isinstance(n, LLAxiom) else n.conclusion]
        for f in fs:
            consts |= consts_of(f)
            params |= params_of(f)
        if isinstance(n, RuleApp):
            params.update(n.eigen)
    return {"consts": sorted(consts), "params": sorted(params)}


def print_script(name: str, system: System, d: Deduction) -> str:
    decls = compute_decls(d)
    parts = []
    if decls["consts"]:
        parts.append("(consts " + " ".join(decls["consts"]) + ")")
    if decls["params"]:
        parts.append("(params " + " ".join(decls["params"]) + ")")
    return (f"(proof {name} :system {system.value}\n"
            f"  :decls ({' '.join(parts)})\n"
            f"{print_proof(d, 1)})\n")
