"""Proof trees with labelled assumption classes.

A deduction is an immutable tree of :class:`Assume` leaves, axiom leaves
(:class:`EqRefl`, :class:`LLAxiom`) and :class:`RuleApp` nodes. Labels are
global: every leaf carrying label ``h`` belongs to the class ``h`` and a
class is discharged at most once, at a node whose subtree holds all of its
occurrences. A label that never occurs on a leaf names an empty class, so
listing it in a discharge is a vacuous discharge.

Positions are tuples of premise indices read from the root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterator, Union

from .errors import (ClassMismatch, DanglingLabel, DuplicateDischarge,
                     EigenCapture, FormulaMismatch)
from .syntax import (Eq, Formula, Forall, Iff, Imp, Iota, Term, Var,
                     alpha_eq, alpha_key, fresh_name, params_of, replace_param)


class Rule(enum.Enum):
    AndI = "AndI"
    AndEL = "AndEL"
    AndER = "AndER"
    ImpI = "ImpI"
    ImpE = "ImpE"
    OrIL = "OrIL"
    OrIR = "OrIR"
    OrE = "OrE"
    BotE = "BotE"
    IffI = "IffI"
    IffE1 = "IffE1"
    IffE2 = "IffE2"
    ForallI = "ForallI"
    ForallE = "ForallE"
    ExistsI = "ExistsI"
    ExistsE = "ExistsE"
    EqI = "EqI"
    EqE = "EqE"
    II = "II"
    IE1p = "IE1p"
    IE2p = "IE2p"
    IE3p = "IE3p"
    IE4p = "IE4p"
    IE5p = "IE5p"
    IE1pPrime = "IE1pPrime"
    IE2pPrime = "IE2pPrime"
    IE4pPrime = "IE4pPrime"
    LLAxiom = "LLAxiom"
    # template-only pseudo rule: general Leibniz, expanded before checking
    EqEGen = "EqEGen"


ARITY = {
    Rule.AndI: 2, Rule.AndEL: 1, Rule.AndER: 1, Rule.ImpI: 1, Rule.ImpE: 2,
    Rule.OrIL: 1, Rule.OrIR: 1, Rule.OrE: 3, Rule.BotE: 1, Rule.IffI: 2,
    Rule.IffE1: 2, Rule.IffE2: 2, Rule.ForallI: 1, Rule.ForallE: 2,
    Rule.ExistsI: 2, Rule.ExistsE: 2, Rule.EqE: 2, Rule.II: 4, Rule.IE1p: 5,
    Rule.IE2p: 6, Rule.IE3p: 2, Rule.IE4p: 5, Rule.IE5p: 3, Rule.IE1pPrime: 3,
    Rule.IE2pPrime: 5, Rule.IE4pPrime: 4, Rule.EqEGen: 2,
}

INTRO = frozenset({Rule.AndI, Rule.ImpI, Rule.OrIL, Rule.OrIR, Rule.IffI,
                   Rule.ForallI, Rule.ExistsI, Rule.II})
ELIM = frozenset({Rule.AndEL, Rule.AndER, Rule.ImpE, Rule.OrE, Rule.BotE,
                  Rule.IffE1, Rule.IffE2, Rule.ForallE, Rule.ExistsE, Rule.EqE,
                  Rule.IE1p, Rule.IE2p, Rule.IE3p, Rule.IE4p, Rule.IE5p,
                  Rule.IE1pPrime, Rule.IE2pPrime, Rule.IE4pPrime})
MACROS = frozenset({Rule.IE1pPrime, Rule.IE2pPrime, Rule.IE4pPrime})

# del-rule -> the minor premises a segment threads through
DEL_MINORS = {
    Rule.OrE: (1, 2),
    Rule.ExistsE: (1,),
    Rule.IE1p: (4,),
    Rule.IE3p: (1,),
    Rule.IE5p: (2,),
}

# premise indices in which each rule may discharge assumptions
DISCHARGE_PREMISES = {
    Rule.ImpI: (0,), Rule.OrE: (1, 2), Rule.IffI: (0, 1), Rule.ForallI: (0,),
    Rule.ExistsE: (1,), Rule.II: (3,), Rule.IE1p: (3, 4), Rule.IE3p: (1,),
    Rule.IE5p: (2,), Rule.IE1pPrime: (2,),
}

# eigenparameter slot -> premise index it is fresh for
EIGEN_PREMISES = {
    Rule.ForallI: (0,), Rule.ExistsE: (1,), Rule.II: (3,), Rule.IE1p: (3, 4),
    Rule.IE3p: (1,), Rule.IE5p: (2,), Rule.IE1pPrime: (2,),
}


# -- nodes -----------------------------------------------------------------

@dataclass(frozen=True, eq=True)
class Assume:
    label: str
    formula: Formula

    @property
    def conclusion(self) -> Formula:
        return self.formula

    premises = ()


@dataclass(frozen=True, eq=True)
class EqRefl:
    term: Term

    @property
    def conclusion(self) -> Formula:
        return Eq(self.term, self.term)

    premises = ()


@dataclass(frozen=True, eq=True)
class LLAxiom:
    """Lambert's Law instance: all y (iota x F = y <-> all x (F <-> x = y))."""

    x: str
    y: str
    body: Formula

    @property
    def conclusion(self) -> Formula:
        y = Var(self.y)
        return Forall(self.y, Iff(Eq(Iota(self.x, self.body), y),
                                  Forall(self.x, Iff(self.body, Eq(Var(self.x), y)))))

    premises = ()


@dataclass(frozen=True, eq=True)
class RuleApp:
    rule: Rule
    premises: tuple
    conclusion: Formula
    discharged: tuple = ()
    eigen: tuple = ()


@dataclass(frozen=True, eq=True)
class Hole:
    """Template placeholder for an arbitrary deduction of ``conclusion`` from ``premises``."""

    name: str
    conclusion: Formula
    premises: tuple = ()


Deduction = Union[Assume, EqRefl, LLAxiom, RuleApp, Hole]


# -- traversal -------------------------------------------------------------

def iter_nodes(d: Deduction, pos: tuple = ()) -> Iterator[tuple]:
    """Pre-order ``(position, node)`` pairs."""
    stack = [(pos, d)]
    while stack:
        p, n = stack.pop()
        yield p, n
        prem = n.premises
        for i in range(len(prem) - 1, -1, -1):
            stack.append((p + (i,), prem[i]))


def node_at(d: Deduction, pos: tuple) -> Deduction:
    for i in pos:
        d = d.premises[i]
    return d


def replace_at(d: Deduction, pos: tuple, new: Deduction) -> Deduction:
    if not pos:
        return new
    i = pos[0]
    prem = list(d.premises)
    prem[i] = replace_at(prem[i], pos[1:], new)
    return replace(d, premises=tuple(prem))


def size(d: Deduction) -> int:
    return sum(1 for _ in iter_nodes(d))


def with_premises(d: Deduction, premises) -> Deduction:
    premises = tuple(premises)
    if premises == d.premises:
        return d
    return replace(d, premises=premises)


def map_formulas(d: Deduction, fn, tfn=None) -> Deduction:
    """Apply ``fn`` to every formula in ``d`` (and ``tfn`` to EqRefl terms)."""
    if isinstance(d, Assume):
        return Assume(d.label, fn(d.formula))
    if isinstance(d, EqRefl):
        return EqRefl(tfn(d.term)) if tfn else d
    if isinstance(d, LLAxiom):
        return LLAxiom(d.x, d.y, fn(d.body))
    return replace(d, conclusion=fn(d.conclusion),
                   premises=tuple(map_formulas(p, fn, tfn) for p in d.premises))


def node_formulas(n: Deduction):
    if isinstance(n, LLAxiom):
        return (n.body,)
    return (n.conclusion,)


def leaves(d: Deduction) -> Iterator[tuple]:
    for p, n in iter_nodes(d):
        if isinstance(n, Assume):
            yield p, n


def labels_of(d: Deduction) -> set:
    out = set()
    for _, n in iter_nodes(d):
        if isinstance(n, Assume):
            out.add(n.label)
        elif isinstance(n, RuleApp):
            out.update(n.discharged)
    return out


def discharged_within(d: Deduction) -> set:
    out = set()
    for _, n in iter_nodes(d):
        if isinstance(n, RuleApp):
            out.update(n.discharged)
    return out


def class_formula(d: Deduction, label: str):
    for _, n in leaves(d):
        if n.label == label:
            return n.formula
    return None


def open_assumptions(d: Deduction) -> set:
    """``(label, formula)`` for every class with an occurrence not discharged in ``d``."""
    closed = discharged_within(d)
    out = {}
    for _, n in leaves(d):
        if n.label not in closed and n.label not in out:
            out[n.label] = n.formula
    return set(out.items())


def open_formulas(d: Deduction) -> list:
    seen = {}
    for _, f in open_assumptions(d):
        seen.setdefault(alpha_key(f), f)
    return list(seen.values())


def params_in(d: Deduction) -> set:
    out = set()
    for _, n in iter_nodes(d):
        for f in node_formulas(n):
            out |= params_of(f)
        if isinstance(n, EqRefl):
            out |= params_of(n.term)
        if isinstance(n, RuleApp):
            out.update(n.eigen)
    return out


def eigen_apps(d: Deduction) -> list:
    return [(p, n) for p, n in iter_nodes(d) if isinstance(n, RuleApp) and n.eigen]


# -- structural validation -------------------------------------------------

def validate_structure(d: Deduction) -> None:
    """Enforce the label invariants; raises on the first violation."""
    classes = {}
    for p, n in leaves(d):
        f = classes.get(n.label)
        if f is None:
            classes[n.label] = n.formula
        elif not alpha_eq(f, n.formula):
            raise ClassMismatch(f"label {n.label!r} used for different formulas")
    seen = set()
    for p, n in iter_nodes(d):
        if not isinstance(n, RuleApp):
            continue
        for lab in n.discharged:
            if lab in seen:
                raise DuplicateDischarge(f"label {lab!r} discharged more than once")
            seen.add(lab)
            inside = sum(1 for _, m in leaves(n) if m.label == lab)
            total = sum(1 for _, m in leaves(d) if m.label == lab)
            if inside != total:
                raise DanglingLabel(f"label {lab!r} discharged at {p} has occurrences outside that subtree")


# -- relabelling and parameter hygiene -------------------------------------

def refresh_internal(d: Deduction, used_labels: set) -> Deduction:
    """Rename every label discharged inside ``d`` to a label not in ``used_labels``.

    ``used_labels`` is updated in place.
    """
    mapping = {}
    for lab in sorted(discharged_within(d)):
        new = fresh_name(lab, used_labels)
        used_labels.add(new)
        mapping[lab] = new
    if not mapping:
        return d
    return relabel(d, mapping)


def relabel(d: Deduction, mapping: dict) -> Deduction:
    if isinstance(d, Assume):
        return Assume(mapping.get(d.label, d.label), d.formula) if d.label in mapping else d
    if not isinstance(d, (RuleApp, Hole)):
        return d
    prem = tuple(relabel(p, mapping) for p in d.premises)
    if isinstance(d, RuleApp):
        return replace(d, premises=prem,
                       discharged=tuple(mapping.get(l, l) for l in d.discharged))
    return replace(d, premises=prem)


def _rename_param_shadowed(d: Deduction, old: str, new: str) -> Deduction:
    """Rename a parameter, leaving regions owned by an inner eigen ``old`` untouched."""
    fn = (lambda f: replace_param(f, old, _P(new)))
    if isinstance(d, Assume):
        return Assume(d.label, fn(d.formula))
    if isinstance(d, EqRefl):
        return EqRefl(replace_param(d.term, old, _P(new)))
    if isinstance(d, LLAxiom):
        return LLAxiom(d.x, d.y, fn(d.body))
    if isinstance(d, Hole):
        return Hole(d.name, fn(d.conclusion),
                    tuple(_rename_param_shadowed(p, old, new) for p in d.premises))
    shadow = set()
    if old in d.eigen:
        for k, e in enumerate(d.eigen):
            if e == old:
                shadow.add(EIGEN_PREMISES[d.rule][k])
    prem = tuple(p if i in shadow else _rename_param_shadowed(p, old, new)
                 for i, p in enumerate(d.premises))
    return replace(d, premises=prem, conclusion=fn(d.conclusion))


def _P(name):
    from .syntax import Param
    return Param(name)


def rename_eigen(app: RuleApp, slot: int, new: str) -> RuleApp:
    """Rename the eigenparameter in ``slot`` within its own region only."""
    old = app.eigen[slot]
    idx = EIGEN_PREMISES[app.rule][slot]
    prem = list(app.premises)
    prem[idx] = _rename_param_shadowed(prem[idx], old, new)
    eig = list(app.eigen)
    eig[slot] = new
    return replace(app, premises=tuple(prem), eigen=tuple(eig))


def _params_excluding(d: Deduction, skip: tuple) -> set:
    """Parameters occurring in ``d`` outside the subtree at position ``skip``."""
    out = set()
    stack = [((), d)]
    while stack:
        p, n = stack.pop()
        if p == skip:
            continue
        for f in node_formulas(n):
            out |= params_of(f)
        if isinstance(n, EqRefl):
            out |= params_of(n.term)
        for i, q in enumerate(n.premises):
            stack.append((p + (i,), q))
    return out


def uniquify_parameters(d: Deduction) -> Deduction:
    """Make every eigenparameter belong to exactly one rule application.

    An eigenparameter is renamed (``a`` to ``a'``) when another application
    also uses it or when it occurs outside its own region. Deductions that
    already satisfy the condition are returned unchanged.
    """
    while True:
        owners = {}
        conflict = None
        for pos, app in eigen_apps(d):
            for k, a in enumerate(app.eigen):
                region = pos + (EIGEN_PREMISES[app.rule][k],)
                if a in owners or a in _params_excluding(d, region):
                    conflict = (pos, k)
                    break
                owners[a] = pos
            if conflict:
                break
        if conflict is None:
            return d
        pos, k = conflict
        app = node_at(d, pos)
        new = fresh_name(app.eigen[k], params_in(d))
        d = replace_at(d, pos, rename_eigen(app, k, new))


# -- graft and parameter substitution --------------------------------------

def graft(d: Deduction, label: str, sigma: Deduction, used_labels: set | None = None) -> Deduction:
    """Replace each leaf of class ``label`` by a copy of ``sigma``.

    Labels discharged inside ``sigma`` are renamed per copy so that no label
    is discharged twice; open classes of ``sigma`` merge with equally
    labelled classes of ``d``.
    """
    occ = [n for _, n in leaves(d) if n.label == label]
    if not occ:
        return d
    if not alpha_eq(occ[0].formula, sigma.conclusion):
        raise FormulaMismatch(f"class {label!r} holds a formula different from the grafted conclusion")
    for lab, f in open_assumptions(sigma):
        g = class_formula(d, lab)
        if g is not None and lab != label and not alpha_eq(f, g):
            raise FormulaMismatch(f"label {lab!r} of the grafted deduction clashes with {label!r}")
    if used_labels is None:
        used_labels = labels_of(d) | labels_of(sigma)
    first = [True]

    def go(n):
        if isinstance(n, Assume):
            if n.label != label:
                return n
            if first[0] and not (discharged_within(sigma) & labels_of(d)):
                first[0] = False
                return sigma
            first[0] = False
            return refresh_internal(sigma, used_labels)
        if not n.premises:
            return n
        return with_premises(n, [go(p) for p in n.premises])

    return _drop_label(go(d), label)


def _drop_label(d: Deduction, label: str) -> Deduction:
    if isinstance(d, RuleApp):
        prem = tuple(_drop_label(p, label) for p in d.premises)
        if label in d.discharged:
            return replace(d, premises=prem, discharged=tuple(l for l in d.discharged if l != label))
        return with_premises(d, prem)
    if isinstance(d, Hole):
        return with_premises(d, [_drop_label(p, label) for p in d.premises])
    return d


def graft_keep_label(d: Deduction, label: str, sigma: Deduction, used_labels: set) -> Deduction:
    """Like :func:`graft` but leaves the (now empty) class in any discharge list."""
    occ = [n for _, n in leaves(d) if n.label == label]
    if not occ:
        return d
    if not alpha_eq(occ[0].formula, sigma.conclusion):
        raise FormulaMismatch(f"class {label!r} holds a formula different from the grafted conclusion")

    def go(n):
        if isinstance(n, Assume):
            return refresh_internal(sigma, used_labels) if n.label == label else n
        if not n.premises:
            return n
        return with_premises(n, [go(p) for p in n.premises])

    return go(d)


def substitute_in_deduction(d: Deduction, a: str, t: Term) -> Deduction:
    """Replace parameter ``a`` by ``t`` in every formula of ``d``."""
    eig = {e for _, n in eigen_apps(d) for e in n.eigen}
    if a in eig:
        raise EigenCapture(f"{a!r} is an eigenparameter of the deduction")
    if params_of(t) & eig:
        raise EigenCapture(f"term would be captured by eigenparameter(s) {sorted(params_of(t) & eig)}")
    if t == _P(a):
        return d
    return map_formulas(d, lambda f: replace_param(f, a, t), lambda s: replace_param(s, a, t))


def canonical_labels(d: Deduction) -> Deduction:
    """Rename labels to ``L1, L2, ...`` in order of first appearance (preorder)."""
    mapping = {}
    for _, n in iter_nodes(d):
        labs = list(n.discharged) if isinstance(n, RuleApp) else []
        if isinstance(n, Assume):
            labs.append(n.label)
        for lab in labs:
            mapping.setdefault(lab, f"L{len(mapping) + 1}")
    return relabel(d, mapping)


def same_up_to_labels(d1: Deduction, d2: Deduction) -> bool:
    return canonical_labels(d1) == canonical_labels(d2)
