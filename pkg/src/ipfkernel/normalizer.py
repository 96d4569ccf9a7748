"""Detour and permutation conversions, rank, and the normalization strategy.

Macros are elaborated before normalizing, so only primitive rules appear.
Positions of maximal formulas are the positions of the introduction nodes;
segments are reported as position lists from the top formula down.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .checker import check, elaborate_macros
from .deduction import (DEL_MINORS, ELIM, INTRO, Assume, Deduction, EqRefl,
                        Rule, RuleApp, class_formula, graft, iter_nodes,
                        labels_of, leaves, node_at, open_formulas,
                        refresh_internal, replace_at, substitute_in_deduction,
                        uniquify_parameters)
from .errors import AlreadyNormal, InternalNonTermination, KernelError
from .syntax import Eq, Param, alpha_eq, alpha_key, degree
from .systems import System


@dataclass(frozen=True)
class Segment:
    positions: tuple          # top (C_1) to bottom (C_n)
    degree: int

    @property
    def length(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class Item:
    """A reducible spot: a maximal formula or the segments ending at one elimination."""

    kind: str                 # "detour" or "permute"
    elim: tuple               # position of the elimination
    degree: int
    weight: int               # 1 for a maximal formula, summed length for segments


@dataclass(frozen=True)
class ReductionStep:
    n: int
    kind: str
    rules: str
    position: tuple
    rank_before: tuple
    rank_after: tuple

    def line(self) -> str:
        d, l = self.rank_before
        d2, l2 = self.rank_after
        return f"STEP {self.n} {self.kind} {self.rules} rank {d},{l} -> {d2},{l2}"


class PostconditionViolated(KernelError):
    pass


# -- detection -------------------------------------------------------------

def _is_elim(n) -> bool:
    return isinstance(n, RuleApp) and n.rule in ELIM


def _is_intro(n) -> bool:
    return isinstance(n, RuleApp) and n.rule in INTRO


def _is_del(n) -> bool:
    return isinstance(n, RuleApp) and n.rule in DEL_MINORS


def maximal_formulas(d: Deduction) -> list:
    return [p + (0,) for p, n in iter_nodes(d) if _is_elim(n) and _is_intro(n.premises[0])]


def _paths(d: Deduction, r: tuple) -> list:
    n = node_at(d, r)
    if not _is_del(n):
        return [[r]]
    out = []
    for i in DEL_MINORS[n.rule]:
        for tail in _paths(d, r + (i,)):
            out.append(tail + [r])
    return out


def maximal_segments(d: Deduction) -> list:
    segs = []
    for p, n in iter_nodes(d):
        if _is_elim(n) and _is_del(n.premises[0]):
            deg = degree(n.premises[0].conclusion)
            for path in _paths(d, p + (0,)):
                segs.append(Segment(tuple(path), deg))
    return segs


def _items(d: Deduction) -> list:
    items = []
    for p, n in iter_nodes(d):
        if not _is_elim(n):
            continue
        major = n.premises[0]
        if _is_intro(major):
            items.append(Item("detour", p, degree(major.conclusion), 1))
        elif _is_del(major):
            w = sum(len(path) for path in _paths(d, p + (0,)))
            items.append(Item("permute", p, degree(major.conclusion), w))
    return items


def _rank_of(items) -> tuple:
    if not items:
        return (0, 0)
    top = max(i.degree for i in items)
    return (top, sum(i.weight for i in items if i.degree == top))


def rank(d: Deduction) -> tuple:
    """``(d, l)``: highest degree of a maximal formula or segment and the
    total weight (count of maximal formulas plus segment lengths) at that degree."""
    return _rank_of(_items(d))


def is_normal(d: Deduction) -> bool:
    return not maximal_formulas(d) and not maximal_segments(d)


# -- helpers for conversions ---------------------------------------------------

def _graft_all(body: Deduction, labels, providers, used: set) -> Deduction:
    """Graft each discharged class in ``labels`` with the provider proving its formula."""
    for lab in labels:
        f = class_formula(body, lab)
        if f is None:
            continue
        for prov in providers:
            if alpha_eq(prov.conclusion, f):
                body = graft(body, lab, prov, used)
                used |= labels_of(body)
                break
        else:
            raise KernelError(f"no deduction available for class {lab}")
    return body


def _eqe(major: Deduction, minor: Deduction, concl) -> Deduction:
    return RuleApp(Rule.EqE, (major, minor), concl)


def sweep_vacuous(d: Deduction) -> Deduction:
    """Replace each =E whose terms coincide by its minor premise."""
    if not isinstance(d, RuleApp):
        return d
    prem = tuple(sweep_vacuous(p) for p in d.premises)
    if d.rule is Rule.EqE:
        e = prem[0].conclusion
        if isinstance(e, Eq) and alpha_eq(e.lhs, e.rhs):
            return prem[1]
    return d if prem == d.premises else replace(d, premises=prem)


# -- detour conversions ------------------------------------------------------

def _detour(elim: RuleApp, used: set) -> Deduction:
    intro = elim.premises[0]
    r, i = elim.rule, intro.rule
    if i is Rule.AndI:
        return intro.premises[0] if r is Rule.AndEL else intro.premises[1]
    if i is Rule.ImpI:
        return _graft_all(intro.premises[0], intro.discharged, [elim.premises[1]], used)
    if i is Rule.IffI:
        k = 0 if r is Rule.IffE1 else 1
        body = intro.premises[k]
        mine = [l for l in intro.discharged if any(x.label == l for _, x in leaves(body))]
        return _graft_all(body, mine, [elim.premises[1]], used)
    if i in (Rule.OrIL, Rule.OrIR):
        k = 1 if i is Rule.OrIL else 2
        body = elim.premises[k]
        mine = [l for l in elim.discharged if any(x.label == l for _, x in leaves(body))]
        return _graft_all(body, mine, [intro.premises[0]], used)
    if i is Rule.ForallI:
        t = elim.premises[1].conclusion.arg
        body = substitute_in_deduction(intro.premises[0], intro.eigen[0], t)
        return _graft_all(body, intro.discharged, [elim.premises[1]], used)
    if i is Rule.ExistsI:
        t = intro.premises[1].conclusion.arg
        body = substitute_in_deduction(elim.premises[1], elim.eigen[0], t)
        return _graft_all(body, elim.discharged, list(intro.premises), used)
    if i is Rule.II:
        return _detour_I(elim, intro, used)
    raise KernelError(f"no detour conversion for {i.value}/{r.value}")


def _detour_I(elim: RuleApp, intro: RuleApp, used: set) -> Deduction:
    p1, p2, p3, xi = intro.premises
    t1 = p3.conclusion.arg
    a = intro.eigen[0]
    r = elim.rule

    def xi_at(t, providers):
        body = substitute_in_deduction(xi, a, t)
        body = refresh_internal(body, used)
        return _graft_all(body, intro.discharged, providers, used)

    if r is Rule.IE1p:
        c = elim.eigen[1]
        body = substitute_in_deduction(elim.premises[4], c, t1)
        return _graft_all(body, elim.discharged, [p1, p2, p3], used)
    if r is Rule.IE3p or r is Rule.IE5p:
        k = 1 if r is Rule.IE3p else 2
        body = substitute_in_deduction(elim.premises[k], elim.eigen[0], t1)
        return _graft_all(body, elim.discharged, [p1, p3], used)
    if r is Rule.IE2p:
        s1, s2, s3, s4, s5 = elim.premises[1:]
        t2, t3 = s1.conclusion.arg, s2.conclusion.arg
        x3 = xi_at(t3, [s4, s2])                                        # t3 = t1
        sym = _eqe(x3, EqRefl(t3), Eq(t1, t3))                          # t1 = t3
        x2 = xi_at(t2, [s3, s1])                                        # t2 = t1
        tr = _eqe(sym, x2, Eq(t2, t3))                                  # t2 = t3
        return _eqe(tr, s5, elim.conclusion)                            # A_t3
    if r is Rule.IE4p:
        s1, s2, s3, s4 = elim.premises[1:]
        t3 = s1.conclusion.arg
        t2 = p2.conclusion.rhs
        x3 = xi_at(t3, [s3, s1])                                        # t3 = t1
        mid = _eqe(p2, x3, Eq(t3, t2))                                  # t3 = t2
        return _eqe(mid, s4, elim.conclusion)                           # A_t2
    raise KernelError(f"no detour conversion for II/{r.value}")


# -- permutation conversions -------------------------------------------------

_ATOMIC_ELIMS = (Rule.EqE, Rule.BotE)


def _chain(d: Deduction, q: tuple, compound: bool) -> tuple:
    """Position of the lowest elimination moved together with the one at ``q``."""
    top = q
    if not compound:
        return top
    while top:
        parent = node_at(d, top[:-1])
        if top[-1] == 0 and isinstance(parent, RuleApp) and parent.rule in _ATOMIC_ELIMS:
            top = top[:-1]
        else:
            break
    return top


def _permute(d: Deduction, q: tuple, used: set, compound: bool) -> tuple:
    bottom = _chain(d, q, compound)
    chain_root = node_at(d, bottom)
    r_pos = q + (0,)
    rdel = node_at(d, r_pos)
    hole = Assume("\x00hole", rdel.conclusion)
    rel = r_pos[len(bottom):]
    frame = replace_at(chain_root, rel, hole)
    prem = list(rdel.premises)
    for k, i in enumerate(DEL_MINORS[rdel.rule]):
        copy = frame if k == 0 else refresh_internal(frame, used)
        prem[i] = replace_at(copy, rel, rdel.premises[i])
    new = replace(rdel, premises=tuple(prem), conclusion=chain_root.conclusion)
    return bottom, new


# -- strategy -------------------------------------------------------------

def _rules_of(d: Deduction, item: Item) -> str:
    e = node_at(d, item.elim)
    return f"{e.premises[0].rule.value}/{e.rule.value}"


def reduce_item(d: Deduction, item: Item, compound: bool = True) -> Deduction:
    """Apply the conversion for ``item`` (no rank bookkeeping)."""
    used = set(labels_of(d))
    if item.kind == "detour":
        new = _detour(node_at(d, item.elim), used)
        out = replace_at(d, item.elim, new)
    else:
        pos, new = _permute(d, item.elim, used, compound and item.degree == 0)
        out = replace_at(d, pos, new)
    return uniquify_parameters(sweep_vacuous(out))


def _segment_positions(d: Deduction, deg: int) -> set:
    out = set()
    for s in maximal_segments(d):
        if s.degree == deg:
            out.update(s.positions)
    return out


def _candidates(d: Deduction, items) -> list:
    top = max(i.degree for i in items)
    seg_pos = _segment_positions(d, top)
    tops = [i for i in items if i.degree == top]

    def key(i):
        return (len(i.elim), i.elim)

    preferred = sorted((i for i in tops if i.elim not in seg_pos), key=key, reverse=True)
    rest = sorted((i for i in tops if i.elim in seg_pos), key=key, reverse=True)
    return preferred + rest


def reduce_once(d: Deduction, n: int = 1) -> tuple:
    """One reduction step that strictly lowers the rank."""
    items = _items(d)
    if not items:
        raise AlreadyNormal("deduction is normal")
    before = _rank_of(items)
    for item in _candidates(d, items):
        out = reduce_item(d, item)
        after = rank(out)
        if after < before:
            return out, ReductionStep(n, item.kind, _rules_of(d, item), item.elim, before, after)
    raise InternalNonTermination(f"no reduction lowers rank {before}")


def normalize(d: Deduction, system: System = System.IPF_I, max_steps: int = 10000,
              verify: bool = True) -> tuple:
    """Normalize ``d``; returns the normal deduction and the list of steps.

    Primed rules are elaborated first. With ``verify`` the output is checked
    to be normal, valid in ``system``, to have the same conclusion and to
    use only open assumption formulas of the input.
    """
    start = uniquify_parameters(elaborate_macros(d))
    cur = start
    steps = []
    while not is_normal(cur):
        if len(steps) >= max_steps:
            raise InternalNonTermination(f"step budget {max_steps} exhausted")
        cur, step = reduce_once(cur, len(steps) + 1)
        steps.append(step)
    if verify:
        _postconditions(d, cur, system)
    return cur, steps


def _postconditions(src: Deduction, out: Deduction, system: System) -> None:
    if not is_normal(out):
        raise PostconditionViolated("output is not normal")
    if not alpha_eq(src.conclusion, out.conclusion):
        raise PostconditionViolated("conclusion changed")
    keys = {alpha_key(f) for f in open_formulas(src)}
    if any(alpha_key(f) not in keys for f in open_formulas(out)):
        raise PostconditionViolated("new open assumption")
    rep = check(out, system)
    if not rep.valid:
        raise PostconditionViolated("output does not check: " + "; ".join(map(str, rep.diagnostics)))


def trace_lines(steps) -> list:
    return [s.line() for s in steps]


# -- exhaustive exploration --------------------------------------------------

def all_orders_terminate(d: Deduction, max_states: int = 200000, max_depth: int = 500) -> tuple:
    """Explore every reduction order from ``d``.

    Returns ``(terminated, states, longest)``: whether every path reaches a
    normal form within the bounds, the number of distinct deductions visited
    and the longest path length seen.
    """
    from .script import print_proof
    start = uniquify_parameters(elaborate_macros(d))
    depth_of = {}
    longest = 0
    stack = [(start, 0, frozenset())]
    while stack:
        cur, depth, path = stack.pop()
        key = print_proof(cur)
        if key in path or depth > max_depth:
            return False, len(depth_of), longest
        if depth_of.get(key, -1) >= depth:
            continue
        depth_of[key] = depth
        if len(depth_of) > max_states:
            return False, len(depth_of), longest
        items = _items(cur)
        if not items:
            longest = max(longest, depth)
            continue
        for item in items:
            nxt = reduce_item(cur, item, compound=False)
            stack.append((nxt, depth + 1, path | {key}))
    return True, len(depth_of), longest
