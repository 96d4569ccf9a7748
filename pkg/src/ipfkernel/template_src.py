"""Builders for the derivation templates shipped under ``data/templates``.

The corpus deductions become templates by turning the atoms ``F(..)`` and
``G(..)`` into schematic letters; =E steps on those letters become general
Leibniz steps, expanded once the letters are bound. The remaining templates
derive the rules of the binary quantifier from Lambert's law in the
restricted description system, with holes for the rules' subdeductions.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path

from . import build as b
from . import corpus as c
from .deduction import Deduction, Rule, RuleApp, map_formulas, uniquify_parameters
from .script import print_script
from .syntax import (And, Atom, Bottom, Eq, Exists, ExistsBang, Forall, I, Iff,
                     Imp, Iota, Or, SchemaFormula, formula_terms, _rebuild_atomic)
from .systems import System

SCHEMATIC = ("F", "G")


def _sterm(t):
    return Iota(t.var, _sform(t.body)) if isinstance(t, Iota) else t


def _sform(f):
    if isinstance(f, Atom):
        args = tuple(_sterm(a) for a in f.args)
        return SchemaFormula(f.pred, args) if f.pred in SCHEMATIC else Atom(f.pred, args)
    if isinstance(f, (Eq, ExistsBang)):
        return _rebuild_atomic(f, [_sterm(a) for a in formula_terms(f)])
    if isinstance(f, Bottom):
        return f
    if isinstance(f, (And, Or, Imp, Iff)):
        return type(f)(_sform(f.left), _sform(f.right))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, _sform(f.body))
    if isinstance(f, I):
        return I(f.var, _sform(f.restrictor), _sform(f.scope))
    return f


def schematize(d: Deduction) -> Deduction:
    d = map_formulas(d, _sform, _sterm)

    def go(n):
        if not isinstance(n, RuleApp):
            return n
        n = replace(n, premises=tuple(go(p) for p in n.premises))
        if n.rule is Rule.EqE and isinstance(n.premises[1].conclusion, SchemaFormula):
            return replace(n, rule=Rule.EqEGen)
        return n

    return go(d)


# -- identity ------------------------------------------------------------------

def symmetry():
    return b.symm(b.assume("h", "(= ?s ?t)"))


def transitivity():
    return b.trans(b.assume("h1", "(= ?r ?s)"), b.assume("h2", "(= ?s ?t)"))


# -- Lambert's law in binary-quantifier notation -------------------------------

def ll_in_ir():
    """all y (Ix[F, x = y] <-> all x (F <-> x = y)) from the rules for I."""
    ib = "(I x (?F x) (= x (p b)))"
    uniq_b = "(all x (iff (?F x) (= x (p b))))"
    h = lambda: b.assume("h", ib)
    eb = lambda: b.assume("eb", "(ex! (p b))")
    # F b from Ix[F, x = b] and ex! b
    fc = lambda: b.assume("fc", "(?F (p c))")
    cb = b.ie4p_prime(h(), b.assume("ec", "(ex! (p c))"), eb(), fc())
    fb = b.ie5p(h(), eb(), b.eq_e_gen(cb, fc()), "c", ("fc", "ec"))
    to_eq = b.ie4p_prime(h(), b.assume("ea", "(ex! (p a))"), eb(), b.assume("fa", "(?F (p a))"))
    from_eq = b.eq_e_gen(b.symm(b.assume("k", "(= (p a) (p b))")), fb)
    fwd = b.all_i(b.iff_i(to_eq, from_eq, "fa", "k"), "a", "x", "ea")
    u = lambda: b.assume("u", uniq_b)
    fb2 = b.iff_e2(b.all_e(u(), eb()), b.refl("(p b)"))
    pi = b.iff_e1(b.all_e(u(), b.assume("j2", "(ex! (p d))")), b.assume("i2", "(?F (p d))"))
    bwd = b.ii(fb2, b.refl("(p b)"), eb(), pi, "d", ("i2", "j2"), ib)
    return b.all_i(b.iff_i(fwd, bwd, "h", "u"), "b", "y", "eb")


# -- the rules for I, derived from Lambert's law --------------------------------

IOTA = "(iota x (?F x))"


def _ll_at(e):
    return b.all_e(b.ll("x", "y", "(?F x)"), e)


def _unique_from(t, ft, hyp_hole):
    """all x (F <-> x = t) from F t and the hole [F a], [ex! a] |- a = t."""
    to_eq = hyp_hole(b.assume("i", "(?F (p a))"), b.assume("j", "(ex! (p a))"))
    from_eq = b.eq_e_gen(b.symm(b.assume("k", f"(= (p a) {t})")), ft)
    return b.all_i(b.iff_i(to_eq, from_eq, "i", "k"), "a", "x", "j")


def _pi_hole(t):
    return lambda fa, ea: b.hole("Pi", f"(= (p a) {t})", fa, ea)


def iotar_ii_eq():
    t, s = "(p t)", "(p s)"
    e = lambda: b.assume("e", f"(ex! {t})")
    uniq = _unique_from(t, b.assume("f", f"(?F {t})"), _pi_hole(t))
    it = b.iff_e2(_ll_at(e()), uniq)
    return b.eq_e(b.assume("g", f"(= {t} {s})"), it, concl=f"(= {IOTA} {s})")


def iotar_ii_exbang():
    t = "(p t)"
    e = lambda: b.assume("e", f"(ex! {t})")
    uniq = _unique_from(t, b.assume("f", f"(?F {t})"), _pi_hole(t))
    it = b.iff_e2(_ll_at(e()), uniq)
    return b.eq_e(b.symm(it), e(), concl=f"(ex! {IOTA})")


def _unique_iota(h):
    return b.iff_e1(_ll_at(h()), b.refl(IOTA))


def iotar_ie2p_prime():
    h = lambda: b.assume("h", f"(ex! {IOTA})")
    uniq = lambda: _unique_iota(h)
    at = lambda t, e, f: b.iff_e1(b.all_e(uniq(), b.assume(e, f"(ex! {t})")),
                                  b.assume(f, f"(?F {t})"))
    t1 = at("(p t1)", "e1", "f1")
    t2 = at("(p t2)", "e2", "f2")
    return b.trans(t1, b.symm(t2))


def iotar_ie4p_prime():
    t1, t2 = "(p t1)", "(p t2)"
    uniq = b.iff_e1(_ll_at(b.assume("e2", f"(ex! {t2})")), b.assume("h", f"(= {IOTA} {t2})"))
    return b.iff_e1(b.all_e(uniq, b.assume("e1", f"(ex! {t1})")), b.assume("f1", f"(?F {t1})"))


def iotar_ie5p():
    t = "(p t)"
    e = lambda: b.assume("e", f"(ex! {t})")
    uniq = b.iff_e1(_ll_at(e()), b.assume("h", f"(= {IOTA} {t})"))
    ft = b.iff_e2(b.all_e(uniq, e()), b.refl(t))
    xi = b.hole("Xi", "(C)", b.assume("i", "(?F (p a))"), b.assume("j", "(ex! (p a))"))
    return b.ex_e(b.ex_i(ft, e(), "x", body="(?F x)"), xi, "a", ("i", "j"))


def iotar_ie1p_prime_exbang():
    h = lambda: b.assume("h", f"(ex! {IOTA})")
    body = "(all x (iff (?F x) (= x y)))"
    ex = b.ex_i(_unique_iota(h), b.assume("h2", f"(ex! {IOTA})"), "y", body=body)
    ua = b.assume("u", "(all x (iff (?F x) (= x (p a))))")
    ja = lambda: b.assume("j", "(ex! (p a))")
    fa = b.iff_e2(b.all_e(ua, ja()), b.refl("(p a)"))
    xi = b.hole("Xi", "(C)", fa, ja(), ja())
    return b.ex_e(ex, xi, "a", ("u", "j"))


def iotar_ie1p_prime_eq():
    s = "(p s)"
    es = lambda: b.eq_e(b.assume("h", f"(= {IOTA} {s})"), b.assume("h2", f"(ex! {IOTA})"),
                        concl=f"(ex! {s})")
    uniq = b.iff_e1(_ll_at(es()), b.assume("h", f"(= {IOTA} {s})"))
    fs = b.iff_e2(b.all_e(uniq, es()), b.refl(s))
    ex = b.ex_i(b.and_i(fs, b.refl(s)), es(), "x", body=f"(and (?F x) (= x {s}))")
    conj = lambda: b.assume("u", f"(and (?F (p a)) (= (p a) {s}))")
    xi = b.hole("Xi", "(C)", b.and_el(conj()), b.and_er(conj()), b.assume("j", "(ex! (p a))"))
    return b.ex_e(ex, xi, "a", ("u", "j"))


# -- registry --------------------------------------------------------------------

def _from_corpus(name):
    return lambda: schematize(c.ENTRIES[name][0]())


TEMPLATES = {
    "Symmetry": (symmetry, System.IPF),
    "Transitivity": (transitivity, System.IPF),
    "Star3": (_from_corpus("star3"), System.IPF_iota),
    "Star4": (_from_corpus("star4"), System.IPF_iota),
    "Star5": (_from_corpus("star5"), System.IPF_iota),
    **{f"Star{n}": (_from_corpus(f"star{n}"), System.IPF_I) for n in range(10, 21)},
    "ConstructionA": (_from_corpus("construction_a"), System.IPF_I),
    "ConstructionB": (_from_corpus("construction_b"), System.IPF_I),
    "LL_in_IR": (ll_in_ir, System.IPF_IR),
    "IotaR_II_ExBang": (iotar_ii_exbang, System.IPF_iotaR),
    "IotaR_II_Eq": (iotar_ii_eq, System.IPF_iotaR),
    "IotaR_IE1pPrime_ExBang": (iotar_ie1p_prime_exbang, System.IPF_iotaR),
    "IotaR_IE1pPrime_Eq": (iotar_ie1p_prime_eq, System.IPF_iotaR),
    "IotaR_IE2pPrime": (iotar_ie2p_prime, System.IPF_iotaR),
    "IotaR_IE4pPrime": (iotar_ie4p_prime, System.IPF_iotaR),
    "IotaR_IE5p": (iotar_ie5p, System.IPF_iotaR),
}

OBLIGATIONS = ("IotaR_II_ExBang", "IotaR_II_Eq", "IotaR_IE1pPrime_ExBang",
               "IotaR_IE1pPrime_Eq", "IotaR_IE2pPrime", "IotaR_IE4pPrime", "IotaR_IE5p")


def template_text(name: str) -> str:
    fn, system = TEMPLATES[name]
    return print_script(name, system, uniquify_parameters(fn()))


def write_templates(root: Path) -> None:
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    for name in TEMPLATES:
        (root / f"{name}.fpl").write_text(template_text(name), encoding="utf-8")
