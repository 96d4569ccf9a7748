"""The named deductions of the corpus, built programmatically.

Each builder returns a deduction with ``F`` and ``G`` instantiated
to the unary atoms ``(F x)`` and ``(G x)``. :func:`write_corpus` renders them
to ``.fpl`` files; the files in ``corpus/`` are generated by it.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import build as b
from .deduction import graft, uniquify_parameters
from .script import print_script
from .systems import System

IOTA = "(iota x (F x))"
EX_UNIQUE = "(ex y (all x (iff (F x) (= x y))))"
IEX = "(I x (F x) (ex! x))"
IG = "(I x (F x) (G x))"


def P(name):
    return f"(p {name})"


def Fx(t):
    return f"(F {t})"


def Gx(t):
    return f"(G {t})"


def Ex(t):
    return f"(ex! {t})"


def Eq(s, t):
    return f"(= {s} {t})"


def unique_at(t):
    """all x (F x <-> x = t)"""
    return f"(all x (iff (F x) (= x {t})))"


# -- star1 ----------------------------------------------------------------------

def star1_lr(t="t", h="1"):
    return b.ex_i(b.refl(P(t)), b.assume(h, Ex(P(t))), "y", body=f"(= y {P(t)})")


def star1_rl(t="t", h="0", la="1", lb="2", a="a"):
    return b.ex_e(b.assume(h, f"(ex y (= y {P(t)}))"),
                  b.eq_e(b.assume(la, Eq(P(a), P(t))), b.assume(lb, Ex(P(a)))),
                  a, (la, lb))


def star1():
    return b.iff_i(star1_lr(h="1"), star1_rl(h="2", la="3", lb="4"), "1", "2")


# -- iota system -----------------------------------------------------------

def _ll():
    return b.ll("x", "y", "(F x)")


def star2_a(h="1"):
    e = b.assume(h, Ex(IOTA))
    bic = b.all_e(_ll(), e)
    allx = b.iff_e1(bic, b.refl(IOTA))
    return b.ex_i(allx, b.assume(h, Ex(IOTA)), "y", body="(all x (iff (F x) (= x y)))")


def star2_b(h="2"):
    u = b.assume("3", unique_at(P("a")))
    ea = b.assume("4", Ex(P("a")))
    ia = b.iff_e2(b.all_e(_ll(), ea), u)                      # iota = a
    ai = b.symm(ia)                                            # a = iota
    ex = b.ex_i(ai, b.assume("4", Ex(P("a"))), "y", body=f"(= y {IOTA})")
    via1 = b.ex_e(ex, b.eq_e(b.assume("5", Eq(P("b"), IOTA)), b.assume("6", Ex(P("b")))),
                  "b", ("5", "6"))
    return b.ex_e(b.assume(h, EX_UNIQUE), via1, "a", ("3", "4"))


def star2():
    return b.iff_i(star2_a("1"), star2_b("2"), "1", "2")


def star3():
    e = b.assume("e", Ex(IOTA))
    allx = b.iff_e1(b.all_e(_ll(), e), b.refl(IOTA))
    conj = b.and_i(allx, b.assume("g", Gx(IOTA)))
    return b.ex_i(conj, b.assume("e", Ex(IOTA)), "y",
                  body="(and (all x (iff (F x) (= x y))) (G y))")


def star4():
    hyp = "(ex y (and (all x (iff (F x) (= x y))) (G y)))"
    c2 = f"(and {unique_at(P('a'))} (G (p a)))"
    ia = b.iff_e2(b.all_e(_ll(), b.assume("1", Ex(P("a")))), b.and_el(b.assume("2", c2)))
    g = b.eq_e(b.symm(ia), b.and_er(b.assume("2", c2)))
    return b.ex_e(b.assume("h", hyp), g, "a", ("1", "2"))


STAR3_PRIME = f"(all z (imp {Ex(IOTA)} (imp (= {IOTA} z) (ex y (and (all x (iff (F x) (= x y))) (= y z))))))"
STAR4_PRIME = f"(all z (imp (ex y (and (all x (iff (F x) (= x y))) (= y z))) (= {IOTA} z)))"


def _shift_unique(conj_label, bname, aname, p, q, c="c"):
    """all x (F <-> x = b) & b = a  |-  all x (F <-> x = a)  (used by star5)."""
    conj = f"(and {unique_at(P(bname))} {Eq(P(bname), P(aname))})"
    ba = lambda: b.and_er(b.assume(conj_label, conj))
    inst = lambda: b.all_e(b.and_el(b.assume(conj_label, conj)), b.assume(q + "e", Ex(P(c))))
    # [F c] -> c = b -> c = a
    to_a = b.trans(b.iff_e1(inst(), b.assume(p, Fx(P(c)))), ba())
    # [c = a] -> c = b -> F c
    cb = b.trans(b.assume(q, Eq(P(c), P(aname))), b.symm(ba()))
    from_a = b.iff_e2(inst(), cb)
    return b.all_i(b.iff_i(to_a, from_a, p, q), c, "x", q + "e")


def star5():
    ia = lambda: b.assume("2", Eq(IOTA, P("a")))
    ea = lambda: b.assume("4", Ex(P("a")))
    ex_iota = b.eq_e(b.symm(ia()), ea())
    s3 = b.imp_e(b.imp_e(b.all_e(b.assume("s3", STAR3_PRIME), ea()), ex_iota), ia())
    right = b.ex_e(s3, _shift_unique("1", "b", "a", "5", "6"), "b", "1")
    witness = b.and_i(b.assume("3", unique_at(P("a"))), b.refl(P("a")))
    exw = b.ex_i(witness, ea(), "y", body="(and (all x (iff (F x) (= x y))) (= y (p a)))")
    left = b.imp_e(b.all_e(b.assume("s4", STAR4_PRIME), ea()), exw)
    bic = b.iff_i(right, left, "2", "3")
    return b.all_i(bic, "a", "y", "4")


# -- binary quantifier system ------------------------------------------------

def star10():
    hyp = "(ex x (and (F x) (and (all y (imp (F y) (= y x))) (G x))))"
    c = f"(and {Fx(P('a'))} (and (all y (imp (F y) (= y (p a)))) {Gx(P('a'))}))"
    h = lambda: b.assume("1", c)
    ea = b.assume("2", Ex(P("a")))
    pi = b.imp_e(b.all_e(b.and_el(b.and_er(h())), b.assume("4", Ex(P("b")))),
                 b.assume("3", Fx(P("b"))))
    body = b.ii(b.and_el(h()), b.and_er(b.and_er(h())), ea, pi, "b", ("3", "4"), IG)
    return b.ex_e(b.assume("h", hyp), body, "a", ("1", "2"))


def _iex(label="hE"):
    return b.assume(label, IEX)


def star11():
    hE, hG = _iex, lambda: b.assume("hG", IG)
    cd = b.ie2p_prime(hE(), b.assume("3", Ex(P("c"))), b.assume("9", Ex(P("d"))),
                      b.assume("4", Fx(P("c"))), b.assume("8", Fx(P("d"))))
    ab = b.ie2p_prime(hE(), b.assume("2", Ex(P("a"))), b.assume("6", Ex(P("b"))),
                      b.assume("1", Fx(P("a"))), b.assume("5", Fx(P("b"))))
    uniq = b.all_i(b.imp_i(ab, "1"), "a", "y", "2")
    conj = b.and_i(b.assume("5", Fx(P("b"))), b.and_i(uniq, b.assume("7", Gx(P("b")))))
    sigma = b.ex_i(conj, b.assume("6", Ex(P("b"))), "x")
    main = b.ie1p(hG(), b.assume("8", Fx(P("d"))), b.assume("9", Ex(P("d"))), cd, sigma,
                  "c", "b", ("3", "4", "5", "6", "7"))
    return b.ie3p(hE(), main, "d", ("8", "9"))


def star12(hE="hE", pre=""):
    L = lambda n: pre + n
    e = lambda: b.assume(hE, IEX)
    ab = b.ie2p_prime(e(), b.assume(L("3"), Ex(P("a"))), b.assume(L("4"), Ex(P("b"))),
                      b.assume(L("1"), Fx(P("a"))), b.assume(L("5"), Fx(P("b"))))
    fa = b.eq_e(b.symm(b.assume(L("2"), Eq(P("a"), P("b")))), b.assume(L("5"), Fx(P("b"))))
    bic = b.iff_i(ab, fa, L("1"), L("2"))
    allx = b.all_i(bic, "a", "x", L("3"))
    ex = b.ex_i(allx, b.assume(L("4"), Ex(P("b"))), "y")
    return b.ie3p(e(), ex, "b", (L("4"), L("5")))


def star13(h="h", pre=""):
    L = lambda n: pre + n
    u = lambda: b.assume(L("3"), unique_at(P("a")))
    ea = lambda: b.assume(L("4"), Ex(P("a")))
    fa = b.iff_e2(b.all_e(u(), ea()), b.refl(P("a")))
    pi = b.iff_e1(b.all_e(u(), b.assume(L("1"), Ex(P("b")))), b.assume(L("2"), Fx(P("b"))))
    body = b.ii(fa, ea(), ea(), pi, "b", (L("1"), L("2")), IEX)
    return b.ex_e(b.assume(h, EX_UNIQUE), body, "a", (L("3"), L("4")))


def star14():
    return b.iff_i(star12("i", "l"), star13("j", "r"), "i", "j")


def star15(hE="hE", pre=""):
    L = lambda n: pre + n
    e = lambda: b.assume(hE, IEX)
    ea = lambda: b.assume(L("4"), Ex(P("a")))
    ba = b.ie2p_prime(e(), b.assume(L("1"), Ex(P("b"))), ea(),
                      b.assume(L("2"), Fx(P("b"))), b.assume(L("3"), Fx(P("a"))))
    ix = b.ii(b.assume(L("3"), Fx(P("a"))), b.refl(P("a")), ea(), ba, "b", (L("1"), L("2")),
              "(I x (F x) (= x (p a)))")
    ex = b.ex_i(ix, ea(), "y")
    return b.ie3p(e(), ex, "a", (L("3"), L("4")))


def star18(pre=""):
    L = lambda n: pre + n
    ia = lambda: b.assume(L("5"), "(I x (F x) (= x (p a)))")
    ea = lambda: b.assume(L("6"), Ex(P("a")))
    fc = lambda: b.assume(L("3"), Fx(P("c")))
    ca = b.ie4p_prime(ia(), b.assume(L("4"), Ex(P("c"))), ea(), fc())
    fa = b.eq_e(ca, fc())
    ba = b.ie4p_prime(ia(), b.assume(L("2"), Ex(P("b"))), ea(), b.assume(L("1"), Fx(P("b"))))
    ii = b.ii(fa, ea(), ea(), ba, "b", (L("1"), L("2")), IEX)
    return b.ie5p(ia(), ea(), ii, "c", (L("3"), L("4")))


def star16(h="h", pre=""):
    L = lambda n: pre + n
    return b.ex_e(b.assume(h, "(ex y (I x (F x) (= x y)))"), star18(pre), "a", (L("5"), L("6")))


def star17():
    return b.iff_i(star16("i", "l"), star15("j", "r"), "i", "j")


def star19():
    e = lambda: b.assume("hE", IEX)
    ea = lambda: b.assume("2", Ex(P("a")))
    ga = b.all_e(b.assume("hA", "(all x (G x))"), ea())
    ba = b.ie2p_prime(e(), b.assume("4", Ex(P("b"))), ea(),
                      b.assume("3", Fx(P("b"))), b.assume("1", Fx(P("a"))))
    ii = b.ii(b.assume("1", Fx(P("a"))), ga, ea(), ba, "b", ("3", "4"), IG)
    return b.ie3p(e(), ii, "a", ("1", "2"))


def star20():
    e = lambda: b.assume("hE", IEX)
    ab = b.ie2p_prime(e(), b.assume("1", Ex(P("a"))), b.assume("6", Ex(P("b"))),
                      b.assume("2", Fx(P("a"))), b.assume("5", Fx(P("b"))))
    exg = b.ex_i(b.assume("3", Gx(P("c"))), b.assume("4", Ex(P("c"))), "x")
    main = b.ie1p(b.assume("hG", IG), b.assume("5", Fx(P("b"))), b.assume("6", Ex(P("b"))),
                  ab, exg, "a", "c", ("1", "2", "3", "4"))
    return b.ie3p(e(), main, "b", ("5", "6"))


def _pi_to(t, fa="i", ea="j", a="a", hyp="u"):
    """a = t from [F a], [ex! a] and the open assumption all x (F x -> x = t)."""
    return b.imp_e(b.all_e(b.assume(hyp, f"(all x (imp (F x) (= x {P(t)})))"),
                           b.assume(ea, Ex(P(a)))),
                   b.assume(fa, Fx(P(a))))


def construction_a():
    t = "t"
    ii = lambda: b.ii(b.assume("ft", Fx(P(t))), b.assume("et", Ex(P(t))), b.assume("et", Ex(P(t))),
                      _pi_to(t), "a", ("i", "j"), IEX)
    xi = b.ex_i(b.assume("k", Fx(P("b"))), b.assume("m", Ex(P("b"))), "x")
    # relabel the second II copy so that each class is discharged once
    from .deduction import relabel
    second = relabel(ii(), {"i": "i2", "j": "j2"})
    return b.ie1p_prime(ii(), second, xi, "b", ("k", "m"))


def construction_b():
    e = lambda: b.assume("hE", IEX)
    bc = b.ie2p_prime(e(), b.assume("i1", Ex(P("b"))), b.assume("j", Ex(P("c"))),
                      b.assume("i2", Fx(P("b"))), b.assume("k", Fx(P("c"))))
    pi = b.ex_i(b.and_i(b.assume("i3", Fx(P("a"))), b.assume("i4", Gx(P("a")))),
                b.assume("i5", Ex(P("a"))), "x")
    main = b.ie1p(b.assume("hG", IG), b.assume("k", Fx(P("c"))), b.assume("j", Ex(P("c"))),
                  bc, pi, "b", "a", ("i1", "i2", "i3", "i4", "i5"))
    return b.ie3p(e(), main, "c", ("j", "k"))


# -- left-hand sides of the detour conversions ---------------------------------

def _ii_over(t1, g_premise, scope, label="u"):
    conj = lambda: b.assume("p", f"(and {Fx(P(t1))} (G {P(t1)}))")
    return b.ii(b.and_el(conj()), g_premise, b.assume("e1", Ex(P(t1))),
                _pi_to(t1, hyp=label), "a", ("i", "j"), f"(I x (F x) {scope})")


def conv1():
    conj = lambda: b.assume("p", f"(and {Fx(P('s'))} {Gx(P('s'))})")
    intro = _ii_over("s", b.and_er(conj()), "(G x)")
    xi = b.ex_i(b.and_i(b.assume("k3", Fx(P("c"))), b.assume("k4", Gx(P("c")))),
                b.assume("k5", Ex(P("c"))), "x")
    return b.ie1p(intro, b.assume("s1", Fx(P("u"))), b.assume("s2", Ex(P("u"))),
                  _pi_to("u", "k1", "k2", "b", "w"), xi, "b", "c", ("k1", "k2", "k3", "k4", "k5"))


def conv2():
    intro = b.ii(b.assume("p1", Fx(P("s"))), b.assume("e1", Ex(P("s"))), b.assume("e1", Ex(P("s"))),
                 _pi_to("s"), "a", ("i", "j"), IEX)
    return b.ie2p(intro, b.assume("s1", Ex(P("u"))), b.assume("s2", Ex(P("v"))),
                  b.assume("s3", Fx(P("u"))), b.assume("s4", Fx(P("v"))),
                  b.assume("s5", "(H (p u))"))


def conv3():
    intro = b.ii(b.assume("p1", Fx(P("s"))), b.assume("e1", Ex(P("s"))), b.assume("e1", Ex(P("s"))),
                 _pi_to("s"), "a", ("i", "j"), IEX)
    xi = b.ex_i(b.assume("k", Fx(P("b"))), b.assume("l", Ex(P("b"))), "x")
    return b.ie3p(intro, xi, "b", ("k", "l"))


def _ii_eq():
    return b.ii(b.assume("p1", Fx(P("s"))), b.assume("p2", Eq(P("s"), P("u"))),
                b.assume("e1", Ex(P("s"))), _pi_to("s"), "a", ("i", "j"),
                "(I x (F x) (= x (p u)))")


def conv4():
    return b.ie4p(_ii_eq(), b.assume("s1", Ex(P("v"))), b.assume("s2", Ex(P("u"))),
                  b.assume("s3", Fx(P("v"))), b.assume("s4", "(H (p v))"))


def conv5():
    xi = b.ex_i(b.assume("k", Fx(P("b"))), b.assume("l", Ex(P("b"))), "x")
    return b.ie5p(_ii_eq(), b.assume("s", Ex(P("u"))), xi, "b", ("k", "l"))


# -- right-hand sides, assembled by hand ---------------------------------------

def _pi_at(t, target, fa, ea, hyp="u"):
    """The closed copy of ``_pi_to(target)`` at ``t``: t = target."""
    return b.imp_e(b.all_e(b.assume(hyp, f"(all x (imp (F x) (= x {P(target)})))"), ea), fa)


def golden_conv1():
    conj = lambda: b.assume("p", f"(and {Fx(P('s'))} {Gx(P('s'))})")
    return b.ex_i(b.and_i(b.and_el(conj()), b.and_er(conj())), b.assume("e1", Ex(P("s"))), "x")


def golden_conv2():
    v_s = _pi_at("v", "s", b.assume("s4", Fx(P("v"))), b.assume("s2", Ex(P("v"))))
    s_v = b.symm(v_s)
    u_s = _pi_at("u", "s", b.assume("s3", Fx(P("u"))), b.assume("s1", Ex(P("u"))))
    u_v = b.trans(u_s, s_v)
    return b.eq_e(u_v, b.assume("s5", "(H (p u))"))


def golden_conv3():
    return b.ex_i(b.assume("p1", Fx(P("s"))), b.assume("e1", Ex(P("s"))), "x")


def golden_conv4():
    v_s = _pi_at("v", "s", b.assume("s3", Fx(P("v"))), b.assume("s1", Ex(P("v"))))
    v_u = b.trans(v_s, b.assume("p2", Eq(P("s"), P("u"))))
    return b.eq_e(v_u, b.assume("s4", "(H (p v))"))


def golden_conv5():
    return b.ex_i(b.assume("p1", Fx(P("s"))), b.assume("e1", Ex(P("s"))), "x")


GOLDEN = {f"conv{i}": globals()[f"golden_conv{i}"] for i in range(1, 6)}


def cut_star13_star12():
    """star12 applied to the conclusion of star13: a deduction with maximal segments."""
    return graft(star12("hE"), "hE", star13("h", "r"))


ENTRIES = {
    # name: (builder, system, catalogue label)
    "star1": (star1, System.IPF, "*1"),
    "star1_lr": (star1_lr, System.IPF, "*1 (left to right)"),
    "star1_rl": (star1_rl, System.IPF, "*1 (right to left)"),
    "star2": (star2, System.IPF_iota, "*2"),
    "star3": (star3, System.IPF_iota, "*3"),
    "star4": (star4, System.IPF_iota, "*4"),
    "star5": (star5, System.IPF_iota, "*5"),
    "star10": (star10, System.IPF_I, "*10"),
    "star11": (star11, System.IPF_I, "*11"),
    "star12": (star12, System.IPF_I, "*12"),
    "star13": (star13, System.IPF_I, "*13"),
    "star14": (star14, System.IPF_I, "*14"),
    "star15": (star15, System.IPF_I, "*15"),
    "star16": (star16, System.IPF_I, "*16"),
    "star17": (star17, System.IPF_I, "*17"),
    "star18": (star18, System.IPF_I, "*18"),
    "star19": (star19, System.IPF_I, "*19"),
    "star20": (star20, System.IPF_I, "*20"),
    "construction_a": (construction_a, System.IPF_I, "(a)"),
    "construction_b": (construction_b, System.IPF_I, "(b)"),
    "conv1": (conv1, System.IPF_I, "conversion 1"),
    "conv2": (conv2, System.IPF_I, "conversion 2"),
    "conv3": (conv3, System.IPF_I, "conversion 3"),
    "conv4": (conv4, System.IPF_I, "conversion 4"),
    "conv5": (conv5, System.IPF_I, "conversion 5"),
    "cut_star13_star12": (cut_star13_star12, System.IPF_I, "*13 cut into *12"),
}


def build_entry(name: str):
    fn, system, _ = ENTRIES[name]
    return system, uniquify_parameters(fn())


def write_corpus(root: Path) -> None:
    """Write every entry, the conversion right-hand sides, the mutants and
    ``manifest.json`` under ``root``."""
    from .mutants import MUTANTS

    root = Path(root)
    (root / "golden").mkdir(parents=True, exist_ok=True)
    (root / "mutants").mkdir(exist_ok=True)
    manifest = {}

    def emit(rel, name, system, d, label, code=None):
        (root / rel).write_text(print_script(name, system, d), encoding="utf-8")
        manifest[rel] = {"label": label, "system": system.value,
                         "verdict": "invalid" if code else "valid",
                         "codes": [code] if code else []}

    for name, (fn, system, label) in ENTRIES.items():
        emit(f"{name}.fpl", name, system, uniquify_parameters(fn()), label)
    for name, fn in GOLDEN.items():
        emit(f"golden/{name}.fpl", name, System.IPF_I, fn(), ENTRIES[name][2] + " (result)")
    for name, (fn, system, code) in MUTANTS.items():
        emit(f"mutants/{name}.fpl", name, system, fn(), f"mutant ({code})", code)
    (root / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                                        encoding="utf-8")
