"""Single-fault deductions: each breaks exactly one side condition.

``MUTANTS`` maps a file name to ``(builder, system, expected code)``.
"""

from __future__ import annotations

from . import build as b
from .corpus import IEX, IG, Eq, Ex, Fx, Gx, P
from .deduction import Rule
from .systems import System

IEQ = "(I x (F x) (= x (p s)))"


def _all_to(t, fa, ea, a, hyp="u"):
    return b.imp_e(b.all_e(b.assume(hyp, f"(all x (imp (F x) (= x {P(t)})))"),
                           b.assume(ea, Ex(P(a)))),
                   b.assume(fa, Fx(P(a))))


# -- atomicity ---------------------------------------------------------------

def bote_not_atomic():
    return b.bot_e(b.assume("h", "bot"), "(and (A) (B))")


def eqe_not_atomic():
    return b.eq_e(b.assume("e", Eq(P("a"), P("b"))),
                  b.assume("h", f"(and {Fx(P('a'))} {Gx(P('a'))})"))


def ie2p_not_atomic():
    return b.ie2p(b.assume("h", IEX), b.assume("e1", Ex(P("s"))), b.assume("e2", Ex(P("u"))),
                  b.assume("f1", Fx(P("s"))), b.assume("f2", Fx(P("u"))),
                  b.assume("m", f"(not {Gx(P('s'))})"))


def ie4p_not_atomic():
    return b.ie4p(b.assume("h", "(I x (F x) (= x (p u)))"), b.assume("e1", Ex(P("s"))),
                  b.assume("e2", Ex(P("u"))), b.assume("f1", Fx(P("s"))),
                  b.assume("m", f"(or {Gx(P('s'))} {Gx(P('s'))})"))


# -- identity ------------------------------------------------------------------

def eqe_vacuous():
    return b.eq_e(b.assume("e", Eq(P("a"), P("a"))), b.assume("h", Fx(P("a"))))


def eqe_wrong_instance():
    return b.rule(Rule.EqE, b.assume("e", Eq(P("a"), P("b"))), b.assume("h", Fx(P("a"))),
                  concl=Gx(P("b")))


# -- eigenparameter conditions -----------------------------------------------

def alli_eigen_not_fresh():
    return b.rule(Rule.ForallI, b.refl(P("a")), concl="(all x (= x (p a)))", eigen="a", dis=())


def alli_eigen_open():
    return b.all_i(b.assume("h", Fx(P("a"))), "a", "x")


def exe_eigen_not_fresh():
    return b.ex_e(b.assume("h", "(ex x (R x (p a)))"), b.assume("k", "(Q)"), "a", ())


def exe_eigen_in_conclusion():
    return b.ex_e(b.assume("h", "(ex x (F x))"), b.assume("k", Fx(P("a"))), "a", ("k",))


def exe_eigen_open():
    return b.ex_e(b.assume("h", "(ex x (F x))"),
                  b.and_el(b.and_i(b.assume("q", "(Q)"), b.assume("g", Gx(P("a"))))), "a", ())


def ii_bad_eigen():
    """The eigenparameter also occurs in the instantiating term."""
    return b.ii(b.assume("f", Fx(P("a"))), b.assume("g", Gx(P("a"))), b.assume("e", Ex(P("a"))),
                _all_to("a", "i", "j", "a"), "a", ("i", "j"), IG)


def ii_eigen_open():
    return b.ii(b.assume("f", Fx(P("t"))), b.assume("g", Gx(P("t"))), b.assume("e", Ex(P("t"))),
                b.and_el(b.and_i(b.assume("w", Eq(P("a"), P("t"))), b.assume("v", Gx(P("a"))))),
                "a", (), IG)


def _ie1p(major, a, b_, c, labels):
    return b.ie1p(major, b.assume("f", Fx(P("t"))), b.assume("e", Ex(P("t"))),
                  _all_to("t", "i", "j", a), c, a, b_, labels)


def ie1p_eigen_a_not_fresh():
    c = b.ex_i(b.assume("k", Fx(P("b"))), b.assume("l", Ex(P("b"))), "x")
    return b.ie1p(b.assume("h", IG), b.assume("f", Fx(P("a"))), b.assume("e", Ex(P("a"))),
                  b.refl(P("a")), c, "a", "b", ("k", "l"))


def ie1p_eigen_b_in_conclusion():
    return _ie1p(b.assume("h", IG), "a", "b", b.assume("k", Gx(P("b"))), ("i", "j", "k"))


def ie1p_eigen_b_open():
    c = b.and_el(b.and_i(b.assume("q", "(Q)"), b.assume("z", Gx(P("b")))))
    return _ie1p(b.assume("h", IG), "a", "b", c, ("i", "j"))


def ie3p_eigen_not_fresh():
    return b.ie3p(b.assume("h", "(I x (R x (p b)) (ex! x))"), b.assume("k", "(Q)"), "b", ())


def ie3p_eigen_in_conclusion():
    return b.ie3p(b.assume("h", IEX), b.assume("k", Fx(P("b"))), "b", ("k",))


def ie3p_eigen_open():
    c = b.and_el(b.and_i(b.assume("q", "(Q)"), b.assume("z", Gx(P("b")))))
    return b.ie3p(b.assume("h", IEX), c, "b", ())


def ie5p_eigen_not_fresh():
    return b.ie5p(b.assume("h", "(I x (F x) (= x (p b)))"), b.assume("e", Ex(P("b"))),
                  b.assume("k", "(Q)"), "b", ())


def ie5p_eigen_in_conclusion():
    return b.ie5p(b.assume("h", IEQ), b.assume("e", Ex(P("s"))), b.assume("k", Fx(P("b"))),
                  "b", ("k",))


def ie5p_eigen_open():
    c = b.and_el(b.and_i(b.assume("q", "(Q)"), b.assume("z", Gx(P("b")))))
    return b.ie5p(b.assume("h", IEQ), b.assume("e", Ex(P("s"))), c, "b", ())


# -- shapes, discharges, systems ----------------------------------------------

def ande_wrong_conclusion():
    return b.rule(Rule.AndEL, b.assume("h", "(and (A) (B))"), concl="(B)")


def impi_wrong_discharge():
    return b.rule(Rule.ImpI, b.assume("h", "(B)"), concl="(imp (A) (B))", dis=("h",))


def ll_same_variables():
    return b.ll("x", "x", Fx("x"))


def I_outside_system():
    return b.assume("h", IG)


def ir_unrestricted_scope():
    return b.assume("h", IG)


def iota_r_unrestricted_scope():
    return b.assume("h", "(G (iota x (F x)))")


def iota_r_leibniz():
    return b.eq_e(b.assume("e", "(= (iota x (F x)) (p s))"),
                  b.assume("h", "(ex! (iota x (F x)))"))


MUTANTS = {
    "bote_not_atomic": (bote_not_atomic, System.IPF, "NotAtomic"),
    "eqe_not_atomic": (eqe_not_atomic, System.IPF, "NotAtomic"),
    "ie2p_not_atomic": (ie2p_not_atomic, System.IPF_I, "NotAtomic"),
    "ie4p_not_atomic": (ie4p_not_atomic, System.IPF_I, "NotAtomic"),
    "eqe_vacuous": (eqe_vacuous, System.IPF, "VacuousEq"),
    "eqe_wrong_instance": (eqe_wrong_instance, System.IPF, "WrongPremiseShape"),
    "alli_eigen_not_fresh": (alli_eigen_not_fresh, System.IPF, "EigenNotFresh"),
    "alli_eigen_open": (alli_eigen_open, System.IPF, "EigenInOpenAssumption"),
    "exe_eigen_not_fresh": (exe_eigen_not_fresh, System.IPF, "EigenNotFresh"),
    "exe_eigen_in_conclusion": (exe_eigen_in_conclusion, System.IPF, "EigenInConclusion"),
    "exe_eigen_open": (exe_eigen_open, System.IPF, "EigenInOpenAssumption"),
    "ii_bad_eigen": (ii_bad_eigen, System.IPF_I, "EigenNotFresh"),
    "ii_eigen_open": (ii_eigen_open, System.IPF_I, "EigenInOpenAssumption"),
    "ie1p_eigen_a_not_fresh": (ie1p_eigen_a_not_fresh, System.IPF_I, "EigenNotFresh"),
    "ie1p_eigen_b_in_conclusion": (ie1p_eigen_b_in_conclusion, System.IPF_I, "EigenInConclusion"),
    "ie1p_eigen_b_open": (ie1p_eigen_b_open, System.IPF_I, "EigenInOpenAssumption"),
    "ie3p_eigen_not_fresh": (ie3p_eigen_not_fresh, System.IPF_I, "EigenNotFresh"),
    "ie3p_eigen_in_conclusion": (ie3p_eigen_in_conclusion, System.IPF_I, "EigenInConclusion"),
    "ie3p_eigen_open": (ie3p_eigen_open, System.IPF_I, "EigenInOpenAssumption"),
    "ie5p_eigen_not_fresh": (ie5p_eigen_not_fresh, System.IPF_I, "EigenNotFresh"),
    "ie5p_eigen_in_conclusion": (ie5p_eigen_in_conclusion, System.IPF_I, "EigenInConclusion"),
    "ie5p_eigen_open": (ie5p_eigen_open, System.IPF_I, "EigenInOpenAssumption"),
    "ande_wrong_conclusion": (ande_wrong_conclusion, System.IPF, "WrongPremiseShape"),
    "impi_wrong_discharge": (impi_wrong_discharge, System.IPF, "WrongDischarge"),
    "ll_same_variables": (ll_same_variables, System.IPF_iota, "LLVariablesNotDistinct"),
    "I_outside_system": (I_outside_system, System.IPF, "RuleNotInSystem"),
    "ir_unrestricted_scope": (ir_unrestricted_scope, System.IPF_IR, "RestrictedScope"),
    "iota_r_unrestricted_scope": (iota_r_unrestricted_scope, System.IPF_iotaR, "RestrictedScope"),
    "iota_r_leibniz": (iota_r_leibniz, System.IPF_iotaR, "RestrictedLeibniz"),
}
