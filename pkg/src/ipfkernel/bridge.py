"""Translation between the restricted systems and derivation templates.

In the restricted fragments ``Ix[A, ex! x]`` and ``ex! (iota x A)``, and
``Ix[A, x = t]`` and ``(iota x A) = t``, are notational variants; templates
are proof scripts with schematic letters ``?F``, ``?G`` and ``?t``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .checker import check
from .deduction import (Deduction, eigen_apps, map_formulas, node_at,
                        params_in, rename_eigen, replace_at, uniquify_parameters)
from .derived import expand_general_leibniz
from .errors import CaptureConflict, KernelError, MissingBinding, NotRestricted
from .normalizer import sweep_vacuous
from .script import parse_script
from .sexpr import read_one
from .syntax import (And, Atom, Bottom, Eq, Exists, ExistsBang, Forall,
                     FormulaReader, I, Iff, Imp, Iota, Or, SchemaFormula,
                     SchemaTerm, Var, contains_I, contains_iota, fresh_name,
                     free_vars, instantiate_schema, iota_restriction_violations,
                     I_restriction_violations, params_of, print_any, substitute)
from .systems import System
from .template_src import OBLIGATIONS, TEMPLATES

TO_IOTA = "iota"
TO_I = "i"


# -- translation ---------------------------------------------------------------

def _check_source(f, direction: str) -> None:
    if direction == TO_IOTA:
        if contains_iota(f):
            raise NotRestricted("formula already uses definite description terms")
        bad = I_restriction_violations(f)
    elif direction == TO_I:
        if contains_I(f):
            raise NotRestricted("formula already uses the binary quantifier")
        bad = iota_restriction_violations(f)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if bad:
        raise NotRestricted(f"not in the restricted fragment: {print_any(bad[0])}")


def _to_iota(f):
    if isinstance(f, I):
        body = _to_iota(f.restrictor)
        if isinstance(f.scope, ExistsBang):
            return ExistsBang(Iota(f.var, body))
        return Eq(Iota(f.var, body), f.scope.rhs)
    return _map_sub(f, _to_iota)


def _as_I(io: Iota, scope_of):
    v, body = io.var, io.body
    # the other side of = must not be captured by the binder
    other = scope_of(Var(v))
    if isinstance(other, Eq) and v in free_vars(other.rhs):
        nv = fresh_name(v, free_vars(other.rhs) | free_vars(body))
        body = substitute(body, v, Var(nv))
        v = nv
    return I(v, _to_I(body), scope_of(Var(v)))


def _to_I(f):
    if isinstance(f, ExistsBang) and isinstance(f.arg, Iota):
        return _as_I(f.arg, ExistsBang)
    if isinstance(f, Eq) and isinstance(f.lhs, Iota):
        return _as_I(f.lhs, lambda x: Eq(x, f.rhs))
    if isinstance(f, Eq) and isinstance(f.rhs, Iota):
        return _as_I(f.rhs, lambda x: Eq(x, f.lhs))
    return _map_sub(f, _to_I)


def _map_sub(f, fn):
    if isinstance(f, (Atom, Eq, ExistsBang, Bottom, SchemaFormula)):
        return f
    if isinstance(f, (And, Or, Imp, Iff)):
        return type(f)(fn(f.left), fn(f.right))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, fn(f.body))
    if isinstance(f, I):
        return I(f.var, fn(f.restrictor), fn(f.scope))
    raise TypeError(f"not a formula: {f!r}")


def translate(f, direction: str):
    """Rewrite a restricted formula into the other notation.

    ``direction`` is ``"iota"`` or ``"i"``. An identity with the description
    on the right, ``t = iota x A``, becomes ``Ix[A, x = t]``.
    """
    _check_source(f, direction)
    return _to_iota(f) if direction == TO_IOTA else _to_I(f)


# -- templates -----------------------------------------------------------------

@lru_cache(maxsize=None)
def template_script(name: str):
    if name not in TEMPLATES:
        raise KeyError(f"unknown template {name!r}")
    path = resources.files("ipfkernel") / "data" / "templates" / f"{name}.fpl"
    return parse_script(path.read_text(encoding="utf-8"), schematic=True, allow_holes=True)


def template_system(name: str) -> System:
    return template_script(name).system


def template_ids() -> list:
    return list(TEMPLATES)


def _letters(d: Deduction) -> tuple:
    forms, terms = set(), set()

    def walk(x):
        if isinstance(x, SchemaFormula):
            forms.add(x.name)
        elif isinstance(x, SchemaTerm):
            terms.add(x.name)
        if dataclasses.is_dataclass(x):
            for fld in dataclasses.fields(x):
                walk(getattr(x, fld.name))
        elif isinstance(x, tuple):
            for y in x:
                walk(y)

    walk(d)
    return forms, terms


def _symbols(sx) -> set:
    if isinstance(sx, list):
        return set().union(*map(_symbols, sx)) if sx else set()
    return {str(sx)}


def _formula_binding(letter, value):
    if isinstance(value, tuple):
        vs, body = value
    else:
        vs = ("x",)
        body = value
    if isinstance(body, str):
        sx = read_one(body)
        # accept any name as free here so that stray variables are reported below
        body = FormulaReader(None, False, set(vs) | _symbols(sx)).formula(sx)
    extra = free_vars(body) - set(vs)
    if extra:
        raise CaptureConflict(f"binding for ?{letter} has free variables {sorted(extra)}")
    return tuple(vs), body


def _term_binding(letter, value):
    if isinstance(value, str):
        sx = read_one(value)
        value = FormulaReader(None, False, _symbols(sx)).term(sx, ())
    if isinstance(value, Var) or free_vars(value):
        raise CaptureConflict(f"binding for ?{letter} is not a closed term")
    return value


def instantiate_template(name: str, bindings: dict) -> Deduction:
    """Bind the schematic letters of template ``name``.

    Formula letters take a formula with free ``x`` (or a ``(vars, body)``
    pair); term letters take closed terms. Eigenparameters clashing with
    parameters of the bindings are renamed first.
    """
    d = template_script(name).body
    flet, tlet = _letters(d)
    bind = {k.lstrip("?"): v for k, v in bindings.items()}
    missing = sorted((flet | tlet) - set(bind))
    if missing:
        raise MissingBinding("no binding for " + ", ".join("?" + m for m in missing))
    formulas = {k: _formula_binding(k, bind[k]) for k in flet}
    terms = {k: _term_binding(k, bind[k]) for k in tlet}
    taken = set()
    for vs, body in formulas.values():
        taken |= params_of(body)
    for t in terms.values():
        taken |= params_of(t)
    avoid = taken | params_in(d)
    for pos, app in eigen_apps(d):
        app = node_at(d, pos)
        for k, e in enumerate(app.eigen):
            if e in taken:
                new = fresh_name(e, avoid)
                avoid.add(new)
                app = rename_eigen(app, k, new)
        d = replace_at(d, pos, app)
    inst = lambda f: instantiate_schema(f, formulas, terms)
    tinst = lambda t: terms[t.name] if isinstance(t, SchemaTerm) else instantiate_term(t, formulas, terms)
    d = map_formulas(d, inst, tinst)
    return uniquify_parameters(sweep_vacuous(expand_general_leibniz(d)))


def instantiate_term(t, formulas, terms):
    if isinstance(t, Iota):
        return Iota(t.var, instantiate_schema(t.body, formulas, terms))
    return t


# -- equivalence of the restricted systems ---------------------------------------

@dataclass
class Obligation:
    name: str
    system: System
    passed: bool
    codes: list
    unrestricted_valid: bool | None = None   # valid once the restrictions are lifted

    def line(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        extra = ""
        if not self.passed:
            extra = " " + ",".join(self.codes)
            if self.unrestricted_valid:
                extra += " (valid without the restrictions)"
        return f"{mark} {self.name} [{self.system.value}]{extra}"


@dataclass
class EquivalenceReport:
    formula: object
    obligations: list = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(o.passed for o in self.obligations)

    def __str__(self) -> str:
        head = f"F := {print_any(self.formula)}"
        if self.error:
            return f"{head}\nNotRestricted: {self.error}"
        return "\n".join([head] + [o.line() for o in self.obligations])


_UNRESTRICTED = {System.IPF_iotaR: System.IPF_iota, System.IPF_IR: System.IPF_I}


def _discharge(name, d, system) -> Obligation:
    rep = check(d, system, allow_holes=True)
    ob = Obligation(name, system, rep.valid, sorted(set(rep.codes)))
    if not rep.valid:
        ob.unrestricted_valid = check(d, _UNRESTRICTED[system], allow_holes=True).valid
    return ob


def verify_equivalence(f) -> EquivalenceReport:
    """Check every schema obligation relating the two restricted systems for ``F``.

    ``F`` has the free variable ``x``. Each rule of the binary quantifier is
    derived from Lambert's law in the restricted description system, and
    Lambert's law is derived in the restricted binary-quantifier system.
    """
    if isinstance(f, str):
        f = FormulaReader(None, False, ("x",)).formula(read_one(f))
    rep = EquivalenceReport(f)
    if contains_I(f) or contains_iota(f) or free_vars(f) - {"x"}:
        rep.error = "the restrictor must be a description-free formula in x"
        return rep
    for name in OBLIGATIONS:
        rep.obligations.append(_discharge(name, instantiate_template(name, {"F": f}),
                                          template_system(name)))
    ll = instantiate_template("LL_in_IR", {"F": translate(f, TO_I)})
    rep.obligations.append(_discharge("LL_in_IR", ll, template_system("LL_in_IR")))
    return rep
