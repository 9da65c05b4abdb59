"""The six-dimensional Frobenius Lie algebras whose exact form has a
Lagrangian ideal: brackets, listed Lagrangian ideals, normal-form symplectic
families, the flat 3-dimensional source of each cotangent presentation, and
the general-position 2-cocycle family with its nondegeneracy condition.

Conventions: w0 abbreviates e14+e25+e36 in comments; in specs it is always
written out.  Ideal entries may carry parameter pins ({"a": 0}) meaning the
subspace is only claimed an ideal on that parameter slice.  Free form
parameters: t, t1..t3, tp (tau'), tpp (tau''), ep (sign +-1), ep1/ep2 (0/1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from ..lie import LieAlgebra, from_brackets
from .base import Env, Params, UnknownId

__all__ = ["SixEntry", "FormSpec", "GeneralForm", "IdealSpec", "SIXDIM",
           "six_entry", "six_instance"]

SIGN = (Q(1), Q(-1))
ZERO_FIRST = (Q(0), Q(1), Q(2), Q(-1), Q(3))
NONZERO = (Q(1), Q(2), Q(-1), Q(3), Q(-2))


@dataclass(frozen=True)
class FormSpec:
    """A listed symplectic normal form with its own free parameters."""
    name: str
    spec: str
    params: Params = field(default_factory=Params)


@dataclass(frozen=True)
class GeneralForm:
    """General-position closed form family and its nondegeneracy condition."""
    spec: str
    cond: str
    free: tuple[str, ...]
    fixed: dict = field(default_factory=dict)   # entry-parameter pins


@dataclass(frozen=True)
class IdealSpec:
    indices: tuple[int, ...]
    fixed: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SixEntry:
    id: str
    params: Params
    brackets: str
    ideals: tuple[IdealSpec, ...]
    forms: tuple[FormSpec, ...]
    flat_id: str | None = None
    flat_map: dict = field(default_factory=dict)   # flat param -> expression str
    alpha: str | None = None                       # restricted-cocycle spec
    general: tuple[GeneralForm, ...] = ()
    errata: tuple[str, ...] = ()

    def instantiate(self, env: Env) -> LieAlgebra:
        full = self.params.complete(env)
        return from_brackets(6, self.brackets, full)


def _fp(*names, guard=lambda e: True, cand=None):
    defaults = {"ep": SIGN, "ep1": (Q(0), Q(1)), "ep2": (Q(1), Q(0))}
    pools = {n: defaults.get(n, ZERO_FIRST) for n in names}
    pools.update(cand or {})
    return Params(tuple(names), guard, None, pools)


def _ii(*specs):
    out = []
    for s in specs:
        if isinstance(s, tuple) and s and isinstance(s[0], int):
            out.append(IdealSpec(s))
        else:
            out.append(IdealSpec(*s))
    return tuple(out)


W0 = "e14+e25+e36"

SIXDIM: tuple[SixEntry, ...] = (
    SixEntry(
        "g_6_1", Params(),
        "[1,4]=-e6; [2,5]=-e6; [3,4]=-e4; [3,5]=-e5; [3,6]=-e6",
        _ii((4, 5, 6), (1, 2, 6), (2, 4, 6), (1, 5, 6)),
        (FormSpec("w", f"t1*e12+t2*e13+t3*e23+{W0}", _fp("t1", "t2", "t3")),),
        "h1", {},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*e34+w35*e35-w36*de6",
            "w36", ("w12", "w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_2", Params(("b",), lambda e: e["b"] != 0),
        "[1,4]=-e4-e6; [1,5]=-e4; [1,6]=-b*e5; [2,4]=-b*e5; [2,5]=-e6;"
        "[2,6]=-b*e4+b*e5; [3,4]=-e4; [3,5]=-e5; [3,6]=-e6",
        _ii((4, 5, 6)),
        (FormSpec("w", f"t3*e12-t1*e13-t2*e23-e14-e25-e36", _fp("t1", "t2", "t3")),),
        "h2", {"b": "b"},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*(e14+e15+b*e26+e34)"
            "+w35*(b*e16+b*e24-b*e26+e35)+w36*de6",
            "w35^3*b^2+(w34^3-2*w35*w34^2+w35*(w35-3*w36)*w34+w35^2*w36)*b"
            "+w36^2*(w34+w36)",
            ("w12", "w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_3", Params(),
        "[1,4]=-e6; [2,4]=-e5; [2,5]=-e6; [3,4]=-e4; [3,5]=-e5; [3,6]=-e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", f"t1*e12+t2*e13+t3*e23+{W0}", _fp("t1", "t2", "t3")),),
        "h3", {},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*e34+w35*(e24+e35)-w36*de6",
            "w36", ("w12", "w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_4", Params(("a",), lambda e: e["a"] != 0),
        "[2,3]=-e2; [1,4]=-e4; [1,5]=-e5; [1,6]=-e6; [2,5]=-e4;"
        "[3,5]=-e5-e6; [3,6]=-e4-a*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h4", {"a": "a"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w16*(-a*e14-e15+e16-a*e25)+w35*(e15+e35)+w36*de4",
            "w36*(a*w16-w36)", ("w13", "w23", "w16", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_5", Params(),
        "[2,3]=-e2; [1,4]=-e4; [1,5]=-e5; [1,6]=-e6; [2,5]=-e4;"
        "[3,5]=-e5; [3,6]=-e4-e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h5", {},
        general=(GeneralForm(
            "w13*e13+w23*e23+w35*(e15+e35)+w16*(e16+e36)+w25*de4",
            "w25*(w25+w16)", ("w13", "w23", "w35", "w16", "w25")),),
    ),
    SixEntry(
        "g_6_6", Params(),
        "[2,3]=-e2; [1,4]=-e4; [1,5]=-e5; [1,6]=-e6; [2,5]=-e4;"
        "[3,5]=-e5; [3,6]=-e4",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h6", {},
        general=(GeneralForm(
            "w13*e13+w23*e23+w16*e16+w35*(e15+e35)+w36*de4",
            "w36", ("w13", "w23", "w16", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_7", Params(),
        "[2,3]=-e2; [1,4]=-e4; [1,5]=-e5; [1,6]=-e6; [2,5]=-e4; [2,6]=-e5;"
        "[3,5]=-e5; [3,6]=-e4-2*e6",
        _ii((4, 5, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", "tp*e13+e14-e16+e25-e36", _fp("tp"))),
        "h7", {},
        general=(GeneralForm(
            "w13*e13+w23*e23+w16*(-2*e14+e16-2*e25)+w35*(e15+e26+e35)+w36*de4",
            "(2*w16-w36)*(2*w16*w36+w35^2-w36^2)",
            ("w13", "w23", "w16", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_8", Params(),
        "[2,3]=-e2; [1,4]=-e4; [1,5]=-e5; [1,6]=-e6; [2,5]=-e4; [2,6]=e5;"
        "[3,5]=-e5; [3,6]=-e4-2*e6",
        _ii((4, 5, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", "tp*e13+e14-e16+e25-e36", _fp("tp"))),
        "h8", {},
        general=(GeneralForm(
            "w13*e13+w23*e23+w16*(-2*e14+e16-2*e25)+w35*(e15-e26+e35)+w36*de4",
            "(2*w16-w36)*(2*w16*w36-w35^2-w36^2)",
            ("w13", "w23", "w16", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_9", Params(("a",)),
        "[2,3]=-e2; [1,4]=-e4; [1,5]=e4-e5+e6; [1,6]=-e6; [2,5]=-e4;"
        "[3,5]=e4-e5-a*e6; [3,6]=-e4-e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h9", {"a": "a"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w16*(-e14-(a+1)*e15+e16-e25)+w35*(e15+e35)+w36*de4",
            "w36*(w16-w36)", ("w13", "w23", "w16", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_10_1",
        Params(("a", "b"), lambda e: e["a"] != 0 and e["b"] != 0 and e["a"] != e["b"]),
        "[2,3]=-e2; [1,4]=-(a/b)*e4+e6; [1,5]=-e5; [1,6]=(b-a)/b*e4;"
        "[2,5]=-e4+e6; [3,4]=e4; [3,6]=e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h10", {"l": "-1", "a": "a", "b": "b"},
        general=(GeneralForm(
            "w13*e13+w15*e15+w23*e23+w34*(-(a/b)*e14+((b-a)/b)*e16-e25+e34)-w36*de6",
            "((a-b)*w34-b*w36)*(w34-w36)", ("w13", "w15", "w23", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_10_2",
        Params(("l", "a", "b"),
               lambda e: all(e[n] != 0 for n in "lab") and e["a"] != e["b"]
               and e["l"] != -1),
        "[2,3]=-e2; [1,4]=-(a/b)*e4-1/l*e6; [1,5]=-e5; [1,6]=(l*(a-b)/b)*e4;"
        "[2,5]=-e4-1/l*e6; [3,4]=-1/l*e4; [3,5]=-(1+l)/l*e5; [3,6]=-1/l*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"-l*t*e13+{W0}", _fp("t")),),
        "h10", {"l": "l", "a": "a", "b": "b"},
        general=(GeneralForm(
            "w23*e23+w13*e13+w34*((a*l/b)*e14+(l^2*(b-a)/b)*e16+l*e25+e34)"
            "+w35*((l/(1+l))*e15+e35)+l*w36*de6",
            "(l*(a-b)*w34+w36*b)*(l*w34+w36)", ("w23", "w13", "w34", "w35", "w36")),),
        errata=("general-form term printed as w12*e12, which is not closed "
                "here; read as w23*e23 (the missing closed direction)",),
    ),
    SixEntry(
        "g_6_11_1", Params(("a", "b")),
        "[1,2]=a*e4; [2,3]=-e2+b*e6; [1,4]=-e4+e6; [1,5]=-e5;"
        "[2,5]=-e4+e6; [3,4]=e4; [3,6]=e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h11", {"l": "-1"}, alpha="12: a*e1; 23: b*e3",
        general=(GeneralForm(
            "w13*e13+w15*e15+w23*e23+w34*(a*e12-e14-e25+e34)-w36*de6",
            "w36*(w36-w34)", ("w13", "w15", "w23", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_11_2", Params(("l",), lambda e: e["l"] not in (0, 1, -1)),
        "[2,3]=-e2; [1,4]=-e4-1/l*e6; [1,5]=-e5; [2,5]=-e4-1/l*e6;"
        "[3,4]=-1/l*e4; [3,5]=-(1+l)/l*e5; [3,6]=-1/l*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"-l*t*e13+{W0}", _fp("t")),),
        "h11", {"l": "l"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*(l*e14+l*e25+e34)+w35*((l/(l+1))*e15+e35)"
            "+l*w36*de6",
            "w36*(l*w34+w36)", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_11_2_l1", Params(),
        "[2,3]=-e2; [1,4]=-e4-e6; [1,5]=-e5; [2,5]=-e4-e6; [3,4]=-e4;"
        "[3,5]=-2*e5; [3,6]=-e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"tp*e13+e24-e26+{W0}", _fp("tp"))),
        "h11", {"l": "1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*(e14+e25+e34)+w15*(e15+2*e35)"
            "+w26*(-e24+e26)+w36*de6",
            "(w34+w36)*(w15*w26-w34*w36-w36^2)",
            ("w13", "w23", "w34", "w15", "w26", "w36")),),
    ),
    SixEntry(
        "g_6_12", Params(("l",), lambda e: e["l"] not in (0, -2)),
        "[2,3]=-e2; [1,4]=-1/l*e6; [1,5]=-e5; [1,6]=-l*e4; [2,5]=-e4-1/l*e6;"
        "[3,4]=-1/l*e4; [3,5]=-(1+l)/l*e5; [3,6]=-1/l*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"-l*t*e13+{W0}", _fp("t")),),
        "h12", {"l": "l"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w15*(e15+((1+l)/l)*e35)+w34*(l^2*e16+l*e25+e34)"
            "+l*w36*de6",
            "(l*w34+w36)*(l*w34-w36)", ("w13", "w23", "w15", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_12_lm2", Params(),
        "[2,3]=-e2; [1,4]=1/2*e6; [1,5]=-e5; [1,6]=2*e4; [2,5]=-e4+1/2*e6;"
        "[3,4]=1/2*e4; [3,5]=-1/2*e5; [3,6]=1/2*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"2*t*e13+{W0}", _fp("t", guard=lambda e: e["t"] != 0,
                                            cand={"t": NONZERO})),
         FormSpec("wp", f"2*tp*e13-e45+2*e56+{W0}", _fp("tp"))),
        "h12", {"l": "-2"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*(4*e16-2*e25+e34)+w35*(2*e15+e35)"
            "+w45*(e45-2*e56)-2*w36*de6",
            "(2*w23*w45-4*w34^2+w36^2)*(2*w34-w36)",
            ("w13", "w23", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_13_1", Params(("l",), lambda e: e["l"] not in (0, 1, -1, -2, Q(-1, 2))),
        "[2,3]=-e2; [1,4]=-e4-1/l*e6; [2,5]=-1/l*e6; [3,4]=-1/l*e4;"
        "[3,5]=-(1+l)/l*e5; [3,6]=-1/l*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"-l*t*e13+{W0}", _fp("t")),),
        "h13", {"l": "l"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w35*e35+w34*(l*e14+e34)+l*w36*de6",
            "w36*(l*w34+w36)", ("w13", "w23", "w35", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_13_1_lm1", Params(),
        "[2,3]=-e2; [1,4]=-e4+e6; [2,5]=e6; [3,4]=e4; [3,6]=e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"t*e13+tp*e15+tpp*e35+{W0}", _fp("t", "tp", "tpp"))),
        "h13", {"l": "-1"},
        general=(GeneralForm(
            "w13*e13+w15*e15+w23*e23+w35*e35+w34*(-e14+e34)-w36*de6",
            "w36*(w36-w34)", ("w13", "w15", "w23", "w35", "w34", "w36")),),
        errata=("normal form listed with an undefined baseline form; read as "
                "the tau-family of the same row",
                "general form term printed as w15*e14; read as w15*e15"),
    ),
    SixEntry(
        "g_6_13_1_l1", Params(),
        "[2,3]=-e2; [1,4]=-e4-e6; [2,5]=-e6; [3,4]=-e4; [3,5]=-2*e5; [3,6]=-e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"tp*e13+e24-e26-((1+ep)/ep)*e35+{W0}", _fp("tp", "ep"))),
        "h13", {"l": "1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w35*e35+w34*(e14+e34)+w26*(-e24+e26)-w36*de6",
            "(w34-w36)*(w26*w35-w36^2)",
            ("w13", "w23", "w35", "w34", "w26", "w36")),),
    ),
    SixEntry(
        "g_6_13_1_lm2", Params(),
        "[2,3]=-e2; [1,4]=-e4+1/2*e6; [2,5]=1/2*e6; [3,4]=1/2*e4;"
        "[3,5]=-1/2*e5; [3,6]=1/2*e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"tp*e13+((2-ep)/(2*ep))*e23-e45+2*e56+{W0}",
                  _fp("tp", "ep", guard=lambda e: e["ep"] == -1))),
        "h13", {"l": "-2"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w35*e35+w34*(-2*e14+e34)+w45*(e45-2*e56)-2*w36*de6",
            "(2*w34-w36)*(2*w23*w45+w36^2)",
            ("w13", "w23", "w35", "w34", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_13_2", Params(("a", "b")),
        "[1,2]=a*e5; [2,3]=-e2+b*e5; [1,4]=-e4+2*e6; [2,5]=2*e6; [3,4]=2*e4;"
        "[3,5]=e5; [3,6]=2*e6",
        _ii((4, 5, 6), ((2, 4, 6), {"a": Q(0), "b": Q(0)})),
        (FormSpec("w", f"t/2*e13+{W0}", _fp("t")),),
        "h13", {"l": "-1/2"}, alpha="12: a*e2; 23: b*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*(-1/2*e14+e34)+w35*(a*e12+e35)-1/2*w36*de6",
            "w36*(w34-2*w36)", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_14_1", Params(("l",), lambda e: e["l"] not in (0, 1, -1, -2, Q(-1, 2))),
        "[2,3]=-e2; [1,4]=-1/l*e6; [2,5]=-1/l*e6; [3,4]=-1/l*e4;"
        "[3,5]=-(1+l)/l*e5; [3,6]=-1/l*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"-l*t*e13+{W0}", _fp("t")),),
        "h14", {"l": "l"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+l*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_14_1_l1", Params(),
        "[2,3]=-e2; [1,4]=-e6; [2,5]=-e6; [3,4]=-e4; [3,5]=-2*e5; [3,6]=-e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"-t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"tp*e13+e24+{W0}", _fp("tp"))),
        "h14", {"l": "1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*e24+w34*e34+w35*e35-w36*de6",
            "w36", ("w13", "w23", "w24", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_14_1_lm2", Params(),
        "[2,3]=-e2; [1,4]=1/2*e6; [2,5]=1/2*e6; [3,4]=1/2*e4;"
        "[3,5]=-1/2*e5; [3,6]=1/2*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"2*t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"-2*tp*e13+e45+{W0}", _fp("tp"))),
        "h14", {"l": "-2"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+w45*e45-w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_14_2", Params(("a", "b"), lambda e: e["b"] != 0),
        "[1,2]=a*e4; [1,3]=b*e5; [2,3]=-e2+b*e4; [1,4]=e6; [2,5]=e6;"
        "[3,4]=e4; [3,6]=e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"tp*e15+tpp*e35+{W0}", _fp("tp", "tpp"))),
        "h14", {"l": "-1"}, alpha="12: a*e1; 13: b*e2; 23: b*e1",
        general=(GeneralForm(
            "w13*e13+w15*e15+w23*e23+w35*e35+w34*(a*e12+e34)-w36*de6",
            "w36", ("w13", "w15", "w23", "w35", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_14_2_b0", Params(("a",)),
        "[1,2]=a*e4; [2,3]=-e2; [1,4]=e6; [2,5]=e6; [3,4]=e4; [3,6]=e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),
         FormSpec("wp", f"t*e13+tp*e15+tpp*e35+{W0}", _fp("t", "tp", "tpp"))),
        "h14", {"l": "-1"}, alpha="12: a*e1",
        general=(GeneralForm(
            "w13*e13+w15*e15+w23*e23+w35*e35+w34*(a*e12+e34)-w36*de6",
            "w36", ("w13", "w15", "w23", "w35", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_14_3", Params(("a", "b")),
        "[1,2]=a*e5; [2,3]=-e2+b*e5; [1,4]=2*e6; [2,5]=2*e6; [3,4]=2*e4;"
        "[3,5]=e5; [3,6]=2*e6",
        _ii((4, 5, 6)),
        (FormSpec("w", f"t*e13+{W0}", _fp("t")),),
        "h14", {"l": "-1/2"}, alpha="12: a*e2; 23: b*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*(a*e12+e35)-1/2*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_15", Params(),
        "[1,2]=e3; [1,4]=-e5; [1,6]=-e4; [2,4]=-e4; [2,5]=-e5; [2,6]=e4-e6;"
        "[3,6]=-e5",
        _ii((4, 5, 6), (3, 4, 5)),
        (FormSpec("w", f"t1*e13+t2*e23+{W0}", _fp("t1", "t2")),),
        "h15", {},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w26*e26+w24*(e16+e24)+w36*de5",
            "w36", ("w12", "w13", "w23", "w26", "w24", "w36")),),
    ),
    SixEntry(
        "g_6_16", Params(),
        "[1,2]=e3; [1,4]=-e5; [2,4]=-e4; [2,5]=-e5; [2,6]=e4-e6; [3,6]=-e5",
        _ii((4, 5, 6), (3, 4, 5)),
        (FormSpec("w", f"t1*e13+t2*e23+{W0}", _fp("t1", "t2")),),
        "h16", {},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w26*e26+w24*e24+w36*de5",
            "w36", ("w12", "w13", "w23", "w26", "w24", "w36")),),
    ),
    SixEntry(
        "g_6_17_1",
        Params(("m",), lambda e: e["m"] not in (0, 1, Q(1, 2), Q(1, 3))),
        "[1,3]=e1; [2,3]=e1+e2; [1,4]=-1/m*e6; [2,5]=-1/m*e6;"
        "[3,4]=-(1-m)/m*e4+e5; [3,5]=-(1-m)/m*e5; [3,6]=-1/m*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6)),
        (FormSpec("w", W0),),
        "h17", {"m": "m"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+m*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_17_1_m1", Params(),
        "[1,3]=e1; [2,3]=e1+e2; [1,4]=-e6; [2,5]=-e6; [3,4]=e5; [3,6]=-e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"tpp*e35-tp*e45+{W0}", _fp("tp", "tpp"))),
        "h17", {"m": "1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+w45*e45+w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_17_2", Params(("a",)),
        "[1,3]=e1+a*e4; [2,3]=e1+e2; [1,4]=-2*e6; [2,5]=-2*e6;"
        "[3,4]=-e4+e5; [3,5]=-e5; [3,6]=-2*e6",
        _ii((4, 5, 6)),
        (FormSpec("w", W0),),
        "h17", {"m": "1/2"}, alpha="13: a*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+1/2*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
        errata=("general form prints w35*e35e45; e45 extends to no closed "
                "form here (the cocycle space is 5-dimensional), so the "
                "spurious factor is dropped",),
    ),
    SixEntry(
        "g_6_17_3", Params(("b",)),
        "[1,2]=b*e5; [1,3]=e1; [1,4]=-3*e6; [2,3]=e1+e2; [2,5]=-3*e6;"
        "[3,4]=-2*e4+e5; [3,5]=-2*e5; [3,6]=-3*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),),
        "h17", {"m": "1/3"}, alpha="12: b*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*(-b/2*e12+e35)+1/3*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_18_1",
        Params(("et",), lambda e: e["et"] not in (0, 1, Q(1, 2), Q(1, 3))),
        "[1,3]=e1; [2,3]=e2; [1,4]=-1/et*e6; [2,5]=-1/et*e6;"
        "[3,4]=-(1-et)/et*e4; [3,5]=-(1-et)/et*e5; [3,6]=-1/et*e6",
        _ii((4, 5, 6), (1, 5, 6), (2, 4, 6), (1, 2, 6)),
        (FormSpec("w", W0),),
        "h18", {"et": "et"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+et*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_18_1_e1", Params(),
        "[1,3]=e1; [2,3]=e2; [1,4]=-e6; [2,5]=-e6; [3,6]=-e6",
        _ii((4, 5, 6), (1, 5, 6), (2, 4, 6), (1, 2, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"-tp*e35+tpp*e45+{W0}", _fp("tp", "tpp"))),
        "h18", {"et": "1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+w45*e45+w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_18_2", Params(("a", "b", "c")),
        "[1,3]=e1+a*e4+b*e5; [2,3]=e2+b*e4+c*e5; [1,4]=-2*e6; [2,5]=-2*e6;"
        "[3,4]=-e4; [3,5]=-e5; [3,6]=-2*e6",
        _ii((4, 5, 6)),
        (FormSpec("w", W0),),
        "h18", {"et": "1/2"}, alpha="13: a*e1+b*e2; 23: b*e1+c*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+1/2*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_18_3", Params(("a", "b")),
        "[1,2]=a*e4+b*e5; [1,3]=e1; [2,3]=e2; [1,4]=-3*e6; [2,5]=-3*e6;"
        "[3,4]=-2*e4; [3,5]=-2*e5; [3,6]=-3*e6",
        _ii((4, 5, 6)),
        (FormSpec("w", W0),),
        "h18", {"et": "1/3"}, alpha="12: a*e1+b*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*(-a/2*e12+e34)+w35*(-b/2*e12+e35)+1/3*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_1",
        Params(("al", "g"),
               lambda e: e["g"] not in (0, 1, Q(1, 2)) and 0 < abs(e["al"]) < 1
               and e["al"] not in (1 / (2 * e["g"]), -1 + 1 / e["g"],
                                   -2 + 1 / e["g"], Q(-1, 2) + 1 / (2 * e["g"]),
                                   -1 + 2 / e["g"], 1 - 1 / e["g"], 1 + 1 / e["g"])),
        "[1,3]=e1; [2,3]=al*e2; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=(al-1/g)*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),),
        "h19", {"al": "al", "g": "g"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+g*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_1_g1",
        Params(("al",), lambda e: 0 < abs(e["al"]) < 1 and e["al"] != Q(1, 2)),
        "[1,3]=e1; [2,3]=al*e2; [1,4]=-e6; [2,5]=-e6; [3,5]=(al-1)*e5;"
        "[3,6]=-e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e34+{W0}")),
        "h19", {"al": "al", "g": "1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_1_a2g",
        Params(("g",), lambda e: e["g"] > 1 and e["g"] not in (Q(3, 2), 2)),
        "[1,3]=e1; [2,3]=(-1+2/g)*e2; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=(-1+1/g)*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e45+{W0}")),
        "h19", {"al": "-1+2/g", "g": "g"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+w45*e45+g*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_19_1_s32", Params(),
        "[1,3]=e1; [2,3]=1/3*e2; [1,4]=-2/3*e6; [2,5]=-2/3*e6; [3,4]=1/3*e4;"
        "[3,5]=-1/3*e5; [3,6]=-2/3*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e24+{W0}")),
        "h19", {"al": "1/3", "g": "3/2"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*e24+w34*e34+w35*e35+w45*e45+3/2*w36*de6",
            "w36", ("w13", "w23", "w24", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_19_1_a1m",
        Params(("g",), lambda e: e["g"] > Q(1, 2) and e["g"] not in (1, 2, Q(3, 2))),
        "[1,3]=e1; [2,3]=(1-1/g)*e2; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=(1-2/g)*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e24+{W0}")),
        "h19", {"al": "1-1/g", "g": "g"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*e24+w34*e34+w35*e35+g*w36*de6",
            "w36", ("w13", "w23", "w24", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_1_a12g2", Params(),
        "[1,3]=e1; [2,3]=1/2*e2; [1,4]=-1/2*e6; [2,5]=-1/2*e6; [3,4]=1/2*e4;"
        "[3,6]=-1/2*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"ep1*e24+ep2*e35+{W0}",
                  _fp("ep1", "ep2",
                      guard=lambda e: e["ep1"] ** 2 + e["ep2"] ** 2 != 0))),
        "h19", {"al": "1/2", "g": "2"},
        errata=("sign-pattern guard printed as ep1^2+ep1^2 != 0; read as "
                "ep1^2+ep2^2 != 0",),
    ),
    SixEntry(
        "g_6_19_1_a1p",
        Params(("g",), lambda e: e["g"] < Q(-1, 2) and e["g"] != -1),
        "[1,3]=e1; [2,3]=(1+1/g)*e2; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e15+{W0}")),
        "h19", {"al": "1+1/g", "g": "g"},
        general=(GeneralForm(
            "w13*e13+w15*e15+w23*e23+w34*e34+w35*e35+g*w36*de6",
            "w36", ("w13", "w15", "w23", "w34", "w35", "w36")),),
        errata=("last general-form term printed as -g*w36*e36; read as "
                "+g*w36*de6",),
    ),
    SixEntry(
        "g_6_19_2",
        Params(("g", "a"), lambda e: abs(e["g"]) > Q(1, 2)
               and e["g"] not in (1, Q(3, 2))),
        "[1,3]=e1; [2,3]=1/(2*g)*e2+a*e5; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=-1/(2*g)*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0)}), (1, 5, 6),
            ((2, 4, 6), {"a": Q(0)})),
        (FormSpec("w", W0),),
        "h19", {"al": "1/(2*g)", "g": "g"}, alpha="23: a*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+g*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_2_a12g1", Params(("a",)),
        "[1,3]=e1; [2,3]=1/2*e2+a*e5; [1,4]=-e6; [2,5]=-e6; [3,5]=-1/2*e5;"
        "[3,6]=-e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0)}), (1, 5, 6),
            ((2, 4, 6), {"a": Q(0)})),
        (FormSpec("w", W0),
         FormSpec("wp", f"e34+{W0}")),
        "h19", {"al": "1/2", "g": "1"}, alpha="23: a*e2",
    ),
    SixEntry(
        "g_6_19_2_s32", Params(("a",), lambda e: e["a"] != 0),
        "[1,3]=e1; [2,3]=1/3*e2+a*e5; [1,4]=-2/3*e6; [2,5]=-2/3*e6;"
        "[3,4]=1/3*e4; [3,5]=-1/3*e5; [3,6]=-2/3*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e24+{W0}")),
        "h19", {"al": "1/3", "g": "3/2"}, alpha="23: a*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*e24+w34*e34+w35*e35+3/2*w36*de6",
            "w36", ("w13", "w23", "w24", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_2_s32_a0", Params(),
        "[1,3]=e1; [2,3]=1/3*e2; [1,4]=-2/3*e6; [2,5]=-2/3*e6;"
        "[3,4]=1/3*e4; [3,5]=-1/3*e5; [3,6]=-2/3*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),),
        "h19", {"al": "1/3", "g": "3/2"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*e24+w34*e34+w35*e35+w45*e45+3/2*w36*de6",
            "w36", ("w13", "w23", "w24", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_19_3",
        Params(("g", "b"), lambda e: e["g"] > Q(1, 2) and e["g"] != 1),
        "[1,3]=e1+b*e5; [2,3]=(-1+1/g)*e2+b*e4; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=-e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"b": Q(0)}), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),),
        "h19", {"al": "-1+1/g", "g": "g"}, alpha="13: b*e2; 23: b*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+g*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_4",
        Params(("al", "c"), lambda e: 0 < abs(e["al"]) < 1 and e["al"] != Q(1, 2)),
        "[1,3]=e1+c*e4; [2,3]=al*e2; [1,4]=-2*e6; [2,5]=-2*e6; [3,4]=-e4;"
        "[3,5]=(al-2)*e5; [3,6]=-2*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"c": Q(0)}), ((1, 5, 6), {"c": Q(0)}),
            (2, 4, 6)),
        (FormSpec("w", W0),),
        "h19", {"al": "al", "g": "1/2"}, alpha="13: c*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+1/2*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_5",
        Params(("g", "d"), lambda e: e["g"] not in (0, Q(1, 2), 1, 3)
               and -1 < 1 / e["g"] < 3),
        "[1,2]=d*e5; [1,3]=e1; [2,3]=(-1/2+1/(2*g))*e2; [1,4]=-1/g*e6;"
        "[2,5]=-1/g*e6; [3,4]=(1-1/g)*e4; [3,5]=-(1+g)/(2*g)*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"d": Q(0)}), (1, 5, 6), ((2, 4, 6), {"d": Q(0)})),
        (FormSpec("w", W0),),
        "h19", {"al": "-1/2+1/(2*g)", "g": "g"}, alpha="12: d*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*((-2*g*d/(g+1))*e12+e35)+g*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_5_m13", Params(("d",), lambda e: e["d"] != 0),
        "[1,2]=d*e5; [1,3]=e1; [2,3]=-1/3*e2; [1,4]=-1/3*e6; [2,5]=-1/3*e6;"
        "[3,4]=2/3*e4; [3,5]=-2/3*e5; [3,6]=-1/3*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", "e13+e26-1/(3*d)*e45")),
        "h19", {"al": "-1/3", "g": "3"}, alpha="12: d*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*(-3*d/2*e12+e35)"
            "+w45*(-3*d*e26+e45)+3*w36*de6",
            "6*d*w13*w45^2-9*d*w35*w36*w45-2*w36^3",
            ("w13", "w23", "w34", "w35", "w45", "w36")),),
        errata=("general-form tail printed with coefficient 1/2 on the "
                "differential; coefficient 3 is forced by the exact Pfaffian "
                "matching the stated nondegeneracy polynomial",),
    ),
    SixEntry(
        "g_6_19_5_m13_d0", Params(),
        "[1,3]=e1; [2,3]=-1/3*e2; [1,4]=-1/3*e6; [2,5]=-1/3*e6; [3,4]=2/3*e4;"
        "[3,5]=-2/3*e5; [3,6]=-1/3*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e45+{W0}")),
        "h19", {"al": "-1/3", "g": "3"},
    ),
    SixEntry(
        "g_6_19_6", Params(("a", "b")),
        "[1,2]=a*e5; [1,3]=e1+b*e4; [2,3]=1/2*e2; [1,4]=-2*e6; [2,5]=-2*e6;"
        "[3,4]=-e4; [3,5]=-3/2*e5; [3,6]=-2*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0), "b": Q(0)}),
            ((1, 5, 6), {"b": Q(0)}), ((2, 4, 6), {"a": Q(0)})),
        (FormSpec("w", W0),),
        "h19", {"al": "1/2", "g": "1/2"}, alpha="12: a*e2; 13: b*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*(-2*a/3*e12+e35)+1/2*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_19_7",
        Params(("g", "a"), lambda e: Q(1, 3) < e["g"] < 1
               and e["g"] not in (Q(1, 2), Q(2, 3)),
               None, {"g": (Q(2, 5), Q(3, 4), Q(4, 5), Q(5, 6), Q(9, 10))}),
        "[1,2]=a*e4; [1,3]=e1; [2,3]=(-2+1/g)*e2; [1,4]=-1/g*e6; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=-2*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0)}), ((1, 5, 6), {"a": Q(0)}),
            (2, 4, 6)),
        (FormSpec("w", W0),),
        "h19", {"al": "-2+1/g", "g": "g"}, alpha="12: a*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w35*e35+w34*((a*g/(-1+g))*e12+e34)+g*w36*de6",
            "w36", ("w13", "w23", "w35", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_19_7_m12", Params(("a",)),
        "[1,2]=a*e4; [1,3]=e1; [2,3]=-1/2*e2; [1,4]=-3/2*e6; [2,5]=-3/2*e6;"
        "[3,4]=-1/2*e4; [3,5]=-2*e5; [3,6]=-3/2*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0)}), ((1, 5, 6), {"a": Q(0)}),
            (2, 4, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e24+{W0}")),
        "h19", {"al": "-1/2", "g": "2/3"}, alpha="12: a*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*e24+w35*e35+w34*(-2*a*e12+e34)+2/3*w36*de6",
            "w36", ("w13", "w23", "w24", "w35", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_20_1",
        Params(("g",), lambda e: e["g"] not in
               (0, 1, Q(2, 3), Q(2, 5), -2, Q(4, 3))),
        "[1,3]=e1; [2,3]=1/2*e2; [1,4]=-1/g*e6; [2,4]=-e5; [2,5]=-1/g*e6;"
        "[3,4]=(1-1/g)*e4; [3,5]=(1/2-1/g)*e5; [3,6]=-1/g*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),),
        "h20", {"g": "g"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w24*(e24+((2-g)/(2*g))*e35)+g*w36*de6",
            "w36", ("w13", "w23", "w34", "w24", "w36")),),
    ),
    SixEntry(
        "g_6_20_1_m2", Params(),
        "[1,3]=e1; [2,3]=1/2*e2; [1,4]=1/2*e6; [2,4]=-e5; [2,5]=1/2*e6;"
        "[3,4]=3/2*e4; [3,5]=e5; [3,6]=1/2*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", "e15-2*e26+e34")),
        "h20", {"g": "-2"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w15*(e15-2*e26)-2*w36*de6",
            "2*w15^2*w34-w36^3",
            ("w13", "w23", "w34", "w15", "w36")),),
        errata=("nondegeneracy condition printed with a -3*w15*w35*w36 term "
                "although the family has no w35; the exact Pfaffian is "
                "2*w15^2*w34-w36^3",),
    ),
    SixEntry(
        "g_6_20_1_43", Params(),
        "[1,3]=e1; [2,3]=1/2*e2; [1,4]=-3/4*e6; [2,4]=-e5; [2,5]=-3/4*e6;"
        "[3,4]=1/4*e4; [3,5]=-1/4*e5; [3,6]=-3/4*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"e45+{W0}")),
        "h20", {"g": "4/3"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w45*e45+w24*(e24+1/4*e35)+4/3*w36*de6",
            "w36", ("w13", "w23", "w34", "w45", "w24", "w36")),),
    ),
    SixEntry(
        "g_6_20_2", Params(("a",)),
        "[1,3]=e1+a*e5; [2,3]=1/2*e2+a*e4; [1,4]=-3/2*e6; [2,4]=-e5;"
        "[2,5]=-3/2*e6; [3,4]=-1/2*e4; [3,5]=-e5; [3,6]=-3/2*e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),),
        "h20", {"g": "2/3"}, alpha="13: a*e2; 23: a*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*(e24+e35)+w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
        errata=("general form prints a w45*e45 term, but e45 extends to no "
                "closed form here; the spurious term is dropped",),
    ),
    SixEntry(
        "g_6_20_3", Params(("b",)),
        "[1,3]=e1; [2,3]=1/2*e2+b*e5; [1,4]=-e6; [2,4]=-e5; [2,5]=-e6;"
        "[3,5]=-1/2*e5; [3,6]=-e6",
        _ii((4, 5, 6), (1, 5, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"tp*e34+{W0}",
                  _fp("tp", guard=lambda e: e["tp"] != 0, cand={"tp": NONZERO}))),
        "h20", {"g": "1"}, alpha="23: b*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*(2*e24+e35)+w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
        errata=("general form prints a w45*e45 term, but e45 extends to no "
                "closed form here; the spurious term is dropped",),
    ),
    SixEntry(
        "g_6_20_4", Params(("c",)),
        "[1,2]=c*e4; [1,3]=e1; [2,3]=1/2*e2; [1,4]=-5/2*e6; [2,4]=-e5;"
        "[2,5]=-5/2*e6; [3,4]=-3/2*e4; [3,5]=-2*e5; [3,6]=-5/2*e6",
        _ii((4, 5, 6), ((1, 5, 6), {"c": Q(0)})),
        (FormSpec("w", W0),),
        "h20", {"g": "2/5"}, alpha="12: c*e1",
        general=(GeneralForm(
            "w13*e13+w23*e23+w24*(e24+2*e35)+w34*(-2*c/3*e12+e34)-w36*de6",
            "w36", ("w13", "w23", "w24", "w34", "w36")),),
    ),
    SixEntry(
        "g_6_21_1",
        Params(("n",), lambda e: e["n"] > 0 and e["n"] not in (Q(1, 2), 1)),
        "[1,3]=e1; [2,3]=-e2; [1,4]=-1/n*e6; [2,5]=-1/n*e6;"
        "[3,4]=(1-1/n)*e4; [3,5]=(-1-1/n)*e5; [3,6]=-1/n*e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e12+{W0}", _fp("t")),),
        "h21", {"n": "n"},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*e34+w35*e35+n*w36*de6",
            "w36", ("w12", "w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_21_2", Params(("a",)),
        "[1,3]=e1+a*e4; [2,3]=-e2; [1,4]=-2*e6; [2,5]=-2*e6; [3,4]=-e4;"
        "[3,5]=-3*e5; [3,6]=-2*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0)}), ((1, 5, 6), {"a": Q(0)}),
            (2, 4, 6)),
        (FormSpec("w", f"t*e12+{W0}", _fp("t")),),
        "h21", {"n": "1/2"}, alpha="13: a*e1",
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*e34+w35*e35+1/2*w36*de6",
            "w36", ("w12", "w13", "w23", "w34", "w35", "w36")),
            GeneralForm(
            "w12*e12+w13*e13+w23*e23+w24*e24+w34*e34+w35*e35+1/2*w36*de6",
            "w36", ("w12", "w13", "w23", "w24", "w34", "w35", "w36"),
            fixed={"a": Q(0)}),),
    ),
    SixEntry(
        "g_6_21_3", Params(("b",), lambda e: e["b"] != 0),
        "[1,2]=b*e4; [1,3]=e1; [2,3]=-e2; [1,4]=-e6; [2,5]=-e6; [3,5]=-2*e5;"
        "[3,6]=-e6",
        _ii((4, 5, 6), (2, 4, 6)),
        (FormSpec("w", W0),),
        "h21", {"n": "1"}, alpha="12: b*e1",
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w35*e35+w36*de6",
            "w36", ("w12", "w13", "w23", "w35", "w36")),),
        errata=("conditional extra term printed as w34*e34 if b=0, duplicating "
                "an existing term; the b=0 slice is the separate entry below",),
    ),
    SixEntry(
        "g_6_21_3_b0", Params(),
        "[1,3]=e1; [2,3]=-e2; [1,4]=-e6; [2,5]=-e6; [3,5]=-2*e5; [3,6]=-e6",
        _ii((4, 5, 6), (1, 2, 6), (1, 5, 6), (2, 4, 6)),
        (FormSpec("w", f"t*e12+{W0}", _fp("t")),
         FormSpec("wp", f"tp*e12+e34+{W0}", _fp("tp"))),
        "h21", {"n": "1"},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*e34+w35*e35+w36*de6",
            "w36", ("w12", "w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_22_1",
        Params(("be", "d1"), lambda e: e["be"] > 0 and e["d1"] != 0
               and e["be"] not in (1 / e["d1"], 1 / (2 * e["d1"]))),
        "[1,3]=be*e1-e2; [2,3]=e1+be*e2; [1,4]=-1/d1*e6; [2,5]=-1/d1*e6;"
        "[3,4]=-(-be*d1+1)/d1*e4+e5; [3,5]=-e4-(-be*d1+1)/d1*e5; [3,6]=-1/d1*e6",
        _ii((4, 5, 6), (1, 2, 6)),
        (FormSpec("w", W0),),
        "h22", {"be": "be", "d1": "d1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+d1*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
    ),
    SixEntry(
        "g_6_22_1_b1d", Params(("d1",), lambda e: e["d1"] > 0),
        "[1,3]=1/d1*e1-e2; [2,3]=e1+1/d1*e2; [1,4]=-1/d1*e6; [2,5]=-1/d1*e6;"
        "[3,4]=e5; [3,5]=-e4; [3,6]=-1/d1*e6",
        _ii((4, 5, 6), (1, 2, 6)),
        (FormSpec("w", W0),
         FormSpec("wp", f"ep*e45+{W0}", _fp("ep"))),
        "h22", {"be": "1/d1", "d1": "d1"},
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+w45*e45+d1*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w45", "w36")),),
    ),
    SixEntry(
        "g_6_22_2", Params(("d1", "a"), lambda e: e["d1"] > 0),
        "[1,3]=1/(2*d1)*e1-e2; [2,3]=e1+1/(2*d1)*e2+a*e5; [1,4]=-1/d1*e6;"
        "[2,5]=-1/d1*e6; [3,4]=-1/(2*d1)*e4+e5; [3,5]=-e4-1/(2*d1)*e5;"
        "[3,6]=-1/d1*e6",
        _ii((4, 5, 6), ((1, 2, 6), {"a": Q(0)})),
        (FormSpec("w", W0),),
        "h22", {"be": "1/(2*d1)", "d1": "d1"}, alpha="23: a*e2",
        general=(GeneralForm(
            "w13*e13+w23*e23+w34*e34+w35*e35+d1*w36*de6",
            "w36", ("w13", "w23", "w34", "w35", "w36")),),
        errata=("general-form tail printed with d2 although the family "
                "parameter is d1",),
    ),
    SixEntry(
        "g_6_23", Params(("d2",), lambda e: e["d2"] > 0),
        "[1,3]=-e2; [2,3]=e1; [1,4]=-1/d2*e6; [2,5]=-1/d2*e6;"
        "[3,4]=-1/d2*e4+e5; [3,5]=-e4-1/d2*e5; [3,6]=-1/d2*e6",
        _ii((4, 5, 6), (1, 2, 6)),
        (FormSpec("w", f"t*e12+{W0}", _fp("t")),),
        "h23", {"d2": "d2"},
        general=(GeneralForm(
            "w12*e12+w13*e13+w23*e23+w34*e34+w35*e35+d2*w36*de6",
            "w36", ("w12", "w13", "w23", "w34", "w35", "w36")),),
    ),
)

_BY_ID = {e.id: e for e in SIXDIM}


def six_entry(eid: str) -> SixEntry:
    try:
        return _BY_ID[eid]
    except KeyError:
        raise UnknownId(eid) from None


def six_instance(eid: str, env: Env) -> LieAlgebra:
    return six_entry(eid).instantiate(env)
