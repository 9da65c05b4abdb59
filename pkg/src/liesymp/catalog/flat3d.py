"""The three-dimensional flat Lie algebras with a right-identity element
(families h1..h23), and the expected dimensions and representatives of
their restricted cohomology groups.

Parameter name map: l=lambda, m=mu, et=eta, al=alpha, g=gamma, n=nu,
be=beta, d1=delta_1, d2=delta_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from ..connections import Connection, connection
from ..lie import LieAlgebra
from .base import Env, Params, UnknownId

__all__ = ["FlatFamily", "FLAT3D", "flat_family", "flat_instance",
           "CohomologyExpectation", "COHOMOLOGY_3D", "cohomology_expectation"]


@dataclass(frozen=True)
class FlatFamily:
    id: str
    params: Params
    conn: str                      # nabla spec: [i,j] is nabla_{e_i} e_j
    right_identity: str            # linear-combination spec
    lie_label: str                 # underlying Lie algebra, informal label

    def instantiate(self, env: Env) -> tuple[LieAlgebra, Connection]:
        full = self.params.complete(env)
        d = connection(3, self.conn, full)
        c = [[[d.gamma[i][j][k] - d.gamma[j][i][k] for k in range(3)]
              for j in range(3)] for i in range(3)]
        return LieAlgebra(3, c), d


def _nz(*names):
    return lambda env: all(env[n] != 0 for n in names)


FLAT3D: tuple[FlatFamily, ...] = (
    FlatFamily("h1", Params(),
               "[3,1]=e1; [3,2]=e2; [3,3]=e3; [1,3]=e1; [2,3]=e2",
               "e3", "3g1"),
    FlatFamily("h2", Params(("b",), _nz("b")),
               "[3,1]=e1; [3,2]=e2; [3,3]=e3; [1,1]=e1+e2; [1,2]=b*e3;"
               "[1,3]=e1; [2,1]=b*e3; [2,2]=b*e1-b*e3; [2,3]=e2",
               "e3", "3g1"),
    # published row reads [2,1]=e1, but the abelian base forces a symmetric
    # connection and the matching 6-dim brackets pin it to [2,2]=e1
    FlatFamily("h3", Params(),
               "[3,1]=e1; [3,2]=e2; [3,3]=e3; [1,3]=e1; [2,2]=e1; [2,3]=e2",
               "e3", "3g1"),
    FlatFamily("h4", Params(("a",), _nz("a")),
               "[1,1]=e1; [1,2]=e2; [1,3]=e3; [2,1]=e2; [3,1]=e3; [3,2]=e2;"
               "[3,3]=e2+a*e3",
               "e1", "3g21+g1"),
    FlatFamily("h5", Params(),
               "[1,1]=e1; [1,2]=e2; [1,3]=e3; [2,1]=e2; [3,1]=e3; [3,2]=e2; [3,3]=e3",
               "e1", "3g21+g1"),
    FlatFamily("h6", Params(),
               "[1,1]=e1; [1,2]=e2; [1,3]=e3; [2,1]=e2; [3,1]=e3; [3,2]=e2",
               "e1", "3g21+g1"),
    FlatFamily("h7", Params(),
               "[1,1]=e1; [1,2]=e2; [1,3]=e3; [2,1]=e2; [2,2]=e3; [3,1]=e3;"
               "[3,2]=e2; [3,3]=2*e3",
               "e1", "3g21+g1"),
    FlatFamily("h8", Params(),
               "[1,1]=e1; [1,2]=e2; [1,3]=e3; [2,1]=e2; [2,2]=-e3; [3,1]=e3;"
               "[3,2]=e2; [3,3]=2*e3",
               "e1", "3g21+g1"),
    FlatFamily("h9", Params(("a",)),
               "[1,1]=e1-e2; [1,2]=e2; [1,3]=-e2+e3; [2,1]=e2; [3,1]=-e2+e3;"
               "[3,2]=e2; [3,3]=a*e2+e3",
               "e1+e2", "3g21+g1"),
    FlatFamily("h10", Params(("l", "a", "b"),
                             lambda e: e["l"] != 0 and e["a"] != 0 and e["b"] != 0
                             and e["a"] != e["b"]),
               "[1,1]=(a/b)*e1-(l*(a-b)/b)*e3; [1,2]=e2; [1,3]=1/l*e1; [2,1]=e2;"
               "[2,3]=1/l*e2; [3,1]=1/l*e1; [3,2]=(1+l)/l*e2; [3,3]=1/l*e3",
               "l*e3", "3g21+g1"),
    FlatFamily("h11", Params(("l",), _nz("l")),
               "[1,1]=e1; [1,2]=e2; [1,3]=1/l*e1; [2,1]=e2; [2,3]=1/l*e2;"
               "[3,1]=1/l*e1; [3,2]=(1+l)/l*e2; [3,3]=1/l*e3",
               "l*e3", "3g21+g1"),
    FlatFamily("h12", Params(("l",), _nz("l")),
               "[1,1]=l*e3; [1,2]=e2; [1,3]=1/l*e1; [2,1]=e2; [2,3]=1/l*e2;"
               "[3,1]=1/l*e1; [3,2]=(1+l)/l*e2; [3,3]=1/l*e3",
               "l*e3", "3g21+g1"),
    FlatFamily("h13", Params(("l",), _nz("l")),
               "[1,1]=e1; [1,3]=1/l*e1; [2,3]=1/l*e2; [3,1]=1/l*e1;"
               "[3,2]=(1+l)/l*e2; [3,3]=1/l*e3",
               "l*e3", "3g21+g1"),
    FlatFamily("h14", Params(("l",), _nz("l")),
               "[1,3]=1/l*e1; [2,3]=1/l*e2; [3,1]=1/l*e1; [3,2]=(1+l)/l*e2;"
               "[3,3]=1/l*e3",
               "l*e3", "3g21+g1"),
    FlatFamily("h15", Params(),
               "[1,1]=e3; [1,2]=e1; [2,1]=e1-e3; [2,2]=e2; [2,3]=e3; [3,2]=e3",
               "e2", "heis3"),
    FlatFamily("h16", Params(),
               "[1,2]=e1; [2,1]=e1-e3; [2,2]=e2; [2,3]=e3; [3,2]=e3",
               "e2", "heis3"),
    FlatFamily("h17", Params(("m",), _nz("m")),
               "[1,3]=1/m*e1; [2,3]=1/m*e2; [3,1]=(1-m)/m*e1;"
               "[3,2]=-e1+(1-m)/m*e2; [3,3]=1/m*e3",
               "m*e3", "g32"),
    FlatFamily("h18", Params(("et",), _nz("et")),
               "[1,3]=1/et*e1; [2,3]=1/et*e2; [3,1]=(1-et)/et*e1;"
               "[3,2]=(1-et)/et*e2; [3,3]=1/et*e3",
               "et*e3", "g33"),
    FlatFamily("h19", Params(("al", "g"),
                             lambda e: e["g"] != 0 and 0 < abs(e["al"]) < 1),
               "[1,3]=1/g*e1; [2,3]=1/g*e2; [3,1]=(-1+1/g)*e1;"
               "[3,2]=(-al+1/g)*e2; [3,3]=1/g*e3",
               "g*e3", "g34"),
    FlatFamily("h20", Params(("g",), _nz("g")),
               "[1,3]=1/g*e1; [2,2]=e1; [2,3]=1/g*e2; [3,1]=(-1+1/g)*e1;"
               "[3,2]=(-1/2+1/g)*e2; [3,3]=1/g*e3",
               "g*e3", "g34"),
    FlatFamily("h21", Params(("n",), lambda e: e["n"] > 0),
               "[1,3]=1/n*e1; [2,3]=1/n*e2; [3,1]=(1-n)/n*e1;"
               "[3,2]=(1+n)/n*e2; [3,3]=1/n*e3",
               "n*e3", "g34"),
    FlatFamily("h22", Params(("be", "d1"),
                             lambda e: e["be"] > 0 and e["d1"] != 0),
               "[1,3]=1/d1*e1; [2,3]=1/d1*e2; [3,1]=(-be*d1+1)/d1*e1+e2;"
               "[3,2]=-e1+(-be*d1+1)/d1*e2; [3,3]=1/d1*e3",
               "d1*e3", "g35"),
    FlatFamily("h23", Params(("d2",), lambda e: e["d2"] > 0),
               "[1,3]=1/d2*e1; [2,3]=1/d2*e2; [3,1]=1/d2*e1+e2;"
               "[3,2]=-e1+1/d2*e2; [3,3]=1/d2*e3",
               "d2*e3", "g35"),
)

_BY_ID = {f.id: f for f in FLAT3D}


def flat_family(fid: str) -> FlatFamily:
    try:
        return _BY_ID[fid]
    except KeyError:
        raise UnknownId(fid) from None


def flat_instance(fid: str, env: Env) -> tuple[LieAlgebra, Connection]:
    return flat_family(fid).instantiate(env)


@dataclass(frozen=True)
class CohomologyExpectation:
    """Expected dims for a parameter regime of a flat family.

    ``reps``: basis of the restricted group as cochain specs; the first
    ``rho_reps`` of them remain independent in the ordinary group.
    """
    id: str
    flat_id: str
    params: Params
    dim_L: int
    dim_rho: int
    reps: tuple[str, ...]
    rho_reps: tuple[str, ...] = ()


def _p(*free, guard=lambda e: True, derive=None, cand=None):
    return Params(tuple(free), guard, derive, cand or {})


COHOMOLOGY_3D: tuple[CohomologyExpectation, ...] = (
    CohomologyExpectation("h1", "h1", _p(), 3, 0,
                          ("12: e3; 23: -e1", "13: e3", "23: e3")),
    CohomologyExpectation("h2", "h2", _p("b", guard=_nz("b")), 3, 0,
                          ("12: -b*e1+b*e2; 13: -e3", "12: b*e2; 23: -e3",
                           "12: e3; 13: e2")),
    CohomologyExpectation("h3", "h3", _p(), 3, 0,
                          ("12: e3; 23: -e1", "13: e3", "23: e3")),
    CohomologyExpectation("h4", "h4", _p("a", guard=_nz("a")), 1, 0, ("13: e1",)),
    CohomologyExpectation("h5", "h5", _p(), 1, 0, ("13: e1",)),
    CohomologyExpectation("h6", "h6", _p(), 1, 0, ("13: e1",)),
    CohomologyExpectation("h7", "h7", _p(), 1, 0, ("13: e1",)),
    CohomologyExpectation("h8", "h8", _p(), 1, 0, ("13: e1",)),
    CohomologyExpectation("h9", "h9", _p("a"), 1, 0, ("13: e1",)),
    CohomologyExpectation("h10_1", "h10",
                          _p("a", "b", guard=lambda e: e["a"] != 0 and e["b"] != 0
                             and e["a"] != e["b"],
                             derive=lambda e: {"l": Q(-1)}),
                          1, 0, ("13: e3",)),
    CohomologyExpectation("h10_2", "h10",
                          _p("l", "a", "b",
                             guard=lambda e: all(e[n] != 0 for n in "lab")
                             and e["a"] != e["b"] and e["l"] != -1),
                          1, 0, ("13: e3",)),
    CohomologyExpectation("h11_1", "h11", _p(derive=lambda e: {"l": Q(-1)}),
                          3, 2, ("12: e1", "23: e3", "13: e3"),
                          ("12: e1", "23: e3")),
    CohomologyExpectation("h11_2", "h11",
                          _p("l", guard=lambda e: e["l"] not in (0, -1)),
                          1, 0, ("13: e3",)),
    CohomologyExpectation("h12", "h12", _p("l", guard=_nz("l")), 1, 0, ("13: e3",)),
    CohomologyExpectation("h13_1", "h13",
                          _p("l", guard=lambda e: e["l"] not in (0, Q(-1, 2))),
                          1, 0, ("13: e3",)),
    CohomologyExpectation("h13_2", "h13", _p(derive=lambda e: {"l": Q(-1, 2)}),
                          3, 2, ("12: e2", "23: e2", "13: e3"),
                          ("12: e2", "23: e2")),
    CohomologyExpectation("h14_1", "h14",
                          _p("l", guard=lambda e: e["l"] not in (0, -1, Q(-1, 2))),
                          1, 0, ("13: e3",)),
    CohomologyExpectation("h14_2", "h14", _p(derive=lambda e: {"l": Q(-1)}),
                          3, 2, ("12: e1", "13: e2; 23: e1", "13: e3"),
                          ("12: e1", "13: e2; 23: e1")),
    CohomologyExpectation("h14_3", "h14", _p(derive=lambda e: {"l": Q(-1, 2)}),
                          3, 2, ("12: e2", "23: e2", "13: e3"),
                          ("12: e2", "23: e2")),
    CohomologyExpectation("h15", "h15", _p(), 2, 0,
                          ("12: e3; 13: e2", "23: e2")),
    CohomologyExpectation("h16", "h16", _p(), 2, 0,
                          ("12: e3; 13: e2", "23: e2")),
    CohomologyExpectation("h17_1", "h17",
                          _p("m", guard=lambda e: e["m"] not in (0, Q(1, 2), Q(1, 3))),
                          0, 0, ()),
    CohomologyExpectation("h17_2", "h17", _p(derive=lambda e: {"m": Q(1, 2)}),
                          1, 1, ("13: e1",), ("13: e1",)),
    CohomologyExpectation("h17_3", "h17", _p(derive=lambda e: {"m": Q(1, 3)}),
                          1, 1, ("12: e2",), ("12: e2",)),
    CohomologyExpectation("h18_1", "h18",
                          _p("et", guard=lambda e: e["et"] not in (0, Q(1, 2), Q(1, 3))),
                          0, 0, ()),
    CohomologyExpectation("h18_2", "h18", _p(derive=lambda e: {"et": Q(1, 2)}),
                          3, 3, ("13: e1", "13: e2; 23: e1", "23: e2"),
                          ("13: e1", "13: e2; 23: e1", "23: e2")),
    CohomologyExpectation("h18_3", "h18", _p(derive=lambda e: {"et": Q(1, 3)}),
                          2, 2, ("12: e1", "12: e2"), ("12: e1", "12: e2")),
    CohomologyExpectation("h19_6", "h19",
                          _p(derive=lambda e: {"al": Q(1, 2), "g": Q(1, 2)}),
                          2, 2, ("12: e2", "13: e1"), ("12: e2", "13: e1")),
    CohomologyExpectation("h19_2", "h19",
                          _p("g", guard=lambda e: e["g"] not in (0, Q(1, 2))
                             and 0 < abs(e["al"]) < 1,
                             derive=lambda e: {"al": 1 / (2 * e["g"])}),
                          1, 1, ("23: e2",), ("23: e2",)),
    CohomologyExpectation("h19_3", "h19",
                          _p("g", guard=lambda e: e["g"] not in (0, Q(1, 2), 1)
                             and 0 < abs(e["al"]) < 1,
                             derive=lambda e: {"al": -1 + 1 / e["g"]}),
                          1, 1, ("13: e2; 23: e1",), ("13: e2; 23: e1",)),
    CohomologyExpectation("h19_4", "h19",
                          _p("al", guard=lambda e: 0 < abs(e["al"]) < 1
                             and e["al"] != Q(1, 2),
                             derive=lambda e: {"g": Q(1, 2)}),
                          1, 1, ("13: e1",), ("13: e1",)),
    CohomologyExpectation("h19_5", "h19",
                          _p("g", guard=lambda e: e["g"] not in (0, Q(1, 2), 1)
                             and 0 < abs(e["al"]) < 1,
                             derive=lambda e: {"al": Q(-1, 2) + 1 / (2 * e["g"])}),
                          1, 1, ("12: e2",), ("12: e2",)),
    CohomologyExpectation("h19_7", "h19",
                          _p("g", guard=lambda e: e["g"] not in (0, Q(1, 2), 1)
                             and 0 < abs(e["al"]) < 1,
                             derive=lambda e: {"al": -2 + 1 / e["g"]}),
                          1, 1, ("12: e1",), ("12: e1",)),
    CohomologyExpectation("h19_1", "h19",
                          _p("al", "g",
                             guard=lambda e: e["g"] != 0 and 0 < abs(e["al"]) < 1
                             and e["g"] != Q(1, 2)
                             and e["al"] not in (1 / (2 * e["g"]), -1 + 1 / e["g"],
                                                 Q(-1, 2) + 1 / (2 * e["g"]),
                                                 -2 + 1 / e["g"])),
                          0, 0, ()),
    CohomologyExpectation("h20_2", "h20", _p(derive=lambda e: {"g": Q(2, 3)}),
                          1, 1, ("13: e2; 23: e1",), ("13: e2; 23: e1",)),
    CohomologyExpectation("h20_3", "h20", _p(derive=lambda e: {"g": Q(1)}),
                          1, 1, ("23: e2",), ("23: e2",)),
    CohomologyExpectation("h20_4", "h20", _p(derive=lambda e: {"g": Q(2, 5)}),
                          1, 1, ("12: e1",), ("12: e1",)),
    CohomologyExpectation("h20_1", "h20",
                          _p("g", guard=lambda e: e["g"] not in
                             (0, 1, Q(2, 3), Q(2, 5))),
                          0, 0, ()),
    CohomologyExpectation("h21_2", "h21", _p(derive=lambda e: {"n": Q(1, 2)}),
                          2, 1, ("12: e3; 23: -e1", "13: e1"), ("13: e1",)),
    CohomologyExpectation("h21_3", "h21", _p(derive=lambda e: {"n": Q(1)}),
                          2, 1, ("12: e1", "12: e3; 23: -e1"), ("12: e1",)),
    CohomologyExpectation("h21_1", "h21",
                          _p("n", guard=lambda e: e["n"] > 0
                             and e["n"] not in (Q(1, 2), 1)),
                          1, 0, ("12: e3; 23: -e1",)),
    CohomologyExpectation("h22_2", "h22",
                          _p("d1", guard=lambda e: e["d1"] > 0,
                             derive=lambda e: {"be": 1 / (2 * e["d1"])}),
                          1, 1, ("23: e2",), ("23: e2",)),
    CohomologyExpectation("h22_1", "h22",
                          _p("be", "d1",
                             guard=lambda e: e["be"] > 0 and e["d1"] != 0
                             and e["be"] != 1 / (2 * e["d1"])),
                          0, 0, ()),
    CohomologyExpectation("h23", "h23", _p("d2", guard=lambda e: e["d2"] > 0),
                          1, 0, ("12: e3; 13: e2",)),
)

_EXP_BY_ID = {r.id: r for r in COHOMOLOGY_3D}


def cohomology_expectation(rid: str) -> CohomologyExpectation:
    try:
        return _EXP_BY_ID[rid]
    except KeyError:
        raise UnknownId(rid) from None
