"""Chevalley-Eilenberg cohomology with coefficients in the dual of a flat
Lie algebra, together with its Lagrangian-restricted variant.

For a flat torsion-free connection on h, x -> nabla_x is a representation
of h on itself; rho denotes the dual representation rho(x) xi = -xi o nabla_x.
The groups of interest are

    H2_rho      = Z2 / B2                    (ordinary, rho-coefficients)
    H2_L_rho    = Z2_L / dC1_L               (Lagrangian-restricted)
    kappa_L     = ker(H2_L_rho -> H2_rho)

where C1_L is the symmetric 1-cochains and C2_L the 2-cochains with
vanishing cyclic sum.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations
from typing import Mapping, Sequence

from .connections import Connection, is_flat_torsion_free
from .lie import LieAlgebra
from .linalg import Matrix, from_cols, from_rows
from .parsing import parse_vector

__all__ = [
    "Cochain1", "Cochain2", "NotFlat", "cochain2", "dual_representation",
    "coboundary1", "coboundary2", "is_lagrangian1", "is_lagrangian2",
    "CohomologySummary", "cohomology_summary", "two_cocycle_space_matrix",
    "cochain2_from_coords", "cochain2_coords", "same_class_lagrangian",
]


class NotFlat(ValueError):
    pass


class Cochain1:
    """s[i][j] = sigma(e_{i+1})(e_{j+1}); values live in the dual space."""

    __slots__ = ("dim", "s")

    def __init__(self, dim: int, s: Matrix):
        if s.rows != dim or s.cols != dim:
            raise ValueError("shape mismatch")
        self.dim = dim
        self.s = s

    @staticmethod
    def zero(dim: int) -> "Cochain1":
        return Cochain1(dim, Matrix.zero(dim, dim))

    def value(self, x: Sequence[Q]) -> tuple[Q, ...]:
        """sigma(x) in dual coordinates."""
        return tuple(sum((x[i] * self.s[i, j] for i in range(self.dim)), Q(0))
                     for j in range(self.dim))

    def __sub__(self, other: "Cochain1") -> "Cochain1":
        return Cochain1(self.dim, self.s - other.s)

    def __eq__(self, other):
        return isinstance(other, Cochain1) and self.s == other.s


class Cochain2:
    """a[i][j] (a dual-coordinate tuple) = alpha(e_{i+1}, e_{j+1})."""

    __slots__ = ("dim", "a")

    def __init__(self, dim: int, a: Sequence[Sequence[Sequence[Q]]]):
        self.dim = dim
        self.a = tuple(tuple(tuple(Q(x) for x in a[i][j]) for j in range(dim))
                       for i in range(dim))
        for i in range(dim):
            for j in range(dim):
                if any(self.a[i][j][k] != -self.a[j][i][k] for k in range(dim)):
                    raise ValueError("2-cochain not antisymmetric")

    @staticmethod
    def zero(dim: int) -> "Cochain2":
        z = tuple([Q(0)] * dim)
        return Cochain2(dim, [[z] * dim for _ in range(dim)])

    def value(self, x: Sequence[Q], y: Sequence[Q]) -> tuple[Q, ...]:
        out = [Q(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                f = xi * yj
                row = self.a[i][j]
                for k in range(self.dim):
                    if row[k] != 0:
                        out[k] += f * row[k]
        return tuple(out)

    def __add__(self, other: "Cochain2") -> "Cochain2":
        return Cochain2(self.dim, [[tuple(a + b for a, b in zip(self.a[i][j], other.a[i][j]))
                                    for j in range(self.dim)] for i in range(self.dim)])

    def __sub__(self, other: "Cochain2") -> "Cochain2":
        return self + other.scale(Q(-1))

    def scale(self, c: Q) -> "Cochain2":
        return Cochain2(self.dim, [[tuple(c * x for x in self.a[i][j])
                                    for j in range(self.dim)] for i in range(self.dim)])

    def is_zero(self) -> bool:
        return all(x == 0 for p in self.a for r in p for x in r)

    def __eq__(self, other):
        return isinstance(other, Cochain2) and self.a == other.a

    def __repr__(self):
        terms = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k, x in enumerate(self.a[i][j]):
                    if x != 0:
                        terms.append(f"{x}*a({i+1},{j+1};{k+1})")
        return f"Cochain2({' + '.join(terms) or '0'})"


def cochain2(dim: int, spec: str, env: Mapping[str, Q] | None = None) -> Cochain2:
    """Parse ``"12: e3; 23: -e1 + t*e3"`` (pair -> dual-basis combination)."""
    a = [[[Q(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for item in spec.split(";"):
        item = item.strip()
        if not item:
            continue
        m = re.fullmatch(r"(\d)(\d)\s*:\s*(.*)", item)
        if not m:
            raise ValueError(f"bad cochain item {item!r}")
        i, j = int(m.group(1)), int(m.group(2))
        v = parse_vector(m.group(3), dim, env)
        for k in range(dim):
            a[i - 1][j - 1][k] += v[k]
            a[j - 1][i - 1][k] -= v[k]
    return Cochain2(dim, a)


def dual_representation(lie: LieAlgebra, d: Connection) -> list[Matrix]:
    """rho(e_i) = -(left multiplication by e_i)^T, one matrix per basis vector."""
    if not is_flat_torsion_free(lie, d):
        raise NotFlat("connection is not flat torsion-free")
    return [-d.left_mult(lie.basis_vector(i + 1)).transpose() for i in range(lie.dim)]


def _rho_apply(rho: Sequence[Matrix], x: Sequence[Q], xi: Sequence[Q]) -> tuple[Q, ...]:
    n = len(xi)
    out = [Q(0)] * n
    for i, c in enumerate(x):
        if c == 0:
            continue
        v = rho[i].mul_vec(xi)
        for k in range(n):
            out[k] += c * v[k]
    return tuple(out)


def coboundary1(lie: LieAlgebra, rho: Sequence[Matrix], s: Cochain1) -> Cochain2:
    """(ds)(x, y) = rho(x) s(y) - rho(y) s(x) - s([x, y])."""
    n = lie.dim
    a = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    e = [lie.basis_vector(i + 1) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = [p - q - r for p, q, r in zip(
                _rho_apply(rho, e[i], s.value(e[j])),
                _rho_apply(rho, e[j], s.value(e[i])),
                s.value(lie.c[i][j]))]
            for k in range(n):
                a[i][j][k] = v[k]
                a[j][i][k] = -v[k]
    return Cochain2(n, a)


def coboundary2(lie: LieAlgebra, rho: Sequence[Matrix], a: Cochain2) -> dict:
    """(da)(x,y,z) on all basis triples; returns {(i,j,k): dual tuple}, 1-based.

    da(x,y,z) = rho(x)a(y,z) - rho(y)a(x,z) + rho(z)a(x,y)
                - a([x,y],z) + a([x,z],y) - a([y,z],x)
    """
    n = lie.dim
    e = [lie.basis_vector(i + 1) for i in range(n)]
    out = {}
    for i, j, k in combinations(range(n), 3):
        t1 = _rho_apply(rho, e[i], a.value(e[j], e[k]))
        t2 = _rho_apply(rho, e[j], a.value(e[i], e[k]))
        t3 = _rho_apply(rho, e[k], a.value(e[i], e[j]))
        t4 = a.value(lie.c[i][j], e[k])
        t5 = a.value(lie.c[i][k], e[j])
        t6 = a.value(lie.c[j][k], e[i])
        out[(i + 1, j + 1, k + 1)] = tuple(
            p - q + r - s + t - u for p, q, r, s, t, u in zip(t1, t2, t3, t4, t5, t6))
    return out


def is_cocycle2(lie: LieAlgebra, rho: Sequence[Matrix], a: Cochain2) -> bool:
    return all(all(x == 0 for x in v) for v in coboundary2(lie, rho, a).values())


def is_lagrangian1(s: Cochain1) -> bool:
    return s.s == s.s.transpose()


def is_lagrangian2(a: Cochain2) -> bool:
    """Cyclic sum a(x,y)(z) + a(y,z)(x) + a(z,x)(y) = 0 on all basis triples."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if a.a[i][j][k] + a.a[j][k][i] + a.a[k][i][j] != 0:
                    return False
    return True


# -- coordinates on cochain spaces --------------------------------------------
#
# C1 coordinates: (i, j) -> i*n + j                      (n^2 of them)
# C2 coordinates: (pair p = (i<j), k) -> p*n + k         (n(n-1)/2 * n)
# C3 coordinates: (triple t, k) -> t*n + k


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def cochain2_coords(a: Cochain2) -> list[Q]:
    n = a.dim
    return [a.a[i][j][k] for (i, j) in _pairs(n) for k in range(n)]


def cochain2_from_coords(n: int, v: Sequence[Q]) -> Cochain2:
    a = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for p, (i, j) in enumerate(_pairs(n)):
        for k in range(n):
            a[i][j][k] = Q(v[p * n + k])
            a[j][i][k] = -a[i][j][k]
    return Cochain2(n, a)


def _coboundary1_matrix(lie: LieAlgebra, rho: Sequence[Matrix]) -> Matrix:
    n = lie.dim
    cols = []
    for i in range(n):
        for j in range(n):
            s = [[Q(0)] * n for _ in range(n)]
            s[i][j] = Q(1)
            img = coboundary1(lie, rho, Cochain1(n, from_rows(s)))
            cols.append(cochain2_coords(img))
    return from_cols(cols)


def _coboundary2_matrix(lie: LieAlgebra, rho: Sequence[Matrix]) -> Matrix:
    n = lie.dim
    cols = []
    for p, (i, j) in enumerate(_pairs(n)):
        for k in range(n):
            v = [Q(0)] * (len(_pairs(n)) * n)
            v[p * n + k] = Q(1)
            img = coboundary2(lie, rho, cochain2_from_coords(n, v))
            cols.append([x for key in sorted(img) for x in img[key]])
    return from_cols(cols)


def _lagrangian2_matrix(n: int) -> Matrix:
    """Rows = the cyclic-sum conditions cutting C2_L out of C2."""
    pairs = _pairs(n)
    pindex = {p: t for t, p in enumerate(pairs)}

    def coord(i, j, k):
        # coefficient lookup for a(e_i, e_j)(e_k) in C2 coordinates
        if i == j:
            return []
        if i < j:
            return [(pindex[(i, j)] * n + k, Q(1))]
        return [(pindex[(j, i)] * n + k, Q(-1))]

    rows = []
    for i, j, k in combinations(range(n), 3):
        row = [Q(0)] * (len(pairs) * n)
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            for idx, coef in coord(a, b, c):
                row[idx] += coef
        rows.append(row)
    return from_rows(rows)


def two_cocycle_space_matrix(lie: LieAlgebra, d: Connection,
                             lagrangian: bool = False) -> list[list[Q]]:
    """Basis (as coordinate vectors) of Z2_rho, or of Z2_L_rho."""
    rho = dual_representation(lie, d)
    m2 = _coboundary2_matrix(lie, rho)
    if lagrangian:
        m2 = from_rows([m2.row(i) for i in range(m2.rows)]
                       + [_lagrangian2_matrix(lie.dim).row(i)
                          for i in range(_lagrangian2_matrix(lie.dim).rows)])
    return [list(k.column_vector()) for k in m2.kernel_basis()]


@dataclass(frozen=True)
class CohomologySummary:
    dim_Z2: int
    dim_B2: int
    dim_H2_rho: int
    dim_Z2_L: int
    dim_B2_L: int
    dim_H2_L_rho: int
    dim_kappa_L: int
    representatives: tuple[Cochain2, ...]

    def to_json(self) -> dict:
        reps = []
        for r in self.representatives:
            terms = [{"i": i + 1, "j": j + 1, "k": k + 1, "v": str(r.a[i][j][k])}
                     for i in range(r.dim) for j in range(i + 1, r.dim)
                     for k in range(r.dim) if r.a[i][j][k] != 0]
            reps.append(terms)
        return {
            "dim_Z2": self.dim_Z2, "dim_B2": self.dim_B2,
            "dim_H2_rho": self.dim_H2_rho, "dim_Z2_L": self.dim_Z2_L,
            "dim_B2_L": self.dim_B2_L, "dim_H2_L_rho": self.dim_H2_L_rho,
            "dim_kappa_L": self.dim_kappa_L, "representatives": reps,
        }


def _column_space_dim(cols: list[list[Q]], ncoords: int) -> int:
    if not cols:
        return 0
    return from_cols(cols).rank()


def same_class_lagrangian(lie: LieAlgebra, d: Connection,
                          a1: Cochain2, a2: Cochain2) -> bool:
    """Whether a1 - a2 is the coboundary of a symmetric 1-cochain."""
    n = lie.dim
    rho = dual_representation(lie, d)
    cols = []
    for i in range(n):
        for j in range(i, n):
            s = [[Q(0)] * n for _ in range(n)]
            s[i][j] = Q(1)
            s[j][i] = Q(1)
            cols.append(cochain2_coords(coboundary1(lie, rho, Cochain1(n, from_rows(s)))))
    target = Matrix.column(cochain2_coords(a1 - a2))
    return from_cols(cols).solve(target) is not None


def cohomology_summary(lie: LieAlgebra, d: Connection) -> CohomologySummary:
    n = lie.dim
    rho = dual_representation(lie, d)
    m1 = _coboundary1_matrix(lie, rho)
    m2 = _coboundary2_matrix(lie, rho)
    lag = _lagrangian2_matrix(n)
    ncoords = len(_pairs(n)) * n

    z2 = [list(k.column_vector()) for k in m2.kernel_basis()]
    m2l = from_rows([m2.row(i) for i in range(m2.rows)]
                    + [lag.row(i) for i in range(lag.rows)])
    z2l = [list(k.column_vector()) for k in m2l.kernel_basis()]

    b2_cols = [m1.col(c) for c in range(m1.cols)]
    dim_b2 = _column_space_dim([list(c) for c in b2_cols], ncoords)

    # Lagrangian 1-cochains: symmetric matrices
    sym_basis = []
    for i in range(n):
        for j in range(i, n):
            s = [[Q(0)] * n for _ in range(n)]
            s[i][j] = Q(1)
            s[j][i] = Q(1)
            sym_basis.append(Cochain1(n, from_rows(s)))
    b2l_cols = [cochain2_coords(coboundary1(lie, rho, s)) for s in sym_basis]
    dim_b2l = _column_space_dim(b2l_cols, ncoords)

    # kappa_L = dim(B2 ∩ Z2_L) - dim B2_L, via dim(U∩V) = dimU + dimV - dim(U+V)
    stacked = [list(c) for c in b2_cols] + z2l
    dim_sum = _column_space_dim(stacked, ncoords)
    dim_inter = dim_b2 + len(z2l) - dim_sum
    kappa = dim_inter - dim_b2l

    # canonical representatives: greedily extend an echelon basis of B2_L
    # by Z2_L basis vectors (deterministic order)
    reps = []
    acc = [list(c) for c in b2l_cols]
    rank = _column_space_dim(acc, ncoords)
    for v in z2l:
        cand = acc + [v]
        r = _column_space_dim(cand, ncoords)
        if r > rank:
            acc = cand
            rank = r
            reps.append(cochain2_from_coords(n, v))

    dim_h2l = len(z2l) - dim_b2l
    assert len(reps) == dim_h2l
    return CohomologySummary(
        dim_Z2=len(z2), dim_B2=dim_b2, dim_H2_rho=len(z2) - dim_b2,
        dim_Z2_L=len(z2l), dim_B2_L=dim_b2l, dim_H2_L_rho=dim_h2l,
        dim_kappa_L=kappa, representatives=tuple(reps))
