"""Lie algebras given by structure constants, with exact rational arithmetic.

Basis indices are 1-based in all public constructors and string specs,
matching the e1..e6 conventions of the source tables; internal storage is
0-based.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, from_cols, from_rows
from .parsing import parse_items, parse_vector

__all__ = ["LieAlgebra", "Subspace", "NotAnIdeal", "abelian", "from_brackets"]


class NotAnIdeal(ValueError):
    pass


Vector = tuple[Q, ...]


def _zero(dim: int) -> Vector:
    return tuple([Q(0)] * dim)


class LieAlgebra:
    """dim plus the antisymmetric structure tensor c[i][j] = [e_i, e_j]."""

    __slots__ = ("dim", "c")

    def __init__(self, dim: int, c: Sequence[Sequence[Sequence[Q]]]):
        self.dim = dim
        self.c = tuple(tuple(tuple(Q(x) for x in c[i][j]) for j in range(dim))
                       for i in range(dim))
        for i in range(dim):
            for j in range(dim):
                if any(self.c[i][j][k] != -self.c[j][i][k] for k in range(dim)):
                    raise ValueError(f"structure constants not antisymmetric at ({i+1},{j+1})")

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.c))

    def __repr__(self):
        terms = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                v = self.c[i][j]
                if any(x != 0 for x in v):
                    comb = "+".join(f"{x}*e{k+1}" for k, x in enumerate(v) if x != 0)
                    terms.append(f"[e{i+1},e{j+1}]={comb}")
        return f"LieAlgebra(dim={self.dim}, {'; '.join(terms) or 'abelian'})"

    # -- basic operations ------------------------------------------------------

    def bracket(self, x: Sequence[Q], y: Sequence[Q]) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        out = [Q(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                cij = self.c[i][j]
                f = xi * yj
                for k in range(self.dim):
                    if cij[k] != 0:
                        out[k] += f * cij[k]
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        v = [Q(0)] * self.dim
        v[i - 1] = Q(1)
        return tuple(v)

    def adjoint(self, x: Sequence[Q]) -> Matrix:
        """Matrix of y -> [x, y]."""
        cols = [self.bracket(x, self.basis_vector(j + 1)) for j in range(self.dim)]
        return from_cols(cols)

    def jacobi_defect(self) -> list[tuple[int, int, int, Vector]]:
        """All basis triples i<j<k violating the Jacobi identity (1-based)."""
        bad = []
        e = [self.basis_vector(i + 1) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                cij = self.c[i][j]
                for k in range(j + 1, self.dim):
                    s = [a + b + c for a, b, c in zip(
                        self.bracket(cij, e[k]),
                        self.bracket(self.c[j][k], e[i]),
                        self.bracket(self.c[k][i], e[j]))]
                    if any(x != 0 for x in s):
                        bad.append((i + 1, j + 1, k + 1, tuple(s)))
        return bad

    def is_lie_algebra(self) -> bool:
        return not self.jacobi_defect()

    def derived_subalgebra(self) -> "Subspace":
        vectors = [self.c[i][j] for i in range(self.dim) for j in range(i + 1, self.dim)]
        return Subspace.span(self.dim, vectors)

    # -- ideals and quotients --------------------------------------------------

    def is_ideal(self, s: "Subspace") -> bool:
        if s.ambient_dim != self.dim:
            raise ValueError("ambient dimension mismatch")
        for i in range(self.dim):
            for v in s.basis_vectors():
                if not s.contains(self.bracket(self.basis_vector(i + 1), v)):
                    return False
        return True

    def quotient(self, j: "Subspace") -> tuple["LieAlgebra", Matrix, Matrix]:
        """Quotient by an ideal, with projection and section matrices.

        The complement is spanned by the standard basis vectors at the
        non-pivot columns of the echelon form of the ideal's basis, so
        repeated runs produce identical quotient structure constants.
        """
        if not self.is_ideal(j):
            raise NotAnIdeal("subspace is not an ideal")
        pivots = j.echelon_pivots()
        comp = [i for i in range(self.dim) if i not in set(pivots)]
        k = len(comp)
        # change of basis: complement vectors first, then the ideal basis
        cols = [self.basis_vector(i + 1) for i in comp] + [tuple(v) for v in j.basis_vectors()]
        b = from_cols(cols)
        binv = b.inverse()
        proj = from_rows([binv.row(r) for r in range(k)])
        sect = from_cols([self.basis_vector(i + 1) for i in comp])
        cq = [[None] * k for _ in range(k)]
        for a in range(k):
            for bb in range(k):
                w = self.bracket(self.basis_vector(comp[a] + 1), self.basis_vector(comp[bb] + 1))
                cq[a][bb] = proj.mul_vec(w)
        return LieAlgebra(k, cq), proj, sect

    # -- JSON wire format ------------------------------------------------------

    def to_json(self) -> dict:
        brackets = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs = [{"k": k + 1, "v": str(x)} for k, x in enumerate(self.c[i][j]) if x != 0]
                if coeffs:
                    brackets.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
        return {"dim": self.dim, "brackets": brackets}

    @staticmethod
    def from_json(data: dict | str) -> "LieAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        dim = data["dim"]
        c = [[list(_zero(dim)) for _ in range(dim)] for _ in range(dim)]
        for item in data["brackets"]:
            i, j = item["i"] - 1, item["j"] - 1
            for cf in item["coeffs"]:
                v = Q(cf["v"])
                c[i][j][cf["k"] - 1] = v
                c[j][i][cf["k"] - 1] = -v
        return LieAlgebra(dim, c)


class Subspace:
    """Subspace of Q^n with a stored independent basis."""

    __slots__ = ("ambient_dim", "_basis", "_span_matrix", "_pivots")

    def __init__(self, ambient_dim: int, basis: Iterable[Sequence[Q]]):
        self.ambient_dim = ambient_dim
        rows = [tuple(Q(x) for x in v) for v in basis]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError("basis vector length mismatch")
        if rows:
            m = from_rows(rows)
            if m.rank() != len(rows):
                raise ValueError("basis vectors are dependent")
            self._span_matrix = m
            self._pivots = m.rref()[1]
        else:
            self._span_matrix = None
            self._pivots = []
        self._basis = tuple(rows)

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Sequence[Q]]) -> "Subspace":
        """Subspace spanned by possibly dependent vectors."""
        picked: list[tuple] = []
        rank = 0
        for v in vectors:
            cand = picked + [tuple(Q(x) for x in v)]
            m = from_rows(cand)
            if m.rank() > rank:
                picked = cand
                rank += 1
        return Subspace(ambient_dim, picked)

    @staticmethod
    def coordinate(ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        """Span of the 1-based standard basis vectors at the given indices."""
        vecs = []
        for i in indices:
            v = [Q(0)] * ambient_dim
            v[i - 1] = Q(1)
            vecs.append(tuple(v))
        return Subspace(ambient_dim, vecs)

    @property
    def dim(self) -> int:
        return len(self._basis)

    def basis_vectors(self) -> tuple:
        return self._basis

    def echelon_pivots(self) -> list[int]:
        return list(self._pivots)

    def contains(self, v: Sequence[Q]) -> bool:
        if all(x == 0 for x in v):
            return True
        if not self._basis:
            return False
        m = from_rows(list(self._basis) + [tuple(v)])
        return m.rank() == len(self._basis)

    def coordinate_indices(self) -> tuple[int, ...] | None:
        """1-based indices if this is exactly a coordinate subspace, else None."""
        idx = []
        for v in self._basis:
            nz = [k for k, x in enumerate(v) if x != 0]
            if len(nz) != 1 or v[nz[0]] != 1:
                return None
            idx.append(nz[0] + 1)
        return tuple(sorted(idx))

    def __eq__(self, other):
        if not isinstance(other, Subspace) or self.ambient_dim != other.ambient_dim:
            return False
        if self.dim != other.dim:
            return False
        return all(self.contains(v) for v in other.basis_vectors())

    def __repr__(self):
        idx = self.coordinate_indices()
        if idx is not None:
            return f"Subspace<{','.join('e%d' % i for i in idx)}>"
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


def abelian(dim: int) -> LieAlgebra:
    z = _zero(dim)
    return LieAlgebra(dim, [[z] * dim for _ in range(dim)])


def from_brackets(dim: int, spec: str, env: Mapping[str, Q] | None = None) -> LieAlgebra:
    """Build an algebra from a bracket spec like ``"[1,4]=-e6; [2,5]=-e6"``.

    Only the pairs present need listing; antisymmetry fills the rest.
    """
    c = [[list(_zero(dim)) for _ in range(dim)] for _ in range(dim)]
    for i, j, rhs in parse_items(spec):
        v = parse_vector(rhs, dim, env)
        for k in range(dim):
            c[i - 1][j - 1][k] = v[k]
            c[j - 1][i - 1][k] = -v[k]
    return LieAlgebra(dim, c)
