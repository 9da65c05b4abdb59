"""Skew 2-forms on a Lie algebra: closedness, nondegeneracy, orthogonals,
Lagrangian ideals, primitives.

Conventions:
  * ``eIJ`` in form specs means the wedge e^I ^ e^J normalised by
    (e^I ^ e^J)(e_I, e_J) = +1;
  * the differential on 1-forms is d(mu)(x, y) = -mu([x, y]), which makes
    d on 2-forms the usual cyclic sum over brackets and gives d o d = 0.
"""

from __future__ import annotations

import re
from fractions import Fraction as Q
from itertools import combinations
from typing import Mapping, Sequence

from .lie import LieAlgebra, Subspace
from .linalg import Matrix, from_cols, from_rows
from .parsing import ParseError, _run

__all__ = [
    "TwoForm", "OneForm", "NotClosed", "NotSymplectic",
    "two_form", "d_one_form", "d_two_form", "is_closed", "is_nondegenerate",
    "is_symplectic", "find_primitive", "orthogonal", "is_lagrangian_ideal",
    "search_coordinate_lagrangian_ideals", "mc_differential",
]


class NotClosed(ValueError):
    pass


class NotSymplectic(ValueError):
    pass


class TwoForm:
    """Antisymmetric matrix w with w[i][j] = omega(e_{i+1}, e_{j+1})."""

    __slots__ = ("dim", "w")

    def __init__(self, dim: int, w: Matrix):
        if w.rows != dim or w.cols != dim:
            raise ValueError("shape mismatch")
        for i in range(dim):
            for j in range(dim):
                if w[i, j] != -w[j, i]:
                    raise ValueError("matrix is not antisymmetric")
        self.dim = dim
        self.w = w

    @staticmethod
    def from_entries(dim: int, terms: Mapping[tuple[int, int], Q]) -> "TwoForm":
        """Build from 1-based upper-triangle entries {(i, j): value}."""
        grid = [[Q(0)] * dim for _ in range(dim)]
        for (i, j), v in terms.items():
            grid[i - 1][j - 1] += Q(v)
            grid[j - 1][i - 1] -= Q(v)
        return TwoForm(dim, from_rows(grid))

    @staticmethod
    def zero(dim: int) -> "TwoForm":
        return TwoForm(dim, Matrix.zero(dim, dim))

    def __call__(self, x: Sequence[Q], y: Sequence[Q]) -> Q:
        return sum((xi * sum((self.w[i, j] * y[j] for j in range(self.dim)), Q(0))
                    for i, xi in enumerate(x)), Q(0))

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.dim, self.w + other.w)

    def __sub__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.dim, self.w - other.w)

    def scale(self, c: Q) -> "TwoForm":
        return TwoForm(self.dim, self.w.scale(c))

    def __eq__(self, other):
        return isinstance(other, TwoForm) and self.dim == other.dim and self.w == other.w

    def pullback(self, phi: Matrix) -> "TwoForm":
        """phi^T w phi, the pullback along the linear map phi."""
        return TwoForm(self.dim, phi.transpose() @ self.w @ phi)

    def to_json(self) -> dict:
        terms = [{"i": i + 1, "j": j + 1, "v": str(self.w[i, j])}
                 for i in range(self.dim) for j in range(i + 1, self.dim)
                 if self.w[i, j] != 0]
        return {"dim": self.dim, "terms": terms}

    @staticmethod
    def from_json(data: dict) -> "TwoForm":
        return TwoForm.from_entries(
            data["dim"], {(t["i"], t["j"]): Q(t["v"]) for t in data["terms"]})

    def __repr__(self):
        terms = [f"{self.w[i, j]}*e{i+1}{j+1}" for i in range(self.dim)
                 for j in range(i + 1, self.dim) if self.w[i, j] != 0]
        return f"TwoForm({' + '.join(terms) or '0'})"


class OneForm:
    __slots__ = ("dim", "mu")

    def __init__(self, dim: int, mu: Sequence[Q]):
        if len(mu) != dim:
            raise ValueError("length mismatch")
        self.dim = dim
        self.mu = tuple(Q(x) for x in mu)

    def __call__(self, x: Sequence[Q]) -> Q:
        return sum((a * b for a, b in zip(self.mu, x)), Q(0))

    def __eq__(self, other):
        return isinstance(other, OneForm) and self.mu == other.mu

    def __repr__(self):
        terms = [f"{x}*e^{i+1}" for i, x in enumerate(self.mu) if x != 0]
        return f"OneForm({' + '.join(terms) or '0'})"


def mc_differential(lie: LieAlgebra, k: int) -> TwoForm:
    """d(e^k) for the k-th (1-based) dual basis vector: (x,y) -> -e^k([x,y])."""
    dim = lie.dim
    grid = [[-lie.c[i][j][k - 1] for j in range(dim)] for i in range(dim)]
    return TwoForm(dim, from_rows(grid))


def two_form(lie: LieAlgebra, spec: str, env: Mapping[str, Q] | None = None) -> TwoForm:
    """Parse a 2-form spec over ``eIJ`` wedges and ``deK`` differentials."""
    dim = lie.dim
    acc: dict[tuple[int, int], Q] = {}

    def atom(t: str):
        m = re.fullmatch(r"e(\d)(\d)", t)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= dim and 1 <= j <= dim and i != j):
                raise ParseError(f"bad wedge indices in {t}")
            return {("w", i, j): Q(1)}
        m = re.fullmatch(r"de(\d+)", t)
        if m:
            k = int(m.group(1))
            if not 1 <= k <= dim:
                raise ParseError(f"bad differential index in {t}")
            return {("d", k): Q(1)}
        return None

    v = _run(spec, env or {}, atom)
    if v.vec is None:
        if v.scalar != 0:
            raise ParseError("2-form spec reduced to a nonzero scalar")
        return TwoForm.zero(dim)
    total = Matrix.zero(dim, dim)
    for key, c in v.vec.items():
        if key[0] == "w":
            _, i, j = key
            total = total + TwoForm.from_entries(dim, {(i, j): c}).w
        else:
            total = total + mc_differential(lie, key[1]).w.scale(c)
    return TwoForm(dim, total)


def d_one_form(lie: LieAlgebra, mu: OneForm) -> TwoForm:
    """d(mu)(x, y) = -mu([x, y])."""
    dim = lie.dim
    grid = [[-mu(lie.c[i][j]) for j in range(dim)] for i in range(dim)]
    return TwoForm(dim, from_rows(grid))


def d_two_form(lie: LieAlgebra, w: TwoForm, x: int, y: int, z: int) -> Q:
    """Cyclic sum w([e_x,e_y],e_z) + w([e_y,e_z],e_x) + w([e_z,e_x],e_y)."""
    ex, ey, ez = (lie.basis_vector(x), lie.basis_vector(y), lie.basis_vector(z))
    return (w(lie.bracket(ex, ey), ez) + w(lie.bracket(ey, ez), ex)
            + w(lie.bracket(ez, ex), ey))


def is_closed(lie: LieAlgebra, w: TwoForm) -> bool:
    for x, y, z in combinations(range(1, lie.dim + 1), 3):
        if d_two_form(lie, w, x, y, z) != 0:
            return False
    return True


def is_nondegenerate(w: TwoForm) -> bool:
    return w.w.rank() == w.dim


def is_symplectic(lie: LieAlgebra, w: TwoForm) -> bool:
    if lie.dim != w.dim:
        raise ValueError("dimension mismatch")
    return is_closed(lie, w) and is_nondegenerate(w)


def find_primitive(lie: LieAlgebra, w: TwoForm) -> OneForm | None:
    """A 1-form mu with d(mu) = w, or None; raises NotClosed on non-cocycles.

    Oracle-grade implementation: a plain linear solve of
    -mu([e_i, e_j]) = w(e_i, e_j) over all basis pairs.
    """
    if not is_closed(lie, w):
        raise NotClosed("form is not closed")
    dim = lie.dim
    rows, rhs = [], []
    for i in range(dim):
        for j in range(i + 1, dim):
            rows.append([-x for x in lie.c[i][j]])
            rhs.append(w.w[i, j])
    a = from_rows(rows)
    sol = a.solve(Matrix.column(rhs))
    if sol is None:
        return None
    return OneForm(dim, sol.column_vector())


def orthogonal(w: TwoForm, s: Subspace) -> Subspace:
    """{x : w(x, y) = 0 for all y in s}."""
    if s.ambient_dim != w.dim:
        raise ValueError("dimension mismatch")
    if s.dim == 0:
        return Subspace.coordinate(w.dim, range(1, w.dim + 1))
    rows = [[w(tuple(Q(1) if t == k else Q(0) for t in range(w.dim)), v)
             for k in range(w.dim)] for v in s.basis_vectors()]
    m = from_rows(rows)
    return Subspace(w.dim, [k.column_vector() for k in m.kernel_basis()])


def is_lagrangian_ideal(lie: LieAlgebra, w: TwoForm, s: Subspace) -> bool:
    if not is_symplectic(lie, w):
        raise NotSymplectic("form is not symplectic")
    if 2 * s.dim != lie.dim:
        return False
    if not lie.is_ideal(s):
        return False
    orth = orthogonal(w, s)
    return all(orth.contains(v) for v in s.basis_vectors())


def search_coordinate_lagrangian_ideals(lie: LieAlgebra, w: TwoForm) -> list[Subspace]:
    """All half-dimension coordinate subspaces that are Lagrangian ideals,
    in lexicographic index order."""
    if not is_symplectic(lie, w):
        raise NotSymplectic("form is not symplectic")
    half = lie.dim // 2
    found = []
    for idx in combinations(range(1, lie.dim + 1), half):
        s = Subspace.coordinate(lie.dim, idx)
        if is_lagrangian_ideal(lie, w, s):
            found.append(s)
    return found
