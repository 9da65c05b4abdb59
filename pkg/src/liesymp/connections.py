"""Bilinear connections on a Lie algebra: torsion, curvature, flatness,
right identities, the connection induced by a symplectic form, Novikov and
associativity checks, and pullback along linear isomorphisms."""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Mapping, Sequence

from .forms import NotSymplectic, TwoForm, is_symplectic
from .lie import LieAlgebra
from .linalg import Matrix, as_scalar, from_cols, from_rows
from .parsing import parse_items, parse_vector

__all__ = [
    "Connection", "connection", "torsion", "curvature", "is_flat",
    "is_torsion_free", "is_flat_torsion_free", "right_multiplication",
    "find_right_identity", "right_identity_solution_space",
    "connection_from_symplectic", "is_novikov", "is_associative",
    "right_mults_commute", "pullback_connection",
]

Vector = tuple[Q, ...]


class Connection:
    """gamma[i][j] = nabla_{e_{i+1}} e_{j+1} as a coefficient tuple."""

    __slots__ = ("dim", "gamma")

    def __init__(self, dim: int, gamma: Sequence[Sequence[Sequence[Q]]]):
        self.dim = dim
        self.gamma = tuple(tuple(tuple(as_scalar(x) for x in gamma[i][j]) for j in range(dim))
                           for i in range(dim))

    @staticmethod
    def zero(dim: int) -> "Connection":
        z = tuple([Q(0)] * dim)
        return Connection(dim, [[z] * dim for _ in range(dim)])

    def apply(self, x: Sequence[Q], y: Sequence[Q]) -> Vector:
        """nabla_x y, bilinear extension."""
        out = [Q(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                g = self.gamma[i][j]
                f = xi * yj
                for k in range(self.dim):
                    if g[k] != 0:
                        out[k] += f * g[k]
        return tuple(out)

    def left_mult(self, x: Sequence[Q]) -> Matrix:
        """Matrix of y -> nabla_x y."""
        cols = []
        for j in range(self.dim):
            e = [Q(0)] * self.dim
            e[j] = Q(1)
            cols.append(self.apply(x, e))
        return from_cols(cols)

    def __eq__(self, other):
        return isinstance(other, Connection) and self.dim == other.dim and self.gamma == other.gamma

    def __repr__(self):
        terms = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.gamma[i][j]
                if any(x != 0 for x in v):
                    comb = "+".join(f"{c}*e{k+1}" for k, c in enumerate(v) if c != 0)
                    terms.append(f"D[{i+1},{j+1}]={comb}")
        return f"Connection({'; '.join(terms) or '0'})"

    def to_json(self) -> dict:
        items = []
        for i in range(self.dim):
            for j in range(self.dim):
                coeffs = [{"k": k + 1, "v": str(x)} for k, x in enumerate(self.gamma[i][j]) if x != 0]
                if coeffs:
                    items.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
        return {"dim": self.dim, "gamma": items}

    @staticmethod
    def from_json(data: dict) -> "Connection":
        dim = data["dim"]
        gamma = [[[Q(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for item in data["gamma"]:
            for cf in item["coeffs"]:
                gamma[item["i"] - 1][item["j"] - 1][cf["k"] - 1] = Q(cf["v"])
        return Connection(dim, gamma)


def connection(dim: int, spec: str, env: Mapping[str, Q] | None = None) -> Connection:
    """Build from a spec like ``"[3,1]=e1; [3,2]=e2"`` ([i,j] is nabla_{e_i}e_j)."""
    gamma = [[[Q(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, rhs in parse_items(spec):
        gamma[i - 1][j - 1] = list(parse_vector(rhs, dim, env))
    return Connection(dim, gamma)


def torsion(lie: LieAlgebra, d: Connection) -> list[list[Vector]]:
    """T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j] for all pairs."""
    n = lie.dim
    return [[tuple(d.gamma[i][j][k] - d.gamma[j][i][k] - lie.c[i][j][k] for k in range(n))
             for j in range(n)] for i in range(n)]


def curvature(lie: LieAlgebra, d: Connection) -> list[list[list[Vector]]]:
    """R(e_i, e_j)e_k for all basis triples."""
    n = lie.dim
    e = [lie.basis_vector(i + 1) for i in range(n)]
    out = []
    for i in range(n):
        rows = []
        for j in range(n):
            entries = []
            bij = lie.c[i][j]
            for k in range(n):
                v = d.apply(e[i], d.apply(e[j], e[k]))
                w = d.apply(e[j], d.apply(e[i], e[k]))
                u = d.apply(bij, e[k])
                entries.append(tuple(a - b - c for a, b, c in zip(v, w, u)))
            rows.append(entries)
        out.append(rows)
    return out


def is_torsion_free(lie: LieAlgebra, d: Connection) -> bool:
    return all(all(x == 0 for x in t) for row in torsion(lie, d) for t in row)


def is_flat(lie: LieAlgebra, d: Connection) -> bool:
    return all(all(x == 0 for x in r) for plane in curvature(lie, d)
               for row in plane for r in row)


def is_flat_torsion_free(lie: LieAlgebra, d: Connection) -> bool:
    return is_torsion_free(lie, d) and is_flat(lie, d)


def right_multiplication(lie: LieAlgebra, d: Connection, x: Sequence[Q]) -> Matrix:
    """Matrix of y -> nabla_y x, computed as nabla_x - ad_x."""
    return d.left_mult(x) - lie.adjoint(x)


def right_identity_solution_space(lie: LieAlgebra, d: Connection) -> tuple[Vector | None, int]:
    """Solve rho(e) = I as a linear system in e.

    Returns (echelon-canonical solution or None, dimension of the affine
    solution set; -1 when empty).
    """
    n = lie.dim
    cols = []
    for i in range(n):
        e = lie.basis_vector(i + 1)
        m = right_multiplication(lie, d, e)
        cols.append([m[a, b] for a in range(n) for b in range(n)])
    a = from_cols(cols)
    rhs = Matrix.column([Q(1) if r % (n + 1) == 0 else Q(0) for r in range(n * n)])
    sol = a.solve(rhs)
    if sol is None:
        return None, -1
    return tuple(sol.column_vector()), len(a.kernel_basis())


def find_right_identity(lie: LieAlgebra, d: Connection) -> Vector | None:
    return right_identity_solution_space(lie, d)[0]


def connection_from_symplectic(lie: LieAlgebra, w: TwoForm) -> Connection:
    """The connection defined by w(nabla_x y, z) = -w(y, [x, z])."""
    if not is_symplectic(lie, w):
        raise NotSymplectic("form is not symplectic")
    n = lie.dim
    wt = w.w.transpose()
    winv = wt.inverse()
    e = [lie.basis_vector(i + 1) for i in range(n)]
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = Matrix.column([-w(e[j], lie.bracket(e[i], e[k])) for k in range(n)])
            row.append(tuple((winv @ rhs).column_vector()))
        gamma.append(row)
    return Connection(n, gamma)


def is_novikov(lie: LieAlgebra, d: Connection) -> bool:
    """(z*y)*x = (z*x)*y on all basis triples, where x*y = nabla_x y."""
    n = lie.dim
    e = [lie.basis_vector(i + 1) for i in range(n)]
    for z in range(n):
        for y in range(n):
            zy = d.apply(e[z], e[y])
            for x in range(y + 1, n):
                zx = d.apply(e[z], e[x])
                if d.apply(zy, e[x]) != d.apply(zx, e[y]):
                    return False
    return True


def is_associative(d: Connection) -> bool:
    n = d.dim
    e = []
    for i in range(n):
        v = [Q(0)] * n
        v[i] = Q(1)
        e.append(tuple(v))
    for x in range(n):
        for y in range(n):
            xy = d.apply(e[x], e[y])
            for z in range(n):
                if d.apply(xy, e[z]) != d.apply(e[x], d.apply(e[y], e[z])):
                    return False
    return True


def right_mults_commute(lie: LieAlgebra, d: Connection) -> bool:
    n = lie.dim
    mats = [right_multiplication(lie, d, lie.basis_vector(i + 1)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                return False
    return True


def pullback_connection(psi: Matrix, d: Connection) -> Connection:
    """(psi . D)_x y = psi(nabla_{psi^{-1} x} psi^{-1} y)."""
    n = d.dim
    if psi.rows != n or psi.cols != n:
        raise ValueError("shape mismatch")
    psinv = psi.inverse()  # raises on singular input
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            xi = psinv.col(i)
            yj = psinv.col(j)
            row.append(tuple(psi.mul_vec(d.apply(xi, yj))))
        gamma.append(row)
    return Connection(n, gamma)
