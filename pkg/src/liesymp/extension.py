"""Cotangent-style extensions of a flat Lie algebra h: the Lie algebra
h (+) h* twisted by a restricted 2-cocycle, its canonical pairing form,
the induced flat product, exactness and Novikov criteria, and the
coboundary-shift isomorphisms.

Basis convention on the extension: e_1..e_n are the h basis, e_{n+1}..e_{2n}
the dual basis of h*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations

from .cohomology import (Cochain1, Cochain2, dual_representation, is_cocycle2)
from .connections import (Connection, connection_from_symplectic,
                          is_flat_torsion_free, right_multiplication,
                          is_novikov, is_associative, right_mults_commute)
from .forms import TwoForm, is_symplectic
from .lie import LieAlgebra
from .linalg import Matrix, from_cols, from_rows

__all__ = [
    "ExtensionTriple", "NotFlat", "NotCocycle", "build_extension",
    "check_bianchi", "flat_product", "exactness_criterion", "is_snla",
    "snla_alpha_condition", "chi_symplectic_form", "coboundary_shift_iso",
    "canonical_pairing_form", "cotangent_map", "pullback_cochain2",
    "solve_ordinary_shift",
]


class NotFlat(ValueError):
    pass


class NotCocycle(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionTriple:
    h: LieAlgebra
    d: Connection
    alpha: Cochain2

    def __post_init__(self):
        if not (self.h.dim == self.d.dim == self.alpha.dim):
            raise ValueError("dimension mismatch")
        if not is_flat_torsion_free(self.h, self.d):
            raise NotFlat("connection is not flat torsion-free")
        rho = dual_representation(self.h, self.d)
        if not is_cocycle2(self.h, rho, self.alpha):
            raise NotCocycle("alpha is not a 2-cocycle for the dual representation")

    @property
    def rho(self) -> list[Matrix]:
        return dual_representation(self.h, self.d)


def canonical_pairing_form(n: int) -> TwoForm:
    """omega_0 on h (+) h*: omega_0(x, xi) = xi(x), blocks of h and h* isotropic."""
    return TwoForm.from_entries(2 * n, {(i + 1, n + i + 1): Q(1) for i in range(n)})


def check_bianchi(alpha: Cochain2) -> bool:
    """Cyclic sum alpha(x,y)(z) + alpha(y,z)(x) + alpha(z,x)(y) = 0."""
    n = alpha.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if alpha.a[i][j][k] + alpha.a[j][k][i] + alpha.a[k][i][j] != 0:
                    return False
    return True


def build_extension(t: ExtensionTriple) -> tuple[LieAlgebra, TwoForm]:
    """The extension algebra on h (+) h* and its canonical pairing form.

    Brackets: [x,y] = [x,y]_h + alpha(x,y); [x,xi] = rho(x) xi; [xi,xi'] = 0.
    The pairing form is symplectic for the result exactly when alpha
    satisfies the cyclic-sum (Bianchi) identity.
    """
    n = t.h.dim
    rho = t.rho
    dim = 2 * n
    c = [[[Q(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            hij = t.h.c[i][j]
            aij = t.alpha.a[i][j]
            for k in range(n):
                c[i][j][k] = hij[k]
                c[i][j][n + k] = aij[k]
    for i in range(n):
        for m in range(n):
            col = rho[i].col(m)
            for k in range(n):
                c[i][n + m][n + k] = col[k]
                c[n + m][i][n + k] = -col[k]
    lie = LieAlgebra(dim, c)
    assert not lie.jacobi_defect(), "extension brackets violate Jacobi"
    return lie, canonical_pairing_form(n)


def flat_product(t: ExtensionTriple) -> Connection:
    """The flat torsion-free product on the extension:

        x * y    = nabla_x y + alpha(x, .)(y)
        xi * x   = xi o (nabla_x - ad_x)
        x * xi   = -xi o ad_x
        xi * xi' = 0
    """
    n = t.h.dim
    dim = 2 * n
    gamma = [[[Q(0)] * dim for _ in range(dim)] for _ in range(dim)]
    e = [t.h.basis_vector(i + 1) for i in range(n)]
    rhomat = [right_multiplication(t.h, t.d, e[i]) for i in range(n)]
    admat = [t.h.adjoint(e[i]) for i in range(n)]
    for i in range(n):
        for j in range(n):
            nab = t.d.gamma[i][j]
            for k in range(n):
                gamma[i][j][k] = nab[k]
                # alpha(e_i, .)(e_j) evaluated on e_k
                gamma[i][j][n + k] = t.alpha.a[i][k][j]
        for m in range(n):
            # e_{n+m} * e_i = e^m o rho-right-mult(e_i)
            for k in range(n):
                gamma[n + m][i][n + k] = rhomat[i][m, k]
            # e_i * e_{n+m} = -e^m o ad_{e_i}
            for k in range(n):
                gamma[i][n + m][n + k] = -admat[i][m, k]
    return Connection(dim, gamma)


def exactness_criterion(t: ExtensionTriple) -> tuple[tuple, tuple] | None:
    """(e, gamma) with right-multiplication-by-e = I on h and
    alpha(x, y)(e) = gamma([x, y]) on all pairs, or None.

    Solved as one joint linear system in (e, gamma).
    """
    n = t.h.dim
    e = [t.h.basis_vector(i + 1) for i in range(n)]
    rho_cols = [right_multiplication(t.h, t.d, e[i]) for i in range(n)]
    rows, rhs = [], []
    # rho(e) = I: n^2 equations, unknowns e_1..e_n then gamma_1..gamma_n
    for a in range(n):
        for b in range(n):
            rows.append([rho_cols[i][a, b] for i in range(n)] + [Q(0)] * n)
            rhs.append(Q(1) if a == b else Q(0))
    # alpha(e_i, e_j)(e) - gamma([e_i, e_j]) = 0
    for i, j in combinations(range(n), 2):
        coe = [t.alpha.a[i][j][k] for k in range(n)]
        cog = [-x for x in t.h.c[i][j]]
        rows.append(coe + cog)
        rhs.append(Q(0))
    sol = from_rows(rows).solve(Matrix.column(rhs))
    if sol is None:
        return None
    v = sol.column_vector()
    return tuple(v[:n]), tuple(v[n:])


def snla_alpha_condition(t: ExtensionTriple) -> bool:
    """alpha(z y, .)(x) + alpha(z, .)(y) o rho(x)
         = alpha(z x, .)(y) + alpha(z, .)(x) o rho(y)   on basis triples,
    with rho the right multiplication of (h, nabla)."""
    n = t.h.dim
    e = [t.h.basis_vector(i + 1) for i in range(n)]
    rmul = [right_multiplication(t.h, t.d, e[i]) for i in range(n)]

    def lhs(z, y, x, w):
        zy = t.d.apply(e[z], e[y])
        first = sum((zy_i * t.alpha.a[i][w][x] for i, zy_i in enumerate(zy)), Q(0))
        rw = rmul[x].col(w)  # rho(e_x) e_w
        second = sum((rw[m] * t.alpha.a[z][m][y] for m in range(n)), Q(0))
        return first + second

    for z in range(n):
        for y in range(n):
            for x in range(y + 1, n):
                for w in range(n):
                    if lhs(z, y, x, w) != lhs(z, x, y, w):
                        return False
    return True


def is_snla(t: ExtensionTriple) -> tuple[bool, dict]:
    """Full Novikov verdict for the extension with the three sub-conditions."""
    parts = {
        "base_novikov": is_novikov(t.h, t.d),
        "base_associative": is_associative(t.d),
        "right_mults_commute": right_mults_commute(t.h, t.d),
        "alpha_condition": snla_alpha_condition(t),
    }
    return all(parts.values()), parts


def chi_symplectic_form(t: ExtensionTriple, sigma: Cochain1, mu: Cochain1) -> TwoForm:
    """omega(x, y + xi) = -chi(x, y) + xi(x) with chi = (s-m) - (s-m)^T."""
    n = t.h.dim
    diff = sigma.s - mu.s
    chi = diff - diff.transpose()
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            if chi[i, j] != 0:
                entries[(i + 1, j + 1)] = -chi[i, j]
        entries[(i + 1, n + i + 1)] = Q(1)
    return TwoForm.from_entries(2 * n, entries)


def coboundary_shift_iso(t: ExtensionTriple, sigma: Cochain1, mu: Cochain1) -> Matrix:
    """The block map (x, xi) -> (x, xi + (sigma - mu)(x)) as a 2n x 2n matrix."""
    n = t.h.dim
    diff = sigma.s - mu.s
    rows = []
    for i in range(n):
        rows.append([Q(1) if j == i else Q(0) for j in range(2 * n)])
    for k in range(n):
        row = [diff[i, k] for i in range(n)]
        row += [Q(1) if m == k else Q(0) for m in range(n)]
        rows.append(row)
    return from_rows(rows)


def cotangent_map(psi: Matrix) -> Matrix:
    """diag(psi, (psi^T)^-1): carries one cotangent-style extension onto
    another along a flat isomorphism psi of the bases (the cocycle must be
    pulled back accordingly, see :func:`pullback_cochain2`)."""
    n = psi.rows
    dual = psi.transpose().inverse()
    rows = []
    for i in range(n):
        rows.append(list(psi.row(i)) + [Q(0)] * n)
    for i in range(n):
        rows.append([Q(0)] * n + list(dual.row(i)))
    return from_rows(rows)


def pullback_cochain2(psi: Matrix, alpha: Cochain2) -> Cochain2:
    """(psi^* alpha)(x, y) = alpha(psi x, psi y) o psi."""
    n = alpha.dim
    a = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            val = alpha.value(psi.col(i), psi.col(j))
            for k in range(n):
                a[i][j][k] = sum((val[m] * psi[m, k] for m in range(n)), Q(0))
    return Cochain2(n, a)


def solve_ordinary_shift(t_base: "ExtensionTriple", a1: Cochain2,
                         a2: Cochain2) -> Cochain1 | None:
    """sigma with d(sigma) = a1 - a2 over all 1-cochains, or None.

    Extensions of the same flat base by cocycles in one ordinary class are
    isomorphic through the corresponding shift map.
    """
    from .cohomology import Cochain1 as C1, coboundary1, cochain2_coords
    n = t_base.h.dim
    rho = t_base.rho
    cols = []
    for i in range(n):
        for j in range(n):
            s = [[Q(0)] * n for _ in range(n)]
            s[i][j] = Q(1)
            cols.append(cochain2_coords(coboundary1(t_base.h, rho, C1(n, from_rows(s)))))
    target = Matrix.column(cochain2_coords(a1 - a2))
    sol = from_cols(cols).solve(target)
    if sol is None:
        return None
    v = sol.column_vector()
    return C1(n, from_rows([[v[i * n + j] for j in range(n)] for i in range(n)]))
