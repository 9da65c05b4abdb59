"""Reduction of a symplectic Lie algebra along a Lagrangian ideal and the
reconstruction round trip.

Given (g, w) with a Lagrangian ideal j, the quotient h = g/j carries the
flat torsion-free connection determined by

    w_h(nabla_{x̄} ȳ, u) = -w(y, [x, u])    for u in j,

where w_h(x̄, u) = w(x, u) is the induced nondegenerate pairing of h with j.
A strong polarization adds a Lagrangian complement N; the bracket components
of N-lifts falling back into j, read through the pairing, form the
restricted 2-cocycle that rebuilds (g, w) as an extension of (h, nabla).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .cohomology import Cochain2, dual_representation, is_cocycle2
from .connections import Connection, is_flat_torsion_free
from .extension import ExtensionTriple, build_extension, check_bianchi
from .forms import TwoForm, is_lagrangian_ideal, is_symplectic, orthogonal
from .lie import LieAlgebra, NotAnIdeal, Subspace
from .linalg import Matrix, from_cols, from_rows

__all__ = [
    "NotLagrangianIdeal", "DegeneratePairing", "Polarization",
    "induced_connection", "gamma_identification", "lagrangian_complement",
    "polarization_cocycle", "reconstruct",
]


class NotLagrangianIdeal(ValueError):
    pass


class DegeneratePairing(ValueError):
    pass


def _check_reducible(g: LieAlgebra, w: TwoForm, j: Subspace) -> None:
    if not is_symplectic(g, w):
        raise NotLagrangianIdeal("form is not symplectic")
    if not g.is_ideal(j):
        raise NotLagrangianIdeal("subspace is not an ideal")
    orth = orthogonal(w, j)
    if not all(orth.contains(v) for v in j.basis_vectors()):
        raise NotLagrangianIdeal("ideal is not isotropic")


def _pairing_matrix(g, w, j, sect) -> Matrix:
    """P[a][u] = w(section(ē_a), j_u); invertible for a Lagrangian ideal."""
    k = sect.cols
    jb = j.basis_vectors()
    p = from_rows([[w(sect.col(a), jb[u]) for u in range(len(jb))] for a in range(k)])
    if p.rows != p.cols or p.rank() != p.rows:
        raise DegeneratePairing("quotient does not pair perfectly with the ideal")
    return p


def induced_connection(g: LieAlgebra, w: TwoForm,
                       j: Subspace) -> tuple[LieAlgebra, Connection, Matrix, Matrix]:
    """Quotient algebra, its induced connection, projection and section.

    The connection solves w(section(nabla_{x̄} ȳ), u) = -w(y, [x, u]) over the
    ideal basis, using the canonical coordinate complement for the quotient.
    """
    _check_reducible(g, w, j)
    h, proj, sect = g.quotient(j)
    p = _pairing_matrix(g, w, j, sect)
    # the unknown coefficients c of nabla_a b satisfy sum_k c_k P[k,u] = rhs_u
    ptinv = p.transpose().inverse()
    k = h.dim
    jb = j.basis_vectors()
    gamma = []
    for a in range(k):
        row = []
        x = sect.col(a)
        for b in range(k):
            y = sect.col(b)
            rhs = Matrix.column([-w(y, g.bracket(x, jb[u])) for u in range(k)])
            row.append(tuple((ptinv @ rhs).column_vector()))
        gamma.append(row)
    d = Connection(k, gamma)
    assert is_flat_torsion_free(h, d), "induced connection failed flatness"
    return h, d, proj, sect


def gamma_identification(g: LieAlgebra, w: TwoForm, j: Subspace) -> Matrix:
    """Matrix of the pairing j -> h* (columns: ideal basis; rows: dual basis
    of the canonical quotient complement), G[k][u] = w(section(ē_k), j_u)."""
    _check_reducible(g, w, j)
    _, _, sect = g.quotient(j)
    return _pairing_matrix(g, w, j, sect)


def lagrangian_complement(g: LieAlgebra, w: TwoForm, j: Subspace,
                          seed: Matrix | None = None) -> Subspace:
    """A Lagrangian complement of j, deterministically corrected inside j.

    Starting from ``seed`` columns (default: the canonical coordinate
    complement), each vector is shifted by an ideal element so the result
    is isotropic; the correction is C^T = -(1/2) P^{-1} S with P the pairing
    and S the skew Gram matrix of the seed.
    """
    _check_reducible(g, w, j)
    _, _, sect = g.quotient(j)
    if seed is None:
        seed = sect
    k = seed.cols
    jb = j.basis_vectors()
    p = from_rows([[w(seed.col(a), jb[u]) for u in range(len(jb))] for a in range(k)])
    if p.rank() != k:
        raise DegeneratePairing("seed does not complement the ideal")
    s = from_rows([[w(seed.col(a), seed.col(b)) for b in range(k)] for a in range(k)])
    ct = (p.inverse() @ s).scale(Q(-1, 2))  # ct[u][b]: coefficient of j_u in n_b
    cols = []
    for b in range(k):
        v = list(seed.col(b))
        for u in range(k):
            coef = ct[u, b]
            if coef != 0:
                ju = jb[u]
                v = [x + coef * y for x, y in zip(v, ju)]
        cols.append(tuple(v))
    n = Subspace(g.dim, cols)
    for a in range(k):
        for b in range(k):
            assert w(cols[a], cols[b]) == 0, "complement correction failed"
    return n


@dataclass(frozen=True)
class Polarization:
    g: LieAlgebra
    w: TwoForm
    j: Subspace
    n: Subspace

    def __post_init__(self):
        if not is_lagrangian_ideal(self.g, self.w, self.j):
            raise NotLagrangianIdeal("ideal is not Lagrangian")
        for a in self.n.basis_vectors():
            for b in self.n.basis_vectors():
                if self.w(a, b) != 0:
                    raise ValueError("complement is not isotropic")
        if Subspace.span(self.g.dim,
                         list(self.j.basis_vectors()) + list(self.n.basis_vectors())).dim != self.g.dim:
            raise ValueError("not a complement")

    @staticmethod
    def standard(g: LieAlgebra, w: TwoForm, j: Subspace,
                 seed: Matrix | None = None) -> "Polarization":
        return Polarization(g, w, j, lagrangian_complement(g, w, j, seed))


def polarization_cocycle(p: Polarization) -> Cochain2:
    """The restricted cocycle of the polarization: bracket the N-lifts of
    quotient basis vectors, keep the j-component, read it through the
    pairing with h."""
    g, w, j = p.g, p.w, p.j
    h, d, proj, sect = induced_connection(g, w, j)
    k = h.dim
    jb = j.basis_vectors()
    # lift of ē_a into N: solve in the (N | j) basis
    basis_cols = [tuple(v) for v in p.n.basis_vectors()] + [tuple(v) for v in jb]
    binv = from_cols(basis_cols).inverse()
    lifts = []
    for a in range(k):
        target = sect.col(a)  # representative of ē_a
        coords = binv.mul_vec(target)
        lift = [Q(0)] * g.dim
        for t in range(k):  # N components only
            c = coords[t]
            if c != 0:
                nb = p.n.basis_vectors()[t]
                lift = [x + c * y for x, y in zip(lift, nb)]
        lifts.append(tuple(lift))
    # j-component of [lift_a, lift_b], then pair with the quotient
    full_inv = from_cols([tuple(v) for v in p.n.basis_vectors()] + [tuple(v) for v in jb]).inverse()
    pair = _pairing_matrix(g, w, j, sect)
    a_t = [[[Q(0)] * k for _ in range(k)] for _ in range(k)]
    for x in range(k):
        for y in range(x + 1, k):
            br = g.bracket(lifts[x], lifts[y])
            coords = full_inv.mul_vec(br)
            jcomp = coords[k:]
            # alpha(x, y)(ē_m) = w(section(ē_m), j-component)
            for m in range(k):
                v = sum((pair[m, u] * jcomp[u] for u in range(k)), Q(0))
                a_t[x][y][m] = v
                a_t[y][x][m] = -v
    alpha = Cochain2(k, a_t)
    rho = dual_representation(h, d)
    assert is_cocycle2(h, rho, alpha), "polarization cocycle failed the cocycle test"
    assert check_bianchi(alpha), "polarization cocycle failed the cyclic-sum test"
    return alpha


def reconstruct(p: Polarization) -> tuple[LieAlgebra, TwoForm, Matrix]:
    """Rebuild the extension of the quotient and the canonical map onto it.

    Returns (extension algebra, its pairing form, phi) where
    phi(n + u) = (class of n, pairing of u); phi is a symplectomorphism
    from (g, w) onto the rebuilt extension.
    """
    g, w, j = p.g, p.w, p.j
    h, d, proj, sect = induced_connection(g, w, j)
    alpha = polarization_cocycle(p)
    ext, w0 = build_extension(ExtensionTriple(h, d, alpha))
    k = h.dim
    jb = j.basis_vectors()
    pair = _pairing_matrix(g, w, j, sect)
    binv = from_cols([tuple(v) for v in p.n.basis_vectors()] + [tuple(v) for v in jb]).inverse()
    cols = []
    for i in range(g.dim):
        e = g.basis_vector(i + 1)
        coords = binv.mul_vec(e)
        ncomp, jcomp = coords[:k], coords[k:]
        top = [Q(0)] * k
        for t in range(k):
            if ncomp[t] != 0:
                nb = proj.mul_vec(p.n.basis_vectors()[t])
                top = [x + ncomp[t] * y for x, y in zip(top, nb)]
        bottom = [sum((pair[m, u] * jcomp[u] for u in range(k)), Q(0)) for m in range(k)]
        cols.append(tuple(top) + tuple(bottom))
    phi = from_cols(cols)
    return ext, w0, phi
