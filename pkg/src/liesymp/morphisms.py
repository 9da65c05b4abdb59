"""Checks for linear maps between algebras: Lie isomorphism, flat-algebra
isomorphism, symplectomorphism, and structure-constant push-forward.

All checks are exact.  Map entries may live in a real root extension of the
rationals (see :mod:`liesymp.qext`) when a published map carries surds; any
derived structure constants must still come out rational.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .connections import Connection, pullback_connection
from .forms import TwoForm
from .lie import LieAlgebra
from .linalg import Matrix

__all__ = [
    "is_lie_isomorphism", "is_symplectomorphism", "is_flat_isomorphism",
    "push_forward_algebra", "is_invertible",
]


def is_invertible(phi: Matrix) -> bool:
    if phi.rows != phi.cols:
        return False
    return phi.rank() == phi.rows


def is_lie_isomorphism(phi: Matrix, l1: LieAlgebra, l2: LieAlgebra):
    """(verdict, witness): witness is the first failing basis pair (1-based)
    with the defect vector, or None."""
    n = l1.dim
    if l2.dim != n or phi.rows != n or phi.cols != n:
        return False, ("shape", None)
    if not is_invertible(phi):
        return False, ("singular", None)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = phi.mul_vec(l1.c[i][j])
            rhs = l2.bracket(phi.col(i), phi.col(j))
            defect = tuple(a - b for a, b in zip(lhs, rhs))
            if any(x != 0 for x in defect):
                return False, ((i + 1, j + 1), defect)
    return True, None


def is_symplectomorphism(phi: Matrix, src: tuple[LieAlgebra, TwoForm],
                         dst: tuple[LieAlgebra, TwoForm]):
    """phi a Lie isomorphism with src form equal to the pullback of dst form."""
    ok, witness = is_lie_isomorphism(phi, src[0], dst[0])
    if not ok:
        return False, witness
    pulled = phi.transpose() @ dst[1].w @ phi
    if pulled != src[1].w:
        return False, ("form", None)
    return True, None


def is_flat_isomorphism(psi: Matrix, src: tuple[LieAlgebra, Connection],
                        dst: tuple[LieAlgebra, Connection]):
    ok, witness = is_lie_isomorphism(psi, src[0], dst[0])
    if not ok:
        return False, witness
    if pullback_connection(psi, src[1]) != dst[1]:
        return False, ("connection", None)
    return True, None


def push_forward_algebra(phi: Matrix, src: LieAlgebra) -> LieAlgebra:
    """Structure constants seen through phi: [u, v] := phi[phi^-1 u, phi^-1 v].

    Entries of phi may be root-extension elements; the resulting constants
    must be rational (raises otherwise).
    """
    n = src.dim
    inv = phi.inverse()
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = phi.mul_vec(src.bracket(inv.col(i), inv.col(j)))
            c[i][j] = tuple(_to_rational(x) for x in v)
    return LieAlgebra(n, c)


def _to_rational(x) -> Q:
    if isinstance(x, Q):
        return x
    if isinstance(x, int):
        return Q(x)
    if hasattr(x, "rational_part"):
        return x.rational_part()
    raise TypeError(f"cannot reduce {x!r} to a rational")
