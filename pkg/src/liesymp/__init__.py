"""Exact verification kit for symplectic structures on low-dimensional
Lie algebras: rational linear algebra, flat torsion-free connections,
restricted cohomology, cotangent-style extensions, symplectic reduction,
and a machine-readable catalog of classified families with a batch
verification CLI."""

from .lie import LieAlgebra, Subspace, abelian, from_brackets
from .linalg import Matrix, Q
from .forms import OneForm, TwoForm, two_form
from .connections import Connection, connection

__all__ = [
    "LieAlgebra", "Subspace", "abelian", "from_brackets",
    "Matrix", "Q", "OneForm", "TwoForm", "two_form",
    "Connection", "connection",
]
