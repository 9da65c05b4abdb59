"""Exact arithmetic in a real root extension Q[t]/(t^k - r).

A few published isomorphism maps carry surds (sqrt(2), cbrt(12)) that no
admissible parameter choice removes.  Treating the surd as a formal root t
with t^k = r gives an exact field (r chosen so t^k - r is irreducible over
Q, which holds for every case used here); that is all the morphism checks
need.  Elements are polynomials c_0 + c_1 t + ... + c_{k-1} t^{k-1} with
rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction as Q

__all__ = ["RootExt", "sqrt_ext", "root_ext"]


def _poly_divmod(a: list[Q], b: list[Q]) -> tuple[list[Q], list[Q]]:
    a = list(a)
    q = [Q(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(x != 0 for x in a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = f
        for i, x in enumerate(b):
            a[i + d] -= f * x
        a.pop()
    return q, a


class RootExt:
    """Polynomial in t modulo t^k = r, with exact rational coefficients."""

    __slots__ = ("k", "r", "c")

    def __init__(self, k: int, r, coeffs):
        self.k = k
        self.r = Q(r)
        c = [Q(x) for x in coeffs]
        while len(c) > k:
            # reduce t^(k+m) = r * t^m
            top = c.pop()
            c[len(c) - k] += self.r * top
        c += [Q(0)] * (k - len(c))
        self.c = tuple(c)

    def _coerce(self, x):
        if isinstance(x, RootExt):
            if (x.k, x.r) != (self.k, self.r):
                raise ValueError("mixing different root extensions")
            return x
        if isinstance(x, (int, Q)):
            return RootExt(self.k, self.r, [Q(x)])
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Q)):
            return all(x == 0 for x in self.c[1:]) and self.c[0] == other
        if isinstance(other, RootExt):
            return (self.k, self.r, self.c) == (other.k, other.r, other.c)
        return NotImplemented

    def __hash__(self):
        if all(x == 0 for x in self.c[1:]):
            return hash(self.c[0])
        return hash((self.k, self.r, self.c))

    def __bool__(self):
        return any(x != 0 for x in self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RootExt(self.k, self.r, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return RootExt(self.k, self.r, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RootExt(self.k, self.r, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Q(0)] * (2 * self.k - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                if b != 0:
                    prod[i + j] += a * b
        return RootExt(self.k, self.r, prod)

    __rmul__ = __mul__

    def inverse(self) -> "RootExt":
        """Inverse via the extended Euclidean algorithm in Q[t] mod t^k - r."""
        if not self:
            raise ZeroDivisionError("division by zero")
        modulus = [-self.r] + [Q(0)] * (self.k - 1) + [Q(1)]
        # Bezout: find u with u * self = 1 (mod modulus)
        r0, r1 = modulus, list(self.c)
        s0, s1 = [Q(0)], [Q(1)]
        while any(x != 0 for x in r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            # s_next = s0 - q * s1
            qs1 = [Q(0)] * (len(q) + len(s1) - 1)
            for i, a in enumerate(q):
                for j, b in enumerate(s1):
                    qs1[i + j] += a * b
            ln = max(len(s0), len(qs1))
            s_next = [(s0[i] if i < len(s0) else Q(0)) - (qs1[i] if i < len(qs1) else Q(0))
                      for i in range(ln)]
            s0, s1 = s1, s_next
        while r0 and r0[-1] == 0:
            r0.pop()
        if len(r0) != 1:
            raise ValueError("element is a zero divisor; t^k - r not irreducible?")
        lead = r0[0]
        return RootExt(self.k, self.r, [x / lead for x in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def rational_part(self) -> Q:
        """The element as a Fraction; raises if any surd coefficient is nonzero."""
        if any(x != 0 for x in self.c[1:]):
            raise ValueError(f"{self} is irrational")
        return self.c[0]

    def __repr__(self):
        if all(x == 0 for x in self.c[1:]):
            return str(self.c[0])
        terms = [str(self.c[0])] if self.c[0] != 0 else []
        terms += [f"{x}*{self.k}^rt({self.r})^{i}" for i, x in enumerate(self.c) if i and x != 0]
        return "(" + "+".join(terms) + ")"


def sqrt_ext(d) -> RootExt:
    """sqrt(d) as a formal root (d must not be a rational square)."""
    return RootExt(2, d, [0, 1])


def root_ext(k: int, r) -> RootExt:
    """The k-th root of r as a formal root."""
    return RootExt(k, r, [0, 1])
