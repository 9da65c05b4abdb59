"""Tiny expression language for catalog data.

Structure constants, connections and 2-forms are transcribed as strings that
stay close to their published shape, e.g.::

    "[1,4]=-e4-1/l*e6; [2,5]=-e5"
    "t1*e12 + t2*e13 + e14 + e25 + e36"
    "w34*(l*e14 + l*e25 + e34) + l*w36*de6"

Grammar: usual +, -, *, / and parentheses over integers, parameter names and
basis symbols.  Basis symbols are context-dependent atoms supplied by the
caller: ``eK`` is a basis vector in vector context, ``eIJ`` an elementary
wedge in 2-form context, and ``deK`` the Chevalley-Eilenberg differential of
the K-th dual basis vector.  Products of two basis atoms are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction as Q
from typing import Callable, Mapping

__all__ = [
    "parse_scalar", "parse_vector", "parse_items", "ParseError",
]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[str]:
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            break
        i = m.end()
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok and not tok.isspace():
            out.append(tok)
    return out


class _Lin:
    """Either a pure scalar or scalar * (vector over some basis index set)."""

    __slots__ = ("scalar", "vec")

    def __init__(self, scalar=None, vec=None):
        self.scalar = scalar
        self.vec = vec  # dict index -> scalar


def _vec_add(a: dict, b: dict, sign=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Q(0)) + sign * v
    return out


class _Parser:
    def __init__(self, tokens: list[str], env: Mapping[str, Q],
                 atom: Callable[[str], dict | None]):
        self.toks = tokens
        self.pos = 0
        self.env = env
        self.atom_hook = atom

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, t):
        got = self.take()
        if got != t:
            raise ParseError(f"expected {t!r}, got {got!r}")

    def parse(self) -> _Lin:
        v = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return v

    def expr(self) -> _Lin:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        v = self.term()
        v = self._scale(v, Q(sign))
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            if op == "-":
                rhs = self._scale(rhs, Q(-1))
            v = self._add(v, rhs)
        return v

    def term(self) -> _Lin:
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                v = self._mul(v, rhs)
            else:
                if rhs.vec is not None:
                    raise ParseError("division by a basis element")
                v = self._scale(v, 1 / rhs.scalar)
        return v

    def power(self) -> _Lin:
        v = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if exp is None or not exp.isdigit():
                raise ParseError("exponent must be a positive integer")
            if v.vec is not None:
                raise ParseError("cannot raise a basis element to a power")
            return _Lin(scalar=v.scalar ** int(exp))
        return v

    def factor(self) -> _Lin:
        t = self.peek()
        if t == "-":
            self.take()
            return self._scale(self.factor(), Q(-1))
        if t == "+":
            self.take()
            return self.factor()
        return self.power()

    def atom(self) -> _Lin:
        t = self.take()
        if t is None:
            raise ParseError("unexpected end of expression")
        if t == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t.isdigit():
            return _Lin(scalar=Q(t))
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", t):
            vec = self.atom_hook(t)
            if vec is not None:
                return _Lin(vec=vec)
            if t in self.env:
                return _Lin(scalar=Q(self.env[t]))
            raise ParseError(f"unknown name {t!r}")
        raise ParseError(f"unexpected token {t!r}")

    @staticmethod
    def _scale(v: _Lin, c) -> _Lin:
        if v.vec is not None:
            return _Lin(vec={k: c * x for k, x in v.vec.items()})
        return _Lin(scalar=c * v.scalar)

    @staticmethod
    def _add(a: _Lin, b: _Lin) -> _Lin:
        if a.vec is not None and b.vec is not None:
            return _Lin(vec=_vec_add(a.vec, b.vec))
        if a.vec is None and b.vec is None:
            return _Lin(scalar=a.scalar + b.scalar)
        # scalar zero absorbed into a vector (e.g. "0 + e1" never occurs,
        # but keep the error informative)
        raise ParseError("cannot add a scalar and a basis combination")

    @staticmethod
    def _mul(a: _Lin, b: _Lin) -> _Lin:
        if a.vec is not None and b.vec is not None:
            raise ParseError("product of two basis elements")
        if a.vec is not None:
            return _Parser._scale(a, b.scalar)
        return _Parser._scale(b, a.scalar)


def _run(text: str, env: Mapping[str, Q], atom) -> _Lin:
    return _Parser(_tokenize(text), env, atom).parse()


def parse_scalar(text: str, env: Mapping[str, Q] | None = None) -> Q:
    v = _run(text, env or {}, lambda t: None)
    if v.vec is not None:
        raise ParseError(f"expected a scalar, got a combination: {text!r}")
    return v.scalar


def parse_vector(text: str, dim: int, env: Mapping[str, Q] | None = None) -> tuple[Q, ...]:
    """Linear combination of e1..e<dim> as a coefficient tuple (0-indexed)."""

    def atom(t):
        m = re.fullmatch(r"e(\d+)", t)
        if m:
            k = int(m.group(1))
            if not 1 <= k <= dim:
                raise ParseError(f"basis index out of range: {t}")
            return {k - 1: Q(1)}
        return None

    v = _run(text, env or {}, atom)
    out = [Q(0)] * dim
    if v.vec is None:
        if v.scalar != 0:
            raise ParseError(f"expected a vector, got scalar {v.scalar}")
        return tuple(out)
    for k, c in v.vec.items():
        out[k] = c
    return tuple(out)


_ITEM = re.compile(r"\[\s*e?(\d+)\s*,\s*e?(\d+)\s*\]\s*=\s*([^;,\[]+)")


def parse_items(spec: str) -> list[tuple[int, int, str]]:
    """Split ``"[1,4]=-e6, [2,5]=-e6"`` into (i, j, rhs) triples, 1-based."""
    items = []
    for m in _ITEM.finditer(spec):
        items.append((int(m.group(1)), int(m.group(2)), m.group(3).strip()))
    leftover = _ITEM.sub("", spec).strip(" ,;\n\t")
    if leftover:
        raise ParseError(f"unparsed bracket spec fragment: {leftover!r}")
    return items
