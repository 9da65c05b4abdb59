"""Shared machinery for catalog entries: deterministic parameter sampling
with admissibility guards, and small spec dataclasses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from itertools import product
from typing import Callable, Mapping, Sequence

__all__ = ["Params", "InadmissibleParams", "UnknownId", "DEFAULT_CANDIDATES", "Env"]

Env = dict[str, Q]


class InadmissibleParams(ValueError):
    pass


class UnknownId(KeyError):
    pass


DEFAULT_CANDIDATES: tuple[Q, ...] = tuple(Q(x) for x in (
    1, 2, -1, 3, -2, Q(1, 2), -Q(1, 2), 5, -3, Q(1, 3), 4, -4, Q(2, 3),
    Q(5, 2), 7, -5, Q(3, 2), -Q(1, 3), Q(1, 4), 6))


@dataclass(frozen=True)
class Params:
    """Free parameter names with a joint admissibility guard and optional
    derived parameters (exact relations such as al = 1/(2*g))."""

    free: tuple[str, ...] = ()
    guard: Callable[[Env], bool] = lambda env: True
    derive: Callable[[Env], Env] | None = None
    candidates: Mapping[str, Sequence[Q]] = field(default_factory=dict)

    def complete(self, env: Mapping[str, Q]) -> Env:
        """Fill derived values and validate; raises InadmissibleParams."""
        full: Env = {k: Q(v) for k, v in env.items()}
        missing = [n for n in self.free if n not in full]
        if missing:
            raise InadmissibleParams(f"missing parameter(s): {', '.join(missing)}")
        if self.derive is not None:
            full.update(self.derive(full))
        try:
            ok = self.guard(full)
        except ZeroDivisionError:
            ok = False
        if not ok:
            raise InadmissibleParams(f"guard rejected {dict(env)}")
        return full

    def sample(self, k: int) -> list[Env]:
        """First k admissible assignments from the deterministic grid."""
        if not self.free:
            try:
                return [self.complete({})][:k]
            except InadmissibleParams:
                return []
        pools = [tuple(self.candidates.get(n, DEFAULT_CANDIDATES)) for n in self.free]
        out: list[Env] = []
        for combo in product(*pools):
            try:
                out.append(self.complete(dict(zip(self.free, combo))))
            except InadmissibleParams:
                continue
            if len(out) == k:
                break
        return out
