"""Componentwise degree arithmetic on N^k.

Degrees are immutable tuples of non-negative ints compared coordinatewise,
so <= is a partial order: two degrees can be incomparable. Sorting code
must therefore key on .components (lexicographic) or .total, never rely
on Degree comparison being total.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DegreeError, UnsupportedDegree


@dataclass(frozen=True)
class Degree:
    components: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.components, tuple):
            object.__setattr__(self, "components", tuple(self.components))
        for c in self.components:
            if not isinstance(c, int) or c < 0:
                raise DegreeError(f"degree coordinates must be ints >= 0, got {self.components}")

    @staticmethod
    def zero(rank: int) -> Degree:
        return Degree((0,) * rank)

    @staticmethod
    def unit(rank: int, color: int) -> Degree:
        """Standard basis vector for one color (colors are 1-based)."""
        if not 1 <= color <= rank:
            raise UnsupportedDegree(f"color {color} out of range for rank {rank}")
        return Degree(tuple(1 if i == color - 1 else 0 for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def total(self) -> int:
        return sum(self.components)

    def __getitem__(self, color: int) -> int:
        """Coordinate for a 1-based color."""
        if not 1 <= color <= self.rank:
            raise UnsupportedDegree(f"color {color} out of range for rank {self.rank}")
        return self.components[color - 1]

    def __add__(self, other: Degree) -> Degree:
        self._check_rank(other)
        return Degree(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: Degree) -> Degree:
        self._check_rank(other)
        out = tuple(a - b for a, b in zip(self.components, other.components))
        if any(c < 0 for c in out):
            raise DegreeError(f"{self.components} - {other.components} is negative")
        return Degree(out)

    def __le__(self, other: Degree) -> bool:
        self._check_rank(other)
        return all(a <= b for a, b in zip(self.components, other.components))

    def __ge__(self, other: Degree) -> bool:
        self._check_rank(other)
        return all(a >= b for a, b in zip(self.components, other.components))

    # Deliberately no __lt__/__gt__: the order is partial, and silent
    # lexicographic fallbacks have caused real bugs in code like this.

    def join(self, other: Degree) -> Degree:
        """Componentwise maximum (least upper bound)."""
        self._check_rank(other)
        return Degree(tuple(max(a, b) for a, b in zip(self.components, other.components)))

    def meet(self, other: Degree) -> Degree:
        """Componentwise minimum (greatest lower bound)."""
        self._check_rank(other)
        return Degree(tuple(min(a, b) for a, b in zip(self.components, other.components)))

    def _check_rank(self, other: Degree):
        if self.rank != other.rank:
            raise UnsupportedDegree(f"rank mismatch: {self.rank} vs {other.rank}")

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.components) + ")"


def iter_degrees_upto(bound: Degree):
    """All degrees m with 0 <= m <= bound, ascending in total then lex."""
    ranges = [range(c + 1) for c in bound.components]
    out = [Degree(t) for t in itertools.product(*ranges)]
    out.sort(key=lambda m: (m.total, m.components))
    return out


def parse_degree(text: str) -> Degree:
    """Inverse of Degree.__str__; also accepts the bare comma form.
    '(0,1)' and '0,1' parse alike, '()' is the rank-0 degree."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",") if p.strip()]
    try:
        return Degree(tuple(int(p) for p in parts))
    except ValueError:
        raise DegreeError(f"cannot parse degree from {text!r}") from None


# Degree extended with a point at infinity, used to describe how far a
# boundary path extends in each direction. OMEGA absorbs addition and
# dominates every finite value.

class _Omega:
    __slots__ = ()

    def __repr__(self):
        return "OMEGA"


OMEGA = _Omega()


@dataclass(frozen=True)
class ExtDegree:
    components: tuple  # ints or OMEGA, per coordinate

    @staticmethod
    def of(deg: Degree) -> ExtDegree:
        return ExtDegree(deg.components)

    @staticmethod
    def omega(rank: int) -> ExtDegree:
        return ExtDegree((OMEGA,) * rank)

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_finite(self) -> bool:
        return all(c is not OMEGA for c in self.components)

    def finite_part(self) -> Degree:
        if not self.is_finite():
            raise DegreeError("extended degree has an infinite coordinate")
        return Degree(self.components)

    def covers(self, deg: Degree) -> bool:
        """True when deg <= self coordinatewise (OMEGA covers everything)."""
        if deg.rank != self.rank:
            raise UnsupportedDegree(f"rank mismatch: {deg.rank} vs {self.rank}")
        return all(c is OMEGA or d <= c for c, d in zip(self.components, deg.components))

    def __str__(self):
        return "(" + ",".join("w" if c is OMEGA else str(c) for c in self.components) + ")"
