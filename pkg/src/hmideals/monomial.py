"""Monomial ideals as minimal generator antichains (staircases).

An exponent vector is a tuple of naturals; componentwise order is
divisibility of monomials.  A MonIdeal stores the minimal antichain of
generators in lexicographic order, so equal ideals compare equal.  The
unit ideal is generated by the zero vector; the zero ideal has no
generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DimensionError

ExpVec = tuple


class _Infinite:
    """Explicit infinite-colength result (not an error)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def divides(a: ExpVec, b: ExpVec) -> bool:
    """True iff the monomial z^a divides z^b."""
    return all(x <= y for x, y in zip(a, b))


def _check_len(vecs, n):
    for v in vecs:
        if len(v) != n:
            raise DimensionError(f"exponent vector {v} has length {len(v)}, expected {n}")


@dataclass(frozen=True)
class MonIdeal:
    """A monomial ideal in n variables, stored in canonical minimal form."""

    n: int
    gens: tuple = field(default=())

    def __post_init__(self):
        _check_len(self.gens, self.n)
        object.__setattr__(self, "gens", _minimalize(self.gens))

    # -- predicates ----------------------------------------------------

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def is_zero(self) -> bool:
        return self.gens == ()

    def contains(self, nu: ExpVec) -> bool:
        """True iff z^nu lies in the ideal (some generator divides nu)."""
        if len(nu) != self.n:
            raise DimensionError(f"vector length {len(nu)} != {self.n}")
        return any(divides(g, nu) for g in self.gens)

    def subset(self, other: "MonIdeal") -> bool:
        """True iff self is contained in other."""
        if self.n != other.n:
            raise DimensionError(f"variable counts differ: {self.n} != {other.n}")
        return all(other.contains(g) for g in self.gens)

    # -- arithmetic ----------------------------------------------------

    def _same_n(self, other):
        if self.n != other.n:
            raise DimensionError(f"variable counts differ: {self.n} != {other.n}")

    def __add__(self, other: "MonIdeal") -> "MonIdeal":
        self._same_n(other)
        return MonIdeal(self.n, self.gens + other.gens)

    def __mul__(self, other: "MonIdeal") -> "MonIdeal":
        self._same_n(other)
        prods = tuple(
            tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens
        )
        return MonIdeal(self.n, prods)

    def __pow__(self, e: int) -> "MonIdeal":
        if e < 0:
            raise ValueError("negative ideal power")
        result = unit_ideal(self.n)
        for _ in range(e):
            result = result * self
        return result

    def scale(self, mono: ExpVec) -> "MonIdeal":
        """Multiply by the principal ideal (z^mono)."""
        _check_len([mono], self.n)
        return MonIdeal(self.n, tuple(tuple(a + b for a, b in zip(g, mono)) for g in self.gens))

    # -- staircase invariants ------------------------------------------

    def divisorial_part(self) -> ExpVec:
        """Componentwise min of the generators: the principal (gcd) factor."""
        if self.is_zero():
            raise ValueError("zero ideal has no divisorial part")
        return tuple(min(g[i] for g in self.gens) for i in range(self.n))

    def strip_divisorial(self) -> "MonIdeal":
        """Divide out the gcd monomial, leaving cosupport of codim >= 2."""
        d = self.divisorial_part()
        return MonIdeal(self.n, tuple(tuple(a - b for a, b in zip(g, d)) for g in self.gens))

    def colength(self):
        """Number of monomials outside the ideal, or INFINITE.

        Finite iff the ideal is unit or every variable has a pure-power
        generator.
        """
        if self.is_unit():
            return 0
        box = []
        for i in range(self.n):
            pure = [g[i] for g in self.gens if all(g[j] == 0 for j in range(self.n) if j != i)]
            if not pure:
                return INFINITE
            box.append(min(pure))
        count = 0
        for nu in itertools.product(*(range(b) for b in box)):
            if not self.contains(nu):
                count += 1
        return count

    def count_outside(self, inner: "MonIdeal"):
        """Count monomials in self but not in inner (inner must be a subideal).

        Returns INFINITE when the staircase difference region is unbounded,
        decided by a bounding-box analysis.
        """
        self._same_n(inner)
        if not inner.subset(self):
            raise ValueError("count_outside expects a subideal")
        if inner.is_zero():
            return INFINITE if not self.is_zero() else 0
        # Any difference monomial nu with nu_j >= max generator j-degree of
        # inner spawns an unbounded ray nu + t*e_j inside the difference.
        box = tuple(max(g[j] for g in inner.gens) for j in range(self.n))
        count = 0
        for nu in itertools.product(*(range(b + 1) for b in box)):
            if self.contains(nu) and not inner.contains(nu):
                if any(nu[j] == box[j] for j in range(self.n)):
                    return INFINITE
                count += 1
        return count

    # -- presentation --------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonIdeal":
        return cls(int(data["n"]), tuple(tuple(int(x) for x in g) for g in data["gens"]))

    def __str__(self):
        if self.is_zero():
            return "(0)"
        # display x-first (descending lex); storage stays ascending
        return "(" + ", ".join(format_monomial(g) for g in reversed(self.gens)) + ")"


def _minimalize(gens):
    """Minimal antichain generating the same ideal, sorted lexicographically."""
    gens = sorted(set(tuple(int(x) for x in g) for g in gens))
    keep = []
    for g in gens:
        if not any(divides(h, g) for h in keep if h != g):
            keep.append(g)
    # A later generator never divides an earlier one in lex order unless
    # equal, so one pass suffices.
    return tuple(keep)


def mi_normalize(gens, n: int) -> MonIdeal:
    """Canonical minimal form of the ideal generated by gens."""
    return MonIdeal(n, tuple(gens))


def unit_ideal(n: int) -> MonIdeal:
    return MonIdeal(n, ((0,) * n,))


def zero_ideal(n: int) -> MonIdeal:
    return MonIdeal(n, ())


def principal_ideal(mono: ExpVec) -> MonIdeal:
    return MonIdeal(len(mono), (tuple(mono),))


def max_ideal_power(n: int, q: int) -> MonIdeal:
    """The q-th power of the maximal ideal: all degree-q exponent vectors."""
    if q < 0:
        raise ValueError("negative power of the maximal ideal")
    if q == 0:
        return unit_ideal(n)
    return MonIdeal(n, tuple(compositions(q, n)))


def compositions(total: int, parts: int):
    """All tuples of naturals of the given length summing to total."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def var_names(n: int):
    """x, y, z for n <= 3; z1..zn otherwise."""
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"z{i + 1}" for i in range(n)]


def format_monomial(exp: ExpVec, names=None) -> str:
    names = names or var_names(len(exp))
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
