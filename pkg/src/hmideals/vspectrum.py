"""The microlocal filtration spectrum of a singularity germ.

A VSpectrum records, up to an explicit cutoff B, the decreasing family of
monomial ideals indexed by beta > 0: the value is the unit ideal on
(0, beta_1] and drops to ideal_after_i just past each jump beta_i
(left-open right-closed intervals, larger ideal at the jump itself).
Every two-index ideal I_{k,alpha} with alpha >= -1 is read off at
beta = k - alpha; alpha < -1 is reached through the periodicity twist by
a power of the defining equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CutoffExceededError
from .monomial import INFINITE, MonIdeal, unit_ideal
from .rat import fmt_rat, parse_rat


@dataclass(frozen=True)
class VSpectrum:
    """Jump list of the filtration of one germ, valid on (0, cutoff]."""

    n: int
    cutoff: Fraction
    jumps: tuple = field(default=())  # ordered (beta, ideal_after) pairs

    def __post_init__(self):
        if self.cutoff <= 0:
            raise ValueError("cutoff must be positive")
        prev_beta = Fraction(0)
        prev_ideal = unit_ideal(self.n)
        for beta, ideal in self.jumps:
            if not prev_beta < beta <= self.cutoff:
                raise ValueError(f"jump {beta} out of order or beyond cutoff {self.cutoff}")
            if not (ideal.subset(prev_ideal) and ideal != prev_ideal):
                raise ValueError(f"filtration does not strictly descend at beta={beta}")
            prev_beta, prev_ideal = beta, ideal

    # -- queries -------------------------------------------------------

    def value_at(self, beta: Fraction) -> MonIdeal:
        """Step-function value on the interval containing beta (right-closed)."""
        if not 0 < beta <= self.cutoff:
            raise CutoffExceededError(f"beta={beta} outside (0, {self.cutoff}]")
        current = unit_ideal(self.n)
        for b, ideal in self.jumps:
            if beta > b:
                current = ideal
            else:
                break
        return current

    def value_after(self, beta: Fraction) -> MonIdeal:
        """Value just above beta: the next interval's ideal."""
        if not 0 < beta < self.cutoff:
            raise CutoffExceededError(f"beta={beta} outside (0, {self.cutoff})")
        current = unit_ideal(self.n)
        for b, ideal in self.jumps:
            if beta >= b:
                current = ideal
            else:
                break
        return current

    def hmi(self, k: int, alpha: Fraction) -> MonIdeal:
        """The ideal at level k and index alpha >= -1, via beta = k - alpha."""
        alpha = Fraction(alpha)
        if alpha < -1:
            raise ValueError("alpha < -1 requires the twisted form (hmi_twisted)")
        beta = k - alpha
        if beta <= 0:
            return unit_ideal(self.n)
        if beta > self.cutoff:
            raise CutoffExceededError(f"k - alpha = {beta} exceeds cutoff {self.cutoff}")
        return self.value_at(beta)

    def hmi_lt(self, k: int, alpha: Fraction) -> MonIdeal:
        """The strict-index ideal, the value just above k - alpha."""
        alpha = Fraction(alpha)
        if alpha < -1:
            raise ValueError("alpha < -1 requires the twisted form")
        beta = k - alpha
        if beta <= 0 or (self.jumps and beta < self.jumps[0][0]):
            return unit_ideal(self.n)
        if beta >= self.cutoff:
            raise CutoffExceededError(f"k - alpha = {beta} is not below cutoff {self.cutoff}")
        return self.value_after(beta)

    def hmi_twisted(self, k: int, alpha: Fraction, f_exps=None) -> "HMIdeal":
        """Reduce alpha < -1 by periodicity: a twist by f^t with alpha + t in [-1, 0).

        If the defining equation is the monomial z^f_exps, the twist is folded
        into the ideal and f_power comes back 0.
        """
        alpha = Fraction(alpha)
        t = max(0, math.ceil(-alpha) - 1)
        ideal = self.hmi(k, alpha + t)
        if f_exps is not None and t > 0:
            folded = ideal.scale(tuple(t * e for e in f_exps))
            return HMIdeal(0, folded)
        return HMIdeal(t, ideal)

    # -- invariants ----------------------------------------------------

    def jumping_numbers(self):
        return [b for b, _ in self.jumps]

    def minimal_exponent(self) -> Fraction:
        """The first jump."""
        if not self.jumps:
            raise ValueError(f"no jump up to cutoff {self.cutoff}")
        return self.jumps[0][0]

    def graded_dim(self, k: int, alpha: Fraction):
        """Monomial count of hmi(k, alpha) modulo hmi_lt(k, alpha)."""
        outer = self.hmi(k, alpha)
        inner = self.hmi_lt(k, alpha)
        outer_col = outer.colength()
        inner_col = inner.colength()
        if inner_col is not INFINITE and outer_col is not INFINITE:
            return inner_col - outer_col
        return outer.count_outside(inner)

    def bs_root_classes(self):
        """Jumping numbers negated and reduced mod Z into [-1, 0), plus -1.

        The class of -1 is always present: the level-0 jump at index -1
        exists for any nonzero divisor and lies outside the beta-range this
        spectrum stores.
        """
        classes = {Fraction(-1)}
        for beta in self.jumping_numbers():
            frac = beta - math.floor(beta)
            classes.add(-frac if frac else Fraction(-1))
        return classes

    # -- presentation --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cutoff": fmt_rat(self.cutoff),
            "jumps": [
                {"beta": fmt_rat(b), "ideal": ideal.to_json()} for b, ideal in self.jumps
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VSpectrum":
        return cls(
            int(data["n"]),
            parse_rat(data["cutoff"]),
            tuple(
                (parse_rat(j["beta"]), MonIdeal.from_json(j["ideal"]))
                for j in data["jumps"]
            ),
        )


@dataclass(frozen=True)
class HMIdeal:
    """A monomial ideal times a power of the defining equation f."""

    f_power: int
    ideal: MonIdeal

    def to_json(self) -> dict:
        return {"f_power": self.f_power, "ideal": self.ideal.to_json()}

    def __str__(self):
        if self.f_power == 0:
            return str(self.ideal)
        return f"f^{self.f_power} * {self.ideal}"


def spectrum_from_step(n: int, cutoff: Fraction, points, values) -> VSpectrum:
    """Assemble a spectrum from a sampled step function.

    points are strictly increasing candidate jump locations and values[i] is
    the filtration value on the interval ending at points[i] (values[0] on
    (0, points[0]], which must be the unit ideal).  A candidate is a jump iff
    the next interval's value differs; callers certify the last in-range
    candidate by supplying one extra point beyond the cutoff.  Non-jumps are
    dropped.
    """
    if values and values[0] != unit_ideal(n):
        raise ValueError("filtration must start at the unit ideal")
    jumps = []
    for i in range(len(points) - 1):
        if points[i] > cutoff:
            break
        if values[i + 1] != values[i]:
            jumps.append((points[i], values[i + 1]))
    return VSpectrum(n, cutoff, tuple(jumps))
