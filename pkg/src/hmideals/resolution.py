"""Combinatorial calculator over log-resolution and multiplicity-stratum data.

ResolutionData carries, for each divisor component on the resolution, its
multiplicity e in the pulled-back divisor and its discrepancy k in the
relative canonical divisor, plus the intersection lattice (which subsets of
components meet).  Built-in families package the stratum/resolution data of
the theta-divisor, determinantal and secant examples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HypothesisError
from .graded import StrataData, min_exponent_upper
from .monomial import MonIdeal, unit_ideal
from .constructors import nc_ideal


@dataclass(frozen=True)
class Component:
    label: str
    e: int  # multiplicity in the pullback of the divisor
    k: int  # discrepancy
    exceptional: bool = True

    def __post_init__(self):
        if self.e < 1 or self.k < 0:
            raise ValueError(f"invalid component ({self.label}: e={self.e}, k={self.k})")


@dataclass(frozen=True)
class ResolutionData:
    components: tuple  # of Component
    lattice: frozenset = field(default=None)  # frozensets of component indices

    def __post_init__(self):
        if not self.components:
            raise ValueError("no components")
        object.__setattr__(self, "lattice", _downward_close(self.lattice, len(self.components)))

    @classmethod
    def build(cls, components, maximal_intersections=None):
        comps = tuple(Component(*c) if not isinstance(c, Component) else c for c in components)
        if maximal_intersections is None:
            maximal_intersections = [tuple(range(len(comps)))]
        lattice = frozenset(frozenset(j) for j in maximal_intersections)
        return cls(comps, lattice)

    @classmethod
    def from_json(cls, data: dict) -> "ResolutionData":
        comps = tuple(
            Component(c["label"], int(c["e"]), int(c["k"]), bool(c.get("exceptional", True)))
            for c in data["components"]
        )
        maxints = [tuple(int(i) for i in j) for j in data.get("maximal_intersections", [])]
        return cls.build(comps, maxints or None)

    @classmethod
    def load(cls, path) -> "ResolutionData":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _downward_close(maximal, n_comps):
    """Close the listed intersections under subsets and add all singletons."""
    sets = set(frozenset(s) for s in (maximal or []))
    sets |= {frozenset([i]) for i in range(n_comps)}
    closed = set()
    stack = list(sets)
    while stack:
        s = stack.pop()
        if s in closed:
            continue
        closed.add(s)
        for i in s:
            stack.append(s - {i})
    closed.discard(frozenset())
    return frozenset(closed)


def lct(res: ResolutionData) -> Fraction:
    """Log canonical threshold: min (k_i + 1)/e_i over all components."""
    return min(Fraction(c.k + 1, c.e) for c in res.components)


def min_exponent_bounds(res: ResolutionData, strata: StrataData) -> dict:
    """Sandwich for the minimal exponent: the discrepancy ratio over
    exceptional components from below, codim/m over strata from above."""
    exceptional = [c for c in res.components if c.exceptional]
    if not exceptional:
        raise ValueError("no exceptional components")
    return {
        "lower": min(Fraction(c.k + 1, c.e) for c in exceptional),
        "upper": min_exponent_upper(strata),
    }


def min_exponent_stratified(strata: StrataData) -> Fraction:
    """Exact minimal exponent min codim/m, valid when a log resolution exists
    that only blows up smooth multiplicity-stratum centers."""
    return min_exponent_upper(strata)


def integral_components(res: ResolutionData, alpha) -> set:
    """Indices i with e_i * alpha integral."""
    alpha = Fraction(alpha)
    return {i for i, c in enumerate(res.components) if (c.e * alpha).denominator == 1}


def max_weight_level(res: ResolutionData, alpha) -> int:
    """Largest ell such that some (ell+1)-fold intersection of integral-index
    components is nonempty; -1 when there is none."""
    idx = integral_components(res, alpha)
    sizes = [len(j) for j in res.lattice if j <= idx]
    return max(sizes, default=0) - 1


def minimal_lc_center(res: ResolutionData, alpha=None) -> set:
    """Deepest intersections of components computing the log canonical
    threshold; their images are the minimal log canonical centers.

    Requires that every component with e_i * lct integral computes the
    threshold; otherwise the combinatorics alone does not determine the
    center and an error names the offending component.
    """
    threshold = lct(res)
    if alpha is None:
        alpha = -threshold
    alpha = Fraction(alpha)
    idx = integral_components(res, alpha)
    for i in sorted(idx):
        c = res.components[i]
        if Fraction(c.k + 1, c.e) != threshold:
            raise HypothesisError(
                f"component {c.label!r} has integral index but ratio "
                f"{Fraction(c.k + 1, c.e)} != lct {threshold}"
            )
    candidates = [j for j in res.lattice if j <= idx]
    if not candidates:
        return set()
    depth = max(len(j) for j in candidates)
    return {frozenset(j) for j in candidates if len(j) == depth}


def weighted_nc_local(m_vec, alpha, ell: int) -> MonIdeal:
    """Weight-ell piece of the level-0 ideal in the local monomial model.

    Multiplies the level-0 normal-crossing ideal by the ideal of the
    (ell+2)-fold intersections of the components with integral index:
    squarefree monomials of degree s - ell - 1 in those variables (unit when
    the intersections are empty, the full product when ell = -1).
    """
    m_vec = tuple(int(m) for m in m_vec)
    alpha = Fraction(alpha)
    if not -1 <= alpha < 0:
        raise ValueError("alpha must lie in [-1, 0)")
    if ell < -1:
        raise ValueError("ell must be >= -1")
    n = len(m_vec)
    base = nc_ideal(m_vec, 0, alpha).ideal
    integral = [i for i in range(n) if m_vec[i] > 0 and (alpha * m_vec[i]).denominator == 1]
    s = len(integral)
    fold = ell + 2
    if fold > s:
        factor = unit_ideal(n)
    else:
        deg = s - fold + 1
        gens = []
        for subset in _subsets(integral, deg):
            g = [0] * n
            for i in subset:
                g[i] = 1
            gens.append(tuple(g))
        factor = MonIdeal(n, tuple(gens))
    return base * factor


def _subsets(items, size):
    import itertools

    return itertools.combinations(items, size)


# -- built-in families ------------------------------------------------------


def _chain_resolution(pairs):
    """Proper transform plus one exceptional component per stratum, all
    mutually intersecting (iterated blow-up chain)."""
    comps = [Component("proper-transform", 1, 0, exceptional=False)]
    comps += [Component(f"E{m}", m, k, exceptional=True) for m, k in pairs]
    return ResolutionData.build(comps)


def builtin_family(name: str, *params) -> dict:
    """Stratum and resolution data for the named divisor family.

    Names: hyperelliptic_theta(g), bn_general_theta(g), determinantal(n),
    secant(n), cubic_threefold.
    """
    if name == "hyperelliptic_theta":
        (g,) = params
        if g < 3:
            raise ValueError("need genus g >= 3")
        ms = [m for m in range(2, g + 2) if 2 * m - 1 <= g]
        strata = StrataData(tuple((m, 2 * m - 1) for m in ms))
        res = _chain_resolution([(m, 2 * m - 2) for m in ms])
        expected = Fraction(3, 2)
    elif name == "bn_general_theta":
        (g,) = params
        if g < 4:
            raise ValueError("need genus g >= 4")
        ms = [m for m in range(2, g + 2) if m * m <= g]
        strata = StrataData(tuple((m, m * m) for m in ms))
        res = _chain_resolution([(m, m * m - 1) for m in ms])
        expected = Fraction(2)
    elif name == "determinantal":
        (n,) = params
        if n < 2:
            raise ValueError("need matrix size n >= 2")
        strata = StrataData(tuple((m, m * m) for m in range(2, n + 1)))
        res = _chain_resolution([(m, m * m - 1) for m in range(2, n + 1)])
        expected = Fraction(2)
    elif name == "secant":
        (n,) = params
        if n < 1:
            raise ValueError("need n >= 1")
        strata = StrataData(tuple((m, 2 * m - 1) for m in range(2, n + 2)))
        res = _chain_resolution([(m, 2 * m - 2) for m in range(2, n + 2)])
        expected = Fraction(3, 2)
    elif name == "cubic_threefold":
        if params:
            raise ValueError("cubic_threefold takes no parameters")
        strata = StrataData(((3, 5),))
        res = _chain_resolution([(3, 4)])
        expected = Fraction(5, 3)
    else:
        raise ValueError(f"unknown family {name!r}")
    return {"strata": strata, "resolution": res, "expected_min_exponent": expected}
