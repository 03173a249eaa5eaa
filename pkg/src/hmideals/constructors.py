"""Closed-form spectrum and ideal constructors for the divisor classes in scope.

Three spectrum builders (diagonal sums of powers, their one-variable
specialization, and homogeneous cones over smooth projective hypersurfaces)
plus the normal-crossing, power-scaling and Q-divisor ideal formulas.  All
enumeration is exact; cutoffs are explicit and never extrapolated.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import CutoffExceededError
from .monomial import MonIdeal, unit_ideal
from .rat import floor_minus_eps
from .vspectrum import HMIdeal, VSpectrum, spectrum_from_step


def _rho(mu, m_vec) -> Fraction:
    """Weight of a monomial for the diagonal divisor sum z_j^{m_j}.

    For m_j = 1 the coordinate contributes mu_j + 1 (smooth factor: the
    staircase term degenerates to zero), so that the one-variable m = 1
    filtration jumps at 1, 2, ... with ideals (x), (x^2), ...
    """
    total = Fraction(0)
    for mu_j, m_j in zip(mu, m_vec):
        if m_j == 1:
            total += mu_j + 1
        else:
            total += Fraction(mu_j + 1 + mu_j // (m_j - 1), m_j)
    return total


def spectrum_diagonal(m_vec, cutoff) -> VSpectrum:
    """Spectrum of the divisor z_1^{m_1} + ... + z_n^{m_n} up to the cutoff.

    The filtration value just past beta is generated by the monomials of
    weight >= next achieved weight; every achieved weight <= cutoff is a
    genuine jump because the weight is strictly increasing coordinatewise.
    """
    m_vec = tuple(int(m) for m in m_vec)
    if not m_vec or any(m < 1 for m in m_vec):
        raise ValueError("m_vec must be a nonempty list of naturals >= 1")
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    n = len(m_vec)
    # rho >= (mu_j + 1)/m_j bounds every minimal generator needed through
    # the first achieved value past the cutoff.
    box = [int(m * (cutoff + 1)) + 1 for m in m_vec]
    weighted = [(
        _rho(mu, m_vec), mu)
        for mu in itertools.product(*(range(b + 1) for b in box))]
    achieved = sorted({w for w, _ in weighted})
    points = [w for w in achieved if w <= cutoff]
    after = [w for w in achieved if w > cutoff]
    points.append(after[0])  # certifies a jump sitting exactly at the cutoff
    values = []
    for beta in points:
        gens = [mu for w, mu in weighted if w >= beta]
        values.append(MonIdeal(n, tuple(gens)))
    return spectrum_from_step(n, cutoff, points, values)


def spectrum_one_var(m: int, cutoff) -> VSpectrum:
    """Spectrum of x^m in one variable."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return spectrum_diagonal((m,), cutoff)


def spectrum_ordinary_fermat(n: int, m: int, cutoff) -> VSpectrum:
    """Spectrum of the cone over the Fermat hypersurface of degree m in n variables.

    The value at beta is generated by products J^a * v with
    m*a + deg(v) >= ceil(m*beta) - n, where J is the Jacobian ideal
    (pure (m-1)-th powers) and v runs over monomials with all exponents
    <= m-2.  Jumps occur only at multiples of 1/m.
    """
    if n < 2 or m < 2:
        raise ValueError("need n >= 2 and m >= 2")
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    jacobian = MonIdeal(n, tuple(tuple((m - 1) * (i == j) for i in range(n)) for j in range(n)))
    top = n * (m - 2)

    def value(j: int) -> MonIdeal:
        # value on ((j-1)/m, j/m]: threshold m*a + deg(v) >= j - n
        need = j - n
        if need <= 0:
            return unit_ideal(n)
        total = MonIdeal(n, ())
        for a in range(math.ceil(need / m) + 1):
            d = max(0, need - m * a)
            if d > top:
                continue
            basis = [v for v in itertools.product(range(m - 1), repeat=n) if sum(v) == d]
            total = total + (jacobian ** a) * MonIdeal(n, tuple(basis))
        return total

    j_max = math.floor(m * cutoff)
    points = [Fraction(j, m) for j in range(1, j_max + 2)]
    values = [value(j) for j in range(1, j_max + 2)]
    return spectrum_from_step(n, cutoff, points, values)


def spectrum_thom_sebastiani(v1: VSpectrum, v2: VSpectrum, cutoff) -> VSpectrum:
    """Spectrum of f(x) + g(y) from the spectra of the two summands.

    The value at beta is the ideal sum over splittings beta_1 + beta_2 = beta
    of the box products of the factor values; finitely many split points
    (factor jumps and their reflections, plus interval midpoints) exhaust all
    values because both factors are step functions.
    """
    cutoff = Fraction(cutoff)
    if cutoff > v1.cutoff or cutoff > v2.cutoff:
        raise CutoffExceededError("cutoff exceeds a factor's guaranteed range")
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    n = v1.n + v2.n

    def box_product(a: MonIdeal, b: MonIdeal) -> MonIdeal:
        return MonIdeal(n, tuple(g + h for g in a.gens for h in b.gens))

    def value(beta: Fraction) -> MonIdeal:
        splits = {b for b in v1.jumping_numbers() if 0 < b < beta}
        splits |= {beta - c for c in v2.jumping_numbers() if 0 < beta - c < beta}
        pts = sorted(splits)
        cuts = [Fraction(0)] + pts + [beta]
        for lo, hi in zip(cuts, cuts[1:]):
            if hi > lo:
                splits.add((lo + hi) / 2)
        total = MonIdeal(n, ())
        for b1 in splits or {beta / 2}:
            total = total + box_product(v1.value_at(b1), v2.value_at(beta - b1))
        return total

    sums = sorted({
        s1 + s2
        for s1 in [Fraction(0)] + v1.jumping_numbers()
        for s2 in [Fraction(0)] + v2.jumping_numbers()
        if 0 < s1 + s2
    })
    points = [s for s in sums if s <= cutoff]
    # One evaluation past the cutoff certifies a terminal jump, but only
    # within the range both factors guarantee.
    after = [s for s in sums if s > cutoff]
    if after:
        probe = min(after[0], v1.cutoff, v2.cutoff)
        if probe > (points[-1] if points else 0):
            points.append(probe)
    values = [value(p) for p in points]
    return spectrum_from_step(n, cutoff, points, values)


def nc_ideal(m_vec, k: int, alpha) -> HMIdeal:
    """Two-index ideal of the normal-crossing divisor sum m_i * (x_i = 0).

    Valid for alpha < 0.  At alpha = 0 the same epsilon-adjusted exponent
    formula is applied, which yields the strict (left-limit) ideal rather
    than the value at 0; this keeps the power-scaling identity exact on the
    closed range alpha <= 0.
    The result is the principal monomial prod x_i^{a_i} times the k-th power
    of the ideal of pairwise intersections of the reduced components.
    """
    m_vec = tuple(int(m) for m in m_vec)
    alpha = Fraction(alpha)
    if not any(m > 0 for m in m_vec):
        raise ValueError("some multiplicity must be positive")
    if alpha > 0:
        raise ValueError("alpha must be <= 0")
    if k < 0:
        raise ValueError("k must be a natural number")
    n = len(m_vec)
    exps = []
    for m in m_vec:
        if m == 0:
            exps.append(0)
        else:
            exps.append(max(0, k * m - k + floor_minus_eps(-alpha * m)))
    support = [i for i in range(n) if m_vec[i] > 0]
    sing_gens = []
    for i in support:
        g = [0] * n
        for j in support:
            if j != i:
                g[j] = 1
        sing_gens.append(tuple(g))
    sing = MonIdeal(n, tuple(sing_gens))
    ideal = (sing ** k).scale(tuple(exps))
    return HMIdeal(0, ideal)


def power_scale_check(m_base, p: int, k: int, alpha):
    """Both routes of the power-scaling identity for a monomial divisor.

    Returns (ideal of p*D at (k, alpha), ideal of D at (k, p*alpha) twisted
    by f^{(p-1)k}); the contract is that the two are equal.

    The twist is folded in before exponents are clamped at zero: a clamped
    base exponent followed by scaling would overshoot whenever the unclamped
    formula dips below zero (only possible at alpha = 0 on reduced
    components).
    """
    m_base = tuple(int(m) for m in m_base)
    alpha = Fraction(alpha)
    if p < 1:
        raise ValueError("p must be >= 1")
    lhs = nc_ideal(tuple(p * m for m in m_base), k, alpha).ideal
    n = len(m_base)
    rhs_exps = []
    for m in m_base:
        if m == 0:
            rhs_exps.append(0)
            continue
        base = k * m - k + floor_minus_eps(-p * alpha * m)
        rhs_exps.append(max(0, base + (p - 1) * k * m))
    support = [i for i in range(n) if m_base[i] > 0]
    sing_gens = []
    for i in support:
        g = [0] * n
        for j in support:
            if j != i:
                g[j] = 1
        sing_gens.append(tuple(g))
    rhs = (MonIdeal(n, tuple(sing_gens)) ** k).scale(tuple(rhs_exps))
    return lhs, rhs


def qdivisor_ideal(coeffs, k: int, alpha) -> MonIdeal:
    """Ideal part of the two-index family for a Q-divisor sum c_i * (x_i = 0).

    Clears denominators with the minimal N, evaluates the normal-crossing
    formula at index alpha/N, and strips the principal (divisorial) factor,
    leaving cosupport of codimension >= 2.
    """
    coeffs = tuple(Fraction(c) for c in coeffs)
    if any(c < 0 for c in coeffs):
        raise ValueError("coefficients must be >= 0")
    if not any(c > 0 for c in coeffs):
        raise ValueError("some coefficient must be positive")
    alpha = Fraction(alpha)
    if alpha > 0:
        raise ValueError("alpha must be <= 0")
    scale = math.lcm(*(c.denominator for c in coeffs))
    m_vec = tuple(int(c * scale) for c in coeffs)
    ideal = nc_ideal(m_vec, k, alpha / scale).ideal
    return ideal.strip_divisorial()
