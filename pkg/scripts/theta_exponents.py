#!/usr/bin/env python3
"""Minimal exponents of the built-in theta-divisor families.

For each family the resolution lower bound and the stratification upper
bound collapse to the same value, so the table prints certified exponents.
"""

from hmideals import builtin_family, fmt_rat, lct, min_exponent_bounds

FAMILIES = (
    [("hyperelliptic_theta", (g,)) for g in range(3, 10)]
    + [("bn_general_theta", (g,)) for g in range(4, 10)]
    + [("determinantal", (n,)) for n in range(2, 6)]
    + [("secant", (n,)) for n in range(1, 6)]
    + [("cubic_threefold", ())]
)

print(f"{'family':<22} {'params':<8} {'strata (m:codim)':<24} {'lct':>5} {'exponent':>9}")
print("-" * 72)
for name, params in FAMILIES:
    fam = builtin_family(name, *params)
    bounds = min_exponent_bounds(fam["resolution"], fam["strata"])
    assert bounds["lower"] == bounds["upper"] == fam["expected_min_exponent"]
    strata = ",".join(f"{m}:{c}" for m, c in fam["strata"].strata)
    print(f"{name:<22} {str(params):<8} {strata:<24} "
          f"{fmt_rat(lct(fam['resolution'])):>5} {fmt_rat(bounds['lower']):>9}")
