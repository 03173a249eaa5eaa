#!/usr/bin/env python3
"""Print the full two-index ideal table of the cuspidal plane curve x^2 + y^3.

Reproduces the worked example driving most of the golden tests: the jump
list of the microlocal filtration, the ideals at levels 0..2, and the
Bernstein-Sato root classes.
"""

from fractions import Fraction as F

from hmideals import fmt_rat, spectrum_diagonal

v = spectrum_diagonal((2, 3), F(10, 3))

print("microlocal filtration of x^2 + y^3 (cutoff 10/3)")
print()
print(f"{'beta':>8} | value just above beta")
print("-" * 40)
for beta, ideal in v.jumps:
    print(f"{fmt_rat(beta):>8} | {ideal}")

print()
print("minimal exponent:", fmt_rat(v.minimal_exponent()))
print("BS root classes: ", sorted(v.bs_root_classes()))

for k in (0, 1, 2):
    print()
    print(f"level k = {k}")
    for p in range(0, 7):
        alpha = F(-p, 6)
        if k - alpha > v.cutoff:
            break
        print(f"  I_({k},{fmt_rat(alpha):>5}) = {v.hmi(k, alpha)}")
