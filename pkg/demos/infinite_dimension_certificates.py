"""Rational witnesses of infinite dimension.

If the polynomial 1 - d*t + sum r_i t^i dips below zero anywhere on
(0, 1), every quotient with that relation profile is infinite
dimensional.  The search stays in exact rational arithmetic, so a
found witness is a proof, not an approximation.
"""

from fractions import Fraction

from gsalg import DegreeProfile, SearchParams, certify_infinite

print("two generators, one cubic relation")
cubic = DegreeProfile.make(2, {3: 1})
cert = certify_infinite(cubic)
print(f"  witness t = {cert.t}, P(t) = {cert.value}")
print(f"  verified exactly: P({cert.t}) = {cubic.poly(cert.t)} < 0")
print(f"  points examined: {cert.points_checked}")

print()
print("two generators, one quadratic relation")
quad = DegreeProfile.make(2, {2: 1})
print("  P(t) = 1 - 2t + t^2 = (1 - t)^2, nonnegative everywhere")
print("  search result:", certify_infinite(quad))
print("  boundary value P(1) =", quad.poly(Fraction(1)))

print()
print("finer grids move the witness left")
for den in (5, 20, 100):
    cert = certify_infinite(cubic, SearchParams(grid_denominator=den))
    print(f"  denominator {den:4d}: t = {cert.t}, P(t) = {cert.value}")

print()
print("high-degree relations still certify")
heavy = DegreeProfile.make(2, {6: 1, 7: 1})
cert = certify_infinite(heavy)
print(f"  r_6 = 1, r_7 = 1: witness t = {cert.t}, P(t) = {cert.value}")
