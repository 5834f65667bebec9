"""Dyadic window profiles and their exponent schedules.

Relation counts are grouped into windows (2^n, 2^(n+1)] by degree.
Sparse enough profiles admit a schedule of exponents e(n) that caps the
dimension of the ladder levels near each occupied window; the bounds on
the quotient's growth then fall out of the schedule alone.
"""

import random

from gsalg import (Magnitude, check_cumulative_gap, compute_schedule,
                   dyadic_profile, growth_bounds, sample_valid_profile,
                   validate_profile, verify_schedule)

print("a profile straight from relation degrees")
profile = dyadic_profile([(400, 3), (900, 1)])
print("  degrees 400 x3 and 900 fall in windows:", profile.support)
rep = validate_profile(profile)
print("  hypothesis checks pass:", rep.ok)
print("  failing keys:", sorted({e.key for e in rep.failures()}))
print("  (desk-scale counts are far too small for the growth hypotheses)")

print()
print("a sampled profile built to satisfy every hypothesis")
profile = sample_valid_profile(random.Random(5))
print("  occupied windows:", profile.support)
for n in profile.support:
    print(f"    r_{n} = {profile.r(n)}")
print("  validates:", validate_profile(profile).ok)
print("  cumulative gap:", check_cumulative_gap(profile))

sched = compute_schedule(profile)
print()
print("its exponent schedule")
for n, e in sched.e:
    lo, hi = sched.span_of(n)
    print(f"    window {n}: e = {e}, levels [{lo}, {hi}], budget 2^{sched.t_of(n)}")
print("  independent re-verification:", verify_schedule(sched).ok)

print()
print("growth bounds at a degree above the top window")
n = Magnitude.pow2(profile.support[-1] + 1)
gb = growth_bounds(sched, n)
print(f"  at n = {n}:")
print(f"    upper (count power):   {gb.upper_count_power}")
print(f"    upper (level product): {gb.upper_level_product}")
print(f"    lower (count fourth):  {gb.lower_fourth()}")
print(f"    lower (level):         {gb.lower_level()}")
print("  lower bounds stay under the uppers:", gb.consistent)
