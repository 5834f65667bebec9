"""The staircase tower: intermediate growth between the classes.

Window indices grow by m -> 200 m^3 + 1 from 101, each carrying
40^(8 m^3) relations.  The numbers are astronomically large, so all
arithmetic runs on symbolic magnitudes with certified comparisons; no
value is ever materialized as an integer.
"""

from gsalg import (Magnitude, exponential_exceeds_quasipoly, growth_bounds,
                   magnitude_cmp, tower_class_checks, tower_profile,
                   verify_schedule)

profile, sched, fmap = tower_profile(2)
print("tower windows:", fmap)
for i, m in fmap.items():
    print(f"  level {i}: window {m}, r = {profile.r(m)}")
print("schedule re-verified:", verify_schedule(sched).ok)

print()
print("upper growth class: log2 dim(n) <= 3 + 4 log2 n + 200 (log2 n)^3")
rep = tower_class_checks(sched, exps=[10, 20, 40])
for e in rep.entries:
    if e.key == "upper_class":
        print(f"  n = 2^{e.level}: bound {e.lhs} <= {e.rhs}: {e.ok}")

print()
print("lower growth class at the first window (m = 101)")
gb = growth_bounds(sched, Magnitude.pow2(102))
floor = Magnitude.power(40, 8 * 101 * 101)
print(f"  lower bound at n = 2^102: {gb.lower_fourth()}")
print(f"  exceeds 40^(8 * 101^2) = {floor}:",
      magnitude_cmp(gb.lower_fourth(), floor) > 0)

print()
print("the two classes really are separated")
print("  (1025/1024)^n > 2^(400 (log2 n)^3) at n = 2^64:",
      exponential_exceeds_quasipoly())
print("  the same at n = 2^10 (too early):",
      exponential_exceeds_quasipoly(log_n=10))

print()
print("certified magnitude comparisons at a glance")
a = Magnitude.power(40, 8 * 101 ** 3)
b = Magnitude.pow2(43865503)
print(f"  40^(8 * 101^3) vs 2^43865503: cmp = {magnitude_cmp(a, b)}")
print(f"  typed form of the count: {a.to_json()}")
