"""Graded dimensions of finitely presented quotients.

The free algebra on two generators doubles in dimension at every degree.
Dividing by relations slows that growth down, and the coefficientwise
inequality puts an exact floor under how slow it can get.
"""

from gsalg import (DegreeProfile, entropy_estimate, gs_check, gs_min_series,
                   hilbert_quotient, parse_expression)

N = 12

print("free algebra on x, y")
free = hilbert_quotient([], N)
print("  dims:", free[1:])

print()
print("one monomial relation y*x")
rels = [parse_expression("y*x")]
dims = hilbert_quotient(rels, N)
print("  dims:", dims[1:])

profile = DegreeProfile.of_relations(2, rels)
floor = gs_min_series(profile, N)
print("  minimal series:", floor[1:])
print("  floor attained:", dims == floor)

report = gs_check(profile, dims)
print("  inequality defects b_n:", report.defect)
print("  inequality holds:", report.ok)

print()
print("the commutator relation x*y - y*x")
comm = hilbert_quotient([parse_expression("x*y - y*x")], N)
print("  dims:", comm[1:], "(polynomial growth: this is k[x,y])")

print()
print("window entropy estimates c_n**(1/n)")
for name, series in (("free", free), ("one relation", dims), ("commutator", comm)):
    est = entropy_estimate(series)
    print(f"  {name:12s} ~ {est.as_float():.4f}  "
          f"(witness c_{est.n_star} = {est.c_star})")
