"""Subspace ladders and the space invisible to windowed products.

A ladder fixes complementary pieces V and U at every power-of-two
degree.  Intermediate degrees split along the binary expansion, the U
parts absorb multiplication from the matching side, and the elements
whose windowed products all fall into U*A + A*U form the space E that
the growth construction quotients away.
"""

from gsalg import (absorption_check, build_ladder, compute_E,
                   cover_bound_check, decompose_binary, survivor_witness)

lad = build_ladder("lex-greedy", top=3, eschedule={3: 1})
print("ladder levels (degree, dim V):",
      [(lv.degree, lv.v_dim) for lv in lad.levels])
print("invariants:", lad.verify())

print()
print("degree 6 = 2 + 4 splits two ways")
dec = decompose_binary(lad, 6)
print(f"  ascending:  dim V = {dec.v_less.dim:3d}, dim U = {dec.u_less.dim}")
print(f"  descending: dim V = {dec.v_greater.dim:3d}, dim U = {dec.u_greater.dim}")

print()
print("absorption: A(k) U(l) and U(k) A(l) stay inside U(k + l)")
for k, l in ((1, 3), (2, 5), (4, 4), (3, 6)):
    rep = absorption_check(lad, k, l)
    print(f"  k = {k}, l = {l}: left {rep.left_ok}, right {rep.right_ok}")

print()
print("the invisible space E and the cover bound on its codimension")
for k in range(1, 8):
    e = compute_E(lad, k)
    lhs, rhs, ok = cover_bound_check(lad, k)
    print(f"  degree {k}: dim E = {e.dim:3d}, "
          f"codim {lhs:3d} <= {rhs:3d} bound: {ok}")

print()
print("stripped last letters stay independent modulo E")
rep = survivor_witness(lad, 3)
print(f"  level {rep.level}: {rep.p} words end in {rep.letter}, "
      f"independent: {rep.independent}")
