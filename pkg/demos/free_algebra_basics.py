"""Words, elements, and subspaces of the free algebra.

Degree-k words over x, y are packed into k bits, elements are sparse
coefficient maps over exact scalars, and degree-slices of the algebra
are bitset subspaces with exact rank arithmetic.
"""

from gsalg import Element, Subspace, parse_expression, word_str
from gsalg.words import all_subwords2

print("words are bit-packed: degree 3 has indices 0..7")
for i in range(8):
    print(f"  {i} = 0b{i:03b} -> {word_str(2, 3, i)}")

print()
f = parse_expression("x*y - y*x")
g = parse_expression("x^2 + y^2")
print(f"elements: f = {f}, g = {g}")
print(f"  f * g = {f * g}")
print(f"  f - f = {f - f} (zero: {(f - f).is_zero()})")
print(f"  homogeneous components of f + g: "
      f"{sorted((f + g).components())}")

print()
print("subwords of y*x*y of degree 2:",
      [word_str(2, 2, w) for w in all_subwords2(3, 0b101, 2)])

print()
print("degree-2 subspaces")
s = Subspace.span_elements(2, 2, [f])
m = Subspace.monomial_span(2, 2, [0b01])
print(f"  span{{xy - yx}}: dim {s.dim} of {s.ambient_dim}")
print(f"  span{{xy}}:      dim {m.dim}, monomial: {m.is_monomial}")
both = s.sum(m)
print(f"  their sum has dim {both.dim} and contains yx: "
      f"{both.contains_element(parse_expression('y*x'))}")
left = Subspace.monomial_span(2, 1, [0]).product(m)
print(f"  x * span{{xy}} = span{{{', '.join(sorted(word_str(2, 3, w) for w in left.monomials()))}}}")
