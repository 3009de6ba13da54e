"""Exact homological algebra over a bound quiver algebra.

We take the path algebra of 0 -a-> 1 -b-> 2 modulo the path ab, compute its
projectives, a minimal projective resolution of the simple at vertex 0 and
the Ext groups that resolution produces.
"""
from higher_nakayama import bqa

q = bqa.Quiver(3, (("a", 0, 1), ("b", 1, 2)))
A = bqa.build_algebra(q, [bqa.Relation.monomial("a", "b")], 2)
print("dim A =", A.dimension)

for v in range(3):
    print(f"P_{v} has dimension vector {bqa.projective(A, v).dims}")

S = [bqa.simple(A, v) for v in range(3)]
for i, (P, _) in enumerate(bqa.resolution(S[0], 3)):
    print(f"resolution term {i}: {P.dims}")

# global dimension two shows up as a nonzero Ext^2 between the outer simples
for i in (1, 2, 3):
    print(f"dim Ext^{i}(S_0, S_2) =", bqa.ext_dim(S[0], S[2], i))

# Hom from a projective recovers the dimension vector
X = bqa.injective(A, 2)
print("Hom(P_v, I_2) dims:", [len(bqa.hom(bqa.projective(A, v), X)) for v in range(3)],
      "vs", X.dims)

# a direct sum is recognised as decomposable
print("S_0 + S_0 indecomposable?", bqa.is_indecomposable(bqa.direct_sum(S[0], S[0])))
