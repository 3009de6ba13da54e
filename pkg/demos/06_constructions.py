"""Arithmetic of the constructions: orbit indices and summand counts."""
from higher_nakayama import constructions as c
from higher_nakayama.cluster import is_dRF_bruteforce

for kind in c.TUBULAR_WEIGHTS:
    print(f"tubular {kind}:", [c.tubular_n(kind, d) for d in range(2, 8)], "for d = 2..7")

p = c.fraccy_params(3, 3, 2, 1)
print("fractionally 3/3-CY, d=2:", p)

print("wild family m=4:", [c.wild_family_n(4, d, 1) for d in range(2, 12)])

rep = c.preproj_nakayama(5)
print(f"3-preprojective of A_5 -> Lambda({rep.nakayama.n},{rep.nakayama.loewy}),",
      f"3-RF: {rep.verdict.drf}")

# trivial extension of k: Lambda(d*ell, 2) with (d+1)*ell summands
for d, ell in [(2, 1), (2, 2), (3, 1)]:
    ok, witness = is_dRF_bruteforce(d * ell, 2, d)
    print(f"d={d} ell={ell}: predicted {c.trivext_count(1, 1, d, ell)}, found {len(witness)}")

print("cross-section (-1, 1] for u=v=a=b=1:", sorted(c.cross_section_set(1, 1, 1, 1, 20)),
      c.cross_section_verify(1, 1, 1, 1, 20))
