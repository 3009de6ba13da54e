"""Exhaustive search for d-cluster-tilting modules.

For Lambda(2, 2) and d = 2 there are exactly two basic 2-cluster-tilting
modules; for Lambda(1, 2) the simple extends itself and there are none.
"""
from higher_nakayama.cluster import all_dCT, is_dRF_bruteforce

for n, loewy, d in [(2, 2, 2), (1, 2, 2), (4, 3, 3), (6, 2, 3)]:
    sets = all_dCT(n, loewy, d)
    print(f"Lambda({n},{loewy}), d={d}: {len(sets)} d-CT modules")
    for U in sets:
        print("   ", " ".join(map(str, U)))

ok, witness = is_dRF_bruteforce(4, 2, 2)
print("Lambda(4,2) is 2-RF:", ok, "with", len(witness), "summands")
