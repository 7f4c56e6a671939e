"""Which string modules have only scalar endomorphisms?

Strings over the socle quotient are enumerated up to length 20; the
endomorphism dimension is counted from factor and image substrings and
cross-checked against the hom kernel for short words.
"""

from collections import Counter

from quiverlab import strings as S
from quiverlab.algebra import lambda_algebra

alg = lambda_algebra(0)
sq = S.socle_quotient(alg)
print(f"{alg.name} / socle: dim {sq.quotient_dim}, zero relations {', '.join(sq.zero_relations)}")

cl = S.classify_end_k(alg, maxlen=20)
print(f"\n{len(cl.end_dims)} strings of length <= {cl.maxlen} ({cl.numeric_checked} rechecked numerically)")
print("End = k for:")
for w, M in cl.modules:
    print(f"  {str(w):<8} {M.loewy.compact()}")

hist = Counter(cl.end_dims.values())
print("\ndim End histogram (smallest values):", sorted(hist.items())[:6])

for band, found in cl.bands:
    print(f"band {band}: non-scalar endomorphism {'found' if found else 'missing'}")
