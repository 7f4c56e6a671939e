"""Where t^3 - 2t comes from.

The class sum of the elements of order 8 acts on the two characters of the
cover lying over the T1 column by the scalars 0 and 5√2.  Their joint
minimal polynomial, rescaled by x = 5t, is 125 (t^3 - 2t).
"""

from quiverlab import chars as C
from quiverlab.scalars import reduce_mod2, val2

t = C.HAT_S5
print(t.render())

pair = C.class_sum_pair()
print("\ncentral characters at C9 on (psi6, psi7):", ", ".join(str(x) for x in pair))
print("reductions mod 2:", [reduce_mod2(x).value for x in pair])

p = C.minpoly_of_tuple(pair)
lead, monic = C.rescale_check(p, 5)
print("minimal polynomial:", C.poly_str(p))
print(f"after x = 5t: {lead} * ({C.poly_str(monic, 't')}), and val2(50) = {val2(50)}")

# psi7 and psi8 only differ by the sign of √2, so their sum is rational
print("\npsi7 <-> psi8 under √2 -> -√2:", C.galois_pair_check(t, "psi7", "psi8"))
print("psi11 <-> psi12 under √3 -> -√3:", C.galois_pair_check(t, "psi11", "psi12", "sqrt3"))
