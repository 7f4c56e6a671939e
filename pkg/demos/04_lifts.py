"""Lifting the uniserial module 0/0/1 over truncated polynomial rings.

Over the algebra of S5 the module M001 lifts once (to X, with factors
0,0,1,0,0,1) and stops.  Over the algebra of the cover, X extends again
to Y, and Y does not extend.  Each step is an exhaustive search over
Ext classes of the current lift by the base module.
"""

from quiverlab import deform as D
from quiverlab import rep as R
from quiverlab.algebra import lambda_algebra, lambdahat_algebra

for alg in (lambda_algebra(0), lambdahat_algebra(0)):
    V = R.uniserial(alg, (0, 0, 1))
    report = D.truncation_depth(V)
    print(f"\n{alg.name}: M001 has truncation depth {report.depth}")
    for lift in report.chain:
        print(f"  order {lift.order}: {lift.total.loewy.compact():<20} rank profile {lift.rank_profile}")
    print("  last search:", report.obstruction)

H = lambdahat_algebra(0)
X, Y = D.witness_x(H), D.witness_y(H)
print("\nExt^1(X, V) vanishes over the cover?", D.split_hypothesis(X))
print("some extension of X is Y?", any(D.lifts_isomorphic(l, Y) for l in D.extend_lift(X)))
print("Y reduces to X?", D.lifts_isomorphic(D.reduce_lift(Y, 2), X))

# syzygies do not change the answer
for v in (R.simple(H, 0), R.simple(H, 1)):
    print(f"depth({v.name}) = depth(Omega {v.name}):", D.omega_depth_consistency(v))
