"""From character tables to basic algebras.

The principal 2-blocks of S5 and of its double cover are read off the
embedded character tables; their decomposition matrices predict the Cartan
matrices, which the quiver algebras then reproduce by counting paths.
"""

from quiverlab import chars as C
from quiverlab import rep as R
from quiverlab.algebra import cartan, check_surjection, lambda_algebra, lambdahat_algebra

for table in (C.S5_TABLE, C.HAT_S5):
    blocks = C.block_partition(table)
    D = C.decomposition_matrix(table, blocks[0], columns=("phi0", "phi1"))
    print(f"{table.group}: {len(blocks)} blocks, principal block {', '.join(blocks[0])}")
    print(f"  D^T D = {C.cartan_from_decomp(D)}")

L, H = lambda_algebra(0), lambdahat_algebra(0)
print(f"\n{L.name}: dim {L.dim}, Cartan {cartan(L).tolist()}")
print(f"{H.name}: dim {H.dim}, Cartan {cartan(H).tolist()}")

# P1 over the small algebra is uniserial of length 7
print("\nradical layers of P1 over", L.name)
print(R.projective(L, 1).loewy.diagram())

# the cover's algebra maps onto the small one, but only for c = 0
for c in (0, 1):
    cert = check_surjection(H, lambda_algebra(c))
    print(f"\n{H.name} -> lambda:c={c}: {'surjective' if cert else 'not a surjection'}")
    for rel, img in cert.images:
        if img != "0":
            print(f"  {rel} maps to {img}")
