"""(d+1)-angulations of polygons and their rotation symmetry.

The hexagon has 14 triangulations.  Rotating by one step sends the central
triangle to its mirror image, so its orbit has two elements.
"""
from higher_nakayama import polygon as pg
from higher_nakayama.polygon import PolygonCtx

ctx = PolygonCtx(2, 4)
angs = pg.enumerate_angulations(ctx)
print(f"{len(angs)} triangulations of the {ctx.N}-gon (Fuss-Catalan {pg.fuss_catalan(2, 4)})")

central = ((0, 2), (0, 4), (2, 4))
print("fixed by rho^2:", pg.is_fixed(ctx, central, 2), " by rho:", pg.is_fixed(ctx, central, 1))
print("tau(central) =", pg.tau_on_angulation(ctx, central))

# quadrangulations of the octagon, and which rotations fix at least one of them
oct_ctx = PolygonCtx(3, 3)
print(f"{len(pg.enumerate_angulations(oct_ctx))} quadrangulations of the octagon")
for m in range(1, oct_ctx.N + 1):
    ok, w = pg.invariant_angulation_exists(oct_ctx, m)
    print(f"  rho^{m}: {'fixed ' + str(w) if ok else 'none'}")

# the enumeration agrees with a clique search over non-crossing diagonals
assert pg.maximal_noncrossing_sets(oct_ctx) == pg.enumerate_angulations(oct_ctx)
