"""Central charges read off the polygon, and the AR quiver read off segment pivots."""
import sys

from cambrianrep.polygon import build_polygon, segment_quiver
from cambrianrep.quiver import QuiverA
from cambrianrep.reps import F_map, ar_quiver, verify_mesh_relations
from cambrianrep.stability import stability_table

q = QuiverA.from_string(sys.argv[1] if len(sys.argv) > 1 else "RRL")
p = build_polygon(q)

print("module      charge      stable")
for m, z, stable in stability_table(q, p):
    print(f"{m.label:>9}  {str(z):>10}  {stable}")

ar = ar_quiver(q)
sq = segment_quiver(p)
from_segments = {(F_map(a), F_map(b)) for a, b in sq.arrows}
print(f"\nAR arrows: {len(ar.arrows)}, segment arrows: {len(from_segments)}, "
      f"equal: {from_segments == set(ar.arrows)}")
for m, tm in sorted(ar.tau.items()):
    print(f"  τ {m} = {tm}")
print("mesh relations hold:", verify_mesh_relations(q).ok)
