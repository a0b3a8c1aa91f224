"""Build the Cambrian lattice for a small quiver and look at covers, joins and the weak order."""
import sys

from cambrianrep.eta import verify_cambrian_quotient
from cambrianrep.mar import build_lattice, covers_of
from cambrianrep.polygon import build_polygon
from cambrianrep.quiver import QuiverA

q = QuiverA.from_string(sys.argv[1] if len(sys.argv) > 1 else "RLR")
p = build_polygon(q)
lat = build_lattice(q, p)
print(f"{q.directions}: {len(lat.elements)} mars, {len(lat.covers)} covers, lattice ok={lat.ok}")
print("bottom:", lat.elements[lat.bottom])
print("top:   ", lat.elements[lat.top])

print("\ncovers out of the bottom, with their exact sequences:")
for other, w in covers_of(q, p, lat.elements[lat.bottom]):
    middle = " ⊕ ".join(str(m) for m in w.middle)
    print(f"  0 → {w.sub} → {middle} → {w.quot} → 0")

a, b = lat.covers[0][1], lat.covers[-1][0]
print(f"\njoin({a},{b}) = {lat.join(a, b)}, meet({a},{b}) = {lat.meet(a, b)}")
print(verify_cambrian_quotient(q, p, lat).summary())
