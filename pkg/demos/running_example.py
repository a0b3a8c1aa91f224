"""Walk through the quiver RRRLRL: polygon, η of 453126, its fiber and the mar it lands on."""
from cambrianrep.checks import RUNNING_EXAMPLE, RUNNING_PERM
from cambrianrep.eta import eta, eta_new_diagonals, fiber, lambda_paths, lambda_reps, perm_str
from cambrianrep.mar import MarRep
from cambrianrep.polygon import build_polygon
from cambrianrep.quiver import QuiverA, barred_partition

q = QuiverA.from_string(RUNNING_EXAMPLE)
p = build_polygon(q)
part = barred_partition(q)
print(f"quiver {q.directions}: upper {sorted(part.upper)}, lower {sorted(part.lower)}")
print("counterclockwise boundary:", p.ccw_order)
for v in sorted(p.coords):
    print(f"  vertex {v}: {p.coords[v]}")

print(f"\nλ-paths for {RUNNING_PERM}:")
for k, path in enumerate(lambda_paths(q, RUNNING_PERM)):
    print(f"  λ{k} = {path}")
print("diagonals in order of appearance:",
      [tuple(d) for d in eta_new_diagonals(q, p, RUNNING_PERM)])

print("\nthe same walk on thin representations:")
for k, rep in enumerate(lambda_reps(q, RUNNING_PERM)):
    print(f"  λ{k}^rep = " + " ⊕ ".join(str(m) for m in rep.summands()))

t = eta(q, RUNNING_PERM)
print("\nmar:", MarRep.from_triangulation(t))
print("fiber:", sorted(perm_str(pi) for pi in fiber(q, t)))
