"""What a memoryless agent achieves by always projecting onto the next edge.

The revisit positions on BC obey d_{i+1} = c - x d_i with
x = cosA cosB cosC, so they contract geometrically onto a fixed point whose
orbit is an inscribed triangle similar to the original.  The resulting
1-gap exceeds the optimum by a factor between 1 (thin triangles) and
(1 + sqrt 2)/2 ~ 1.207 (right isosceles).
"""

import math

from tripatrol import Point, Triangle, greedy_limit_gap, greedy_ratio
from tripatrol import greedy_ratio_extremes, greedy_run, orthic_perimeter

t = Triangle(Point(0.0, 0.0), Point(1.9, 0.1), Point(0.8, 1.4))
tr = greedy_run(t, start_u=0.05, num_cycles=100, direction="cw")

print("recurrence: d_{i+1} =", round(tr.c, 9), "-", round(tr.x, 9), "* d_i")
print("fixed point:", tr.fixed_point)
print("\nfirst BC revisit positions:")
for i, d in enumerate(tr.iterates[:8]):
    print(f"  d_{i} = {d:.12f}   (error {abs(d - tr.fixed_point):.2e})")
print("converged after", tr.iterations_to_converge, "revisits")

print("\nlimit 1-gap (simulated):", tr.limit_gap)
print("limit 1-gap (formula):  ", greedy_limit_gap(t))
print("orthic optimum:         ", orthic_perimeter(t))
print("ratio:                  ", tr.limit_gap / orthic_perimeter(t))

ccw = greedy_run(t, start_u=0.05, num_cycles=100, direction="ccw")
print("counterclockwise limit 1-gap:", ccw.limit_gap, "(same cost)")

print("\nratio landscape over all non-obtuse angle triples:")
print("  equilateral:     ", greedy_ratio((math.pi / 3,) * 3))
print("  right isosceles: ", greedy_ratio((math.pi / 4, math.pi / 4, math.pi / 2)))
fmax, fmin, argmax, argmin = greedy_ratio_extremes(400)
print("  grid max:", fmax, "at", [round(x, 4) for x in argmax])
print("  grid min:", fmin, "near the degenerate corner", [round(x, 4) for x in argmin])
