"""A one-parameter family of 2-gap optimal schedules.

Every line of the orthic channel folds back into a cyclic 6-periodic
schedule.  Sweeping the channel parameter shows a perfectly flat 2-gap
(twice the orthic perimeter everywhere) while the 1-gap and the
longest-single-leg objective both prefer the orthic orbit itself.
"""

from tripatrol import Point, Triangle, orthic_perimeter, sub_orthic_schedule
from tripatrol import gap_report, pairwise_gap

t = Triangle(Point(0.0, 0.0), Point(2.0, 0.0), Point(0.7, 1.5))
per = orthic_perimeter(t)
print("orthic perimeter P =", per, "   2P =", 2 * per)
print()
print("lambda      G1          G2          longest leg")
for i in range(-5, 6):
    lam = i / 5.0
    s = sub_orthic_schedule(t, lam)
    g1 = gap_report(s, 1).overall
    g2 = gap_report(s, 2).overall
    print(f"{lam:+.1f}    {g1:10.6f}  {g2:10.6f}  {pairwise_gap(s):10.6f}")

print()
print("G2 never moves: the whole channel is 2-gap optimal.")
print("lambda = 0 (the orthic orbit itself) minimizes the longest leg, i.e.")
print("the worst time between visits of any two consecutively visited edges.")

s = sub_orthic_schedule(t, 1.0)
print("\nat lambda = +1 the folded trajectory passes through a vertex:")
print([(p.edge.name, round(p.u, 6)) for p in s.generator])
