"""Why nothing beats the orthic schedule: the unfolding lower bound.

Repeating the five-reflection gadget k times turns any schedule that
revisits BC 2k times into a path between two parallel cross-sections of
the channel; the shortest such path is a parallelogram diagonal of length
v_k.  Then v_k/k is a lower bound on every cyclic 2-gap, it climbs to
2P as k grows, and half of it certifies the 1-gap optimum.
"""

from tripatrol import Point, Triangle, gap_report, lower_bound_profile
from tripatrol import orthic_perimeter, orthic_schedule, verify_1gap_optimality

t = Triangle(Point(0.0, 0.0), Point(2.1, 0.0), Point(0.8, 1.3))
per = orthic_perimeter(t)
print("2P =", 2 * per)
print()
print("  k      v_k/k        gap to 2P    reported bound")
rows = lower_bound_profile(t, 100)
for k, vk_k, bound in rows:
    if k in (1, 2, 5, 10, 25, 50, 100):
        print(f"{k:4d}   {vk_k:.8f}   {2 * per - vk_k:.2e}     {bound:.2e}")

print()
g1 = gap_report(orthic_schedule(t), 1).overall
print("orthic schedule 1-gap:", g1)
print("lower bound v_100/200:", rows[-1][1] / 2)
print("sandwich certified:", verify_1gap_optimality(t, 100))
