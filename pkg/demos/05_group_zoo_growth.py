#!/usr/bin/env python3
"""The group zoo: normal forms, conjugacy balls, and growth estimates.

Three families matter here:

- the lamplighter groups, where lamp elements have infinite conjugacy
  classes of linear growth,
- the base group Q x| (+_i Z), where the class of 1 in Q is exactly the
  positive rationals,
- its HNN extension by the index shift (3 generators: 1 in Q, e_0, t),
  where Britton-reduced normal forms keep the class of 1 intersecting Q
  in the positive rationals.
"""

from fractions import Fraction

from etarho import (HnnShift, Lamplighter, QSemidirect, class_ball,
                    class_ball_rationals, class_intersect_integers,
                    conjugate_of_one_test, growth_classify, normalize)

print("== normal forms ==")
G = HnnShift()
for word in ("t e:0 t^-1", "t^-1 e:0 t", "e:0 q:1 e:0^-1", "q:1/2 q:1/2", "t q:1 t^-1"):
    print(f"  {word:18s} -> {G.format_element(normalize(G, word))}")

print()
print("== the conjugacy class of 1 in Q ==")
Q = QSemidirect()
print("  conjugate_of_one_test(5/6) :", conjugate_of_one_test(Q.rational(Fraction(5, 6))))
print("  conjugate_of_one_test(-1)  :", conjugate_of_one_test(Q.rational(-1)))
print("  conjugate_of_one_test(0)   :", conjugate_of_one_test(Q.rational(0)))

ball = class_ball(Q, Q.rational(1), 8)
print(f"  conjugates of 1 within conjugator radius 8: {len(ball)} values,"
      f" all positive: {all(el[0] > 0 for el in ball)}")
ints = class_intersect_integers(G, 12)
print(f"  integers in the class at radius 12: {ints[:12]} ... ({len(ints)} total)")
print("  (2 appears by conjugating with e_0; 3 via t^-1 e_0 t = e_-1)")

print()
print("== rational conjugates agree between the base group and its extension ==")
for r in (3, 6, 9):
    qs = class_ball_rationals(G, 1, r)
    print(f"  radius {r:2d}: {len(qs)} rationals, min {min(qs)}, max {max(qs)}")

print()
print("== growth classification from ball counts ==")
L = Lamplighter(2)
for label, group, element, radius in (
        ("lamplighter lamp", L, L.lamp(0, 1), 10),
        ("lamplighter shift", L, L.shift(1), 10),
        ("class of 1 in Q x| (+Z)", Q, Q.rational(1), 12)):
    report = growth_classify(group, element, radius)
    degree = (f", degree ~ {report.degree_estimate:.2f}"
              if report.degree_estimate is not None else "")
    print(f"  {label:24s}: {report.kind}{degree}")
    print(f"    counts by radius: {list(report.counts)}")
