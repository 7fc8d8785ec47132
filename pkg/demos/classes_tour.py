"""Tour: sign families, rotation orbits, and lower-bound reports.

Run with: python3 demos/classes_tour.py
"""

from braidcount import (
    FamilyWord,
    class_count,
    class_count_by_enumeration,
    enumerate_family,
    lower_bound_report,
    orbit_of,
    search_forbidden_conjugations,
    word_to_text,
)
from braidcount.classes import ENTROPY_VARIANT, LAMBDA_VARIANT

print("A sign vector of length 2j expands to an alternating word:")
for signs in ((1, 1), (1, -1), (1, 1, -1, 1)):
    w = FamilyWord(signs)
    print(f"  {signs} -> {word_to_text(w.expand())!r}")

print()
print("Rotation partitions each family into orbits (necklace counting):")
for j in (1, 2, 3, 4, 5):
    n_burnside = class_count(j)
    n_walk = class_count_by_enumeration(j)
    print(
        f"  j={j}: family {4**j:>5}, orbits {n_burnside:>4} "
        f"(enumeration agrees: {n_burnside == n_walk})"
    )

print()
print("One orbit at j=2, listed explicitly:")
seed = FamilyWord((1, 1, -1, -1))
for w in sorted(orbit_of(seed), key=lambda f: f.signs):
    print(f"  {w.signs}")

print()
print("Lower-bound reports at the two anchor scales:")
for y, variant in (("600*log(8)", LAMBDA_VARIANT), ("600*pi*log(8)", ENTROPY_VARIANT)):
    rep = lower_bound_report(y, variant)
    print(
        f"  {variant:7} Y={y:14} index={rep.index} family={rep.family_size}"
        f" floor={rep.paper_bound} satisfied={rep.satisfied}"
    )

print()
print("No short conjugator maps one family word onto another family shape:")
for j in (2, 3):
    hits = search_forbidden_conjugations(j, 3)
    print(f"  j={j}, conjugator degree <= 3: {len(hits)} forbidden conjugations")
