"""
Two infinite families of 3D types whose resolutions have Euler
characteristic equal to the group order: 1/(6k+1)(1,3,6k-5) and
1/(6k-1)(1,3,3k-2).

chi = r is automatic for Gorenstein types (weights summing to a multiple
of r), but these families are mostly non-Gorenstein, which is what makes
them interesting.
"""

from fujiki_oka import family_type, measure_type

print(f"{'family':<8}{'k':>3}{'type':>18}{'chi':>6}{'r':>5}  gorenstein")
for name in ("plus", "minus"):
    for k in range(1, 9):
        group = family_type(name, k)
        rec = measure_type(group)
        mark = "yes" if rec.gorenstein else "no"
        print(f"{name:<8}{k:>3}{str(group):>18}{rec.euler:>6}{group.r:>5}  {mark}")
print()

# k = 1 of the minus family is Gorenstein and crepant, the rest are not
rec = measure_type(family_type("minus", 1))
print(f"1/5(1,3,1): crepant={rec.crepant}, gorenstein={rec.gorenstein}")
rec = measure_type(family_type("plus", 4))
print(f"{family_type('plus', 4)}: crepant={rec.crepant}, gorenstein={rec.gorenstein}")
