"""
Resolve 1/12(1,2,7) step by step and watch the multiplicities fall.

The positive orthant in the scaled lattice starts with multiplicity 12.
Star subdivision at the point named by the local type splits a cone into
children whose multiplicities are that type's nonzero numerators, so every
step strictly shrinks the defect until all cones are smooth.

Writes fan.json, fan.svg and tree.dot next to this script when run.
"""

import pathlib

from fujiki_oka import (
    Cone,
    GroupType,
    build_resolution,
    cone_multiplicity,
    expand,
    fan_json_text,
    fan_to_svg,
    star_subdivide,
    subdivision_point,
    validate_fan,
    subdivision_tree_dot,
)

group = GroupType.from_weights(12, (1, 2, 7))
r, n = group.r, group.n
axes = tuple(tuple(r if j == i else 0 for j in range(n)) for i in range(n))
root = Cone(axes, group.fraction, ())

print(f"resolving {group}")
print(f"root cone multiplicity: {cone_multiplicity(root, group)}")
print(f"first subdivision point: {subdivision_point(root, group)}")
print()

# walk the subdivision tree manually, worklist style
stack = [root]
while stack:
    cone = stack.pop()
    mult = cone_multiplicity(cone, group)
    pad = "  " * len(cone.word)
    print(f"{pad}cone {cone.word or '()'}: type {cone.local_type}, multiplicity {mult}")
    if not cone.is_smooth_type():
        stack.extend(reversed(star_subdivide(cone, group)))
print()

# the library call does the same thing and indexes the result
fan = build_resolution(group)
print(f"maximal cones: {fan.euler}")
for ray in fan.rays:
    kind = "exceptional" if ray.exceptional else "axis"
    print(f"  ray {ray.scaled} [{kind}]  age {ray.age}  discrepancy {ray.discrepancy}")

poly = expand(group.fraction)
print(f"arithmetic cross-check: size {poly.size()} = euler {fan.euler}")

check = validate_fan(fan)
print(f"independent validation: {'pass' if check.passed else 'FAIL'}")
print()

here = pathlib.Path(__file__).resolve().parent
(here / "fan.json").write_text(fan_json_text(fan, poly))
(here / "fan.svg").write_text(fan_to_svg(fan))
(here / "tree.dot").write_text(subdivision_tree_dot(fan))
print(f"wrote fan.json, fan.svg, tree.dot to {here}")
