"""Serialization of fans: JSON, SVG cross-sections, DOT subdivision trees.

Every renderer is a pure function from data to text, with fixed key order
and fixed numeric formatting, so identical inputs produce byte-identical
output.  Exact rationals are emitted as strings ("-1/6", "0", "1") rather
than floats.
"""

from __future__ import annotations

import json
import math

from .fan import Fan
from .polynomial import RemainderPolynomial, expand


def fan_to_json(fan: Fan, poly: RemainderPolynomial | None = None) -> dict:
    """JSON-ready summary of a fan and its arithmetic cross-checks.

    Cones reference rays by index into the ``rays`` array.  ``poly``
    defaults to the expansion of the fan's own group type; pass it in when
    already computed.
    """
    if poly is None:
        poly = expand(fan.group.fraction)
    index = {ray.scaled: i for i, ray in enumerate(fan.rays)}
    return {
        "group": {"r": fan.group.r, "weights": list(fan.group.weights)},
        "rays": [
            {
                "scaled": list(ray.scaled),
                "exceptional": ray.exceptional,
                "age": str(ray.age),
                "discrepancy": str(ray.discrepancy),
            }
            for ray in fan.rays
        ],
        "max_cones": [
            {
                "ray_indices": [index[g] for g in cone.generators],
                "word": list(cone.word),
                "multiplicity": cone.local_type.denominator,
            }
            for cone in fan.max_cones
        ],
        "euler": fan.euler,
        "height_total": poly.total_height(),
        "size": poly.size(),
        "crepant": fan.is_crepant(),
    }


def fan_json_text(fan: Fan, poly: RemainderPolynomial | None = None) -> str:
    return json.dumps(fan_to_json(fan, poly), indent=2) + "\n"


def polynomial_json_text(poly: RemainderPolynomial) -> str:
    return json.dumps(poly.to_json(), indent=2) + "\n"


# triangle cross-section layout for three-dimensional fans
_SVG_SIZE = 420.0
_SVG_PAD = 30.0


def _corner(k: int) -> tuple[float, float]:
    side = _SVG_SIZE - 2 * _SVG_PAD
    height = side * math.sqrt(3) / 2
    top = (_SVG_PAD + side / 2, _SVG_PAD)
    left = (_SVG_PAD, _SVG_PAD + height)
    right = (_SVG_PAD + side, _SVG_PAD + height)
    return (top, left, right)[k]


def _project(point: tuple[int, ...]) -> tuple[float, float]:
    total = sum(point)
    x = y = 0.0
    for k, v in enumerate(point):
        cx, cy = _corner(k)
        x += v * cx / total
        y += v * cy / total
    return x, y


def fan_to_svg(fan: Fan) -> str:
    """Triangle cross-section of a three-dimensional fan.

    Each maximal cone becomes one filled triangle, each ray one dot with
    its scaled coordinates as label.  Only ``n == 3`` has this picture;
    other dimensions raise ValueError.
    """
    if fan.group.n != 3:
        raise ValueError(f"cross-section drawing needs 3 weights, got {fan.group.n}")
    size = int(_SVG_SIZE)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"  <title>{fan.group}</title>",
    ]
    for cone in fan.max_cones:
        pts = " ".join(
            f"{x:.2f},{y:.2f}" for x, y in (_project(g) for g in cone.generators)
        )
        lines.append(
            f'  <polygon points="{pts}" fill="#dce9f5" stroke="#34495e" stroke-width="1"/>'
        )
    for ray in fan.rays:
        x, y = _project(ray.scaled)
        fill = "#c0392b" if ray.exceptional else "#2c3e50"
        lines.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{fill}"/>')
    for ray in fan.rays:
        x, y = _project(ray.scaled)
        label = "(" + ",".join(str(v) for v in ray.scaled) + ")"
        lines.append(
            f'  <text x="{x + 6:.2f}" y="{y - 6:.2f}" font-size="11" '
            f'font-family="monospace">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _node_name(word: tuple[int, ...]) -> str:
    return "n" + "".join(f"_{k}" for k in word)


def subdivision_tree_dot(fan: Fan) -> str:
    """GraphViz rendering of the subdivision tree.

    One node per cone ever created, labelled by its word and local type;
    edges drop the last letter of the word.
    """
    lines = [
        "digraph subdivision {",
        '  node [shape=box, fontname="monospace"];',
    ]
    for cone in fan.nodes:
        word = "(" + ",".join(str(k) for k in cone.word) + ")"
        label = f"{word} {cone.local_type}"
        lines.append(f'  {_node_name(cone.word)} [label="{label}"];')
    for cone in fan.nodes:
        if cone.word:
            lines.append(f"  {_node_name(cone.word[:-1])} -> {_node_name(cone.word)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
