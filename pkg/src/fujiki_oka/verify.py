"""Independent cross-checks tying the arithmetic to the geometry.

Three layers:

* per-type identity checks between a remainder polynomial and the fan it
  predicts (count of unit entries vs. Euler characteristic vs. height);
* the two-dimensional sanity anchor: continued fractions and convex hulls
  give the minimal resolution by completely different means, and both must
  agree with the subdivision construction;
* bulk sweeps over all semi-unimodular types up to a bound, with CSV
  output for eyeballing and regression pinning.
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import IO, Iterable, Sequence

from .fan import Fan, GroupType, ScaledPoint, build_resolution, cone_multiplicity
from .polynomial import RemainderPolynomial, expand

# sweeping every type grows like r_max**dim; refuse silly requests unless
# the caller explicitly opts in
_SWEEP_CAP = 1_000_000


def check_identities(fan: Fan, poly: RemainderPolynomial) -> tuple[bool, bool, bool]:
    """The three numeric identities a resolved type must satisfy.

    Returns (size == height + r, euler == size, euler == height + r).
    """
    r = fan.group.r
    size = poly.size()
    height = poly.total_height()
    return (size == height + r, fan.euler == size, fan.euler == height + r)


# ---------------------------------------------------------------------------
# dimension two: continued fractions and hulls


def hj_expansion(r: int, a: int) -> list[int]:
    """Negative-regular continued fraction of r/a.

    Expands r/a = c1 - 1/(c2 - 1/(...)) with every entry at least 2;
    requires 0 < a < r and gcd(r, a) = 1.  The entries are the negated
    self-intersection numbers of the exceptional curves of the minimal
    resolution of the surface singularity 1/r(1, a), in chain order.
    """
    if not 0 < a < r:
        raise ValueError(f"need 0 < a < r, got a={a}, r={r}")
    if math.gcd(r, a) != 1:
        raise ValueError(f"need gcd(r, a) = 1, got r={r}, a={a}")
    out = []
    x, y = r, a
    while True:
        c = -(-x // y)
        out.append(c)
        rem = c * y - x
        if rem == 0:
            return out
        x, y = y, rem


def hj_evaluate(entries: Sequence[int]) -> Fraction:
    """Fold entries back into the rational they expand, for round-trips."""
    if not entries:
        raise ValueError("empty expansion")
    value = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        if value == 0:
            raise ZeroDivisionError("expansion hits a zero tail")
        value = c - 1 / value
    return value


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    # monotone chain, exact arithmetic; input sorted by x with distinct x
    hull: list[tuple[int, int]] = []
    for p in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (p[1] - y0) <= (y1 - y0) * (p[0] - x0):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _on_polyline(point: tuple[int, int], hull: list[tuple[int, int]]) -> bool:
    x, y = point
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        if x0 <= x <= x1 and (x1 - x0) * (y - y0) == (y1 - y0) * (x - x0):
            return True
    return False


@dataclass(frozen=True)
class Comparison2D:
    """Agreement report between the subdivision fan for 1/r(1, a) and the
    classical minimal resolution of the same surface singularity."""

    r: int
    a: int
    expansion: tuple[int, ...]
    exceptional_rays: tuple[ScaledPoint, ...]
    count_matches: bool
    euler_matches: bool
    rays_on_hull: bool
    round_trip: bool

    @property
    def ok(self) -> bool:
        return (
            self.count_matches
            and self.euler_matches
            and self.rays_on_hull
            and self.round_trip
        )


def compare_2d(r: int, a: int) -> Comparison2D:
    """Resolve 1/r(1, a) and compare against continued fractions and hulls.

    Checks that the number of exceptional rays equals the expansion length,
    that the Euler characteristic exceeds it by one, that every exceptional
    ray sits on the lower convex hull of the nonzero lattice points of the
    quadrant, and that the expansion folds back to r/a.
    """
    expansion = hj_expansion(r, a)
    group = GroupType.from_weights(r, (1, a))
    fan = build_resolution(group)
    rays = tuple(ray.scaled for ray in fan.rays if ray.exceptional)

    candidates = [(0, r)] + [(x, (a * x) % r) for x in range(1, r)] + [(r, 0)]
    hull = _lower_hull(candidates)

    return Comparison2D(
        r=r,
        a=a,
        expansion=tuple(expansion),
        exceptional_rays=rays,
        count_matches=len(rays) == len(expansion),
        euler_matches=fan.euler == len(expansion) + 1,
        rays_on_hull=all(_on_polyline(p, hull) for p in rays),
        round_trip=hj_evaluate(expansion) == Fraction(r, a),
    )


# ---------------------------------------------------------------------------
# families with Euler characteristic equal to the group order


def family_type(name: str, k: int) -> GroupType:
    """The k-th member of the two classical three-dimensional families.

    ``plus`` is 1/(6k+1)(1, 3, 6k-5) and ``minus`` is 1/(6k-1)(1, 3, 3k-2);
    every member resolves with Euler characteristic equal to its order.
    """
    if k < 1:
        raise ValueError(f"family index must be positive, got {k}")
    if name == "plus":
        r = 6 * k + 1
        weights = (1, 3, 6 * k - 5)
    elif name == "minus":
        r = 6 * k - 1
        weights = (1, 3, 3 * k - 2)
    else:
        raise ValueError(f"unknown family {name!r}; expected 'plus' or 'minus'")
    return GroupType.from_weights(r, weights)


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepRecord:
    """Everything measured while resolving one group type."""

    r: int
    weights: tuple[int, ...]
    size: int
    height: int
    euler: int
    smooth_all: bool
    crepant_by_ages: bool
    crepant_by_fan: bool
    identity_size_height: bool
    identity_euler_size: bool
    identity_euler_height: bool
    ms: float

    @property
    def crepant(self) -> bool:
        return self.crepant_by_ages and self.crepant_by_fan

    @property
    def gorenstein(self) -> bool:
        return sum(self.weights) % self.r == 0

    @property
    def ok(self) -> bool:
        return (
            self.smooth_all
            and self.identity_size_height
            and self.identity_euler_size
            and self.identity_euler_height
            and self.crepant_by_ages == self.crepant_by_fan
        )


def measure_type(group: GroupType) -> SweepRecord:
    """Resolve one type and record every invariant worth regressing on."""
    t0 = time.perf_counter()
    fan = build_resolution(group)
    poly = expand(group.fraction)
    size = poly.size()
    height = poly.total_height()
    ids = check_identities(fan, poly)
    smooth = all(cone_multiplicity(c, group) == 1 for c in fan.max_cones)
    ms = (time.perf_counter() - t0) * 1000.0
    return SweepRecord(
        r=group.r,
        weights=group.weights,
        size=size,
        height=height,
        euler=fan.euler,
        smooth_all=smooth,
        crepant_by_ages=poly.all_ages_one(),
        crepant_by_fan=fan.is_crepant(),
        identity_size_height=ids[0],
        identity_euler_size=ids[1],
        identity_euler_height=ids[2],
        ms=ms,
    )


def _weights_for(r: int, dim: int, gorenstein_only: bool):
    for weights in product(range(r), repeat=dim):
        if 1 not in weights:
            continue
        if gorenstein_only and sum(weights) % r != 0:
            continue
        yield weights


def _sweep_block(args: tuple[int, int, bool]) -> list[SweepRecord]:
    r, dim, gorenstein_only = args
    return [
        measure_type(GroupType.from_weights(r, w))
        for w in _weights_for(r, dim, gorenstein_only)
    ]


def sweep(
    dim: int,
    r_max: int,
    r_min: int = 2,
    gorenstein_only: bool = False,
    crepant_only: bool = False,
    jobs: int = 1,
    allow_large: bool = False,
) -> list[SweepRecord]:
    """Resolve every semi-unimodular type with the given dimension and order
    range, in deterministic (r, weights) order.

    ``crepant_only`` filters the output; the types are still all resolved.
    ``jobs`` distributes whole orders across processes.  Requests whose raw
    product-space size ``r_max ** dim`` exceeds a million are refused
    unless ``allow_large`` is set.
    """
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    if r_min < 2 or r_max < r_min:
        raise ValueError(f"need 2 <= r_min <= r_max, got [{r_min}, {r_max}]")
    if r_max**dim > _SWEEP_CAP and not allow_large:
        raise ValueError(
            f"sweep spans about {r_max ** dim:,} weight tuples; "
            "pass allow_large=True (--allow-large) if that is intentional"
        )
    blocks = [(r, dim, gorenstein_only) for r in range(r_min, r_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_block, blocks))
    else:
        results = [_sweep_block(b) for b in blocks]
    records = [rec for block in results for rec in block]
    if crepant_only:
        records = [rec for rec in records if rec.crepant]
    return records


_CSV_COLUMNS = (
    "r",
    "weights",
    "S",
    "h",
    "chi",
    "smooth_all",
    "crepant",
    "id_S_eq_h_plus_r",
    "id_chi_eq_S",
    "id_chi_eq_h_plus_r",
    "ms",
)


def write_sweep_csv(records: Iterable[SweepRecord], dest: str | Path | IO[str]) -> None:
    """Write sweep records as CSV.

    All columns except ``ms`` are deterministic for a given sweep; ``ms``
    is wall-clock and varies run to run.
    """
    if isinstance(dest, (str, Path)):
        with open(dest, "w", newline="") as fh:
            _write_csv(records, fh)
    else:
        _write_csv(records, dest)


def _write_csv(records: Iterable[SweepRecord], fh: IO[str]) -> None:
    writer = csv.writer(fh)
    writer.writerow(_CSV_COLUMNS)
    for rec in records:
        writer.writerow(
            [
                rec.r,
                " ".join(str(w) for w in rec.weights),
                rec.size,
                rec.height,
                rec.euler,
                _flag(rec.smooth_all),
                _flag(rec.crepant),
                _flag(rec.identity_size_height),
                _flag(rec.identity_euler_size),
                _flag(rec.identity_euler_height),
                f"{rec.ms:.3f}",
            ]
        )


def _flag(value: bool) -> str:
    return "true" if value else "false"


def summarize(records: Sequence[SweepRecord]) -> dict:
    """Aggregate counts for a sweep, plus the first few failing types."""
    failures = [rec for rec in records if not rec.ok]
    return {
        "types": len(records),
        "crepant": sum(1 for rec in records if rec.crepant),
        "gorenstein": sum(1 for rec in records if rec.gorenstein),
        "all_ok": not failures,
        "failures": [f"1/{rec.r}{rec.weights}" for rec in failures[:10]],
    }
