"""Unit tests for cross-checks: continued fractions, hulls, families, sweeps."""

import io
import math
from dataclasses import asdict
from fractions import Fraction

import pytest

from fujiki_oka import (
    GroupType,
    build_resolution,
    check_identities,
    compare_2d,
    expand,
    family_type,
    hj_evaluate,
    hj_expansion,
    measure_type,
    summarize,
    sweep,
    write_sweep_csv,
)


class TestContinuedFractions:
    def test_goldens(self):
        assert hj_expansion(5, 2) == [3, 2]
        assert hj_expansion(3, 1) == [3]
        assert hj_expansion(7, 1) == [7]
        assert hj_expansion(12, 7) == [2, 4, 2]
        assert hj_expansion(2, 1) == [2]

    def test_chain_of_twos(self):
        # r/(r-1) = [2,2,...,2], the A-series
        for r in (2, 3, 5, 9):
            assert hj_expansion(r, r - 1) == [2] * (r - 1)

    def test_entries_at_least_two(self):
        for r in range(2, 80):
            for a in range(1, r):
                if math.gcd(r, a) != 1:
                    continue
                assert all(c >= 2 for c in hj_expansion(r, a))

    def test_round_trip(self):
        for r in range(2, 120):
            for a in range(1, r):
                if math.gcd(r, a) != 1:
                    continue
                assert hj_evaluate(hj_expansion(r, a)) == Fraction(r, a)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            hj_expansion(5, 0)
        with pytest.raises(ValueError):
            hj_expansion(5, 5)
        with pytest.raises(ValueError):
            hj_expansion(6, 2)
        with pytest.raises(ValueError):
            hj_evaluate([])


class TestCompare2D:
    def test_golden_5_2(self):
        cmp2 = compare_2d(5, 2)
        assert cmp2.ok
        assert cmp2.expansion == (3, 2)
        assert cmp2.exceptional_rays == ((1, 2), (3, 1))

    def test_golden_12_7(self):
        cmp2 = compare_2d(12, 7)
        assert cmp2.ok
        assert cmp2.expansion == (2, 4, 2)
        assert len(cmp2.exceptional_rays) == 3

    def test_exhaustive_small(self):
        for r in range(2, 61):
            for a in range(1, r):
                if math.gcd(r, a) != 1:
                    continue
                result = compare_2d(r, a)
                assert result.ok, f"disagreement at r={r}, a={a}: {result}"

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            compare_2d(8, 2)


class TestFamilies:
    def test_members(self):
        assert str(family_type("plus", 1)) == "1/7(1,3,1)"
        assert str(family_type("plus", 2)) == "1/13(1,3,7)"
        assert str(family_type("minus", 1)) == "1/5(1,3,1)"
        assert str(family_type("minus", 2)) == "1/11(1,3,4)"

    def test_euler_equals_order(self):
        for name in ("plus", "minus"):
            for k in range(1, 7):
                group = family_type(name, k)
                rec = measure_type(group)
                assert rec.euler == group.r
                assert rec.ok

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            family_type("plus", 0)
        with pytest.raises(ValueError):
            family_type("zero", 1)


class TestMeasure:
    def test_identities_golden(self):
        g = GroupType.from_weights(12, (1, 2, 7))
        fan = build_resolution(g)
        poly = expand(g.fraction)
        assert check_identities(fan, poly) == (True, True, True)

    def test_record_golden(self):
        rec = measure_type(GroupType.from_weights(12, (1, 2, 7)))
        assert rec.r == 12
        assert rec.weights == (1, 2, 7)
        assert rec.size == 8
        assert rec.height == -4
        assert rec.euler == 8
        assert rec.smooth_all
        assert not rec.crepant
        assert not rec.gorenstein
        assert rec.ok
        assert rec.ms >= 0

    def test_gorenstein_crepant_record(self):
        rec = measure_type(GroupType.from_weights(12, (1, 4, 7)))
        assert rec.gorenstein
        assert rec.crepant
        assert rec.euler == 12


def _strip_ms(rec):
    data = asdict(rec)
    data.pop("ms")
    return data


class TestSweep:
    def test_deterministic_apart_from_timing(self):
        first = sweep(dim=2, r_max=9)
        second = sweep(dim=2, r_max=9)
        assert [_strip_ms(a) for a in first] == [_strip_ms(b) for b in second]

    def test_order_is_sorted(self):
        records = sweep(dim=2, r_max=7)
        keys = [(rec.r, rec.weights) for rec in records]
        assert keys == sorted(keys)
        assert len(keys) == len(set(keys))

    def test_process_pool_matches_serial(self):
        serial = sweep(dim=2, r_max=8)
        parallel = sweep(dim=2, r_max=8, jobs=2)
        assert [_strip_ms(a) for a in serial] == [_strip_ms(b) for b in parallel]

    def test_counts(self):
        # weight tuples containing a 1: r^2 - (r-1)^2 of them per order
        records = sweep(dim=2, r_max=10)
        assert len(records) == sum(2 * r - 1 for r in range(2, 11))

    def test_gorenstein_filter(self):
        records = sweep(dim=3, r_max=8, gorenstein_only=True)
        assert records
        assert all(sum(rec.weights) % rec.r == 0 for rec in records)
        everything = sweep(dim=3, r_max=8)
        assert len(records) == sum(1 for rec in everything if rec.gorenstein)

    def test_crepant_filter(self):
        records = sweep(dim=3, r_max=8, crepant_only=True)
        assert records
        assert all(rec.crepant for rec in records)

    def test_all_records_ok_in_small_range(self):
        records = sweep(dim=3, r_max=10)
        assert all(rec.ok for rec in records)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            sweep(dim=3, r_max=101)
        with pytest.raises(ValueError):
            sweep(dim=2, r_max=1)
        with pytest.raises(ValueError):
            sweep(dim=1, r_max=5)

    def test_summarize(self):
        records = sweep(dim=2, r_max=6)
        stats = summarize(records)
        assert stats["types"] == len(records)
        assert stats["all_ok"]
        assert stats["failures"] == []
        assert stats["crepant"] == sum(1 for rec in records if rec.crepant)


class TestCsv:
    def test_header_and_first_row(self):
        records = sweep(dim=2, r_max=3)
        buf = io.StringIO()
        write_sweep_csv(records, buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == (
            "r,weights,S,h,chi,smooth_all,crepant,"
            "id_S_eq_h_plus_r,id_chi_eq_S,id_chi_eq_h_plus_r,ms"
        )
        assert len(lines) == len(records) + 1
        first = lines[1].split(",")
        assert first[:10] == [
            "2",
            "0 1",
            "1",
            "-1",
            "1",
            "true",
            "false",
            "true",
            "true",
            "true",
        ]
        float(first[10])

    def test_writes_to_path(self, tmp_path):
        records = sweep(dim=2, r_max=4)
        dest = tmp_path / "sweep.csv"
        write_sweep_csv(records, dest)
        text = dest.read_text()
        assert text.startswith("r,weights,")
        assert text.count("\n") == len(records) + 1
