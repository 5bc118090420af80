"""Invariant bookkeeping through blow-up and rational blow-down."""

from fractions import Fraction

import pytest

from blowdown.invariants import (
    EVEN,
    ODD,
    InsufficientRank,
    ManifoldInvariants,
    NegativeDimension,
    NonIntegralDimension,
    NotSimplyConnected,
    OddDimension,
    SwRecord,
    blow_up_invariants,
    blowup_basic_classes,
    homeo_type,
    kotschick_bound,
    rational_blowdown,
    rational_surface_invariants,
    sw_dimension,
    wall_crossing_delta,
)
from blowdown.lattice import Ambient


class TestRationalSurface:
    def test_thirteen(self):
        inv = rational_surface_invariants(13)
        assert inv.as_tuple() == (1, 13, 16, -12, -4)
        assert inv.parity == ODD and inv.simply_connected

    def test_seven(self):
        assert rational_surface_invariants(7).c1sq == 2

    def test_nine(self):
        inv = rational_surface_invariants(9)
        assert (inv.c1sq, inv.euler, inv.signature) == (0, 12, -8)

    def test_consistency_enforced(self):
        with pytest.raises(ValueError):
            ManifoldInvariants(1, 2, 5, 0, 10, ODD, True)  # sigma wrong
        with pytest.raises(ValueError):
            ManifoldInvariants(1, 2, 5, -1, 10, ODD, True)  # c1sq wrong
        with pytest.raises(ValueError):
            ManifoldInvariants(1, 2, 6, -1, 9, ODD, True)  # euler wrong for sc


class TestRationalBlowdown:
    def test_p7(self):
        inv = rational_blowdown(rational_surface_invariants(13), 7, assume_simply_connected=True)
        assert inv.as_tuple() == (1, 7, 10, -6, 2)
        assert inv.simply_connected

    def test_p5(self):
        inv = rational_blowdown(rational_surface_invariants(12), 5, assume_simply_connected=True)
        assert inv.as_tuple() == (1, 8, 11, -7, 1)

    def test_p2(self):
        inv = rational_blowdown(rational_surface_invariants(13), 2, assume_simply_connected=True)
        assert inv.as_tuple() == (1, 12, 15, -11, -3)

    def test_matches_direct_count(self):
        blown_down = rational_blowdown(
            rational_surface_invariants(13), 7, assume_simply_connected=True
        )
        assert blown_down == rational_surface_invariants(7)

    def test_insufficient_rank(self):
        with pytest.raises(InsufficientRank):
            rational_blowdown(rational_surface_invariants(3), 7)

    def test_pi1_not_asserted(self):
        inv = rational_blowdown(rational_surface_invariants(13), 7)
        assert not inv.simply_connected
        assert inv.as_tuple() == (1, 7, 10, -6, 2)

    def test_consistency_after_transforms(self):
        inv = rational_surface_invariants(11)
        for p in (2, 3, 4):
            inv = rational_blowdown(inv, p, assume_simply_connected=True)
            assert inv.c1sq == 3 * inv.signature + 2 * inv.euler


class TestSwDimension:
    def test_zero_for_anticanonical(self):
        inv = rational_blowdown(rational_surface_invariants(13), 7, assume_simply_connected=True)
        assert sw_dimension(2, inv) == 0

    def test_zero_identity_for_own_c1sq(self):
        for n in range(0, 14):
            inv = rational_surface_invariants(n)
            assert sw_dimension(inv.c1sq, inv) == 0

    def test_positive_dimension(self):
        assert sw_dimension(10, rational_surface_invariants(7)) == 2

    def test_non_integral(self):
        with pytest.raises(NonIntegralDimension):
            sw_dimension(3, rational_surface_invariants(7))

    def test_negative_returned(self):
        assert sw_dimension(-2, rational_surface_invariants(7)) == -1


class TestWallCrossing:
    def test_dimension_zero(self):
        assert wall_crossing_delta(0) == -1

    def test_dimension_two(self):
        assert wall_crossing_delta(2) == -1

    def test_odd_rejected(self):
        with pytest.raises(OddDimension):
            wall_crossing_delta(1)

    def test_negative_rejected(self):
        with pytest.raises(NegativeDimension):
            wall_crossing_delta(-2)


class TestKotschickBound:
    def _record(self, b2minus):
        return ManifoldInvariants.closed_simply_connected(1, b2minus, ODD)

    def test_blown_up_exotic(self):
        inv = self._record(8)  # e = 11, sigma = -7
        assert (inv.euler, inv.signature) == (11, -7)
        assert kotschick_bound(inv, 0) == Fraction(1, 2)

    def test_blown_down_base(self):
        inv = self._record(7)  # e = 10, sigma = -6
        assert kotschick_bound(inv, 0) == 1

    def test_elliptic_surface_values(self):
        inv = self._record(9)  # e = 12, sigma = -8
        assert kotschick_bound(inv, 0) == 0

    def test_monotone_in_dimension(self):
        inv = self._record(8)
        values = [kotschick_bound(inv, d) for d in range(4)]
        assert all(b - a == -4 for a, b in zip(values, values[1:]))

    def test_negative_dimension_rejected(self):
        with pytest.raises(NegativeDimension):
            kotschick_bound(self._record(8), -1)


class TestHomeoType:
    def test_seven(self):
        inv = ManifoldInvariants.closed_simply_connected(1, 7, ODD)
        assert homeo_type(inv) == "CP^2 # 7CPbar^2"

    def test_eight(self):
        inv = ManifoldInvariants.closed_simply_connected(1, 8, ODD)
        assert homeo_type(inv) == "CP^2 # 8CPbar^2"

    def test_plane_itself(self):
        inv = ManifoldInvariants.closed_simply_connected(1, 0, ODD)
        assert homeo_type(inv) == "CP^2"

    def test_not_simply_connected(self):
        inv = ManifoldInvariants(1, 7, 10, -6, 2, ODD, False)
        with pytest.raises(NotSimplyConnected):
            homeo_type(inv)

    def test_even_unclassified(self):
        inv = ManifoldInvariants.closed_simply_connected(1, 1, EVEN)
        assert homeo_type(inv) == "unclassified"


class TestBlowupBasicClasses:
    def test_canonical_pair(self):
        K = Ambient(7).canonical_class()
        out = blowup_basic_classes([K])
        assert len(out) == 2
        plus, minus = out
        assert plus.ambient == Ambient(8)
        E = Ambient(8).e(8)
        assert plus - minus == 2 * E
        assert plus.square == K.square - 1 == minus.square

    def test_empty(self):
        assert blowup_basic_classes([]) == []

    def test_square_drop(self):
        ambient = Ambient(3)
        classes = [ambient.h(), ambient.canonical_class()]
        out = blowup_basic_classes(classes)
        assert [c.square for c in out] == [0, 0, 5, 5]


class TestBlowUpInvariants:
    def test_transform(self):
        inv = blow_up_invariants(rational_surface_invariants(7))
        assert inv.as_tuple() == (1, 8, 11, -7, 1)
        assert inv.parity == ODD

    def test_roundtrip_with_surface_count(self):
        assert blow_up_invariants(rational_surface_invariants(7)) == rational_surface_invariants(8)


class TestSwRecord:
    def test_consistent_delta(self):
        SwRecord("K", 0, -1, "chamber")
        SwRecord("K", 2, -1, "chamber")
        SwRecord("K", 1, None, "odd dimension, no jump")

    def test_inconsistent_delta_rejected(self):
        with pytest.raises(ValueError):
            SwRecord("K", 0, 1, "chamber")
