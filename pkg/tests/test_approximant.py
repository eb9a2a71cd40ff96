"""Tests for approximant evaluation, meshes and error sweeps."""

import numpy as np
import pytest

from padepencil import (
    AllZero,
    PoleHit,
    PoleResidueForm,
    RationalApproximant,
    ZeroPole,
    error_sweep,
    eval_pole_residue,
    eval_rational,
    poles_and_zeros,
    unit_disk_mesh,
)


class TestEvalRational:
    def test_polynomial_over_one(self):
        ra = RationalApproximant([1.0, 2.0, 3.0], [1.0])
        assert eval_rational(ra, 2.0) == 1 + 4 + 12

    def test_simple_pole(self):
        ra = RationalApproximant([1.0], [1.0, -1.0])  # 1/(1-z)
        assert eval_rational(ra, 0.5) == pytest.approx(2.0)
        with pytest.raises(PoleHit):
            eval_rational(ra, 1.0)

    def test_complex_argument(self):
        ra = RationalApproximant([0.0, 1.0], [1.0, 0.0, 1.0])  # z/(1+z^2)
        z = 0.3 + 0.4j
        assert eval_rational(ra, z) == pytest.approx(z / (1 + z * z))


class TestEvalPoleResidue:
    def test_single_term(self):
        prf = PoleResidueForm(head=[], shift=0, terms=[(2.0, 3.0)])
        #  3/(1 - z/2) at z=1 -> 6
        assert eval_pole_residue(prf, 1.0) == pytest.approx(6.0)

    def test_head_and_shift_composition(self):
        # head 1 + 2z, then z^2 * 5/(1 - z/3)
        prf = PoleResidueForm(head=[1.0, 2.0], shift=2, terms=[(3.0, 5.0)])
        z = 0.5
        expected = 1 + 2 * z + z**2 * 5 / (1 - z / 3)
        assert eval_pole_residue(prf, z) == pytest.approx(expected)

    def test_large_argument_stays_finite(self):
        prf = PoleResidueForm(head=[], shift=0, terms=[(2.0, 1.0)])
        #  p/(p - z) -> 0 as |z| grows; no overflow
        assert abs(eval_pole_residue(prf, 1e12)) < 1e-11

    def test_pole_hit(self):
        prf = PoleResidueForm(head=[], shift=0, terms=[(2.0, 1.0)])
        with pytest.raises(PoleHit):
            eval_pole_residue(prf, 2.0)

    def test_origin_pole_with_zero_weight_is_skipped(self):
        prf = PoleResidueForm(head=[], shift=0, terms=[(0.0, 0.0), (2.0, 1.0)])
        assert eval_pole_residue(prf, 1.0) == pytest.approx(2.0)

    def test_origin_pole_with_weight_rejected(self):
        prf = PoleResidueForm(head=[], shift=0, terms=[(0.0, 1.0)])
        with pytest.raises(ZeroPole):
            eval_pole_residue(prf, 0.5)


class TestPolesAndZeros:
    def test_sorted_roots(self):
        # (z-2)(z+1) over (z-1)(z+3): low-first coefficient arrays
        ra = RationalApproximant([-2.0, -1.0, 1.0], [-3.0, 2.0, 1.0])
        poles, zeros = poles_and_zeros(ra)
        np.testing.assert_allclose(poles, [1.0, -3.0], atol=1e-12)
        np.testing.assert_allclose(zeros, [-1.0, 2.0], atol=1e-12)

    def test_zero_numerator_raises(self):
        ra = RationalApproximant([0.0], [1.0, 1.0])
        with pytest.raises(AllZero):
            poles_and_zeros(ra)


class TestUnitDiskMesh:
    def test_coarse_counts(self):
        assert unit_disk_mesh(1.0).size == 5
        assert unit_disk_mesh(0.5).size == 13

    def test_fine_count(self):
        # lattice points with i^2 + j^2 <= 50^2
        assert unit_disk_mesh(0.02).size == 7845

    def test_all_points_inside_closed_disk(self):
        mesh = unit_disk_mesh(0.1)
        assert np.abs(mesh).max() <= 1.0 + 1e-15
        # symmetric about both axes
        assert mesh.sum() == pytest.approx(0.0, abs=1e-12)

    def test_spacing_validated(self):
        with pytest.raises(ValueError):
            unit_disk_mesh(0.0)
        with pytest.raises(ValueError):
            unit_disk_mesh(1.5)


class TestErrorSweep:
    def test_exact_match_gives_zeros(self):
        ra = RationalApproximant([1.0], [1.0, -1.0])
        sweep = error_sweep(lambda z: eval_rational(ra, z),
                            lambda z: 1.0 / (1.0 - z),
                            np.linspace(-0.5, 0.5, 11))
        assert sweep.max_error < 1e-15
        assert not sweep.flagged.any()

    def test_pole_hit_is_flagged_not_fatal(self):
        ra = RationalApproximant([1.0], [1.0, -1.0])
        pts = np.array([0.5, 1.0, 2.0])
        sweep = error_sweep(lambda z: eval_rational(ra, z),
                            lambda z: 1.0 / (1.0 - z),
                            pts)
        assert list(sweep.flagged) == [False, True, False]
        assert sweep.errors[1] == np.inf
        assert sweep.max_error == np.inf
        assert sweep.argmax_point == 1.0

    def test_reference_zero_division_is_flagged(self):
        sweep = error_sweep(lambda z: 0.0, lambda z: 1.0 / complex(z), np.array([0.0, 1.0]))
        assert sweep.flagged[0]
        assert not sweep.flagged[1]

    def test_max_and_argmax(self):
        pts = np.array([0.0, 1.0, 2.0])
        sweep = error_sweep(lambda z: z * z, lambda z: 0.0, pts)
        assert sweep.max_error == 4.0
        assert sweep.argmax_point == 2.0

    def test_empty_points_rejected(self):
        with pytest.raises(ValueError):
            error_sweep(lambda z: z, lambda z: z, [])
