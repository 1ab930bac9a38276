import math

import numpy as np
import pytest

from finsym.ising import (
    BETA_C,
    SECTORS,
    Background,
    IsingLattice,
    edges,
    frustration_histogram,
    gauged_partition,
    kw_dual_beta,
    kw_ratio,
    partition_bruteforce,
    partition_transfer,
    sector_partitions,
    transfer_matrix,
    weight,
)

BETAS = (0.1, 0.3, BETA_C, 1.0)


class TestWeights:
    def test_aligned_weight_is_one(self):
        for beta in (0.01, 0.5, 7.0):
            assert weight(beta, 1) == 1.0

    def test_halving_beta(self):
        assert weight(math.log(2) / 2, -1) == pytest.approx(0.5, abs=1e-15)

    def test_low_temperature_limit(self):
        assert weight(20.0, -1) < 1e-17

    def test_validation(self):
        with pytest.raises(ValueError):
            weight(-1.0, 1)
        with pytest.raises(ValueError):
            weight(1.0, 0)


class TestBruteForce:
    def test_1x1_trivial(self):
        # two spins, two self-edges each with aligned product
        lat = IsingLattice(1, 1, 0.7)
        assert partition_bruteforce(lat) == 2.0

    def test_1x1_fully_twisted(self):
        beta = 0.7
        lat = IsingLattice(1, 1, beta)
        bg = Background.from_holonomies(lat, 1, 1)
        assert partition_bruteforce(lat, bg) == pytest.approx(
            2 * math.exp(-4 * beta), rel=1e-15
        )

    def test_edge_count(self):
        lat = IsingLattice(3, 4, 1.0)
        assert len(edges(lat)) == 24

    def test_histogram_total(self):
        lat = IsingLattice(2, 3, 1.0)
        assert int(frustration_histogram(lat).sum()) == 2**6

    def test_2x2_histogram_by_hand(self):
        # the 8 edges are 4 doubled pairs forming a 4-cycle of sites; the
        # number of unequal pairs around a cycle is even, so the frustration
        # count is 2m with m in {0, 2, 4} and multiplicities 2, 12, 2
        lat = IsingLattice(2, 2, 0.5)
        hist = frustration_histogram(lat)
        expected = {0: 2, 4: 12, 8: 2}
        assert {k: int(v) for k, v in enumerate(hist) if v} == expected

    def test_2x2_twisted_histogram_by_hand(self):
        # with the spatial wrap twisted, each doubled horizontal pair has
        # exactly one frustrated edge whatever the spins; the vertical pairs
        # contribute 0, 2 or 4 with multiplicities 4, 8, 4
        lat = IsingLattice(2, 2, 0.5)
        hist = frustration_histogram(lat, Background.from_holonomies(lat, 1, 0))
        expected = {2: 4, 4: 8, 6: 4}
        assert {k: int(v) for k, v in enumerate(hist) if v} == expected

    def test_guard(self):
        with pytest.raises(ValueError):
            partition_bruteforce(IsingLattice(7, 3, 1.0))


class TestTransferMatrix:
    def test_positive_entries(self):
        m = transfer_matrix(3, 0.4)
        assert np.all(m > 0)

    def test_perron_frobenius_gap(self):
        for beta in BETAS:
            m = transfer_matrix(4, beta)
            eigs = np.sort(np.abs(np.linalg.eigvals(m)))[::-1]
            assert eigs[0] - eigs[1] > 0

    def test_2x2_matches_bruteforce(self):
        lat = IsingLattice(2, 2, 0.3)
        zb = partition_bruteforce(lat)
        zt = partition_transfer(lat)
        assert abs(zb - zt) / zb <= 1e-12

    @pytest.mark.parametrize("shape", [(1, 1), (1, 4), (4, 1), (2, 3), (3, 3), (4, 4)])
    @pytest.mark.parametrize("beta", BETAS)
    def test_all_sectors_match_bruteforce(self, shape, beta):
        lat = IsingLattice(shape[0], shape[1], beta)
        for sector in SECTORS:
            zb = partition_bruteforce(lat, Background.from_holonomies(lat, *sector))
            zt = partition_transfer(lat, sector)
            assert abs(zb - zt) / zb <= 1e-12

    def test_orientation_swap_symmetry(self):
        beta = 0.37
        for (length, time_steps) in [(2, 3), (1, 5), (4, 2)]:
            a = IsingLattice(length, time_steps, beta)
            b = IsingLattice(time_steps, length, beta)
            for h_x, h_t in SECTORS:
                za = partition_bruteforce(a, Background.from_holonomies(a, h_x, h_t))
                zb = partition_bruteforce(b, Background.from_holonomies(b, h_t, h_x))
                assert za == pytest.approx(zb, rel=1e-13)

    def test_width_guard(self):
        with pytest.raises(ValueError):
            transfer_matrix(13, 0.5)


class TestBackgrounds:
    def test_coboundary_invariance(self):
        lat = IsingLattice(3, 3, 0.44)
        for sector in SECTORS:
            bg = Background.from_holonomies(lat, *sector)
            z = partition_bruteforce(lat, bg)
            for site in ((0, 0), (1, 2), (2, 1)):
                flipped = bg.flip_site(*site)
                assert partition_bruteforce(lat, flipped) == pytest.approx(
                    z, rel=1e-12
                )

    def test_self_edge_sites_gauge_trivially(self):
        lat = IsingLattice(1, 2, 0.8)
        bg = Background.trivial(lat)
        z = partition_bruteforce(lat, bg)
        assert partition_bruteforce(lat, bg.flip_site(0, 0)) == pytest.approx(
            z, rel=1e-14
        )

    def test_validation(self):
        lat = IsingLattice(2, 2, 1.0)
        with pytest.raises(ValueError):
            Background(lat, (1,) * 7)
        with pytest.raises(ValueError):
            Background(lat, (1,) * 7 + (2,))


class TestKramersWannier:
    def test_involution(self):
        for beta in (0.1, 0.44, 1.0, 2.0):
            assert kw_dual_beta(kw_dual_beta(beta)) == pytest.approx(beta, abs=1e-12)

    def test_fixed_point(self):
        assert math.sinh(2 * BETA_C) == pytest.approx(1.0, abs=1e-12)
        assert kw_dual_beta(BETA_C) == pytest.approx(BETA_C, abs=1e-12)
        assert BETA_C == pytest.approx(0.44068679350977147, abs=1e-15)

    def test_monotone_decreasing(self):
        grid = np.linspace(0.05, 3.0, 40)
        duals = [kw_dual_beta(b) for b in grid]
        assert all(x > y for x, y in zip(duals, duals[1:]))

    def test_gauged_1x1_closed_form(self):
        beta = 0.9
        lat = IsingLattice(1, 1, beta)
        expected = (1 + math.exp(-2 * beta)) ** 2
        assert gauged_partition(lat) == pytest.approx(expected, rel=1e-14)

    def test_regauging_returns_original(self):
        lat = IsingLattice(2, 3, 0.52)
        z = partition_bruteforce(lat)
        regauged = 0.5 * sum(
            gauged_partition(lat, dual_sector=k) for k in SECTORS
        )
        assert regauged == pytest.approx(z, rel=1e-12)

    @pytest.mark.parametrize("shape", [(1, 1), (2, 2), (3, 3), (2, 3)])
    def test_ratio_constant_over_beta_grid(self, shape):
        # pin the constant from two betas, then check a 10-point grid
        length, time_steps = shape
        c1 = kw_ratio(IsingLattice(length, time_steps, 0.2))
        c2 = kw_ratio(IsingLattice(length, time_steps, 0.9))
        assert abs(c1 - c2) / c1 <= 1e-9
        for beta in np.linspace(0.15, 1.2, 10):
            r = kw_ratio(IsingLattice(length, time_steps, float(beta)))
            assert abs(r - c1) / c1 <= 1e-9

    def test_gauged_at_critical_point_ratio(self):
        # at the self-dual point the gauged/original ratio is the same
        # beta-independent constant in the KW normalization
        lat = IsingLattice(2, 2, BETA_C)
        assert kw_ratio(lat) == pytest.approx(kw_ratio(IsingLattice(2, 2, 0.3)),
                                              rel=1e-9)

    def test_sector_partitions_both_methods(self):
        lat = IsingLattice(2, 2, 0.61)
        bf = sector_partitions(lat, method="bruteforce")
        tm = sector_partitions(lat, method="transfer")
        for sector in SECTORS:
            assert bf[sector] == pytest.approx(tm[sector], rel=1e-12)


class TestValidation:
    def test_lattice_validation(self):
        with pytest.raises(ValueError):
            IsingLattice(0, 1, 1.0)
        with pytest.raises(ValueError):
            IsingLattice(1, 1, 0.0)
