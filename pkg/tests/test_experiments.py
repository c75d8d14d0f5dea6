from __future__ import annotations

import numpy as np
import pytest

from fuzzyimpl.algebra import Chain
from fuzzyimpl.basebuild import is_saturated
from fuzzyimpl.experiments import (
    FIG2_TIMING,
    FIG34_TIMING,
    ExperimentConfig,
    fig1_chain,
    instance_rng,
    random_context,
    random_context_in_bucket,
    random_saturated_nonredundant_theory,
    run_fig1,
    run_fig2,
    run_fig34,
    strip_timing,
)
from fuzzyimpl.implications import is_nonredundant, remove_redundancy


class TestRandomContext:
    def test_extremes(self):
        chain = Chain.lukasiewicz(4)
        rng = np.random.default_rng(0)
        assert random_context(rng, chain, 5, 5, 0).density() == 0
        assert random_context(rng, chain, 5, 5, 100).density() == 100

    def test_boolean_half(self):
        ctx = random_context(instance_rng(7, 0), Chain.lukasiewicz(1), 10, 10, 50)
        assert 40 <= ctx.density() <= 60

    @pytest.mark.parametrize("center", [1, 26, 51, 96])
    def test_bucket(self, center):
        ctx = random_context_in_bucket(instance_rng(3, center), Chain.lukasiewicz(4), 10, 10, center)
        assert center - 2.5 <= ctx.density() < center + 2.5

    def test_same_seed_same_context(self):
        chain = Chain.lukasiewicz(2)
        a = random_context(instance_rng(5, 1, 2), chain, 6, 4, 30)
        b = random_context(instance_rng(5, 1, 2), chain, 6, 4, 30)
        assert a.table == b.table


class TestRandomTheory:
    def test_single_boolean_attribute(self):
        seen = set()
        for seed in range(40):
            t = random_saturated_nonredundant_theory(np.random.default_rng(seed), Chain.lukasiewicz(1), 1, 1)
            seen.add(tuple(t.pairs))
        assert seen <= {(), (((0,), (1,)),)}
        assert (((0,), (1,)),) in seen

    @pytest.mark.parametrize("seed", range(10))
    def test_postconditions(self, seed):
        chain = Chain.bl(10, (0, 4, 10))
        t = random_saturated_nonredundant_theory(np.random.default_rng(seed), chain, 6, 10)
        assert 0 < len(t) <= 10
        assert is_saturated(t) and is_nonredundant(t)
        assert remove_redundancy(t) == t


class TestIdempotentChain:
    def test_counts(self):
        rng = np.random.default_rng(0)
        for count in (2, 3, 6, 11):
            assert len(fig1_chain(rng, 10, count, "identity").idempotents) == count

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            fig1_chain(np.random.default_rng(0), 10, 12, "identity")


class TestRuns:
    def test_success_ratio_globalization_always_full(self):
        cfg = ExperimentConfig(instances=15, attributes=4, scale=10, hedge="globalization", formulas=6, spot_check=1)
        table = run_fig1(cfg)
        assert table.column("success_ratio") == ["100.0000"] * 4

    def test_success_ratio_deterministic(self):
        cfg = ExperimentConfig(seed=11, instances=10, attributes=4, scale=10, hedge="identity", formulas=6)
        assert run_fig1(cfg).to_csv() == run_fig1(cfg).to_csv()

    def test_timing_comparison_agreement_and_determinism(self):
        cfg = ExperimentConfig(
            seed=4, instances=3, objects=8, attributes=3, scale=2, densities=(11, 51), repeats=1, graph_repeats=1,
            spot_check=1,
        )
        first, second = run_fig2(cfg), run_fig2(cfg)
        assert first.column("agree") == [3, 3]
        assert strip_timing(first.to_csv(), FIG2_TIMING) == strip_timing(second.to_csv(), FIG2_TIMING)

    def test_size_by_density_determinism(self):
        cfg = ExperimentConfig(seed=2, instances=3, objects=6, attributes=5, scale=4, densities=(21, 61), repeats=1)
        a, b = run_fig34(cfg), run_fig34(cfg)
        assert strip_timing(a.to_csv(), FIG34_TIMING) == strip_timing(b.to_csv(), FIG34_TIMING)
        assert "mean_time" not in strip_timing(a.to_csv(), FIG34_TIMING)

    def test_rows_do_not_depend_on_other_rows(self):
        base = dict(seed=9, instances=6, attributes=4, scale=10, hedge="identity", formulas=5)
        full = run_fig1(ExperimentConfig(**base, idempotent_counts=(2, 3, 6)))
        alone = run_fig1(ExperimentConfig(**base, idempotent_counts=(6,)))
        assert full.rows[-1] == alone.rows[0]

    def test_csv_header_declares_distribution(self):
        cfg = ExperimentConfig(instances=1, objects=5, attributes=3, scale=2, densities=(26,), repeats=1)
        text = run_fig34(cfg).to_csv()
        assert "Binomial" in text.split("\ndensity,")[0]

    def test_config_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(instances=0)
