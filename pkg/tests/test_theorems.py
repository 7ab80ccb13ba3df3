"""Property tests: the proven inclusions on large seeded samples."""

import itertools

import pytest

from pte_toolkit.analysis import classify, replay_record, scan
from pte_toolkit.game import Game
from pte_toolkit.minimax import minimax_rationalizable, single_deletion_fixpoint
from pte_toolkit.reports import scan_record, write_records
from pte_toolkit.sampler import SampleConfig, iter_games
from tests import oracle


class TestInclusions:
    """Test zero violations on seeded samples."""

    def test_general_position_3x3(self):
        """Test 10,000 permutation-sampled 3x3 games."""
        stats = scan(SampleConfig(shape=(3, 3), count=10_000, seed=2024))
        assert stats.games == 10_000
        assert stats.general_position == 10_000
        assert stats.violations == 0

    def test_symmetric_3x3(self):
        """Test 10,000 symmetric games (PTE = Hofstadter when it exists)."""
        stats = scan(SampleConfig(shape=(3, 3), count=10_000, seed=2024, symmetric=True))
        assert stats.violations == 0

    def test_symmetric_4x4(self):
        """Test that a symmetric PTE, when it exists, is the Hofstadter profile."""
        config = SampleConfig(shape=(4, 4), count=500, seed=6, symmetric=True)
        for _, game in iter_games(config):
            report = classify(game)
            if report.pte_profile is not None:
                assert report.pte_profile == report.hofstadter

    def test_pareto_against_oracle(self):
        """Test that the PTE is undominated by the pairwise double loop."""
        for _, game in iter_games(SampleConfig(shape=(3, 3), count=500, seed=12)):
            report = classify(game)
            if report.pte_profile is not None:
                t = oracle.table(game.strategy_counts, game.payoffs)
                assert report.pte_profile in oracle.pareto_optimal(t)

    def test_translucent_against_oracle(self):
        """Test the translucent set and IR inside it by brute force."""
        for _, game in iter_games(SampleConfig(shape=(3, 3), count=500, seed=14)):
            report = classify(game)
            t = oracle.table(game.strategy_counts, game.payoffs)
            profiles, _ = oracle.translucent(t, game.strategy_counts)
            assert report.translucent == profiles
            assert oracle.individually_rational(t, game.player_count) <= profiles

    def test_hofstadter_against_oracle(self):
        """Test the Hofstadter profile against the diagonal maximum."""
        config = SampleConfig(shape=(3, 3), count=300, seed=13, symmetric=True)
        for _, game in iter_games(config):
            t = oracle.table(game.strategy_counts, game.payoffs)
            assert classify(game).hofstadter == oracle.hofstadter(t, game.strategy_counts)


class TestMinimaxOrderIndependence:
    """Test the deletion-order independence of minimax-rationalizability."""

    def test_hundred_orders(self):
        """Test 100 games with 100 random deletion orders each."""
        for _, game in iter_games(SampleConfig(shape=(3, 3), count=100, seed=77)):
            expected = minimax_rationalizable(game).active
            for order_seed in range(100):
                assert single_deletion_fixpoint(game, order_seed) == expected


class TestTwoByTwo:
    """Test that 2x2 PTEs are always minimax-rationalizable."""

    def test_exhaustive(self):
        """Test every 2x2 game with ordinal payoffs 1..4."""
        for first in itertools.permutations(range(1, 5)):
            for second in itertools.permutations(range(1, 5)):
                game = Game(strategy_counts=(2, 2), payoffs=list(zip(first, second)))
                report = classify(game)
                assert report.violations == []
                assert report.translucent == report.individually_rational
                if report.pte_profile is not None:
                    assert report.pte_minimax_rationalizable

    def test_sampled(self):
        """Test a seeded 2x2 scan."""
        stats = scan(SampleConfig(shape=(2, 2), count=5_000, seed=31))
        assert stats.pte_not_minimax == 0
        assert stats.records == []


class TestDeterminism:
    """Test byte-identical reports."""

    def test_workers_and_repeats(self, tmp_path):
        """Test one and two worker processes, and a repeated run."""
        config = SampleConfig(shape=(3, 3), count=3_000, seed=99)
        texts = []
        for run, workers in enumerate((1, 2, 1)):
            stats = scan(config, workers=workers, chunk_size=500)
            path = tmp_path / f"run{run}.jsonl"
            write_records([scan_record(stats, config.seed), *stats.records], path)
            texts.append(path.read_bytes())
        assert texts[0] == texts[1] == texts[2]


@pytest.mark.slow
class TestStatistics:
    """Test the indicative statistics of 100,000 3x3 games."""

    def test_pte_rate_and_counterexamples(self):
        """Test the PTE rate band and the rare non-rationalizable PTEs."""
        stats = scan(SampleConfig(shape=(3, 3), count=100_000, seed=0), workers=4)
        assert stats.violations == 0
        assert stats.band_diagnostics() == [], stats.band_diagnostics()
        assert 0.65 <= stats.pte_rate <= 0.85
        assert stats.not_minimax_rate < 0.01
        counterexamples = [
            r for r in stats.records if r["kind"] == "pte_not_minimax_rationalizable"
        ]
        assert counterexamples
        assert all(replay_record(r) for r in counterexamples[:5])
