# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
from dlp_engine.constraints import LevelConstraints, ZERO


class TestLevelConstraints:
    def test_chain(self):
        constraints = LevelConstraints(['p', 'q', 'r'])
        constraints.greater('p', 'q')
        constraints.greater('q', 'r')
        assert constraints.solve() == {'p': 2, 'q': 1, 'r': 0}

    def test_no_constraint(self):
        assert LevelConstraints(['p']).solve() == {'p': 0}
        assert LevelConstraints().solve() == {}

    def test_strict_cycle(self):
        constraints = LevelConstraints()
        constraints.greater('p', 'q')
        constraints.greater_equal('q', 'p')
        assert not constraints.is_feasible()

    def test_strict_self_loop(self):
        constraints = LevelConstraints()
        constraints.greater('p', 'p')
        assert constraints.solve() is None

    def test_weak_cycle(self):
        constraints = LevelConstraints()
        constraints.greater_equal('p', 'q')
        constraints.greater_equal('q', 'p')
        constraints.greater('r', 'q')
        assert constraints.solve() == {'p': 0, 'q': 0, 'r': 1}

    def test_zero(self):
        constraints = LevelConstraints(['p', 'q'], with_zero=True)
        constraints.greater('p', ZERO)
        constraints.greater_equal(ZERO, 'q')
        assert constraints.solve() == {'p': 1, 'q': 0}
        assert ZERO in constraints.nodes

    def test_nothing_below_zero(self):
        constraints = LevelConstraints(['p'], with_zero=True)
        constraints.greater(ZERO, 'p')
        assert not constraints.is_feasible()

    def test_copy_is_independent(self):
        constraints = LevelConstraints(['p', 'q'])
        other = constraints.copy()
        other.greater('p', 'q')
        other.greater('q', 'p')
        assert constraints.is_feasible()
        assert not other.is_feasible()
