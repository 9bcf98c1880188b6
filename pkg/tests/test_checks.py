"""The instance invariant suite: passes on good input, and actually
fires when a count is wrong."""

import random

import ncres.checks as checks
from helpers import (augmentation_module, nilpotent_enveloping,
                     random_module, random_presentation)


def test_flagship_instance_passes_everything():
    mod = augmentation_module(nilpotent_enveloping())
    for name, failures in checks.run_all(mod, dmax=4, trials=30, seed=3):
        assert failures == [], (name, failures)


def test_random_instances_pass_everything():
    for seed in range(6):
        rng = random.Random(400 + seed)
        mod = random_module(rng, random_presentation(rng, max_rel_deg=3))
        for name, failures in checks.run_all(mod, dmax=4, trials=12,
                                             seed=seed):
            assert failures == [], (seed, name, failures)


def test_dimension_check_detects_wrong_ideal_count(monkeypatch):
    mod = augmentation_module(nilpotent_enveloping())
    real = checks.ideal_component_dim
    monkeypatch.setattr(checks, "ideal_component_dim",
                        lambda alg, d: real(alg, d) + 1)
    failures = checks.check_dimension_equalities(mod, dmax=3)
    assert any("ideal degree 3" in f for f in failures)


def test_dimension_check_detects_wrong_module_count(monkeypatch):
    mod = augmentation_module(nilpotent_enveloping())
    real = checks.module_component_dim
    monkeypatch.setattr(checks, "module_component_dim",
                        lambda m, d: real(m, d) + (1 if d == 2 else 0))
    failures = checks.check_dimension_equalities(mod, dmax=2)
    assert any("module degree 2" in f for f in failures)


def test_samplers_respect_the_grading():
    rng = random.Random(9)
    mod = augmentation_module(nilpotent_enveloping())
    field = mod.algebra.field
    for _ in range(50):
        p = checks._random_poly(rng, field, 3, 4)
        assert all(len(w) == 4 for w in p)
        e = checks._random_elem(rng, field, 3, (0, 2), 3)
        assert all(len(w) + (0, 2)[i] == 3 for (i, w) in e)
        assert all(c != field.zero for c in p.values())
