import logging

import qcover.config as config
import qcover.rng as rng
import qcover.settings as settings


class TestSettings:
    def test_defaults(self):
        assert settings.get_setting("size_gate") == config.default_size_gate
        assert settings.get_setting("jobs") == config.default_jobs

    def test_register_overrides(self):
        settings.register_settings({"jobs": 4})
        settings.register_settings({"node_budget": 10})
        assert settings.get_setting("jobs") == 4
        assert settings.get_setting("node_budget") == 10

    def test_resolve_prefers_explicit(self):
        settings.register_settings({"jobs": 4})
        assert settings.resolve_setting("jobs", 2) == 2
        assert settings.resolve_setting("jobs", None) == 4

    def test_registry_is_a_copy(self):
        registry = settings.get_registry()
        registry["jobs"] = 99
        assert settings.get_setting("jobs") == config.default_jobs

    def test_clear(self):
        settings.register_settings({"jobs": 4})
        settings.clear_settings()
        assert settings.get_setting("jobs") == config.default_jobs


class TestRng:
    def test_seeded_streams_repeat(self):
        rng.seed_rng(5)
        first = rng.get_rng().randint(0, 1000, size=5).tolist()
        rng.seed_rng(5)
        assert rng.get_rng().randint(0, 1000, size=5).tolist() == first

    def test_seed_from_settings(self):
        settings.register_settings({"seed": 9})
        rng.seed_rng()
        assert rng.current_seed() == 9
        first = rng.get_rng().randint(0, 1000, size=5).tolist()
        rng.seed_rng(9)
        assert rng.get_rng().randint(0, 1000, size=5).tolist() == first

    def test_explicit_seed_wins(self):
        settings.register_settings({"seed": 9})
        rng.seed_rng(4)
        assert rng.current_seed() == 4

    def test_seeded_access_is_quiet(self, mocker):
        rng.seed_rng(1)
        spy = mocker.spy(logging, "warning")
        rng.get_rng()
        assert spy.call_count == 0

    def test_private_state_independent(self):
        first = rng.make_random_state(3).randint(0, 1000, size=5)
        second = rng.make_random_state(3).randint(0, 1000, size=5)
        assert first.tolist() == second.tolist()

    def test_unseeded_access_warns(self, mocker):
        mocker.patch.object(rng, "_seed", None)
        spy = mocker.spy(logging, "warning")
        rng.get_rng()
        assert spy.call_count == 1
