"""Random streams for instance generation.

One shared RandomState serves a command run; it is seeded from the run
settings so that a seed given on the command line reproduces every drawn
instance. Test suites and the selftest take private states instead."""
import logging

import numpy as np

import qcover.settings as settings

_shared_state = np.random.RandomState()
_seed = None


def seed_rng(seed=None):
    """Seeds the shared stream; with no seed the registered (or default)
    "seed" setting is used."""
    global _seed
    _seed = int(settings.resolve_setting("seed", seed))
    _shared_state.seed(_seed)
    logging.debug(f"Shared random stream seeded with {_seed}")


def current_seed():
    """The seed of the shared stream, or None before seed_rng()."""
    return _seed


def get_rng():
    if _seed is None:
        logging.warning("Random instances drawn from an unseeded stream "
                        "will not be reproducible")
    return _shared_state


def make_random_state(seed):
    """A private stream, independent of the shared one."""
    return np.random.RandomState(int(seed))
