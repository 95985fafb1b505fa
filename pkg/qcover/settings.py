import qcover.config as config

_settings_registry = {}

# access to the registry is masked behind accessor functions so callers
# can't mutate it by accident

_DEFAULTS = {
    "jobs": config.default_jobs,
    "size_gate": config.default_size_gate,
    "node_budget": config.default_node_budget,
    "seed": config.default_seed
}


def register_settings(settings_dict):
    global _settings_registry
    _settings_registry = {**_settings_registry, **settings_dict}


def get_setting(name):
    try:
        return _settings_registry[name]
    except KeyError:
        return _DEFAULTS[name]


def resolve_setting(name, value):
    """Returns the explicitly given value, or the registered (or default)
    setting when the value is None."""
    return get_setting(name) if value is None else value


def get_registry():
    return {**_DEFAULTS, **_settings_registry}


def clear_settings():
    global _settings_registry
    _settings_registry = {}
