"""
Access to the PATH_FACTORS settings dict with documented defaults.

Falls back to the defaults when Django settings are not configured, so the
algorithm modules can be imported as a plain library.
"""

from django.conf import settings

DEFAULTS = {
    'SEARCH_NODE_BUDGET': 5_000_000,
    'FULL_CHECK_MAX_ORDER': 14,
    'EXHAUSTIVE_MAX_ORDER': 10,
    'STRICT_CHECKS': False,
    'REPORT_SCHEMA_VERSION': 1,
    'PROGRESS_EVERY': 5000,
}


def path_factor_setting(name: str):
    """Return PATH_FACTORS[name], or its default"""
    if name not in DEFAULTS:
        raise KeyError(f"Unknown PATH_FACTORS setting: {name}")
    if not settings.configured:
        return DEFAULTS[name]
    return getattr(settings, 'PATH_FACTORS', {}).get(name, DEFAULTS[name])


def strict_checks() -> bool:
    return bool(path_factor_setting('STRICT_CHECKS'))


def search_node_budget():
    """Configured node budget, None when unlimited (0)"""
    budget = int(path_factor_setting('SEARCH_NODE_BUDGET'))
    return budget or None
