"""
Access to the ``DECOMP`` settings dict.

The algorithm modules are usable without a configured Django project, so every lookup falls
back to the defaults below.
"""
from typing import Any, Dict

from django.conf import settings

DEFAULTS: Dict[str, Any] = {
    # largest compatible graph the exact clique partition search accepts
    'MCP_EXACT_NODE_BOUND': 24,
    # how many optimal clique partitions --mcp enumerate reports at most
    'MCP_ENUMERATE_LIMIT': 16,
    # brute-force maximality check of FDA-alpha runs up to this many chart columns
    'MAXIMALITY_CHECK_COLUMNS': 5,
    # brute-force minimality check of FDA-gamma runs up to this many chart columns
    'MINIMALITY_CHECK_COLUMNS': 8,
    # how many merge combinations --enumerate-gamma reports at most
    'GAMMA_ENUMERATE_LIMIT': 64,
    'W_NAME': 'W',
}


def decomp_setting(name: str) -> Any:
    overrides = getattr(settings, 'DECOMP', {}) if settings.configured else {}
    return overrides.get(name, DEFAULTS[name])
