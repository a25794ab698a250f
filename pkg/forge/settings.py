"""
Django settings for the forge project.

The base settings are enough to run ``./manage.py decomp ...``. Deployments of the HTTP API
should use ``forge.env_settings`` (configured from ``DF_*`` environment variables), tests use
``forge.test_settings``.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""
from pathlib import Path
from typing import Any, Dict, List

from django.core.exceptions import ImproperlyConfigured
from django.utils.log import DEFAULT_LOGGING
from os import environ as env

from forge.utils import deepmerge

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = False

ALLOWED_HOSTS: List[str] = ['localhost', '127.0.0.1']

# The key is only used if the HTTP API is served. env_settings refuses to start without a
# real one.
SECRET_KEY = env.get('DF_SECRET_KEY', 'forge-cli-only-key-never-serve-with-this')

# Application definition

INSTALLED_APPS = [
    'decomp',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'forge.urls'

WSGI_APPLICATION = 'forge.wsgi.application'

# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

LOGGING = deepmerge(DEFAULT_LOGGING, {
    'formatters': {
        'forge.console': {
            '()': 'forge.utils.CommandFormatter',
            'format': '[{levelname}] {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'forge.console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'forge.console',
        },
    },
    'loggers': {
        'forge': {
            'handlers': ['forge.console'],
            'level': 'WARNING',
            'propagate': False,
        },
    }
})

# No database is used. Relations live in memory only.
DATABASES: Dict[str, Dict[str, Any]] = {}

USE_I18N = True

USE_TZ = True

TIME_ZONE = 'UTC'

LANGUAGE_CODE = 'en-us'

# Decomposition knobs. See decomp.conf for what each key does.
DECOMP: Dict[str, Any] = {
    'MCP_EXACT_NODE_BOUND': 24,
    'MCP_ENUMERATE_LIMIT': 16,
    'MAXIMALITY_CHECK_COLUMNS': 5,
    'MINIMALITY_CHECK_COLUMNS': 8,
    'GAMMA_ENUMERATE_LIMIT': 64,
    'W_NAME': 'W',
}

# call this from your custom settings
def finalize_settings(final_locals: Dict[str, Any]):
    required_vars = {'SECRET_KEY', 'DECOMP', 'TIME_ZONE'}
    missing = required_vars.difference(final_locals.keys())
    if missing:
        raise ImproperlyConfigured(
            f'The following mandatory keys are missing from your config: {missing}')
    bound = final_locals['DECOMP'].get('MCP_EXACT_NODE_BOUND', 0)
    if not isinstance(bound, int) or bound < 1:
        raise ImproperlyConfigured(
            f'DECOMP["MCP_EXACT_NODE_BOUND"] has to be a positive integer, got {bound!r}')

finalize_settings(locals())
