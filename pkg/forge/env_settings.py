"""
Settings for serving the decomposition API.

Everything is read from ``DF_*`` environment variables, so the same file can be used in
every deployment.

You should also have a look at https://docs.djangoproject.com/en/4.2/howto/deployment/checklist/
"""
# pylint: disable=wildcard-import,unused-wildcard-import
from os import environ as env

from forge.settings import *
from forge.utils import deepmerge

# Should NEVER be true in production! Set to True for debug messages if you encounter an error.
DEBUG = env.get("DF_DEBUG") == "true"

# You can get a good key by executing the following command:
# < /dev/urandom tr -dc 'A-Za-z0-9!#$%&()*+,-./:;<=>?@[\]^_`{|}~' | head -c64; echo

SECRET_KEY = env.get("DF_SECRET_KEY")
if not SECRET_KEY:
    raise KeyError("No DF_SECRET_KEY provided")

ALLOWED_HOSTS = env.get("DF_ALLOWED_HOSTS", "localhost,127.0.0.1").split(",")

TIME_ZONE = env.get("DF_TIME_ZONE", 'UTC')

# Search limits. The exact clique partition search is exponential, raise the bound with care.
DECOMP = deepmerge(DECOMP, {
    key: int(env[f"DF_{key}"])
    for key in ('MCP_EXACT_NODE_BOUND', 'MCP_ENUMERATE_LIMIT', 'MAXIMALITY_CHECK_COLUMNS')
    if env.get(f"DF_{key}")
})

# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

LOGGING = deepmerge(LOGGING, {
    'loggers': {
        'forge': {
            'level': env.get("DF_LOG_LEVEL", 'WARNING'),
        },
    }
})

# NOTE: IMPORTANT. DO NOT REMOVE.
finalize_settings(locals())
