import os

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "RESIDUE_DEGREE": 8,
    "PRECISION": 64,
    "MAX_PRECISION": 2**14,
    "PROXY_CHECK": True,
}

PRECISION_ENV_VAR = "WILD_MONODROMY_PRECISION"


def get_setting(name):
    """
    Return a WILD_MONODROMY setting, falling back to the environment for
    PRECISION and to DEFAULTS for everything else.
    """
    if name not in DEFAULTS:
        raise ImproperlyConfigured(f"Unknown WILD_MONODROMY setting {name!r}.")
    options = getattr(settings, "WILD_MONODROMY", None) or {}
    if name in options:
        value = options[name]
    elif name == "PRECISION" and os.environ.get(PRECISION_ENV_VAR):
        value = os.environ[PRECISION_ENV_VAR]
    else:
        return DEFAULTS[name]
    if name == "PROXY_CHECK":
        return bool(value)
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(
            f"WILD_MONODROMY[{name!r}] must be an integer (got {value!r})."
        ) from None
    if value < 1:
        raise ImproperlyConfigured(f"WILD_MONODROMY[{name!r}] must be positive.")
    return value
