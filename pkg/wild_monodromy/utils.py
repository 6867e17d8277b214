import functools
import logging
import time

import django
from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.utils.functional import SimpleLazyObject
from django.utils.text import format_lazy

from .exceptions import PrecisionError

logger = logging.getLogger("wild_monodromy.steps")

SUPPORTED_DJANGO = (6, 0)


def check_django_compatibility():
    """
    Verify that the installed version of Django is the feature release this
    package is developed against.
    """
    if django.VERSION[:2] != SUPPORTED_DJANGO:
        A, B = SUPPORTED_DJANGO
        raise ImproperlyConfigured(
            f"wild-monodromy requires Django {A}.{B}.x "
            f"(found Django {django.get_version()})."
        )


def prefix_validation_error(error, prefix, code, params):
    """
    Prefix a validation error message while maintaining the existing
    validation data structure.
    """
    if error.error_list == [error]:
        error_params = error.params or {}
        return ValidationError(
            # Messages can't simply be concatenated since they might require
            # their associated parameters to be expressed correctly which is
            # not something format_lazy() does.
            message=format_lazy(
                "{} {}",
                SimpleLazyObject(lambda: prefix % params),
                SimpleLazyObject(lambda: error.message % error_params),
            ),
            code=code,
            params={**error_params, **params},
        )
    return ValidationError(
        [prefix_validation_error(e, prefix, code, params) for e in error.error_list]
    )


def set_wrapped_methods(cls):
    """Wrap every method named in cls.wrapped_methods with step timing."""
    for attr in cls.wrapped_methods:
        setattr(cls, attr, timed_step(attr, getattr(cls, attr)))
    return cls


def timed_step(name, method):
    @functools.wraps(method)
    def wrapper(self, *args, **kwargs):
        start = time.monotonic()
        retval = method(self, *args, **kwargs)
        duration = time.monotonic() - start
        log_step(self, name, duration)
        return retval

    return wrapper


def log_step(pipeline, step, duration):
    scenario = getattr(pipeline, "label", pipeline.__class__.__name__)
    timings = getattr(pipeline, "timings", None)
    if timings is not None:
        timings.append({"step": step, "time": f"{duration:.3f}"})
    logger.debug(
        "(%.3f) %s; scenario=%s",
        duration,
        step,
        scenario,
        extra={"duration": duration, "step": step, "scenario": scenario},
    )


def retry_with_precision(build, precision, max_precision):
    """
    Call build(precision), doubling the precision after each PrecisionError
    until max_precision is exceeded.
    """
    while True:
        try:
            return build(precision)
        except PrecisionError as exc:
            if precision * 2 > max_precision:
                raise
            logger.info(
                "Insufficient precision %s, retrying with %s: %s",
                precision,
                precision * 2,
                exc,
                extra={"precision": precision},
            )
            precision *= 2
