from unittest import mock

from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase

from wild_monodromy.exceptions import PrecisionError
from wild_monodromy.utils import (
    check_django_compatibility,
    retry_with_precision,
    set_wrapped_methods,
)


class RetryWithPrecisionTests(SimpleTestCase):
    def test_doubles_until_success(self):
        calls = []

        def build(precision):
            calls.append(precision)
            if precision < 64:
                raise PrecisionError("too coarse", precision)
            return precision

        with self.assertLogs("wild_monodromy.steps", "INFO") as logs:
            self.assertEqual(retry_with_precision(build, 16, 1024), 64)
        self.assertEqual(calls, [16, 32, 64])
        self.assertIn("Insufficient precision 16, retrying with 32", logs.output[0])

    def test_gives_up(self):
        calls = []

        def build(precision):
            calls.append(precision)
            raise PrecisionError("too coarse", precision)

        with self.assertRaisesMessage(PrecisionError, "too coarse (precision bound 32)"):
            retry_with_precision(build, 16, 32)
        self.assertEqual(calls, [16, 32])


@set_wrapped_methods
class Pipeline:
    wrapped_methods = ["first", "second"]
    label = "demo"

    def __init__(self):
        self.timings = []

    def first(self):
        return 1

    def second(self, value):
        return value + 1


class WrappedMethodsTests(SimpleTestCase):
    def test_timings(self):
        pipeline = Pipeline()
        with self.assertLogs("wild_monodromy.steps", "DEBUG") as logs:
            self.assertEqual(pipeline.second(pipeline.first()), 2)
        self.assertEqual([t["step"] for t in pipeline.timings], ["first", "second"])
        self.assertIn("first; scenario=demo", logs.output[0])

    def test_name_preserved(self):
        self.assertEqual(Pipeline.first.__name__, "first")


class DjangoCompatibilityTests(SimpleTestCase):
    def test_unsupported_version(self):
        with (
            mock.patch("django.VERSION", (5, 2, 0, "final", 0)),
            mock.patch("django.get_version", return_value="5.2"),
            self.assertRaisesMessage(ImproperlyConfigured, "wild-monodromy requires Django 6.0.x"),
        ):
            check_django_compatibility()
