from django.core.validators import BaseValidator, MaxLengthValidator
from django.utils.deconstruct import deconstructible
from django.utils.translation import gettext_lazy as _
from django.utils.translation import ngettext_lazy
from sympy import isprime


class TowerMaxStepsValidator(MaxLengthValidator):
    message = ngettext_lazy(
        "Tower contains %(show_value)d step, it should contain no more than %(limit_value)d.",
        "Tower contains %(show_value)d steps, it should contain no more than %(limit_value)d.",
        "show_value",
    )


@deconstructible
class LengthValidator(BaseValidator):
    message = ngettext_lazy(
        "List contains %(show_value)d item, it should contain %(limit_value)d.",
        "List contains %(show_value)d items, it should contain %(limit_value)d.",
        "show_value",
    )
    code = "length"

    def compare(self, a, b):
        return a != b

    def clean(self, x):
        return len(x)


@deconstructible
class PrimeValidator(BaseValidator):
    message = _("Ensure this value is a prime number (it is %(show_value)s).")
    code = "prime"

    def __init__(self, message=None):
        super().__init__(None, message)

    def compare(self, a, b):
        return not isprime(a)
