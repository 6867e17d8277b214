"""
Validation of scenario configurations, from JSON files and from command-line
options alike.
"""

import json
from fractions import Fraction

from django import forms
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from .exceptions import ConstructionError, FiltrationError
from .filtration import FiltrationProfile
from .groups import make_named
from .monodromy.genus2 import DegenerationType
from .monodromy.presets import PRESETS, Q8_PROFILES
from .tower import RamifiedStep, TowerSpec, build_tower, parse_expression
from .utils import prefix_validation_error
from .validators import LengthValidator, PrimeValidator, TowerMaxStepsValidator

GOOD_REDUCTION = "good-reduction"
GENUS2 = "genus2"
FILTRATION = "filtration-algebra"
CONDUCTOR = "conductor"
GROUP = "group"

KIND_CHOICES = [
    (GOOD_REDUCTION, _("good reduction of Y^p = 1 + c X^q + X^(q+1)")),
    (GENUS2, _("genus 2 curve Y^2 = 1 + b2 X^2 + b3 X^3 + b4 X^4 + X^5")),
    (FILTRATION, _("ramification filtration algebra")),
    (CONDUCTOR, _("Swan conductor")),
    (GROUP, _("finite group information")),
]

OPERATION_CHOICES = [
    ("phi", "phi"),
    ("psi", "psi"),
    ("compose", "compose"),
    ("product", "product"),
    ("tame", "tame"),
]

FORMAT_CHOICES = [("text", _("text")), ("json", _("JSON"))]

MAX_TOWER_STEPS = 8


class FractionField(forms.CharField):
    default_error_messages = {
        "invalid": _("Enter an integer or a fraction a/b."),
    }

    def to_python(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        value = super().to_python(value)
        if value in self.empty_values:
            return None
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(self.error_messages["invalid"], code="invalid") from None


class SimpleArrayField(forms.CharField):
    """A delimited list whose items are cleaned by base_field."""

    default_error_messages = {
        "item_invalid": _("Item %(nth)s in the array did not validate:"),
    }

    def __init__(self, base_field, *, delimiter=",", length=None, **kwargs):
        self.base_field = base_field
        self.delimiter = delimiter
        super().__init__(**kwargs)
        if length is not None:
            self.length = length
            self.validators.append(LengthValidator(int(length)))

    def prepare_value(self, value):
        if isinstance(value, list):
            return self.delimiter.join(str(self.base_field.prepare_value(v)) for v in value)
        return value

    def to_python(self, value):
        if isinstance(value, list):
            items = value
        elif value:
            items = value.split(self.delimiter)
        else:
            items = []
        errors = []
        values = []
        for index, item in enumerate(items):
            try:
                values.append(self.base_field.clean(item))
            except ValidationError as error:
                errors.append(
                    prefix_validation_error(
                        error,
                        prefix=self.error_messages["item_invalid"],
                        code="item_invalid",
                        params={"nth": index + 1},
                    )
                )
        if errors:
            raise ValidationError(errors)
        return values

    def validate(self, value):
        if self.required and not value:
            raise ValidationError(self.error_messages["required"], code="required")

    def run_validators(self, value):
        if value:
            super().run_validators(value)


class TowerField(forms.JSONField):
    """A tower spec {"p", "f_ur", "steps": [{"radical": ...} | {"eisenstein": ...}]}."""

    default_error_messages = {
        "invalid_tower": _("Enter a tower as an object with p and steps."),
        "step_invalid": _("Step %(nth)s did not validate:"),
    }

    def clean(self, value):
        data = super().clean(value)
        if data in self.empty_values:
            return None
        if not isinstance(data, dict) or "p" not in data:
            raise ValidationError(self.error_messages["invalid_tower"], code="invalid_tower")
        steps = data.get("steps", [])
        TowerMaxStepsValidator(MAX_TOWER_STEPS)(steps)
        errors = []
        for index, step in enumerate(steps, start=1):
            try:
                RamifiedStep.from_config(step, index)
            except (ConstructionError, KeyError, TypeError, ValueError) as exc:
                errors.append(
                    prefix_validation_error(
                        ValidationError(str(exc), code="invalid"),
                        prefix=self.error_messages["step_invalid"],
                        code="step_invalid",
                        params={"nth": index},
                    )
                )
        if errors:
            raise ValidationError(errors)
        try:
            return TowerSpec.from_config(data)
        except (ConstructionError, TypeError, ValueError) as exc:
            raise ValidationError(str(exc), code="invalid_tower") from None


class ProfileField(forms.JSONField):
    """A filtration profile given by name (see Q8_PROFILES) or as a dict."""

    default_error_messages = {
        "invalid_profile": _("Enter a profile name or {'mode', 'breaks'}: %(error)s"),
    }

    def clean(self, value):
        if isinstance(value, str) and value in Q8_PROFILES:
            value = Q8_PROFILES[value]
        elif isinstance(value, str):
            try:
                json.loads(value)
            except json.JSONDecodeError:
                raise ValidationError(
                    self.error_messages["invalid_profile"],
                    code="invalid_profile",
                    params={"error": f"unknown profile {value!r}"},
                ) from None
        data = super().clean(value)
        if data in self.empty_values:
            return None
        try:
            return FiltrationProfile.from_dict(data)
        except (FiltrationError, KeyError, TypeError, ValueError) as exc:
            raise ValidationError(
                self.error_messages["invalid_profile"],
                code="invalid_profile",
                params={"error": exc},
            ) from None


class ScenarioConfigForm(forms.Form):
    kind = forms.ChoiceField(choices=KIND_CHOICES)
    preset = forms.CharField(required=False)
    p = forms.IntegerField(required=False, validators=[PrimeValidator()])
    n = forms.IntegerField(required=False, min_value=1)
    c = forms.CharField(required=False)
    tower = TowerField(required=False)
    coefficients = SimpleArrayField(forms.CharField(), length=3, required=False)
    expected_type = forms.ChoiceField(choices=DegenerationType.choices, required=False)
    operation = forms.ChoiceField(choices=OPERATION_CHOICES, required=False)
    profile = ProfileField(required=False)
    a = ProfileField(required=False)
    b = ProfileField(required=False)
    at = FractionField(required=False)
    labels = forms.JSONField(required=False)
    tame_degree = forms.IntegerField(required=False, min_value=1)
    dims = forms.JSONField(required=False)
    genus = forms.IntegerField(required=False, min_value=1)
    group = forms.CharField(required=False)
    precision = forms.IntegerField(required=False, min_value=2)
    f_ur = forms.IntegerField(required=False, min_value=1)
    format = forms.ChoiceField(choices=FORMAT_CHOICES, required=False)

    required_by_kind = {
        GOOD_REDUCTION: ("p", "n"),
        GENUS2: ("tower", "coefficients"),
        FILTRATION: ("operation",),
        CONDUCTOR: ("profile", "dims", "genus"),
        GROUP: ("group",),
    }
    required_by_operation = {
        "phi": ("profile",),
        "psi": ("profile",),
        "compose": ("a", "b"),
        "product": ("a", "b"),
        "tame": ("profile", "tame_degree"),
    }

    def clean_preset(self):
        preset = self.cleaned_data["preset"]
        if preset and preset not in PRESETS:
            raise ValidationError(
                _("Unknown preset %(preset)s."), code="unknown_preset", params={"preset": preset}
            )
        return preset

    def clean_group(self):
        name = self.cleaned_data["group"]
        if name:
            try:
                make_named(name)
            except Exception as exc:
                raise ValidationError(str(exc), code="invalid_group") from None
        return name

    def clean(self):
        cleaned = super().clean()
        kind = cleaned.get("kind")
        if kind is None or cleaned.get("preset"):
            return cleaned
        required = list(self.required_by_kind[kind])
        if kind == FILTRATION and cleaned.get("operation"):
            required += self.required_by_operation[cleaned["operation"]]
        for name in required:
            if cleaned.get(name) in (None, "", []) and name not in self.errors:
                self.add_error(name, ValidationError(_("This field is required."), code="required"))
        if kind == GOOD_REDUCTION and not self.errors:
            cleaned["c"] = cleaned.get("c") or "1"
        if kind == GENUS2 and not self.errors:
            self._check_coefficients(cleaned)
        return cleaned

    def _check_coefficients(self, cleaned):
        """Every coefficient must parse in the declared tower."""
        spec = cleaned["tower"]
        field = build_tower(spec.with_residue_degree(1), cleaned.get("precision") or 8)
        for name, text in zip(("b2", "b3", "b4"), cleaned["coefficients"], strict=True):
            try:
                parse_expression(text, field)
            except ConstructionError as exc:
                self.add_error(
                    "coefficients",
                    ValidationError(
                        _("%(name)s: %(error)s"),
                        code="unresolved",
                        params={"name": name, "error": exc},
                    ),
                )


class ScenarioConfig:
    """A validated configuration; data holds the cleaned form values."""

    def __init__(self, data):
        self.data = data

    def __repr__(self):
        return f"<ScenarioConfig {self.kind}>"

    def __getitem__(self, name):
        return self.data.get(name)

    @property
    def kind(self):
        return self.data["kind"]

    @classmethod
    def from_dict(cls, data):
        """Validate a scenario, raising ValidationError with every problem found."""
        data = dict(data)
        if isinstance(data.get("coefficients"), dict):
            coefficients = data["coefficients"]
            data["coefficients"] = [coefficients.get(key, "0") for key in ("b2", "b3", "b4")]
        if isinstance(data.get("tower"), dict):
            data["tower"] = json.dumps(data["tower"])
        for key in ("profile", "a", "b", "labels", "dims"):
            if isinstance(data.get(key), (dict, list)):
                data[key] = json.dumps(data[key])
        form = ScenarioConfigForm(data)
        if not form.is_valid():
            raise ValidationError(form.errors.as_data())
        cleaned = {key: value for key, value in form.cleaned_data.items() if value not in ("",)}
        if cleaned.get("preset"):
            preset = PRESETS[cleaned["preset"]]
            if preset["kind"] != cleaned["kind"]:
                raise ValidationError(
                    _("Preset %(preset)s is a %(kind)s scenario."),
                    code="preset_kind",
                    params={"preset": cleaned["preset"], "kind": preset["kind"]},
                )
        return cls(cleaned)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(
                _("Invalid JSON: %(error)s"), code="invalid_json", params={"error": exc}
            ) from None
        if not isinstance(data, dict):
            raise ValidationError(_("A scenario must be a JSON object."), code="invalid_json")
        return cls.from_dict(data)
