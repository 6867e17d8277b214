from fractions import Fraction

from django import forms
from django.core import exceptions
from django.test import SimpleTestCase

from wild_monodromy.forms import FractionField, SimpleArrayField


class SimpleArrayFieldTests(SimpleTestCase):
    def test_valid(self):
        field = SimpleArrayField(forms.CharField())
        value = field.clean("2^(3/5),1,2^(2/5)")
        self.assertEqual(value, ["2^(3/5)", "1", "2^(2/5)"])

    def test_list_input(self):
        field = SimpleArrayField(forms.CharField())
        self.assertEqual(field.clean(["a^3", "a^6", 0]), ["a^3", "a^6", "0"])

    def test_to_python_fail(self):
        field = SimpleArrayField(forms.IntegerField())
        msg = "Item 1 in the array did not validate: Enter a whole number."
        with self.assertRaisesMessage(exceptions.ValidationError, msg):
            field.clean("a,b,9")

    def test_validate_fail(self):
        field = SimpleArrayField(forms.CharField(required=True))
        msg = "Item 3 in the array did not validate: This field is required."
        with self.assertRaisesMessage(exceptions.ValidationError, msg):
            field.clean("a,b,")

    def test_validate_fail_base_field_error_params(self):
        field = SimpleArrayField(forms.CharField(max_length=2))
        with self.assertRaises(exceptions.ValidationError) as cm:
            field.clean("abc,c,defg")
        errors = cm.exception.error_list
        self.assertEqual(len(errors), 2)
        first_error = errors[0]
        self.assertEqual(
            first_error.message,
            "Item 1 in the array did not validate: Ensure this value has at most 2 "
            "characters (it has 3).",
        )
        self.assertEqual(first_error.code, "item_invalid")
        self.assertEqual(
            first_error.params,
            {"nth": 1, "value": "abc", "limit_value": 2, "show_value": 3},
        )

    def test_delimiter(self):
        field = SimpleArrayField(forms.CharField(), delimiter="|")
        self.assertEqual(field.clean("a|b|c"), ["a", "b", "c"])

    def test_delimiter_with_nesting(self):
        field = SimpleArrayField(SimpleArrayField(forms.CharField()), delimiter="|")
        value = field.clean("a,b|c,d")
        self.assertEqual(value, [["a", "b"], ["c", "d"]])

    def test_prepare_value(self):
        field = SimpleArrayField(forms.CharField())
        self.assertEqual(field.prepare_value(["a", "b", "c"]), "a,b,c")
        self.assertEqual(field.prepare_value("a,b,c"), "a,b,c")

    def test_length(self):
        field = SimpleArrayField(forms.CharField(), length=3)
        msg = "List contains 2 items, it should contain 3."
        with self.assertRaisesMessage(exceptions.ValidationError, msg):
            field.clean("a,b")

    def test_required(self):
        field = SimpleArrayField(forms.CharField())
        with self.assertRaisesMessage(exceptions.ValidationError, "This field is required."):
            field.clean("")

    def test_not_required(self):
        field = SimpleArrayField(forms.CharField(), length=3, required=False)
        self.assertEqual(field.clean(""), [])


class FractionFieldTests(SimpleTestCase):
    def test_valid(self):
        field = FractionField()
        self.assertEqual(field.clean("3/2"), Fraction(3, 2))
        self.assertEqual(field.clean(" -4 "), -4)
        self.assertEqual(field.clean(5), 5)

    def test_invalid(self):
        field = FractionField()
        msg = "Enter an integer or a fraction a/b."
        for value in ("x", "1/0"):
            with self.subTest(value=value), self.assertRaisesMessage(
                exceptions.ValidationError, msg
            ):
                field.clean(value)

    def test_empty(self):
        self.assertIsNone(FractionField(required=False).clean(""))
