from unittest import TestCase

from .. import AttrDict
from ..exceptions import (
    ERROR_CODED_EXCEPTIONS, BasisFileSyntaxError, DimensionError, DomainError, MatrixDecodeError,
    MultipleValidationErrors
)


class TestErrorCodedExceptions(TestCase):
    def test_as_dict(self):
        err = DomainError("r out of range", r=5)
        self.assertEqual(err.as_dict(), {"error_code": "DOMAIN_ERROR", "message": "r out of range", "r": 5})
        self.assertEqual(str(err), "r out of range")

    def test_default_message(self):
        self.assertEqual(DimensionError().message, "Dimension mismatch")

    def test_decorator_success(self):
        @ERROR_CODED_EXCEPTIONS()
        def run():
            return AttrDict(value=1)

        self.assertEqual(run(), {"value": 1, "errors": []})

    def test_decorator_single_error(self):
        @ERROR_CODED_EXCEPTIONS(error_key="problems")
        def run():
            raise DomainError("p must be prime", p=4)

        response = run()
        self.assertEqual(response.problems[0].error_code, "DOMAIN_ERROR")
        self.assertEqual(response.problems[0].p, 4)

    def test_decorator_multiple_errors(self):
        @ERROR_CODED_EXCEPTIONS()
        def run():
            raise MultipleValidationErrors([DomainError("a"), DimensionError("b")])

        response = run()
        self.assertEqual([e.message for e in response.errors], ["a", "b"])

    def test_other_exceptions_propagate(self):
        @ERROR_CODED_EXCEPTIONS()
        def run():
            raise KeyError("x")

        with self.assertRaises(KeyError):
            run()

    def test_parse_errors_carry_location(self):
        err = MatrixDecodeError("$.matrices[2].entries", "entries must be a list")
        self.assertEqual(err.message, "$.matrices[2].entries: entries must be a list")
        self.assertEqual(err.error_code, "PARSE_ERROR")

        wrapped = BasisFileSyntaxError("basis.json", err.message)
        self.assertIn("basis.json", str(wrapped))
        self.assertIn("$.matrices[2]", str(wrapped))
