from .error_coded_exceptions import *  # noqa
from .error_coded_exceptions import SchmidtSubspaceError


class MatrixDecodeError(SchmidtSubspaceError):
    error_code = "PARSE_ERROR"
    message = "Malformed matrix encoding"

    def __init__(self, location, message) -> None:
        super().__init__(f"{location}: {message}", location=location)


class BasisFileSyntaxError(SchmidtSubspaceError):
    error_code = "PARSE_ERROR"

    def __init__(self, basis_file, message) -> None:
        super().__init__(self.format_message(basis_file, message), path=str(basis_file))

    def format_message(self, basis_file, message):
        return f"Could not load {basis_file}:\n{message}"

    def __str__(self):
        return self.message
