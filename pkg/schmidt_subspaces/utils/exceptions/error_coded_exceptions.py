from functools import wraps
from typing import List

from schmidt_subspaces.utils import AttrDict


class SchmidtSubspaceError(Exception):
    error_code = "UNKNOWN_ERROR"
    message = "Unknown Error"

    def __init__(self, message=None, **additional_data):
        if message:
            self.message = message
        self.additional_data = AttrDict(additional_data)
        super().__init__(self.message)

    def as_dict(self):
        return AttrDict(
            error_code=self.error_code,
            message=self.message,
            **self.additional_data
        )


class DimensionError(SchmidtSubspaceError):
    error_code = "DIMENSION_ERROR"
    message = "Dimension mismatch"


class DomainError(SchmidtSubspaceError):
    error_code = "DOMAIN_ERROR"
    message = "Argument outside the operation's domain"


class NumericError(SchmidtSubspaceError):
    error_code = "NUMERIC_ERROR"
    message = "Non-finite numeric input"


class FieldMismatchError(SchmidtSubspaceError):
    error_code = "FIELD_MISMATCH"
    message = "Scalar field not supported by this operation"


class CapExceededError(SchmidtSubspaceError):
    error_code = "CAP_EXCEEDED"
    message = "Enumeration cap exceeded"


class ConstructionInconsistentError(SchmidtSubspaceError):
    """
    Raised when a constructed basis fails its own guarantee.
    Should never happen; indicates a construction bug.
    """
    error_code = "CONSTRUCTION_INCONSISTENT"
    message = "Constructed subspace violates its rank guarantee"


class ArtifactIOError(SchmidtSubspaceError):
    error_code = "IO_ERROR"
    message = "Could not read or write artifact"


class MultipleValidationErrors(SchmidtSubspaceError):
    error_code = "INVALID_CONFIG"
    message = "Invalid run configuration"
    errors: List[SchmidtSubspaceError] = []

    def __init__(self, errors: List[SchmidtSubspaceError] = None):
        self.errors = list(errors or [])
        super().__init__("; ".join(e.message for e in self.errors) or None)

    def as_dict_list(self):
        return [
            x.as_dict()
            for x in self.errors
        ]


def ERROR_CODED_EXCEPTIONS(error_key="errors"):
    def inner(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                response = func(*args, **kwargs)
                response[error_key] = []
                return response
            except MultipleValidationErrors as e:
                return AttrDict({
                    error_key: e.as_dict_list()
                })
            except SchmidtSubspaceError as e:
                return AttrDict({
                    error_key: [e.as_dict()]
                })

        return wrapper

    return inner
