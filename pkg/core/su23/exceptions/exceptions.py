#  Copyright 2026 su23 contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

ERROR_CODE_GENERIC = 'generic_error'
ERROR_CODE_FIELD = 'field_error'
ERROR_CODE_ALGEBRA = 'algebra_error'
ERROR_CODE_PARAMETER = 'parameter_error'
ERROR_CODE_UNSUPPORTED = 'unsupported_case'
ERROR_CODE_NOT_APPLICABLE = 'not_applicable'
ERROR_CODE_ORDER = 'order_error'
ERROR_CODE_CONFIG = 'invalid_config'


class Su23Error(Exception):

    def __init__(self, msg, original_exception=None):
        if original_exception is not None:
            msg = f"{msg}: {str(original_exception)}"
        super(Su23Error, self).__init__(msg)
        self.error_code = ERROR_CODE_GENERIC
        self.original_exception = original_exception


class FieldError(Su23Error):

    def __init__(self, msg):
        super(FieldError, self).__init__(msg)
        self.error_code = ERROR_CODE_FIELD


class NotPrime(FieldError):

    def __init__(self, p):
        super(NotPrime, self).__init__(f"Characteristic {p} is not a prime")
        self.p = p


class DegreeZero(FieldError):

    def __init__(self, d):
        super(DegreeZero, self).__init__(f"Extension degree must be at least 1, got {d}")


class FieldTooLarge(FieldError):

    def __init__(self, size, bound):
        super(FieldTooLarge, self).__init__(f"Field of size {size} exceeds the configured bound {bound}")
        self.size = size
        self.bound = bound


class OddDegreeContext(FieldError):

    def __init__(self, ctx):
        super(OddDegreeContext, self).__init__(f"{ctx} has odd degree, the q-power map is undefined")


class AlgebraError(Su23Error):

    def __init__(self, msg):
        super(AlgebraError, self).__init__(msg)
        self.error_code = ERROR_CODE_ALGEBRA


class ZeroPolynomial(AlgebraError):

    def __init__(self, operation: str):
        super(ZeroPolynomial, self).__init__(f"{operation} is undefined for the zero polynomial")


class ZeroElement(AlgebraError):

    def __init__(self, operation: str):
        super(ZeroElement, self).__init__(f"{operation} is undefined for the zero element")


class NotSquare(AlgebraError):

    def __init__(self, rows: int, cols: int):
        super(NotSquare, self).__init__(f"Expected a square matrix, got {rows}x{cols}")


class DimensionMismatch(AlgebraError):

    def __init__(self, msg):
        super(DimensionMismatch, self).__init__(msg)


class NotInvertible(AlgebraError):

    def __init__(self, msg='Matrix is singular'):
        super(NotInvertible, self).__init__(msg)


class CapExceeded(Su23Error):

    def __init__(self, order_part: int, cap: int):
        super(CapExceeded, self).__init__(f"Element order (multiple of {order_part}) does not divide cap {cap}")
        self.error_code = ERROR_CODE_ORDER


class BadParameter(Su23Error):

    def __init__(self, msg, failed_clauses=None):
        super(BadParameter, self).__init__(msg)
        self.error_code = ERROR_CODE_PARAMETER
        self.failed_clauses = failed_clauses or []


class NoAdmissibleParameter(Su23Error):

    def __init__(self, n: int, q: int, strategy: str):
        super(NoAdmissibleParameter, self).__init__(
            f"No admissible parameter found for (n,q)=({n},{q}) using strategy {strategy}")
        self.error_code = ERROR_CODE_PARAMETER


class TraceDenominatorZero(Su23Error):

    def __init__(self, trace_name: str):
        super(TraceDenominatorZero, self).__init__(f"Trace {trace_name} vanishes, cannot divide by it")
        self.error_code = ERROR_CODE_PARAMETER


class UnsupportedCase(Su23Error):

    def __init__(self, msg):
        super(UnsupportedCase, self).__init__(msg)
        self.error_code = ERROR_CODE_UNSUPPORTED


class CaseNotApplicable(Su23Error):

    def __init__(self, suite: str, reason: str):
        super(CaseNotApplicable, self).__init__(f"{suite} does not apply: {reason}")
        self.error_code = ERROR_CODE_NOT_APPLICABLE
        self.reason = reason


class InvalidRunConfig(Exception):

    def __init__(self, exception_detail):
        super(InvalidRunConfig, self).__init__(
            f"Invalid run configuration. {exception_detail}")
        self.error_code = ERROR_CODE_CONFIG


class AssemblyError(Su23Error):

    def __init__(self, msg):
        super(AssemblyError, self).__init__(msg)
        self.error_code = ERROR_CODE_UNSUPPORTED
