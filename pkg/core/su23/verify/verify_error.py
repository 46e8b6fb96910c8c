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
from dataclasses import dataclass, field, replace
from typing import Optional


@dataclass
class VerifyError:
    message: str
    exception: Optional[Exception] = None
    suite: Optional[str] = None
    exception_text: Optional[str] = field(default=None)
    error_code: Optional[str] = field(default=None)

    def __post_init__(self):
        if self.exception is not None:
            self.exception_text = str(self.exception)
            self.error_code = getattr(self.exception, 'error_code', None)

    def __str__(self) -> str:
        return f'[{self.get_type()}] {self.get_message()}'

    def detached(self) -> 'VerifyError':
        """A copy without the exception object, safe to send between processes."""
        return replace(self, exception=None)

    def to_dict(self) -> dict:
        json = {
            'type': self.get_type(),
            'message': self.get_message()
        }
        if self.suite is not None:
            json['suite'] = self.suite
        if self.exception_text is not None:
            json['exception'] = self.exception_text
        if self.error_code is not None:
            json['errorCode'] = self.error_code
        return json

    def get_type(self) -> str:
        return 'error'

    def get_message(self) -> str:
        return self.message


@dataclass
class ConstructionVerifyError(VerifyError):

    def get_type(self) -> str:
        return 'construction_error'


@dataclass
class SuiteExecutionVerifyError(VerifyError):

    def get_type(self) -> str:
        return 'suite_execution_error'
