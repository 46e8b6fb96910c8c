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
"""Accumulating YAML reader for run configs.

Problems are collected as ParseLogs located by a dotted path such as ``certify[1].q`` instead of being raised,
so a user sees every mistake in a document at once. ``assert_no_errors`` turns them into one InvalidRunConfig.
"""
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import yaml

from su23.exceptions.exceptions import InvalidRunConfig

ERROR = 'error'
WARNING = 'warning'

logger = logging.getLogger(__name__)


@dataclass
class ParseLog:
    level: str
    message: str
    path: Optional[str] = None

    def __str__(self):
        location = f' ({self.path})' if self.path else ''
        return f'[{self.level}]{location} {self.message}'

    def is_error(self) -> bool:
        return self.level == ERROR

    def log(self):
        logger.log(logging.ERROR if self.is_error() else logging.WARNING, str(self))


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class Parser:

    def __init__(self, description: str):
        self.description: str = description
        self.logs: List[ParseLog] = []
        self._scopes: List[Tuple[str, dict]] = []

    def __str__(self):
        return '\n'.join(str(log) for log in self.logs)

    def read_yaml_file(self, file_path: str) -> Optional[Any]:
        try:
            with open(file_path, encoding='utf-8') as f:
                return yaml.safe_load(f)
        except OSError as e:
            self.error(f"Couldn't read file {file_path}: {e}")
        except yaml.YAMLError as e:
            self.error(f"Couldn't parse yaml in {file_path}: {e}")
        return None

    @contextmanager
    def scope(self, name: str, properties: dict) -> Iterator[None]:
        self._scopes.append((name, properties))
        try:
            yield
        finally:
            self._scopes.pop()

    def _path(self, key: Optional[str] = None) -> Optional[str]:
        names = [name for name, _ in self._scopes if name]
        if key is not None:
            names.append(key)
        return '.'.join(names) or None

    @property
    def _properties(self) -> dict:
        return self._scopes[-1][1] if self._scopes else {}

    def error(self, message: str, key: Optional[str] = None):
        self.logs.append(ParseLog(ERROR, message, self._path(key)))

    def warning(self, message: str, key: Optional[str] = None):
        self.logs.append(ParseLog(WARNING, message, self._path(key)))

    def log(self):
        for parse_log in self.logs:
            parse_log.log()

    def has_errors(self) -> bool:
        return any(parse_log.is_error() for parse_log in self.logs)

    def has_warnings_or_errors(self) -> bool:
        return bool(self.logs)

    def assert_no_errors(self):
        if self.has_errors():
            raise InvalidRunConfig(f'{self.description} configuration errors:\n  '
                                   + '\n  '.join(str(parse_log) for parse_log in self.logs if parse_log.is_error()))

    def warn_unknown_keys(self, valid_keys: Sequence[str]):
        for key in self._properties:
            if key not in valid_keys:
                self.warning(f'Unknown key {key}, expected one of {", ".join(valid_keys)}', key)

    def get_int(self, key: str, default: Optional[int] = None, required: bool = False,
                minimum: Optional[int] = None) -> Optional[int]:
        value = self._properties.get(key)
        if value is None:
            if required:
                self.error(f'{key} is required', key)
            return default
        if not _is_int(value):
            self.error(f'Expected an integer, but was {value!r}', key)
            return default
        if minimum is not None and value < minimum:
            self.error(f'Must be at least {minimum}, but was {value}', key)
            return default
        return value

    def get_bool(self, key: str, default: bool = False) -> bool:
        value = self._properties.get(key)
        if value is None:
            return default
        if not isinstance(value, bool):
            self.error(f'Expected true or false, but was {value!r}', key)
            return default
        return value

    def get_choice(self, key: str, choices: Sequence[str], default: str) -> str:
        value = self._properties.get(key)
        if value is None:
            return default
        if value not in choices:
            self.error(f'Unknown value {value!r}, expected one of {", ".join(choices)}', key)
            return default
        return value

    def _get_list(self, key: str) -> Optional[list]:
        value = self._properties.get(key)
        if value is None:
            return None
        if not isinstance(value, list):
            self.error(f'Expected a list, but was {value!r}', key)
            return None
        return value

    def get_int_list(self, key: str) -> List[int]:
        result = []
        for index, value in enumerate(self._get_list(key) or []):
            if _is_int(value):
                result.append(value)
            else:
                self.error(f'Expected an integer, but was {value!r}', f'{key}[{index}]')
        return result

    def get_choice_list(self, key: str, choices: Sequence[str]) -> Optional[List[str]]:
        values = self._get_list(key)
        if values is None:
            return None
        for index, value in enumerate(values):
            if value not in choices:
                self.error(f'Unknown value {value!r}, expected one of {", ".join(choices)}', f'{key}[{index}]')
        return [value for value in values if value in choices]

    def get_object_list(self, key: str) -> Iterator[Tuple[str, dict]]:
        """(path name, object) for every mapping entry of the list under key; other entries are errors."""
        for index, value in enumerate(self._get_list(key) or []):
            name = f'{key}[{index}]'
            if isinstance(value, dict):
                yield name, value
            else:
                self.error(f'Expected an object, but was {value!r}', name)
