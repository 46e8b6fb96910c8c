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
import logging
import os
import sys

# sympy and the process pool are chatty at DEBUG
NOISY_LOGGERS = ('sympy', 'concurrent.futures')


class LoggingHelper:
    log_format = "  | %(message)s"
    debug_format = "  | %(name)s | %(message)s"
    level_env_var = "SU23_LOGGING_LEVEL"

    @classmethod
    def configure_for_cli(cls):
        # stdout carries the exported document
        cls.configure(stream=sys.stderr, level=os.getenv(cls.level_env_var, logging.INFO))

    @classmethod
    def configure_for_test(cls):
        cls.configure(stream=sys.stdout, level=logging.DEBUG)

    @classmethod
    def configure(cls, stream, level):
        log_format = cls.debug_format if level in (logging.DEBUG, "DEBUG") else cls.log_format
        logging.basicConfig(level=level, format=log_format, handlers=[logging.StreamHandler(stream)], force=True)
        for name in NOISY_LOGGERS:
            logging.getLogger(name).setLevel(logging.WARNING)

    @staticmethod
    def set_verbosity(verbose: int, quiet: bool):
        """-v turns on debug output, --quiet leaves warnings and errors only."""
        if quiet:
            level = logging.WARNING
        elif verbose >= 1:
            level = logging.DEBUG
        else:
            return
        logging.getLogger().setLevel(level)
