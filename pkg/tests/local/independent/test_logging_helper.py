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
import io
import logging
from unittest import TestCase

from su23.common.logging_helper import LoggingHelper


class TestLoggingHelper(TestCase):

    def setUp(self):
        self.root_level = logging.getLogger().level
        self.root_handlers = list(logging.getLogger().handlers)

    def tearDown(self):
        logging.getLogger().setLevel(self.root_level)
        logging.getLogger().handlers[:] = self.root_handlers

    def test_quiet_wins_over_verbose(self):
        LoggingHelper.set_verbosity(2, True)
        self.assertEqual(logging.getLogger().level, logging.WARNING)

    def test_verbose(self):
        LoggingHelper.set_verbosity(1, False)
        self.assertEqual(logging.getLogger().level, logging.DEBUG)

    def test_default_leaves_level_alone(self):
        logging.getLogger().setLevel(logging.INFO)
        LoggingHelper.set_verbosity(0, False)
        self.assertEqual(logging.getLogger().level, logging.INFO)

    def test_noisy_loggers_are_quieted(self):
        LoggingHelper.configure_for_test()
        self.assertEqual(logging.getLogger('sympy').level, logging.WARNING)

    def test_configure_replaces_root_handlers(self):
        first, second = io.StringIO(), io.StringIO()
        LoggingHelper.configure(stream=first, level=logging.INFO)
        LoggingHelper.configure(stream=second, level=logging.INFO)
        streams = [getattr(handler, 'stream', None) for handler in logging.getLogger().handlers]
        self.assertIn(second, streams)
        self.assertNotIn(first, streams)
        logging.getLogger('su23.test').info('configured twice')
        self.assertIn('configured twice', second.getvalue())
        self.assertEqual(first.getvalue(), '')
