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
from pathlib import Path
from typing import Dict, Optional

import yaml

logger = logging.getLogger(__name__)


class ConfigHelper:
    """Helper class for the global su23 config.

    Values come from DEFAULT_CONFIG, overlaid by the first YAML file found on LOAD_PATHS,
    overlaid by the environment variables in ENV_OVERRIDES.
    """
    DEFAULT_CONFIG = {
        'enumeration_bound': 2 ** 24,
        'table_bound': 2 ** 18,
        'construction_bound': 2 ** 64,
        'orbit_ceiling': 2 ** 22,
        'brute_force_roots_bound': 4096,
        'budget_seconds': 600,
        'seed': 1,
    }
    ENV_OVERRIDES = {
        'budget_seconds': 'SU23_BUDGET_SECONDS',
        'seed': 'SU23_SEED',
    }
    LOAD_PATHS = ["~/.su23/config.yml", ".su23/config.yml"]
    __instance = None

    @staticmethod
    def get_instance(path: Optional[str] = None):
        if ConfigHelper.__instance is None:
            ConfigHelper(path)
        return ConfigHelper.__instance

    @staticmethod
    def reset():
        ConfigHelper.__instance = None

    def __init__(self, path: Optional[str] = None):
        if ConfigHelper.__instance is not None:
            raise Exception("This class is a singleton!")
        ConfigHelper.__instance = self
        self.load_paths = ([path] if path else []) + list(self.LOAD_PATHS)
        self.config_path: Optional[str] = None
        self.__config = self.load_config()

    @property
    def config(self) -> Dict:
        return self.__config

    def load_config(self) -> Dict:
        config = dict(self.DEFAULT_CONFIG)
        for path in self.load_paths:
            file = Path(path).expanduser()
            logger.debug(f"Trying to load su23 config file {file}.")
            if file.is_file():
                loaded = yaml.load(file.read_text(encoding='utf-8'), Loader=yaml.SafeLoader)
                if isinstance(loaded, dict):
                    config.update(loaded)
                else:
                    logger.warning(f"Ignoring config file {file}: top level is not a mapping")
                self.config_path = str(file)
                break
        for key, env_var in self.ENV_OVERRIDES.items():
            value = os.getenv(env_var)
            if value:
                try:
                    config[key] = int(value)
                except ValueError:
                    logger.warning(f"Ignoring {env_var}={value}: not an integer")
        return config

    def get_value(self, key: str, default_value=None):
        """Get value from loaded config."""
        return self.config.get(key, default_value)

    @property
    def enumeration_bound(self) -> int:
        return int(self.get_value('enumeration_bound'))

    @property
    def table_bound(self) -> int:
        return int(self.get_value('table_bound'))

    @property
    def construction_bound(self) -> int:
        return int(self.get_value('construction_bound'))

    @property
    def orbit_ceiling(self) -> int:
        return int(self.get_value('orbit_ceiling'))

    @property
    def brute_force_roots_bound(self) -> int:
        return int(self.get_value('brute_force_roots_bound'))

    @property
    def budget_seconds(self) -> int:
        return int(self.get_value('budget_seconds'))

    @property
    def seed(self) -> int:
        return int(self.get_value('seed'))
