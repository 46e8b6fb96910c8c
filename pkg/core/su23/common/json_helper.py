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

import json


class JsonHelper:

    @staticmethod
    def to_json_pretty(o):
        return json.dumps(o, indent=2, sort_keys=True)

    @staticmethod
    def to_jsonnable(o):
        if o is None \
            or isinstance(o, str) \
            or isinstance(o, bool) \
            or isinstance(o, float):
            return o
        if isinstance(o, int):
            # JSON readers lose precision beyond 53 bits, group orders are exported as strings
            return o if abs(o) < 2 ** 53 else str(o)
        if isinstance(o, dict):
            return {str(key): JsonHelper.to_jsonnable(value) for key, value in o.items()}
        if isinstance(o, (list, tuple)):
            return [JsonHelper.to_jsonnable(element) for element in o]
        if isinstance(o, (set, frozenset)):
            return [JsonHelper.to_jsonnable(element) for element in sorted(o)]
        if hasattr(o, 'to_jsonnable'):
            return o.to_jsonnable()
        if hasattr(o, 'to_dict'):
            return JsonHelper.to_jsonnable(o.to_dict())
        raise RuntimeError(f"Don't know how to jsonize {o} ({type(o)})")
