# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Low-adaptivity monotone submodular maximization.

The heavy lifting lives in the compiled ``_submax`` extension; this package
re-exports its public surface.
"""

from submax._submax import (
    Instance,
    InvalidArgumentError,
    ParseError,
    brute_force_opt,
    build_opt_grid,
    load_instance,
    parse_instance,
    plan_sample_size,
    solve,
    synthesize_concave_modular,
    synthesize_coverage,
    synthesize_facility,
    validate,
)

__all__ = [
    "Instance",
    "InvalidArgumentError",
    "ParseError",
    "brute_force_opt",
    "build_opt_grid",
    "load_instance",
    "parse_instance",
    "plan_sample_size",
    "solve",
    "synthesize_concave_modular",
    "synthesize_coverage",
    "synthesize_facility",
    "validate",
]
