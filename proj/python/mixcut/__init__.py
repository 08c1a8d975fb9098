# Copyright 2020 The Authors.
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

"""Exact cuts and hull diagnostics for mixing sets with a linking constraint."""

from ._mixcut import (
    Instance,
    MixcutError,
    aggregated_cut,
    check_sufficiency,
    diagnose,
    find_witness,
    quantile_lower_bounds,
    separate_aggregated,
    separate_mixing,
    sufficient_cut_family,
)

__all__ = [
    "Instance",
    "MixcutError",
    "aggregated_cut",
    "check_sufficiency",
    "diagnose",
    "find_witness",
    "quantile_lower_bounds",
    "separate_aggregated",
    "separate_mixing",
    "sufficient_cut_family",
]
