# Copyright 2026 The cgplab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Coherence generating power and MASA geometry."""

from ._core import (
    InputError,
    MetricSample,
    Mori,
    NumericalError,
    Tolerance,
    abs_det_overlap,
    cgp_channel,
    cgp_unitary,
    coherence,
    dfs_distance,
    equal_as_masa,
    estimate_cgp,
    fourier_unitary,
    haar_unitary,
    masa_distance,
    metric_speed,
    overlap_matrix,
    phi,
    product_mori,
    qubit_cgp,
    qubit_dfs,
    qubit_distance,
    qubit_unitary,
)

__all__ = [
    "InputError",
    "MetricSample",
    "Mori",
    "NumericalError",
    "Tolerance",
    "abs_det_overlap",
    "cgp_channel",
    "cgp_unitary",
    "coherence",
    "dfs_distance",
    "equal_as_masa",
    "estimate_cgp",
    "fourier_unitary",
    "haar_unitary",
    "masa_distance",
    "metric_speed",
    "overlap_matrix",
    "phi",
    "product_mori",
    "qubit_cgp",
    "qubit_dfs",
    "qubit_distance",
    "qubit_unitary",
]
