# Copyright 2026 The TorWeyl Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Defines the torweyl.inference package."""

from torweyl.inference.chars import DimensionSeries
from torweyl.inference.chars import dimension_series
from torweyl.inference.chars import weight_space_dim
from torweyl.inference.decide import AnalysisReport
from torweyl.inference.decide import analyze
from torweyl.inference.weyl import apply
from torweyl.inference.weyl import fourier_transform

__all__ = [
    "AnalysisReport",
    "DimensionSeries",
    "analyze",
    "apply",
    "dimension_series",
    "fourier_transform",
    "weight_space_dim",
]
