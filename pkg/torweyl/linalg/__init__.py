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
"""Defines the torweyl.linalg package."""

from torweyl.linalg.exactlin import BlockNormalForm
from torweyl.linalg.exactlin import UnimodularPair
from torweyl.linalg.exactlin import block_normal_form
from torweyl.linalg.exactlin import hermite_normal_form
from torweyl.linalg.exactlin import kernel_basis
from torweyl.linalg.exactlin import smith_normal_form
from torweyl.linalg.feasibility import RowSpaceWitness
from torweyl.linalg.feasibility import positive_vector_in_rowspace

__all__ = [
    "BlockNormalForm",
    "RowSpaceWitness",
    "UnimodularPair",
    "block_normal_form",
    "hermite_normal_form",
    "kernel_basis",
    "positive_vector_in_rowspace",
    "smith_normal_form",
]
