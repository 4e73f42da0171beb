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
"""Defines the torweyl.data package."""

from torweyl.data.documents import ActionFile
from torweyl.data.documents import ReportDocument
from torweyl.data.families import ActionFamily
from torweyl.data.families import EvenFamily
from torweyl.data.families import Gk4Family
from torweyl.data.families import OddFamily

__all__ = [
    "ActionFamily",
    "ActionFile",
    "EvenFamily",
    "Gk4Family",
    "OddFamily",
    "ReportDocument",
]
