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
"""Defines the torweyl.models package."""

from torweyl.models.action import SliceData
from torweyl.models.action import TorusAction
from torweyl.models.action import new_action
from torweyl.models.operator import Monomial
from torweyl.models.operator import OperatorElement
from torweyl.models.operator import ScaledMonomial
from torweyl.models.operator import multiply
from torweyl.models.operator import u_op
from torweyl.models.operator_utils import format_operator
from torweyl.models.operator_utils import parse_operator

__all__ = [
    "Monomial",
    "OperatorElement",
    "ScaledMonomial",
    "SliceData",
    "TorusAction",
    "format_operator",
    "multiply",
    "new_action",
    "parse_operator",
    "u_op",
]
