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
"""Action files read by the command line tool and the reports it writes."""

import dataclasses
import hashlib
import json
from typing import Any, Dict, List, Optional

import torweyl
from torweyl import errors
from torweyl.inference import decide
from torweyl.models import action


def dumps(data: Any) -> str:
  """Canonical JSON: sorted keys, two space indentation, trailing newline."""
  return json.dumps(data, sort_keys=True, indent=2) + "\n"


@dataclasses.dataclass(frozen=True)
class ActionFile:
  """The JSON document `{"r": ..., "s": ..., "L": [[...], ...]}`."""
  r: int
  s: int
  matrix: List[List[int]]

  @classmethod
  def from_dict(cls, data: Dict[str, Any]) -> "ActionFile":
    """Validates the parsed document.

    Raises:
      TorWeylError: if a key is missing or has the wrong type.
      ShapeMismatchError: if `L` is not rectangular with `r + s` columns.
    """
    if not isinstance(data, dict):
      raise errors.TorWeylError("An action file must hold a JSON object.")
    missing = sorted({"r", "s", "L"} - set(data))
    if missing:
      raise errors.TorWeylError(f"Action file lacks keys {missing}.")
    r, s, rows = data["r"], data["s"], data["L"]
    for key, value in (("r", r), ("s", s)):
      if isinstance(value, bool) or not isinstance(value, int):
        raise errors.TorWeylError(f"`{key}` must be an integer, got {value!r}.")
    if not isinstance(rows, list) or not all(
        isinstance(row, list) for row in rows):
      raise errors.TorWeylError("`L` must be a list of rows.")
    for row in rows:
      if len(row) != r + s:
        raise errors.ShapeMismatchError(
            f"Row {row} of `L` does not have r + s = {r + s} entries.")
      for x in row:
        if isinstance(x, bool) or not isinstance(x, int):
          raise errors.TorWeylError(f"Entry {x!r} of `L` is not an integer.")
    return cls(r, s, [list(row) for row in rows])

  @classmethod
  def from_json(cls, text: str) -> "ActionFile":
    try:
      data = json.loads(text)
    except json.JSONDecodeError as e:
      raise errors.TorWeylError(f"Action file is not valid JSON: {e}") from e
    return cls.from_dict(data)

  @classmethod
  def from_action(cls, a: action.TorusAction) -> "ActionFile":
    return cls(a.r, a.s, a.to_lists())

  def to_dict(self) -> Dict[str, Any]:
    return {"r": self.r, "s": self.s, "L": [list(row) for row in self.matrix]}

  def to_action(self) -> action.TorusAction:
    """Builds the validated action.

    Raises:
      EmptyActionError: if the action has no rows or no coordinates.
    """
    return action.new_action(self.matrix, self.r, self.s)

  def digest(self) -> str:
    """SHA-256 of the canonical JSON form."""
    return hashlib.sha256(dumps(self.to_dict()).encode("utf-8")).hexdigest()


@dataclasses.dataclass(frozen=True)
class Provenance:
  """Where a report came from."""
  input_digest: str
  version: str
  options: Dict[str, Any]

  def to_dict(self) -> Dict[str, Any]:
    return {
        "input_digest": self.input_digest,
        "version": self.version,
        "options": dict(self.options),
    }

  @classmethod
  def from_dict(cls, data: Dict[str, Any]) -> "Provenance":
    return cls(data["input_digest"], data["version"], dict(data["options"]))


@dataclasses.dataclass(frozen=True)
class ReportDocument:
  """Result of one command on one action, with its provenance.

  Attributes:
    command: Name of the subcommand that produced the result.
    action: The input action.
    result: JSON ready result of the command.
    provenance: Input digest, tool version and options.
  """
  command: str
  action: ActionFile
  result: Dict[str, Any]
  provenance: Provenance

  @classmethod
  def create(cls,
             command: str,
             action_file: ActionFile,
             result: Dict[str, Any],
             options: Optional[Dict[str, Any]] = None) -> "ReportDocument":
    """Stamps a result with the digest of its input and the tool version."""
    provenance = Provenance(action_file.digest(), torweyl.__version__,
                            dict(options or {}))
    return cls(command, action_file, result, provenance)

  @property
  def report(self) -> decide.AnalysisReport:
    """The analysis report held by an `analyze` document.

    Raises:
      TorWeylError: if the document holds another command's result.
    """
    if "report" not in self.result:
      raise errors.TorWeylError(
          f"A {self.command!r} document holds no analysis report.")
    return decide.AnalysisReport.from_dict(self.result["report"])

  def to_dict(self) -> Dict[str, Any]:
    return {
        "command": self.command,
        "action": self.action.to_dict(),
        "result": self.result,
        "provenance": self.provenance.to_dict(),
    }

  @classmethod
  def from_dict(cls, data: Dict[str, Any]) -> "ReportDocument":
    return cls(data["command"], ActionFile.from_dict(data["action"]),
               dict(data["result"]), Provenance.from_dict(data["provenance"]))

  def to_json(self) -> str:
    return dumps(self.to_dict())

  @classmethod
  def from_json(cls, text: str) -> "ReportDocument":
    return cls.from_dict(json.loads(text))
