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
"""Command line front end.

Exit codes: 0 on success, 1 on invalid input, 2 when two independent
computations disagree.
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from absl import logging
import sympy

from torweyl import errors
from torweyl import utils
from torweyl.data import documents
from torweyl.data import families
from torweyl.inference import chars
from torweyl.inference import decide
from torweyl.inference import weyl
from torweyl.linalg import exactlin
from torweyl.models import action
from torweyl.models import operator
from torweyl.models import operator_utils

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2


class _ArgumentParser(argparse.ArgumentParser):
  """Reports usage errors as input errors instead of exiting."""

  def error(self, message):
    raise errors.TorWeylError(f"{self.prog}: {message}")


def parse_vector(text: str) -> tuple:
  """Parses comma separated integers, for example `1,-2,0`."""
  try:
    return tuple(int(x) for x in text.split(",") if x.strip() != "")
  except ValueError as e:
    raise errors.TorWeylError(f"Cannot read integer vector {text!r}.") from e


def parse_rational(text: str) -> sympy.Rational:
  """Parses `p` or `p/q`."""
  try:
    return sympy.Rational(text)
  except (TypeError, ValueError, SyntaxError) as e:
    raise errors.TorWeylError(f"Cannot read rational {text!r}.") from e


def _matrix(m: exactlin.IntMatrix) -> List[List[int]]:
  return exactlin.to_lists(m)


def _character(a: action.TorusAction, chi: Sequence[int]) -> Dict[str, Any]:
  """Both coordinate systems of a character."""
  free, torsion = action.normal_coordinates(a, chi)
  return {"chi": list(chi), "free": list(free), "torsion": list(torsion)}


def _read_action(path: str) -> documents.ActionFile:
  if path == "-":
    return documents.ActionFile.from_json(sys.stdin.read())
  try:
    with open(path, encoding="utf-8") as f:
      return documents.ActionFile.from_json(f.read())
  except OSError as e:
    raise errors.TorWeylError(f"Cannot read action file {path!r}: {e}") from e


def _analyze(a: action.TorusAction, args) -> Dict[str, Any]:
  del args  # Unused.
  return {"report": decide.analyze(a).to_dict()}


def _normal_form(a: action.TorusAction, args) -> Dict[str, Any]:
  del args  # Unused.
  form = a.normal_form
  data = action.slice_data(a)
  return {
      "gamma": _matrix(form.gamma),
      "delta": _matrix(form.delta),
      "normal_form": _matrix(form.lp),
      "l1": _matrix(form.l1),
      "l2": _matrix(form.l2),
      "d": list(form.d),
      "rho": [list(rho) for rho in data.rho],
      "component_group": list(data.component_group),
      "identity_rank": data.identity_rank,
  }


def _dims(a: action.TorusAction, args) -> Dict[str, Any]:
  if (args.chi is None) == (args.sweep is None):
    raise errors.TorWeylError("Give exactly one of --chi and --sweep.")
  if args.chi is not None:
    chi = parse_vector(args.chi)
    basis = chars.weight_space_basis(a, chi)
    result = _character(a, chi)
    result.update({"dim": len(basis), "basis": [list(x) for x in basis]})
    return result
  entries = chars.sweep_dimensions(a, parse_rational(args.sweep))
  return {
      "sweep": [{
          "chi": list(e.chi),
          "free": list(e.free),
          "torsion": list(e.torsion),
          "dim": e.dim
      } for e in entries]
  }


def _series(a: action.TorusAction, args) -> Dict[str, Any]:
  series = chars.dimension_series(a, parse_rational(args.bound))
  rows = []
  for (free, torsion), count in series.coefficients.items():
    rows.append({
        "free": list(free),
        "torsion": list(torsion),
        "chi": list(action.raw_character(a, free, torsion)),
        "grading": str(series.gradings[(free, torsion)]),
        "coefficient": count,
    })
  return {
      "bound": str(series.bound),
      "grading": [str(y) for y in series.witness.y],
      "coefficients": rows,
  }


def _act(a: action.TorusAction, args) -> Dict[str, Any]:
  op = operator_utils.parse_operator(args.op, a.r, a.s)
  mono = operator.Monomial(parse_vector(args.mono), a.r)
  if args.flip is not None:
    flip_set = parse_vector(args.flip)
    image = weyl.twisted_apply(flip_set, op, mono)
  else:
    flip_set = None
    image = weyl.apply(op, mono)
  return {
      "operator": operator_utils.format_operator(op),
      "monomial": list(mono.exponents),
      "flip_set": None if flip_set is None else sorted(flip_set),
      "invariant": weyl.is_invariant(a, op),
      "result": [{
          "coeff": str(t.coeff),
          "exponents": list(t.mono.exponents)
      } for t in image],
  }


def _witness(a: action.TorusAction, args) -> Dict[str, Any]:
  del args  # Unused.
  report = decide.analyze(a)
  result: Dict[str, Any] = {"enough_fdm": report.enough_fdm}
  if report.enough_fdm:
    flipped = decide.flip_action(a, report.flip_set)
    result["flip_set"] = list(report.flip_set)
    result["flipped_matrix"] = flipped.to_lists()
    result["annihilators"] = [
        operator_utils.format_operator(op)
        for op in weyl.twisted_generator_annihilators(report.flip_set, a.r,
                                                      a.s)
    ]
  elif isinstance(report.obstruction, decide.DependentTorusWeights):
    witness = weyl.no_fdm_witness(a)
    result["obstruction"] = report.obstruction.to_dict()
    result["operators"] = {
        "Q": operator_utils.format_operator(witness.q_op),
        "P": operator_utils.format_operator(witness.p_op),
        "PQ": operator_utils.format_operator(witness.pq_op),
    }
  else:
    witness = weyl.fixed_coordinate_witness(a, report.obstruction.index)
    result["obstruction"] = report.obstruction.to_dict()
    result["operators"] = {
        "Q": operator_utils.format_operator(witness.q_op),
        "P": operator_utils.format_operator(witness.p_op),
        "Pi": operator_utils.format_operator(witness.pi_op),
    }
  return result


def _iso_check(a: action.TorusAction, args) -> Dict[str, Any]:
  return {
      "bound": args.bound,
      "isomorphic": chars.quotient_iso_check(a, args.bound),
  }


_COMMANDS: Dict[str, Callable[[action.TorusAction, Any], Dict[str, Any]]] = {
    "analyze": _analyze,
    "normal-form": _normal_form,
    "dims": _dims,
    "series": _series,
    "act": _act,
    "witness": _witness,
    "iso-check": _iso_check,
}


def build_parser() -> argparse.ArgumentParser:
  """The argument parser with one subparser per command."""
  common = _ArgumentParser(add_help=False)
  common.add_argument(
      "--text", action="store_true", help="Print tables instead of JSON.")
  common.add_argument(
      "--verbose", action="store_true", help="Log intermediate algebra.")
  with_action = _ArgumentParser(add_help=False, parents=[common])
  with_action.add_argument(
      "--action",
      default="-",
      help='JSON file {"r": .., "s": .., "L": [[..]]}, "-" for stdin.')

  parser = _ArgumentParser(
      prog="torweyl",
      description="Invariant differential operators of torus actions.")
  sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
  sub.required = True
  sub.add_parser("analyze", parents=[with_action])
  sub.add_parser("normal-form", parents=[with_action])
  dims = sub.add_parser("dims", parents=[with_action])
  dims.add_argument("--chi", help="Raw character, e.g. 2,-1.")
  dims.add_argument("--sweep", help="Grading bound of the sweep.")
  series = sub.add_parser("series", parents=[with_action])
  series.add_argument("--bound", required=True, help="Grading bound.")
  act = sub.add_parser("act", parents=[with_action])
  act.add_argument("--op", required=True, help="Operator expression.")
  act.add_argument("--mono", required=True, help="Exponent vector.")
  act.add_argument("--flip", help="Flip set for the twisted module.")
  sub.add_parser("witness", parents=[with_action])
  iso = sub.add_parser("iso-check", parents=[with_action])
  iso.add_argument("--bound", type=int, required=True, help="Box bound.")
  examples = sub.add_parser("examples", parents=[common])
  examples.add_argument(
      "--family", required=True, choices=sorted(families.FAMILIES))
  examples.add_argument("--n", type=int, help="Number of coordinates.")
  return parser


def _render_value(value: Any) -> str:
  if isinstance(value, list) and value and isinstance(value[0], list):
    return "\n" + "\n".join(
        "    " + "  ".join(f"{x:>4}" for x in row) for row in value)
  return str(value)


def render_text(data: Dict[str, Any], indent: str = "") -> str:
  """Human readable rendering of a result, one key per line."""
  lines = []
  for key in sorted(data):
    value = data[key]
    if isinstance(value, dict):
      lines.append(f"{indent}{key}:")
      lines.append(render_text(value, indent + "  "))
    elif isinstance(value, list) and value and isinstance(value[0], dict):
      lines.append(f"{indent}{key}:")
      columns = sorted(value[0])
      lines.append(indent + "  " + " | ".join(columns))
      for row in value:
        lines.append(indent + "  " + " | ".join(str(row[c]) for c in columns))
    else:
      lines.append(f"{indent}{key}: {_render_value(value)}")
  return "\n".join(lines)


def _options(args) -> Dict[str, Any]:
  return {
      k: v
      for k, v in sorted(vars(args).items())
      if k not in ("action", "command", "text", "verbose") and v is not None
  }


def run(argv: Sequence[str],
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
  """Runs one command and returns its exit code.

  Args:
    argv: Arguments without the program name.
    stdout: Stream receiving the result, `sys.stdout` by default.
    stderr: Stream receiving diagnostics, `sys.stderr` by default.
  """
  stdout = sys.stdout if stdout is None else stdout
  stderr = sys.stderr if stderr is None else stderr
  try:
    args = build_parser().parse_args(list(argv))
    logging.set_verbosity(logging.DEBUG if args.verbose else logging.WARNING)
    utils.max_box_points()
    if args.command == "examples":
      members = families.get_family(args.family).generate(args.n)
      docs = []
      for a in members:
        action_file = documents.ActionFile.from_action(a)
        docs.append(
            documents.ReportDocument.create("analyze", action_file,
                                            _analyze(a, args), _options(args)))
      output = {"family": args.family, "members": [d.to_dict() for d in docs]}
      if args.text:
        stdout.write("\n\n".join(
            render_text({
                "L": d.action.matrix,
                "r": d.action.r,
                "s": d.action.s,
                **d.result["report"]
            }) for d in docs) + "\n")
      else:
        stdout.write(documents.dumps(output))
      return EXIT_OK

    action_file = _read_action(args.action)
    a = action_file.to_action()
    result = _COMMANDS[args.command](a, args)
    document = documents.ReportDocument.create(args.command, action_file,
                                               result, _options(args))
    if args.text:
      stdout.write(render_text(result) + "\n")
    else:
      stdout.write(document.to_json())
    return EXIT_OK
  except errors.InternalConsistencyError as e:
    stderr.write(f"torweyl: internal consistency failure: {e}\n")
    return EXIT_INCONSISTENT
  except (ValueError, TypeError) as e:
    stderr.write(f"torweyl: {e}\n")
    return EXIT_INPUT


def main():
  sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
  main()
