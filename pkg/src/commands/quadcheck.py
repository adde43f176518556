"""
Quadcheck Command Handler

Handles the 'quadcheck' command: h_{2m-2}({F0 + Q F1, F0 + Q F1}).
"""

import argparse
from pathlib import Path

from ..lib.harmonic import quadratic_equation_check
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import to_string


def run_quadcheck_command(args: argparse.Namespace, project_root: Path) -> int:
    F0 = parse_form(args.F0)
    F1 = parse_form(args.F1)
    top = quadratic_equation_check(F0, F1)
    payload = {
        'F0': to_string(F0),
        'F1': to_string(F1),
        'harmonic_part': to_string(top),
        'satisfied': top.is_zero(),
    }
    text = "satisfied" if top.is_zero() else f"not satisfied: {to_string(top)}"
    return publish(args, payload, text)
