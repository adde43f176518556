"""
Dualize Command Handler

Handles the 'dualize' command: F composed with the polarity.
"""

import argparse
from pathlib import Path

from ..lib.cayley_forms import dualize
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import to_string


def run_dualize_command(args: argparse.Namespace, project_root: Path) -> int:
    F = parse_form(args.F)
    result = to_string(dualize(F))
    return publish(args, {'F': to_string(F), 'dual': result}, result)
