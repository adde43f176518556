"""
Laplace Command Handler

Handles the 'laplace' command: the Pluecker Laplacian of a form.
"""

import argparse
from pathlib import Path

from ..lib.klein import laplacian
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import to_string


def run_laplace_command(args: argparse.Namespace, project_root: Path) -> int:
    F = parse_form(args.F)
    result = to_string(laplacian(F))
    return publish(args, {'F': to_string(F), 'laplacian': result}, result)
