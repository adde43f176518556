"""
Bracket Command Handler

Handles the 'bracket' command: the Cayley bracket {F,G} of two forms.
"""

import argparse
from pathlib import Path

from ..lib.klein import bracket
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import to_string


def run_bracket_command(args: argparse.Namespace, project_root: Path) -> int:
    """
    Execute the bracket command.

    Args:
        args: Parsed command line arguments
        project_root: Project root directory

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    F = parse_form(args.F)
    G = parse_form(args.G)
    result = to_string(bracket(F, G))
    return publish(args, {'F': to_string(F), 'G': to_string(G), 'bracket': result}, result)
