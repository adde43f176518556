"""
Harmonic Command Handler

Handles the 'harmonic' command: the decomposition F = sum_i Q^i h_i.
"""

import argparse
from pathlib import Path

from ..lib.harmonic import decompose
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import to_string


def run_harmonic_command(args: argparse.Namespace, project_root: Path) -> int:
    """
    Execute the harmonic command.

    Prints one line "h<i> = ..." per component.
    """
    F = parse_form(args.F)
    decomposition = decompose(F)
    lines = [f"h{i} = {to_string(h)}" for i, h in enumerate(decomposition.components)]
    payload = {'F': to_string(F)}
    payload.update(decomposition.to_dict())
    return publish(args, payload, "\n".join(lines))
