"""
F2 Command Handler

Handles the 'f2' command: the canonical representative F2 = F0 + Q*F1.
"""

import argparse
from pathlib import Path

from ..lib.harmonic import canonical_rep
from ..lib.klein import bracket, klein_quadric
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import exact_divide, to_string
from ..lib.settings import load_budget


def run_f2_command(args: argparse.Namespace, project_root: Path) -> int:
    """
    Execute the f2 command.

    Args:
        args: Parsed command line arguments
        project_root: Project root directory

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    F = parse_form(args.F)
    rep = canonical_rep(F, load_budget(max_degree=args.max_degree))
    # {F2,F2} = Q * quotient
    quotient = exact_divide(bracket(rep.f2, rep.f2), klein_quadric(F.varset))

    payload = {'F': to_string(F)}
    payload.update(rep.to_dict())
    payload['bracket_f2_over_q'] = to_string(quotient)
    if not args.certificate:
        payload.pop('cofactor_a')
        payload.pop('cofactor_b')

    lines = [
        f"F2 = {to_string(rep.f2)}",
        f"F0 = {to_string(rep.f0)}",
        f"F1 = {to_string(rep.f1)}",
        f"{{F2,F2}} = Q * ({to_string(quotient)})",
    ]
    if args.certificate:
        lines.append(f"{{F,F}} = ({to_string(rep.cofactor_a)})*Q + ({to_string(rep.cofactor_b)})*F")
    return publish(args, payload, "\n".join(lines))
