"""
Associated Command Handler

Handles the 'associated' command: the associated curve gamma[k] of a
parametrized curve, with the dual curve for k = 2.
"""

import argparse
from pathlib import Path

from ..lib.cayley_forms import associated_curve, segre_dual, segre_duality
from ..lib.error_handling import ValidationError
from ..lib.file_utils import load_curve
from ..lib.klein import PlueckerVector, is_decomposable
from ..lib.output import publish
from ..lib.polyring import to_string


def run_associated_command(args: argparse.Namespace, project_root: Path) -> int:
    """
    Execute the associated command.

    Args:
        args: Parsed command line arguments
        project_root: Project root directory

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    curve = load_curve(args.file, project_root)
    if curve.param is None:
        raise ValidationError(f"Curve file {args.file} has no 'param' entry", args.file)

    result = associated_curve(curve.param, args.k)
    payload = result.to_dict()
    lines = [f"{label} = {to_string(c)}" for label, c in zip(result.labels, result.coordinates)]

    if args.k == 1:
        on_quadric = is_decomposable(PlueckerVector(result.coordinates))
        payload['on_klein_quadric'] = on_quadric
        lines.append(f"Q(gamma[1]) = 0: {str(on_quadric).lower()}")
    elif args.k == 2:
        dual = segre_dual(curve.param)
        payload['dual_curve'] = [to_string(c) for c in dual]
        lines.append("dual curve = (" + ", ".join(to_string(c) for c in dual) + ")")
        checks = segre_duality(curve.param)
        payload['segre_duality'] = checks
        lines.append("segre duality: " + ", ".join(f"{name}={str(ok).lower()}" for name, ok in checks.items()))

    return publish(args, payload, "\n".join(lines))
