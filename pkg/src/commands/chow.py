"""
Chow Command Handler

Handles the 'chow' command: the Chow form of a curve by elimination.
"""

import argparse
from pathlib import Path

from ..lib.error_handling import print_success
from ..lib.file_utils import load_curve
from ..lib.output import publish
from ..lib.polyring import to_string
from ..lib.settings import load_budget
from ..services.chow_service import ChowService


def run_chow_command(args: argparse.Namespace, project_root: Path) -> int:
    curve = load_curve(args.file, project_root)
    service = ChowService(load_budget(max_degree=args.max_degree))
    F = service.chow_form_of_curve(curve)
    print_success(f"Chow form of degree {F.degree}")
    payload = {'curve': curve.to_dict(), 'chow_form': to_string(F), 'degree': F.degree}
    return publish(args, payload, to_string(F))
