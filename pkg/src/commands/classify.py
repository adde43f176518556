"""
Classify Command Handler

Handles the 'classify' command: weak Cayley, honest and dual honest tests
for a form given inline or as the Chow form of a curve file.
"""

import argparse
from pathlib import Path
from typing import List

from ..lib.file_utils import load_curve
from ..lib.output import publish
from ..lib.poly_parser import parse_form
from ..lib.polyring import to_string
from ..lib.settings import load_budget
from ..models.classification_report import ClassificationReport, HonestWitness
from ..services.chow_service import ChowService


def _witness_lines(title: str, witnesses: List[HonestWitness]) -> List[str]:
    lines = [f"{title}:"]
    for w in witnesses:
        if w.member_qf:
            status = "in (Q,F)" if not w.member_q else "in (Q)"
        else:
            status = f"not in (Q,F), remainder {to_string(w.normal_form_qf)}"
        lines.append(f"  {w.name}: {status}")
    return lines


def render_report(report: ClassificationReport) -> str:
    """Plain-text rendering of a classification report."""
    lines = [
        f"form: {to_string(report.form)}",
        f"degree: {report.degree}",
        f"weak_cayley: {str(report.weak_cayley).lower()}",
        f"honest: {str(report.honest).lower()}",
        f"dual_honest: {str(report.dual_honest).lower()}",
        f"label: {report.label}",
    ]
    if not report.weak_cayley:
        lines.append(f"{{F,F}} mod (Q,F): {to_string(report.weak_remainder)}")
        return "\n".join(lines)
    lines.append(f"F2: {to_string(report.canonical_rep.f2)}")
    lines.extend(_witness_lines("honest witnesses", report.honest_witnesses))
    lines.extend(_witness_lines("dual honest witnesses", report.dual_honest_witnesses))
    return "\n".join(lines)


def run_classify_command(args: argparse.Namespace, project_root: Path) -> int:
    """
    Execute the classify command.

    Args:
        args: Parsed command line arguments
        project_root: Project root directory

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    service = ChowService(load_budget(max_degree=args.max_degree))
    payload = {}
    if args.file:
        curve = load_curve(args.file, project_root)
        F = service.chow_form_of_curve(curve)
        payload['curve'] = curve.to_dict()
    else:
        F = parse_form(args.poly)

    report = service.classify(F)
    payload.update(report.to_dict(certificate=args.certificate))
    return publish(args, payload, render_report(report))
