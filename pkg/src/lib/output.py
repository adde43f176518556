"""
Result Output

Writes command results to stdout, as plain text or as a JSON envelope.
Progress and diagnostics go to stderr through the error_handling helpers.
"""

import json
import sys
from pathlib import Path
from typing import Optional

from .error_handling import CayleyError
from .file_utils import save_result_json


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def success_envelope(command: str, payload: dict) -> dict:
    envelope = {'status': 'success', 'command': command}
    envelope.update(payload)
    return envelope


def error_envelope(error: Exception, command: Optional[str] = None) -> dict:
    envelope = {'status': 'error'}
    if command:
        envelope['command'] = command
    envelope['error'] = type(error).__name__
    envelope['message'] = str(error)
    if isinstance(error, CayleyError):
        envelope['error_code'] = error.error_code
    return envelope


def emit_result(command: str, payload: dict, as_json: bool, text: str) -> None:
    """
    Print one command result.

    Args:
        command: The CLI verb
        payload: JSON payload merged into the success envelope
        as_json: Print JSON instead of `text`
        text: Plain-text rendering of the result
    """
    if as_json:
        print(to_json(success_envelope(command, payload)))
    else:
        print(text)
    sys.stdout.flush()


def emit_error(error: Exception, command: Optional[str] = None) -> None:
    """Print the JSON error envelope on stdout."""
    print(to_json(error_envelope(error, command)))
    sys.stdout.flush()


def publish(args, payload: dict, text: str) -> int:
    """Emit a command result and save it when --output is given; returns exit code 0."""
    emit_result(args.command, payload, args.json, text)
    if getattr(args, 'output', None):
        target = Path(args.output)
        save_result_json(success_envelope(args.command, payload), target.name, str(target.parent))
    return 0
