"""
File Utilities

Project root discovery, curve file loading and JSON result files.
"""

import json
import os
from pathlib import Path
from typing import Optional

from ..lib.error_handling import FileSystemError, ValidationError, print_info, print_success
from ..models.curve_ideal import CurveIdeal


def get_project_root() -> Path:
    """
    Get the project root directory.

    Returns:
        Path to project root directory
    """
    # Start from current file and search up for project indicators
    current_path = Path(__file__).parent.parent.parent

    indicators = ['requirements.txt', 'docker-compose.yml', '.git']

    while current_path != current_path.parent:
        if any((current_path / indicator).exists() for indicator in indicators):
            return current_path
        current_path = current_path.parent

    return Path.cwd()


def get_fixtures_directory(project_root: Path) -> Path:
    return project_root / "fixtures"


def ensure_directory_exists(directory_path: str) -> None:
    """
    Ensure directory exists, create if it doesn't.

    Raises:
        FileSystemError: If directory cannot be created
    """
    try:
        Path(directory_path).mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise FileSystemError(f"Cannot create directory {directory_path}: {str(e)}", directory_path)


def resolve_input_path(path: str, project_root: Optional[Path] = None) -> Path:
    """
    Find an input file as given, under the project root, or under fixtures/.

    Raises:
        FileSystemError: If no candidate exists
    """
    candidates = [Path(path)]
    if project_root is not None and not Path(path).is_absolute():
        candidates.append(project_root / path)
        candidates.append(get_fixtures_directory(project_root) / path)
    for candidate in candidates:
        if candidate.is_file():
            return candidate
    raise FileSystemError(f"Input file does not exist: {path}", path)


def save_result_json(data: dict, filename: str, directory: str) -> str:
    """
    Save a result as JSON file.

    Args:
        data: Data to save
        filename: JSON filename
        directory: Target directory

    Returns:
        Full path to saved file

    Raises:
        FileSystemError: If file cannot be saved
    """
    ensure_directory_exists(directory)
    file_path = os.path.join(directory, filename)

    try:
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)
            f.write('\n')
        print_success(f"Result saved to {file_path}")
        return file_path
    except (OSError, TypeError, ValueError) as e:
        raise FileSystemError(f"Cannot save JSON file {file_path}: {str(e)}", file_path)


def load_json_file(file_path: str) -> dict:
    """
    Load data from JSON file.

    Raises:
        FileSystemError: If file cannot be loaded
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise FileSystemError(f"Cannot load JSON file {file_path}: {str(e)}", str(file_path))


def load_curve(path: str, project_root: Optional[Path] = None) -> CurveIdeal:
    """
    Load a curve file.

    Raises:
        FileSystemError: If the file is missing or not JSON
        ValidationError: If the content is not a curve
        ParseError: If a polynomial is malformed
    """
    file_path = resolve_input_path(path, project_root)
    data = load_json_file(str(file_path))
    if not isinstance(data, dict):
        raise ValidationError(f"Curve file must hold a JSON object: {file_path}", str(file_path))
    curve = CurveIdeal.from_dict(data)
    print_info(f"Loaded curve {curve.name or file_path.name} with {len(curve.generators)} generators")
    return curve
