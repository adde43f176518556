"""
CLI Framework

Main entry point and command routing for the Cayley forms toolkit.
"""

import argparse
import sys
from typing import List, Optional
from pathlib import Path

from .lib.error_handling import CayleyError, ValidationError, describe_error, log_error, set_verbose
from .lib.file_utils import get_project_root
from .lib.output import emit_error


__version__ = '1.0.0'


def handle_errors(func):
    """Decorator to handle errors in CLI functions."""
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CayleyError as e:
            print(f"Error: {describe_error(e)}", file=sys.stderr)
            return e.error_code
        except Exception as e:
            print(f"Unexpected error: {e}", file=sys.stderr)
            return 1
    return wrapper


def _common_options() -> argparse.ArgumentParser:
    """Flags shared by every algebra command."""
    common = argparse.ArgumentParser(add_help=False)

    common.add_argument(
        '--json',
        action='store_true',
        help='Print the result as a JSON envelope'
    )

    common.add_argument(
        '--certificate',
        action='store_true',
        help='Include cofactor certificates for every membership claim'
    )

    common.add_argument(
        '--max-degree',
        type=int,
        help='Cap the S-pair degree of Groebner runs (overrides CAYLEY_MAX_DEGREE)'
    )

    common.add_argument(
        '--output',
        type=str,
        help='Also write the JSON result to this file'
    )
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create the main argument parser with all commands."""
    parser = argparse.ArgumentParser(
        prog='cayley',
        description='Cayley forms and Chow forms of curves on the Grassmannian of lines in P^3',
        epilog='Use "cayley <command> --help" for detailed command help'
    )

    parser.add_argument(
        '--version',
        action='version',
        version=f'Cayley Forms {__version__}'
    )

    parser.add_argument(
        '--verbose', '-v',
        action='store_true',
        help='Enable verbose logging'
    )

    parser.add_argument(
        '--project-root',
        type=str,
        help='Override project root directory (defaults to the repository root)'
    )

    common = _common_options()

    subparsers = parser.add_subparsers(
        dest='command',
        help='Available commands',
        metavar='<command>'
    )

    bracket_parser = subparsers.add_parser(
        'bracket',
        parents=[common],
        help='Cayley bracket {F,G}',
        description='Compute the bracket <grad F, grad G> of two Pluecker forms'
    )
    bracket_parser.add_argument('F', help='First form, e.g. "p01*p23"')
    bracket_parser.add_argument('G', help='Second form')

    laplace_parser = subparsers.add_parser(
        'laplace',
        parents=[common],
        help='Pluecker Laplacian of a form'
    )
    laplace_parser.add_argument('F', help='Form in p01..p23')

    harmonic_parser = subparsers.add_parser(
        'harmonic',
        parents=[common],
        help='Harmonic decomposition F = sum Q^i h_i'
    )
    harmonic_parser.add_argument('F', help='Homogeneous form in p01..p23')

    f2_parser = subparsers.add_parser(
        'f2',
        parents=[common],
        help='Canonical representative F2 = F0 + Q*F1 of a weakly Cayley form'
    )
    f2_parser.add_argument('F', help='Homogeneous form in p01..p23')

    quadcheck_parser = subparsers.add_parser(
        'quadcheck',
        parents=[common],
        help='Harmonic top part of {F0 + Q F1, F0 + Q F1}',
        description='Check the quadratic equation for harmonic F0 and F1'
    )
    quadcheck_parser.add_argument('F0', help='Harmonic form of degree m')
    quadcheck_parser.add_argument('F1', help='Harmonic form of degree m - 2')

    classify_parser = subparsers.add_parser(
        'classify',
        parents=[common],
        help='Weak Cayley, honest and dual honest tests',
        description='Classify a form, or the Chow form of a curve file'
    )
    source = classify_parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--poly', type=str, help='Form in p01..p23')
    source.add_argument('--file', type=str, help='Curve JSON file')

    chow_parser = subparsers.add_parser(
        'chow',
        parents=[common],
        help='Chow form of a curve by elimination'
    )
    chow_parser.add_argument('--file', type=str, required=True, help='Curve JSON file')

    dualize_parser = subparsers.add_parser(
        'dualize',
        parents=[common],
        help='Compose a form with the polarity'
    )
    dualize_parser.add_argument('F', help='Form in p01..p23')

    associated_parser = subparsers.add_parser(
        'associated',
        parents=[common],
        help='Associated curve gamma[k] of a parametrized curve'
    )
    associated_parser.add_argument('--file', type=str, required=True, help='Curve JSON file with "param"')
    associated_parser.add_argument('-k', type=int, required=True, help='0 (points), 1 (tangents) or 2 (osculating planes)')

    selftest_parser = subparsers.add_parser(
        'selftest',
        parents=[common],
        help='Run the built-in identity checks'
    )
    selftest_parser.add_argument(
        '--parallel',
        action='store_true',
        help='Run checks in a process pool'
    )
    selftest_parser.add_argument(
        '--workers',
        type=int,
        default=1,
        help='Number of parallel workers (default: 1, requires --parallel)'
    )

    return parser


def validate_args(args: argparse.Namespace) -> None:
    """Validate command arguments and raise errors for invalid combinations."""

    max_degree = getattr(args, 'max_degree', None)
    if max_degree is not None and max_degree < 1:
        raise ValidationError("--max-degree must be at least 1", str(max_degree))

    if args.command == 'associated':
        if args.k not in (0, 1, 2):
            raise ValidationError("-k must be 0, 1 or 2", str(args.k))

    elif args.command == 'selftest':
        if args.parallel and args.workers < 1:
            raise ValidationError("Number of workers must be at least 1 when using parallel execution")

        if not args.parallel and args.workers > 1:
            raise ValidationError("Cannot specify workers without --parallel flag")


def setup_project_root(args: argparse.Namespace) -> Path:
    """Setup and validate project root directory."""
    if args.project_root:
        project_root = Path(args.project_root).resolve()
    else:
        project_root = get_project_root()

    if not project_root.exists():
        raise ValidationError(f"Project root directory does not exist: {project_root}", str(project_root))

    return project_root


def _dispatch(args: argparse.Namespace, project_root: Path) -> int:
    # Imported per command to keep --help and --version fast
    if args.command == 'bracket':
        from .commands.bracket import run_bracket_command
        return run_bracket_command(args, project_root)

    elif args.command == 'laplace':
        from .commands.laplace import run_laplace_command
        return run_laplace_command(args, project_root)

    elif args.command == 'harmonic':
        from .commands.harmonic import run_harmonic_command
        return run_harmonic_command(args, project_root)

    elif args.command == 'f2':
        from .commands.f2 import run_f2_command
        return run_f2_command(args, project_root)

    elif args.command == 'quadcheck':
        from .commands.quadcheck import run_quadcheck_command
        return run_quadcheck_command(args, project_root)

    elif args.command == 'classify':
        from .commands.classify import run_classify_command
        return run_classify_command(args, project_root)

    elif args.command == 'chow':
        from .commands.chow import run_chow_command
        return run_chow_command(args, project_root)

    elif args.command == 'dualize':
        from .commands.dualize import run_dualize_command
        return run_dualize_command(args, project_root)

    elif args.command == 'associated':
        from .commands.associated import run_associated_command
        return run_associated_command(args, project_root)

    elif args.command == 'selftest':
        from .commands.selftest import run_selftest_command
        return run_selftest_command(args, project_root)

    raise ValidationError(f"Unknown command: {args.command}", str(args.command))


@handle_errors
def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI application."""

    parser = create_parser()
    args = parser.parse_args(argv)
    set_verbose(args.verbose)

    if not args.command:
        parser.print_help()
        return 0

    try:
        validate_args(args)
        project_root = setup_project_root(args)
        return _dispatch(args, project_root)

    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return 130  # Standard exit code for Ctrl+C

    except CayleyError as e:
        if getattr(args, 'json', False):
            emit_error(e, args.command)
        else:
            print(f"Error: {describe_error(e)}", file=sys.stderr)
        if args.verbose:
            log_error(e, args.command)
        return e.error_code

    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1


def cli_main() -> None:
    """Entry point for console script."""
    sys.exit(main())


if __name__ == '__main__':
    cli_main()
