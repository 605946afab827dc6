"""Command-line entry point: ``helium-resonator <command> [options]``.

Commands are the project's management commands; hyphenated names map to the
underscored module names (``invert-q`` -> ``invert_q``).
"""

import os
import sys
from typing import List, Optional

COMMANDS = [
    "qcurve",
    "invert-q",
    "modes",
    "nodes",
    "te011",
    "thermal",
    "photons",
    "noise-budget",
    "ringdown",
    "config",
]

EXIT_USAGE = 2


def _usage() -> str:
    return "usage: helium-resonator {" + ",".join(COMMANDS) + "} [options]\n"


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code.

    Returns:
        0 on success, 2 for invalid input or config, 3 when a solver does not
        converge, 4 on file I/O failures
    """
    argv = list(sys.argv[1:] if argv is None else argv)

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'helium_resonator.settings')
    import django
    from django.core.management import load_command_class
    from django.core.management.base import CommandError

    django.setup()

    if not argv or argv[0] not in COMMANDS:
        if argv:
            sys.stderr.write(f"Unknown command '{argv[0]}'\n")
        sys.stderr.write(_usage())
        return EXIT_USAGE

    name = argv[0].replace('-', '_')
    command = load_command_class('helium_resonator', name)
    try:
        command.run_from_argv(['helium-resonator', name, *argv[1:]])
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    except CommandError as e:
        # argument errors raised outside the command's own handler
        sys.stderr.write(f"Error: {e}\n")
        return EXIT_USAGE
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
