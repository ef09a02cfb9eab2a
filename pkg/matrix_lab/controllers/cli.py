"""
Programmatic entry point for the forge command
"""
import logging
import os
import sys
from typing import Optional, Sequence, TextIO

import django
from django.core.management import call_command
from django.core.management.base import CommandError

logger = logging.getLogger(__name__)


def cmd_dispatch(argv: Sequence[str], stdout: Optional[TextIO] = None,
                 stderr: Optional[TextIO] = None) -> int:
    """
    Run `forge <argv>` and return its exit code instead of raising

    Args:
        argv: verb and options, e.g. ['roundtrip', '--t', '2']
        stdout: report stream (default sys.stdout)
        stderr: error stream (default sys.stderr)

    Returns:
        0 when every certificate passed, otherwise the command's return code
    """
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cretan_forge.settings')
    from django.apps import apps
    if not apps.ready:
        django.setup()

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        call_command('forge', *argv, stdout=stdout, stderr=stderr)
    except CommandError as e:
        logger.debug("forge %s failed: %s", ' '.join(argv), e)
        stderr.write(f"error: {e}\n")
        return e.returncode
    return 0
