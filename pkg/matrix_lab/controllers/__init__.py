"""
Controllers - command reports and the programmatic CLI entry point
"""
from . import reports
from .cli import cmd_dispatch

__all__ = ['reports', 'cmd_dispatch']
