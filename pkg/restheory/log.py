"""Implements a simple logger abstraction that allows messages to be directed
   someplace other than stdout.

   Reports produced by the command line tool are written to stdout, so the
   default sink writes to stderr instead.
"""

import sys

SHOW_NONE       = 0
SHOW_SUMMARY    = (1 << 0)
SHOW_TABLES     = (1 << 1)
SHOW_WITNESSES  = (1 << 2)

show = SHOW_NONE


def log(*args):
    """Make log call log_fn so that other modules can use:

       from restheory.log import log

       and then call log_to_xxx and have the changes take effect.
    """
    log_fn(args)


def showing(flag):
    """Returns True if the given SHOW_xxx flag is currently enabled."""
    return bool(show & flag)


def set_show(flags):
    global show
    show = flags


def log_to_print():
    global log_fn
    def log_fn(args):
        print(*args, file=sys.stderr)


def log_to_file(file):
    global log_fn
    def log_fn(args):
        file.write(' '.join([str(arg) for arg in args]))
        file.write('\n')


def log_to_null():
    global log_fn
    def log_fn(args):
        pass


def log_to_fn(fn):
    global log_fn
    log_fn = fn


log_to_print()
