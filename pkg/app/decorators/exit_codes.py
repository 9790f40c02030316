from functools import wraps
import logging

import click

EXIT_PASS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def usage_errors_exit(f):
    """
    Decorator that turns domain errors raised by a command (guard violations,
    bad selectors, malformed permutations) into a message on stderr and exit
    code 2.
    """

    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValueError as exc:
            logging.warning(f"{f.__name__} rejected its arguments: {exc}")
            click.echo(f"Error: {exc}", err=True)
            click.get_current_context().exit(EXIT_USAGE)

    return decorated_function
