import sys

try:  # typer >= 0.26 raises from its vendored copy of click
    from typer import _click as click
except ImportError:
    import click

from latticeburgers.base.exceptions import ERRORS
from latticeburgers.cli import app, config, experiment, lattice

__all__ = 'config', 'experiment', 'lattice'


def run():
    """
    Entrypoint for the CLI. This is the function that is called when the
    user runs `python -m latticeburgers`.

    Returns ``None`` on success, or a one-line message that ``sys.exit``
    prints to stderr with exit status 1.
    """
    try:
        app(standalone_mode=False)
    except ERRORS as e:
        return f'{e.__class__.__name__}: {e.msg}'
    except click.ClickException as e:
        return f'{e.__class__.__name__}: {e.message}'
    except click.Abort:
        return 'Aborted'


if __name__ == '__main__':
    sys.exit(run())
