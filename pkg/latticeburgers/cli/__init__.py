from typer import Typer

from .. import ICON

__all__ = 'app', 'command'

CLI_NAME = 'latticeburgers'

app = Typer(
    add_completion=False,
    context_settings={'help_option_names': ['--help', '-h']},
    help=f"""\
{ICON} {CLI_NAME} {ICON}

Usage: {CLI_NAME} [COMMAND] [COMMAND-FLAGS]

  Examples:

    $ {CLI_NAME} check-schwarz --lattice exponential --c 0.15

    $ {CLI_NAME} evolve --solution f1 --boundary oracle

    $ {CLI_NAME} table2 --out results

    $ {CLI_NAME} config
""",
)

command = app.command
