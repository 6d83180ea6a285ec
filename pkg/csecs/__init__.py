import json
import logging

import click
from rich.console import Console
from rich.logging import RichHandler

from csecs.config import config
from csecs.errors import CsEcsError, NumericError


logger = logging.getLogger(__name__)


class CsEcsGroup(click.Group):
    """
    click group with registered error handlers: an exception raised by a
    subcommand is passed to the handler registered for its closest class,
    whose return value becomes the exit code.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.error_handlers = {}

    def errorhandler(self, exc_class):
        def wrapper(fn):
            self.error_handlers[exc_class] = fn
            return fn
        return wrapper

    def _find_handler(self, error):
        for cls in type(error).__mro__:
            if cls in self.error_handlers:
                return self.error_handlers[cls]
        return None

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.exceptions.ClickException:
            raise
        except Exception as e:
            handler = self._find_handler(e)
            if handler is None:
                raise
            ctx.exit(handler(e))


def configure_logging(cfg):
    handler = RichHandler(console=Console(stderr=True), show_path=False, show_time=False, show_level=False)
    logging.basicConfig(
        level=cfg.LOG_LEVEL,
        format=cfg.LOG_FORMAT,
        datefmt=cfg.LOG_DATEFMT,
        handlers=[handler],
        force=True
    )


def create_cli(config_name='default'):
    """
    CLI factory function
    """
    cfg = config[config_name]

    @click.group(cls=CsEcsGroup, context_settings={'obj': cfg, 'help_option_names': ['-h', '--help']})
    def cli():
        """Closed-form and brute-force numerics for coherent-superposition entangled coherent states."""
        configure_logging(cfg)

    # Register commands
    register_commands(cli)

    # Register error handlers
    register_error_handlers(cli)

    return cli


def register_commands(cli):
    """
    Register all subcommands with the group
    """
    from csecs.commands.point import point_command
    cli.add_command(point_command)

    from csecs.commands.sweep import sweep_command
    cli.add_command(sweep_command)

    from csecs.commands.figure import figure_command
    cli.add_command(figure_command)

    from csecs.commands.threshold import threshold_command
    cli.add_command(threshold_command)

    from csecs.commands.verify import verify_command
    cli.add_command(verify_command)


def _report(error, exit_code):
    click.echo(json.dumps(error), err=True)
    return exit_code


def register_error_handlers(cli):
    """
    Register error handlers
    """
    @cli.errorhandler(CsEcsError)
    def library_error(error):
        logger.error('%s: %s', type(error).__name__, error.message)
        return _report(error.to_dict(), error.exit_code)

    @cli.errorhandler(ArithmeticError)
    def arithmetic_error(error):
        logger.error('numeric failure: %s', error)
        return _report({'error': type(error).__name__, 'message': str(error)}, NumericError.exit_code)
