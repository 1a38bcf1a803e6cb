from contextlib import contextmanager
from typing import Iterator

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel

import constants
from core.exceptions import CustomException, UnexpectedResponse
from core.types import ExitCode
from core.utils import logger

err_console = Console(stderr=True)


def error_panel(title: str, message: str) -> None:
    """
    Print an error panel on stderr.
    """
    err_console.print(
        Panel.fit(
            f"[bold red]{escape(title)}[/bold red]\n{escape(message)}",
            border_style="red",
        )
    )


@contextmanager
def handle_errors() -> Iterator[None]:
    """
    Turn the exceptions of a command into an error panel and an exit code.

    A CustomException exits with its own code and a model that fails validation
    is a configuration error. A failed download and anything unexpected exit
    with ExitCode.FAILURE.

    Raises:
        typer.Exit: Whenever the wrapped block raised.
    """
    try:
        yield
    except typer.Exit:
        raise
    except CustomException as exc:
        error_panel(f"{constants.ERROR}: {type(exc).__name__}", exc.message)
        raise typer.Exit(code=int(exc.exit_code))
    except ValidationError as exc:
        error_panel(constants.INVALID_CONFIGURATION, str(exc))
        raise typer.Exit(code=int(ExitCode.CONFIGURATION))
    except UnexpectedResponse as exc:
        error_panel(
            constants.ERROR,
            constants.DOWNLOAD_FAILED.format(
                url=exc.response.url, status=exc.response.status_code
            ),
        )
        raise typer.Exit(code=int(ExitCode.FAILURE))
    except Exception as exc:
        logger.debug("Unexpected failure", exc_info=exc)
        error_panel(constants.SOMETHING_WENT_WRONG, f"{type(exc).__name__}: {exc}")
        raise typer.Exit(code=int(ExitCode.FAILURE))
