"""Event emitter for check progress."""
from __future__ import annotations

from typing import Any, Callable

from ..schemas.events import CompleteEvent, ErrorEvent, StartEvent, UpdateEvent
from ..schemas.report import CheckReport


class EventEmitter:
    """Emits progress events while checks run."""

    def __init__(self, callback: Callable[[Any], None] | None = None):
        """Initialize event emitter with optional callback.

        Args:
            callback: Function to call with each event. If None, no events are emitted.
        """
        self.callback = callback

    def emit_start(self, check: str) -> None:
        """Emit a start event.

        Args:
            check: Name of the check being started
        """
        if self.callback:
            self.callback(StartEvent(check=check, message=f"Running {check}"))

    def emit_update(self, message: str) -> None:
        if self.callback:
            self.callback(UpdateEvent(message=message))

    def emit_complete(self, check: str, report: CheckReport) -> None:
        """Emit a completion event carrying the report verdict."""
        if self.callback:
            self.callback(CompleteEvent(check=check, passed=report.passed, vacuous=report.vacuous))

    def emit_error(self, check: str, message: str, error: str) -> None:
        """Emit an error event.

        Args:
            check: Name of the failing check
            message: Short error message
            error: Detailed error information
        """
        if self.callback:
            self.callback(ErrorEvent(check=check, message=message, error=error))
