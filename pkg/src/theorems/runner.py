"""Registry and thread-pool runner for independent checks."""
from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from typing import Any, Callable, Optional

from loguru import logger

from ..config import get_settings
from ..schemas.report import CheckReport
from ..utils.event_emitter import EventEmitter


@dataclass
class CheckResult:
    """Result from executing a check."""
    name: str
    report: CheckReport | None
    error: BaseException | None = None

    @property
    def success(self) -> bool:
        return self.error is None


class CheckRegistry:
    """Registry mapping check names to their handlers and descriptions."""

    def __init__(self):
        self._descriptions: dict[str, str] = {}
        self._handlers: dict[str, Callable[..., Any]] = {}

    def register(self, name: str, handler: Callable[..., Any], description: str = "") -> None:
        """Register a check with its handler function."""
        self._handlers[name] = handler
        self._descriptions[name] = description

    def get_handler(self, name: str) -> Optional[Callable[..., Any]]:
        return self._handlers.get(name)

    def get_description(self, name: str) -> Optional[str]:
        return self._descriptions.get(name)

    def names(self) -> list[str]:
        return list(self._handlers)

    def has_check(self, name: str) -> bool:
        return name in self._handlers


class CheckRunner:
    """Run checks, possibly in parallel, reporting progress through an EventEmitter."""

    def __init__(
        self,
        registry: CheckRegistry | None = None,
        max_workers: int | None = None,
        emitter: EventEmitter | None = None,
    ):
        self.registry = registry or CheckRegistry()
        self.max_workers = max_workers or get_settings().max_workers
        self.emitter = emitter or EventEmitter()

    def execute(self, name: str, thunk: Callable[[], CheckReport]) -> CheckResult:
        """Execute a single check, capturing any exception."""
        self.emitter.emit_start(name)
        try:
            report = thunk()
        except Exception as e:
            logger.error(f"Check failed to run: {name} - {e}")
            self.emitter.emit_error(name, f"{name} raised {type(e).__name__}", str(e))
            return CheckResult(name=name, report=None, error=e)
        self.emitter.emit_complete(name, report)
        return CheckResult(name=name, report=report)

    def execute_registered(self, name: str, **kwargs: Any) -> CheckResult:
        """Execute a registered check by name."""
        handler = self.registry.get_handler(name)
        if not handler:
            logger.warning(f"Unknown check: {name}")
            return CheckResult(name=name, report=None, error=KeyError(f"Unknown check: {name}"))
        return self.execute(name, lambda: handler(**kwargs))

    def execute_parallel(self, calls: list[tuple[str, Callable[[], CheckReport]]]) -> list[CheckResult]:
        """Execute checks in a thread pool; results come back in submission order."""
        logger.debug(f"Executing {len(calls)} check(s) on up to {self.max_workers} worker(s)")
        self.emitter.emit_update(f"Running {len(calls)} checks: " + ", ".join(name for name, _ in calls))
        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = [executor.submit(self.execute, name, thunk) for name, thunk in calls]
            return [future.result() for future in futures]

    def gather(self, calls: list[tuple[str, Callable[[], CheckReport]]]) -> list[CheckReport]:
        """Like :meth:`execute_parallel`, but re-raise the first captured exception."""
        results = self.execute_parallel(calls)
        for result in results:
            if result.error is not None:
                raise result.error
        return [result.report for result in results]
