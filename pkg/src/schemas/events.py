"""Progress events emitted while theorem checks run."""
from __future__ import annotations

from enum import Enum
from pydantic import BaseModel, Field


class EventType(str, Enum):
    """Types of check progress events."""
    START = "start"
    UPDATE = "update"
    COMPLETE = "complete"
    ERROR = "error"


class StartEvent(BaseModel):
    """Event sent when a check starts."""
    event: EventType = Field(default=EventType.START)
    check: str = Field(description="Name of the check")
    message: str = Field(description="Human-readable description")


class UpdateEvent(BaseModel):
    """Event for general progress updates."""
    event: EventType = Field(default=EventType.UPDATE)
    message: str = Field(description="Progress message")


class CompleteEvent(BaseModel):
    """Event sent when a check has produced its report."""
    event: EventType = Field(default=EventType.COMPLETE)
    check: str = Field(description="Name of the check")
    passed: bool = Field(description="Report verdict")
    vacuous: bool = Field(default=False, description="Whether the pass was vacuous")


class ErrorEvent(BaseModel):
    """Event sent when a check raised instead of reporting."""
    event: EventType = Field(default=EventType.ERROR)
    check: str = Field(description="Name of the check")
    message: str = Field(description="Error message")
    error: str = Field(description="Detailed error information")
