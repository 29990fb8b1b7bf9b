from enum import Enum

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    RECORD = 'record'
    INAPPLICABLE = 'inapplicable'


class CheckRecord(BaseModel):
    """One line of the verification report."""

    check: str
    margin: float | None = None
    recorded_constant: float | None = None
    status: CheckStatus
    details: dict = Field(default_factory=dict)

    @classmethod
    def asserted(cls, check: str, margin: float, slack: float = 0.0, **details) -> 'CheckRecord':
        """A check that passes when margin >= -slack."""
        status = CheckStatus.PASS if margin >= -slack else CheckStatus.FAIL
        return cls(check=check, margin=margin, status=status, details=details)

    @classmethod
    def recorded(cls, check: str, constant: float | None, **details) -> 'CheckRecord':
        return cls(check=check, recorded_constant=constant, status=CheckStatus.RECORD, details=details)

    @classmethod
    def inapplicable(cls, check: str, reason: str, **details) -> 'CheckRecord':
        return cls(
            check=check, status=CheckStatus.INAPPLICABLE, details={'reason': reason, **details}
        )
