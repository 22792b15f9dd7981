"""Exception hierarchy for wbu_check."""


class WbuCheckError(Exception):
    """Root of every error raised by this package."""


class DomainError(WbuCheckError, ValueError):
    """An argument lies outside the domain of an operation."""


class ArithmeticWidthError(WbuCheckError, OverflowError):
    """A quantity does not fit in the signed 128-bit window."""


class InfeasibleBasketError(DomainError):
    """The basket has B_1 >= 1, so no positive aE^3 exists."""

    def __init__(self, basket, b1):
        self.basket = basket
        self.b1 = b1
        super().__init__(f"infeasible basket {basket}: B_1 = {b1} >= 1")


class VerificationError(WbuCheckError, AssertionError):
    """A checked identity or bound failed; carries every operand."""

    def __init__(self, check, operands=None, message=None):
        self.check = check
        self.operands = dict(operands or {})
        detail = ", ".join(f"{key}={value}" for key, value in self.operands.items())
        text = message or f"{check} failed"
        super().__init__(f"{text} ({detail})" if detail else text)

    def to_dict(self):
        return {
            "check": self.check,
            "message": str(self),
            "operands": {key: str(value) for key, value in self.operands.items()},
        }
