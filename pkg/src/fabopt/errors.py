"""Exception types shared across the toolkit."""


class FabError(Exception):
    """Base class for all toolkit errors."""


class ContractViolationError(FabError):
    """An operation was called with arguments that break its contract,
    e.g. an assignment whose length does not match the instance."""


class ValidationError(FabError):
    """Invalid data encountered while building domain objects from
    external input. Carries the field path for error reporting."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class ParseError(FabError):
    """Malformed input file (JSON / CSV / LP text)."""


class CapExceededError(FabError):
    """A solver refused an instance that exceeds its configured cap."""

    def __init__(self, message: str, *, cap: int, required: int):
        self.cap = cap
        self.required = required
        super().__init__(message)


class UnknownCardError(FabError, LookupError):
    """A card name was not found in the catalog."""

    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        hint = f" (closest matches: {', '.join(suggestions)})" if suggestions else ""
        super().__init__(f"unknown card name {name!r}{hint}")
