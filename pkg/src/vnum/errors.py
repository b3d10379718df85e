"""Exception types shared across the package."""


class GuardError(ValueError):
    """An enumeration would exceed a configured size cap."""

    def __init__(self, what: str, cap: int, size: int):
        self.what = what
        self.cap = cap
        self.size = size
        super().__init__(f"{what}: input size {size} exceeds cap {cap}")


class ParseError(ValueError):
    """Malformed input text, with file/line context when available."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")


def guard(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise GuardError(what, cap, size)
