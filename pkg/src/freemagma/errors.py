class MagmaError(Exception):
    """Base class for library errors."""


class DomainError(MagmaError, ValueError):
    """An argument lies outside the domain of the operation."""


class ParseError(MagmaError, ValueError):
    def __init__(self, message, text, pos):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


class ResourceCapError(MagmaError, RuntimeError):
    """A configured resource cap would be exceeded."""

    def __init__(self, cap_name, cap, requested):
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested
        super().__init__(f"{cap_name} exceeded: requested {requested}, cap is {cap}")
