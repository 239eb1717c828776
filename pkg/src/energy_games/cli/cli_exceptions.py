class InstanceFileException(Exception):
    """Base exception for all exceptions raised while reading or writing instance files."""

    pass


class SchemaError(InstanceFileException):
    """Exception used when an instance file does not match its schema.

    Attributes:
        pointer (str): JSON pointer to the offending value, ``""`` for the document itself.
        detail (str): What is wrong with it.
    """

    def __init__(self, pointer: str, detail: str):
        self.pointer = pointer
        self.detail = detail
        super().__init__(f"Schema error at {pointer or '/'}: {detail}")


class UnexpectedKindError(InstanceFileException):
    """Exception used when a command receives an instance of another kind than it needs."""

    def __init__(self, path: str, kind: str, expected: tuple[str, ...]):
        super().__init__(f"{path} holds a {kind} instance, expected one of {', '.join(expected)}")


class ConfigurationSyntaxError(InstanceFileException):
    """Exception used when a configuration given on the command line cannot be parsed."""

    def __init__(self, text: str, reason: str):
        super().__init__(f"Cannot read configuration {text!r}: {reason}")
