class SemilinearException(Exception):
    """Base exception for all exceptions inside the semilinear package."""

    pass


class UnknownPairError(SemilinearException):
    """Exception used when a colouring is asked about a state pair it does not declare."""

    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right
        super().__init__(f"State pair ({left},{right}) is not declared in the colouring.")


class InvalidUPCError(SemilinearException):
    """Exception used when an ultimately periodic colouring is malformed."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__(f"Invalid ultimately periodic colouring: {'; '.join(problems)}.")
