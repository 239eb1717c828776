class ReductionException(Exception):
    """Base exception for all exceptions inside the reductions."""

    pass


class InconsistentParamsError(ReductionException):
    """Exception used when the periodicity parameters contradict themselves or miss a state pair."""

    def __init__(self, issues: list[str]):
        self.issues = issues
        super().__init__(f"Inconsistent parameters: {'; '.join(issues)}")


class OutsideMapDomainError(ReductionException):
    """Exception used when a position lies outside the documented domain of a position map."""

    def __init__(self, position: object, reason: str):
        super().__init__(f"Position {position} is outside the map domain: {reason}")
