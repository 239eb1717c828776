class SolverException(Exception):
    """Base exception for all exceptions inside the solvers."""

    pass


class CapacityExceededError(SolverException):
    """Exception used when an explored arena grows beyond the position budget."""

    def __init__(self, explored: int, budget: int):
        self.explored = explored
        self.budget = budget
        super().__init__(f"Arena exploration reached {explored} positions, budget is {budget}.")


class BoundsNotLargerError(SolverException):
    """Exception used when refinement is asked for bounds that do not dominate the previous ones."""

    def __init__(self, previous: object, requested: object):
        super().__init__(f"Bounds {requested} do not dominate the previous bounds {previous}.")


class ContradictionError(SolverException):
    """Exception used when a re-solve flips a definite verdict. It signals a solver bug."""

    def __init__(self, previous: str, current: str):
        super().__init__(f"Definite verdict {previous} was contradicted by {current}.")
