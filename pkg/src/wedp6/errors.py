class ClassViolation(Exception):
    """The input left the graph class the solver's completeness relies on.

    Raised when a structural property that holds for every P6-free graph
    fails (a fifth distance level, a cyclic overtake graph, a non-clique
    component missed by the chosen contact vertex).  Answers already
    verified against the input remain valid; a negative answer does not.
    """


class Infeasible(Exception):
    """A branch of the search cannot contain a finite-weight e.d."""


class InstanceFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
