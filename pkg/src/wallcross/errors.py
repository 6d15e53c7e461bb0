"""Error types shared across the package."""


class DomainError(ValueError):
    """Precondition violation of a library operation.

    Carries a stable short ``name`` so the command line layer can report
    machine-readable error identifiers on the error stream.
    """

    def __init__(self, name: str, message: str):
        super().__init__(message)
        self.name = name
