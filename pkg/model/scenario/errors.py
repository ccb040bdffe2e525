"""Exceptions raised while loading and running scenarios."""


class ScenarioError(Exception):
    """Base class for scenario errors."""
    pass


class ScenarioParseError(ScenarioError):
    """Raised when a scenario file is not valid YAML."""

    def __init__(self, path: str, line: int | None, column: int | None, problem: str):
        where = f"line {line}, column {column}" if line is not None else "unknown position"
        super().__init__(f"{path}: {where}: {problem}")
        self.path = path
        self.line = line
        self.column = column
        self.problem = problem


class ScenarioValidationError(ScenarioError):
    """Raised when a parsed scenario violates a constraint; names the field and a fix."""

    def __init__(self, field: str, constraint: str, suggestion: str = ""):
        message = f"{field}: {constraint}"
        if suggestion:
            message += f" (suggested fix: {suggestion})"
        super().__init__(message)
        self.field = field
        self.constraint = constraint
        self.suggestion = suggestion


class CheckpointMismatchError(ScenarioError):
    """Raised when --resume finds a checkpoint written for a different scenario."""
    pass
