"""Exception hierarchy. Every error knows the process exit code the CLI maps it to."""

from __future__ import annotations

import typing as t


class JsjCubeError(Exception):
    exit_code: int = 1

    def __init__(self, message: str, *, details: t.Any = None):
        super().__init__(message)
        self.message = message
        self.details = details


class InputSyntaxError(JsjCubeError):
    exit_code = 2

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(JsjCubeError):
    exit_code = 2

    def __init__(self, report):
        lines = "; ".join(str(v) for v in report.violations)
        super().__init__(f"invalid tubular complex: {lines}", details=report)
        self.report = report


class PreconditionError(JsjCubeError):
    exit_code = 3


class NotBradyMeierError(PreconditionError):
    def __init__(self, witness):
        super().__init__(f"complex is not Brady-Meier: {witness}", details=witness)
        self.witness = witness


class CertificationError(PreconditionError):
    pass


class ClosedSurfaceError(JsjCubeError):
    exit_code = 4

    def __init__(self, message: str = "closed surface group - JSJ undefined"):
        super().__init__(message)


class ResourceLimitError(JsjCubeError):
    exit_code = 5


class BoundOverflowError(ResourceLimitError):
    def __init__(self, value_bits: int):
        super().__init__(
            "bound exceeds machine range; use --max-cycle-len",
            details={"bits": value_bits},
        )


class RadiusError(ResourceLimitError):
    pass


class GluingError(JsjCubeError):
    exit_code = 1


class UnknownCellError(PreconditionError):
    """a vertex, edge, graph or tube id that the complex does not contain"""
