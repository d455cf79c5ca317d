"""Exception types shared across the package.

Each carries the CLI exit code the command-line front end maps it to.
"""


class EucidealError(Exception):
    exit_code = 5


class HypothesisViolation(EucidealError):
    """A parameter tuple fails one or more of the required hypotheses."""

    exit_code = 2

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class UnknownClassNumber(EucidealError):
    """No class number is available for the requested field."""

    exit_code = 3


class SearchExhausted(EucidealError):
    """A bounded search ran out of candidates."""

    exit_code = 4


class InternalInconsistency(EucidealError):
    """Two internally computed quantities disagree; always a bug, never an input error."""

    exit_code = 5


class ConditionFailure(EucidealError):
    """A witness candidate fails one of the three admissibility conditions."""

    exit_code = 5

    def __init__(self, report):
        self.report = report
        names = ", ".join(str(i) for i in report.failed)
        super().__init__("condition(s) {%s} failed for u = %d" % (names, report.u))
