"""Exception hierarchy.

Two families: ordinary input/precondition errors, and ``TheoremViolation``
subclasses, which signal that a closed-form identity disagreed with brute
force.  Violations carry the offending instance in canonical text form so a
report alone is enough to reproduce them.
"""

from __future__ import annotations


class OrderPolyError(Exception):
    """Base class for every error raised by this package."""


class ParseError(OrderPolyError):
    pass


class CycleDetected(OrderPolyError):
    pass


class LabelCollision(OrderPolyError):
    pass


class UnknownVertex(OrderPolyError):
    pass


class NotAnExtension(OrderPolyError):
    pass


class NotSinkElimination(OrderPolyError):
    pass


class PreconditionViolated(OrderPolyError):
    pass


class NotTurning(PreconditionViolated):
    pass


class HypothesisNotMet(PreconditionViolated):
    """Raised when an optional theorem hypothesis fails; callers treat it as a skip."""


class LimitExceeded(PreconditionViolated):
    pass


class NotATree(PreconditionViolated):
    pass


class NotCaterpillar(OrderPolyError):
    pass


class InconsistentData(OrderPolyError):
    pass


class NotRepresentable(OrderPolyError):
    pass


class NotFactorable(OrderPolyError):
    pass


class TheoremViolation(OrderPolyError):
    """A checked identity failed.  ``instance`` is the canonical text of the input."""

    kind = "theorem-violation"

    def __init__(self, detail: str, instance: str | None = None, **context):
        super().__init__(detail)
        self.detail = detail
        self.instance = instance
        self.context = context

    def to_record(self) -> dict:
        rec = {"kind": self.kind, "detail": self.detail}
        if self.instance is not None:
            rec["instance"] = self.instance
        if self.context:
            rec["context"] = {k: _jsonable(v) for k, v in sorted(self.context.items())}
        return rec


class FormulaMismatch(TheoremViolation):
    kind = "formula-mismatch"


class ClosedFormMismatch(TheoremViolation):
    kind = "closed-form-mismatch"


class DivisibilityFailure(TheoremViolation):
    kind = "divisibility-failure"


class NegativeQuotient(TheoremViolation):
    kind = "negative-quotient"


class NegativeCoefficient(TheoremViolation):
    kind = "negative-coefficient"


class IffViolation(TheoremViolation):
    kind = "iff-violation"


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


class ConjectureCounterexample(TheoremViolation):
    """A tree whose membership disagrees with the core-is-a-path prediction."""

    kind = "conjecture-counterexample"
