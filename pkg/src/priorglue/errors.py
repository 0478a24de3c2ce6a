"""Exception hierarchy shared by every module in the package.

All errors raised on purpose derive from :class:`GlueError`, so callers
(notably the CLI) can distinguish "bad input or impossible request" from
genuine bugs.
"""


class GlueError(Exception):
    """Base class for every error this package raises deliberately."""


class DuplicateLabel(GlueError):
    """Two atoms of a state space carry the same label."""


class UnknownAtom(GlueError):
    """A label does not belong to the state space."""

    def __init__(self, label, space=None):
        self.label = label
        msg = f"unknown atom {label!r}"
        if space is not None:
            msg += f" (space has atoms {list(space.atoms)!r})"
        super().__init__(msg)


class SpaceMismatch(GlueError):
    """Values built over different state spaces were combined."""


class DomainViolation(GlueError):
    """An event escapes the domain it must be contained in."""


class InvalidMass(GlueError):
    """A mass value violates its invariants (negative, non-exact, bad sum)."""


class MalformedMass(GlueError):
    """A mass string failed to parse.  Records where parsing stopped."""

    def __init__(self, text, position, reason="unrecognized mass syntax"):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} in {text!r} at position {position}")


class IncompatibleFamily(GlueError):
    """A family of measures disagrees on some overlap; carries the report."""

    def __init__(self, report):
        self.report = report
        first = report.conflicts[0]
        super().__init__(
            f"measures {first.left_index} and {first.right_index} disagree "
            f"at atom {first.atom!r}: {first.left} != {first.right}"
        )


class ZeroProbabilityEvidence(GlueError):
    """Conditioning on an event of probability zero (or on the empty event)."""


class DuplicateAgent(GlueError):
    """Two agents in one family share an id."""


class GcViolation(GlueError):
    """The family fails generalized conditionalization; carries the report."""

    def __init__(self, report):
        self.report = report
        pairs = ", ".join(f"({a}, {b})" for a, b in (c.agents for c in report.conflicts))
        super().__init__(f"generalized conditionalization fails for pair(s) {pairs}")


class InvalidEvidence(GlueError):
    """The proposed evidence set is unusable for gluing."""


class TooLarge(GlueError):
    """A brute-force enumeration would exceed the candidate guard."""


class UnknownDemo(GlueError):
    """No bundled demo goes by that name."""


class BadCredenceFile(GlueError):
    """A credence file violates the input schema."""
