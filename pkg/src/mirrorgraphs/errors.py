"""Exceptions shared across the package."""


class NotBigraphic(ValueError):
    """The requested pair of degree sequences has no bipartite realization."""


class NotLoopGraphic(ValueError):
    """The requested sequence has no realization as a graph with loops."""


class InvalidPairing(ValueError):
    """A pairing that was required to be a mirror pairing is not one."""


class InternalContradiction(RuntimeError):
    """A construction reached a state its own preconditions rule out.

    Raised by the recursive realizers when a reduced sequence that must be
    bigraphic fails the check.  Seeing this exception means a bug, not bad
    input.
    """


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its node budget before finishing."""
