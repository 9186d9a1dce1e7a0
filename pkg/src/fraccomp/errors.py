"""Typed errors shared across the toolkit, plus the enumeration budget.

Every brute-force enumeration is guarded by a subset-evaluation budget;
exceeding it raises BudgetExceeded rather than truncating silently.
"""

DEFAULT_MAX_ENUM = 1 << 22


class FraccompError(Exception):
    """Base class for all domain errors raised by this package."""


class FileFormatError(FraccompError):
    """A problem file does not follow its documented format."""


class BudgetExceeded(FraccompError):
    """An enumeration would evaluate more subsets than the configured cap."""


class InfeasibleParameter(FraccompError):
    """The requested fractional/integer parameter has an infeasible LP/IP."""


class UnboundedParameter(FraccompError):
    """The requested fractional parameter has an unbounded LP."""


class NoAdmissibleSubset(FraccompError):
    """A ratio bound has an empty admissible family of subsets."""


class NotNontrivial(FraccompError):
    """The hypergraph has an empty edge or a universal vertex."""


class UnequalBasisSizes(FraccompError):
    """Candidate basis family has edges of different cardinalities."""


class ExchangeAxiomViolated(FraccompError):
    """Candidate basis family fails the basis exchange axiom."""


class RankZero(FraccompError):
    """Edge toughness is undefined: every subset has rank zero."""


class TrivialMatroid(FraccompError):
    """Matroid has rank zero or a coloop, so the toughness theorem is void."""


class Disconnected(FraccompError):
    """Cycle matroids are only built for connected graphs."""


class NoEdges(FraccompError):
    """Graph edge toughness is undefined on edgeless graphs."""


class EmptyGraph(FraccompError):
    """Operation requires a graph with at least one edge."""


class NoTotalDominatingSet(FraccompError):
    """Open-neighbourhood domination is undefined: some neighbourhood is empty."""


class InUniversalVertex(FraccompError):
    """Domination identity requires a digraph without in-universal vertices."""


class DegenerateGame(FraccompError):
    """Matrix game value is 0 or 1, excluded from the complementation identity."""
