"""Exact measure spaces and integrals of finite directed graphs."""

try:
    from ._graphmeasure import (  # noqa: F401
        Graph,
        GraphDomainError,
        GraphParseError,
        MeasureContext,
        cli,
        find_isomorphism,
        measure_equivalence,
    )
except ImportError:  # running against a build tree, module not packaged yet
    from _graphmeasure import (  # noqa: F401
        Graph,
        GraphDomainError,
        GraphParseError,
        MeasureContext,
        cli,
        find_isomorphism,
        measure_equivalence,
    )

__all__ = [
    "Graph",
    "GraphDomainError",
    "GraphParseError",
    "MeasureContext",
    "cli",
    "find_isomorphism",
    "measure_equivalence",
]
