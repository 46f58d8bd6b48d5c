"""lefhodge: exact Weyl-construction, Hodge-level and coniveau engine for abelian varieties."""

__version__ = "0.1.0"
