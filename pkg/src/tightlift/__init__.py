"""Exact invariants of contact structures on surgery presentations and their branched covers."""
__version__ = "0.1.0"
