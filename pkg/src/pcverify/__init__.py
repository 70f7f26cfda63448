"""Desk-scale verification of combinatorial conjectures on primes and partitions."""

from .catalog import catalog, lookup
from .engine import evaluate, find_chain, sequence_terms, verify_range, witness_count_sequence
from .kernels import Kernels, Needs
from .model import ConjectureSpec, Kind, Outcome, Stat, UnderProvisioned, UnknownConjecture, Verdict
from .primes import PrimeTables, build_tables

__all__ = [
    "ConjectureSpec", "Kernels", "Kind", "Needs", "Outcome", "PrimeTables", "Stat", "UnderProvisioned",
    "UnknownConjecture", "Verdict", "build_tables", "catalog", "evaluate", "find_chain", "lookup",
    "sequence_terms", "verify_range", "witness_count_sequence",
]
