"""Fibonacci and Lucas recurrences over finite fields and residue rings."""

from .fibseq import FIBONACCI, RecurrenceParams, SequenceId
from .theorem import eigen_data, verify_complementary, verify_lucas, verify_main

__all__ = [
    "FIBONACCI",
    "RecurrenceParams",
    "SequenceId",
    "eigen_data",
    "verify_main",
    "verify_complementary",
    "verify_lucas",
]
