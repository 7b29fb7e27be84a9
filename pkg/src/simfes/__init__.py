"""Simultaneous feedback edge sets and simultaneous forests on edge-colored multigraphs."""
from .ecg import (ECGParseError, EdgeColoredGraph, parse_ecg, simultaneous_forest_check,
                  verify_sfes, write_ecg)
from .kernelizer import kernelize
from .maxsim_solver import brute_maxsim, max_simultaneous_forest, solve_maxsim
from .parity import ParityInstance, brute_parity, solve_parity
from .simfes_solver import SfesVerdict, brute_simfes, solve_simfes

__all__ = [
    "ECGParseError", "EdgeColoredGraph", "ParityInstance", "SfesVerdict",
    "brute_maxsim", "brute_parity", "brute_simfes", "kernelize",
    "max_simultaneous_forest", "parse_ecg", "simultaneous_forest_check",
    "solve_maxsim", "solve_parity", "solve_simfes", "verify_sfes", "write_ecg",
]
__version__ = "0.1.0"
