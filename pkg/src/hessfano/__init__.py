"""Fano / weak Fano classification of regular semisimple Hessenberg
varieties in type A, driven entirely by the combinatorics of Hessenberg
functions: coefficient-sign classifiers, constructive bigness witnesses
with independent verification, and exact anti-canonical degrees via
weighted Bruhat-chain counting.
"""
from .hessfn import (
    HessFn,
    banded,
    dimension,
    enumerate_all,
    pivot_permutation,
    render_staircase,
    transpose,
    validate,
)
from .report import ClassReport, classify_one, export, survey
from .schubert import RichardsonSpec, hessenberg_degree, richardson_degree
from .weightlat import ParabolicBlocks, anticanonical_weight, classify, parabolic_blocks
from .witness import (
    WitnessReport,
    bigness_certificate,
    brute_force_witness,
    construct_witness,
    verify_conditions,
)

__version__ = "0.1.0"

__all__ = [
    "ClassReport",
    "HessFn",
    "ParabolicBlocks",
    "RichardsonSpec",
    "WitnessReport",
    "anticanonical_weight",
    "banded",
    "bigness_certificate",
    "brute_force_witness",
    "classify",
    "classify_one",
    "construct_witness",
    "dimension",
    "enumerate_all",
    "export",
    "hessenberg_degree",
    "parabolic_blocks",
    "pivot_permutation",
    "render_staircase",
    "richardson_degree",
    "survey",
    "transpose",
    "validate",
    "verify_conditions",
]
