"""Exact integer engine for the Hopf algebras Shuffle, NSymm, MPR, WHA, dWHA and End(H)."""

from .base_algebras import NSYMM, SHUFFLE
from .dwha import DWHA, DWHA_PAIRING, Substitution, canonicalize, embed
from .hopf import HopfStructure, Report, antipode, check_selfdual, run_suite
from .lincomb import LinComb, Tensor
from .mpr import MPR, MPR_PAIRING
from .wha import WHA, decode, encode

__all__ = [
    "DWHA",
    "DWHA_PAIRING",
    "HopfStructure",
    "LinComb",
    "MPR",
    "MPR_PAIRING",
    "NSYMM",
    "Report",
    "SHUFFLE",
    "Substitution",
    "Tensor",
    "WHA",
    "antipode",
    "canonicalize",
    "check_selfdual",
    "decode",
    "embed",
    "encode",
    "run_suite",
]
