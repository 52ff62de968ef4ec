"""Ranks of G_1(ZG): Keating's formula against the HTW-decomposition prediction."""

from .catalog import GroupSpec, construct, parse_catalog, parse_group_spec
from .chartab import character_table
from .permgroup import Group, Permutation, generate_group
from .ranks import RankReport, analyze, scan

__all__ = [
    "GroupSpec",
    "Group",
    "Permutation",
    "RankReport",
    "analyze",
    "character_table",
    "construct",
    "generate_group",
    "parse_catalog",
    "parse_group_spec",
    "scan",
]

__version__ = "0.1.0"
