from .arches import (
    ArchSystem,
    Atom,
    NotAvoidingError,
    ParseError,
    arch_over,
    atoms_of,
    catalan_number,
    concat,
    enumerate_all,
    from_atoms,
    iter_words,
    match_positions,
    mirror,
    nest,
    parse,
    rank,
    render,
    split_atoms,
    unrank,
    word_of,
)
from .dyck import DyckPath, from_dyck, to_dyck
from .forest import PlaneForest, PlaneTree, forest_from_json, forest_to_json, from_forest, to_forest
from .perm import Perm231, from_perm, parse_perm, perm_contains, render_perm, to_perm

__all__ = [
    "ArchSystem",
    "Atom",
    "DyckPath",
    "NotAvoidingError",
    "ParseError",
    "Perm231",
    "PlaneForest",
    "PlaneTree",
    "arch_over",
    "atoms_of",
    "catalan_number",
    "concat",
    "enumerate_all",
    "forest_from_json",
    "forest_to_json",
    "from_atoms",
    "from_dyck",
    "from_forest",
    "from_perm",
    "iter_words",
    "match_positions",
    "mirror",
    "nest",
    "parse",
    "parse_perm",
    "perm_contains",
    "rank",
    "render",
    "render_perm",
    "split_atoms",
    "to_dyck",
    "to_forest",
    "to_perm",
    "unrank",
    "word_of",
]
