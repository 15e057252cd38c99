"""Acyclic colorings of digraph classes defined by forbidden induced subdigraphs."""
from .colorings import (
    HeroOracle,
    LayerDecomposition,
    OutModuleCertificate,
    brute_force_oracle,
    color_addsink,
    color_locally_complete,
    color_p111,
    color_w3minus,
    color_w3minus_any,
    color_w3plus,
    constant_oracle,
    find_in_module,
    layer_decompose,
    shortpath_partition,
    w3plus_oracle,
)
from .digraph import (
    ContractionResult,
    Digraph,
    Dipath,
    add_arc,
    contract,
    delete,
    in_neighbors,
    induced,
    is_acyclic,
    out_neighbors,
    shortest_dipath,
    strong_components,
)
from .errors import (
    ClassViolation,
    DichromaticError,
    InvalidArgument,
    NotTransitiveTournament,
    OracleMisbehavior,
    PreconditionViolation,
    SizeLimitExceeded,
)
from .generators import GenConfig, c4_blowup, named, random_in_class
from .oracle import ChiResult, Coloring, count_induced, dichromatic_number, is_valid_acyclic_coloring
from .patterns import ClassSpec, Pattern, build_F, find_induced, in_class, pattern_by_name

__version__ = "0.1.0"
