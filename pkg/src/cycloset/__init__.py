"""Cyclic posets, truncated-series Frobenius categories, and their clusters."""

from .cactus import (
    CactusDecomposition,
    CrossingPartition,
    NoncrossingPartition,
    cactus_decompose,
    cactus_poset,
    cluster_correspondence,
    assemble,
    is_noncrossing_partition,
    noncrossing_partitions,
    rho_classes,
    verify_product_decomposition,
)
from .circle import (
    CircleOrder,
    DuplicatePoint,
    MixedOrderUndecidable,
    OrbitPoint,
    RationalPoint,
    SymbolicPoint,
    cyclic_order,
    sort_ccw,
)
from .clusters import (
    BudgetExceeded,
    FrozenArc,
    NotInCluster,
    TooSmall,
    catalan_count,
    cluster_hash,
    cluster_quiver,
    compatible,
    enumerate_clusters,
    enumerate_theta_clusters,
    exchange_graph,
    exchange_graph_dot,
    get_engine,
    is_cluster,
    maximal_compatible_sets,
    mutate,
    quiver_mutation_check,
    rotation_admissible,
    rotation_orbits,
    spaced_out_embed,
    verify_J,
)
from .cocycle import (
    CocycleReport,
    FunctionCocycle,
    TableCocycle,
    WindingCocycle,
    validate_cocycle_on,
)
from .descriptors import (
    cluster_from_json,
    cluster_to_json,
    family_from_json,
    family_to_json,
    is_admissible,
    poset_from_descriptor,
    poset_to_descriptor,
)
from .engine import (
    ClusterObject,
    DegenerateObject,
    HomEngine,
    MorphismSpace,
    ObjectNotInCategory,
    StabilizationFailure,
)
from .pco import (
    HypothesisViolated,
    Infeasible,
    PartialCyclicOrder,
    Timeout,
    delta_lin,
    is_partial_cyclic_order,
    pco_from_bounded_cocycle,
    search_bounded_cocycle,
)
from .poset import (
    CanonicalSuccessor,
    CyclicPoset,
    Identity,
    InadmissibleRotation,
    RotationBy,
    angles_poset,
    build_covering,
    check_covering_axioms,
    check_zposet_star,
    cocycle_from_b,
    is_nondegenerate,
    star_product,
    table_poset,
    zn_poset,
)
from .render import render_diagram
from .symbolic import (
    FanFamily,
    MalformedZigzag,
    MutationInsideTail,
    NotLocallyFinite,
    SymbolicCluster,
    Tail,
    ar_component,
    ar_neighbors,
    build_nested_cluster,
    build_zigzag_cluster,
    complex_K,
    construct_triangulation_cluster,
    euler_characteristic,
    is_locally_finite,
    is_triangulation_cluster,
    limit_pairs,
    mutate_symbolic,
    rho_from_cluster,
    straight_zigzag,
    validate_symbolic,
)

__version__ = "0.1.0"

__all__ = [
    "CactusDecomposition",
    "CrossingPartition",
    "NoncrossingPartition",
    "cactus_decompose",
    "cactus_poset",
    "cluster_correspondence",
    "assemble",
    "is_noncrossing_partition",
    "noncrossing_partitions",
    "rho_classes",
    "verify_product_decomposition",
    "CircleOrder",
    "DuplicatePoint",
    "MixedOrderUndecidable",
    "OrbitPoint",
    "RationalPoint",
    "SymbolicPoint",
    "cyclic_order",
    "sort_ccw",
    "BudgetExceeded",
    "FrozenArc",
    "NotInCluster",
    "TooSmall",
    "catalan_count",
    "cluster_hash",
    "cluster_quiver",
    "compatible",
    "enumerate_clusters",
    "enumerate_theta_clusters",
    "exchange_graph",
    "exchange_graph_dot",
    "get_engine",
    "is_cluster",
    "maximal_compatible_sets",
    "mutate",
    "quiver_mutation_check",
    "rotation_admissible",
    "rotation_orbits",
    "spaced_out_embed",
    "verify_J",
    "CocycleReport",
    "FunctionCocycle",
    "TableCocycle",
    "WindingCocycle",
    "validate_cocycle_on",
    "cluster_from_json",
    "cluster_to_json",
    "family_from_json",
    "family_to_json",
    "is_admissible",
    "poset_from_descriptor",
    "poset_to_descriptor",
    "ClusterObject",
    "DegenerateObject",
    "HomEngine",
    "MorphismSpace",
    "ObjectNotInCategory",
    "StabilizationFailure",
    "HypothesisViolated",
    "Infeasible",
    "PartialCyclicOrder",
    "Timeout",
    "delta_lin",
    "is_partial_cyclic_order",
    "pco_from_bounded_cocycle",
    "search_bounded_cocycle",
    "CanonicalSuccessor",
    "CyclicPoset",
    "Identity",
    "InadmissibleRotation",
    "RotationBy",
    "angles_poset",
    "build_covering",
    "check_covering_axioms",
    "check_zposet_star",
    "cocycle_from_b",
    "is_nondegenerate",
    "star_product",
    "table_poset",
    "zn_poset",
    "render_diagram",
    "FanFamily",
    "MalformedZigzag",
    "MutationInsideTail",
    "NotLocallyFinite",
    "SymbolicCluster",
    "Tail",
    "ar_component",
    "ar_neighbors",
    "build_nested_cluster",
    "build_zigzag_cluster",
    "complex_K",
    "construct_triangulation_cluster",
    "euler_characteristic",
    "is_locally_finite",
    "is_triangulation_cluster",
    "limit_pairs",
    "mutate_symbolic",
    "rho_from_cluster",
    "straight_zigzag",
    "validate_symbolic",
    "__version__",
]
