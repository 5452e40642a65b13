"""Finite topological spaces: compact families of opens, dual topologies,
greatest fixed-point collections, and measure level families.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    Collection,
    Family,
    Measure,
    Space,
    TopoError,
    all_opens_family,
    classify_space,
    collection_of,
    compare_topologies,
    continuous_maps,
    empty_family,
    enumerate_spaces,
    export_dot_inclusion_diagram,
    export_dot_lattice,
    family_from_members,
    family_intersection,
    function_space_matches_dual,
    function_space_topology,
    generate_topology,
    greatest_fixed_subcollection,
    grill,
    in_grill,
    intersection_closure,
    is_compact_family,
    is_compactly_generated,
    is_hereditary,
    is_intersection_closed,
    is_joinable_rel,
    is_sectionable,
    is_self_joinable,
    is_self_splittable,
    is_splittable_rel,
    isotone_hull,
    k_collection,
    kappa,
    lambda_collection,
    lambda_down_collection,
    level_family,
    measure_level_collection,
    meet_jointly_continuous,
    meet_within,
    p_collection,
    pairwise_meet,
    product_space,
    random_space,
    representative_thresholds,
    restrict_to,
    run_battery,
    search,
    section_by,
    sierpinski_observer,
    sigma_collection,
    space_from_preorder,
    specialization_pairs,
    verify_selfjoin,
    verify_selfsplit,
    with_all_opens_family,
    with_top_family,
)

__version__ = "0.1.0"
