"""Strong geodetic sets: exact solver, certificate verifier and closed-form
constructions for thin grids and cylinders.

The heavy lifting lives in the C++ extension module ``_core``; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    AnchorSet,
    BudgetExhausted,
    Certificate,
    CoverageReport,
    Graph,
    GraphParseError,
    InvalidParameter,
    LayerLabeling,
    NotConnected,
    PairGeodesic,
    TruncationInconclusive,
    bfs_distances,
    build_certificate,
    build_cycle,
    build_cylinder,
    build_graph,
    build_grid,
    build_path,
    cartesian_product,
    ceil_two_sqrt,
    certificate_from_json,
    certificate_to_json,
    count_geodesics,
    covering_lower_bound,
    cylinder_anchors,
    cylinder_threshold,
    diameter,
    enumerate_geodesics,
    find_uncrossed_layer,
    from_edge_list,
    geodetic_number,
    grid_anchors,
    grid_threshold,
    has_assignment,
    interval,
    is_geodesic,
    product_lower_bound,
    project,
    strong_geodetic_number,
    to_edge_list,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
