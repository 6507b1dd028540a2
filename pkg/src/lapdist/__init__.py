"""lapdist: exact verification toolkit for Laplacian eigenvalue distribution.

Decides how many Laplacian eigenvalues of a small graph lie in the closed
interval [n-d+2, n] (d the diameter) with exact integer arithmetic, builds
the extremal families attaining the n-d bound, and property-tests the
supporting eigenvalue inequalities.
"""

from .checks import (
    BoundVerdict,
    LemmaReport,
    check_bound,
    classify_equality,
    complement_identity_check,
    edge_interlacing_check,
    max_degree_bound_check,
    submatrix_interlacing_check,
    verify_edge_deleted_lemma,
    verify_family_lemma,
    weyl_check,
)
from .enumeration import (
    CensusRecord,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    extremal_census,
)
from .families import (
    FamilyMatch,
    FamilySpec,
    build,
    build_gndra,
    build_gndt,
    build_h_ab,
    build_h_abc,
    build_p_plusplus,
    canonicalize,
    parse_spec,
)
from .graphs import (
    Graph,
    add_edges,
    complement,
    complete,
    delete_edge,
    diameter,
    disjoint_union,
    distances,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    is_spanning_subgraph,
    join,
    path,
)
from .spectra import (
    IntegerPolynomial,
    IntegerSymmetricMatrix,
    IntervalCount,
    Spectrum,
    char_poly,
    count_roots_geq,
    laplacian,
    m_interval,
    mu_k,
    multiplicity_at,
    numeric_spectrum,
    path_spectrum_closed_form,
)

__version__ = "0.1.0"
