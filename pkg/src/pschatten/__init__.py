"""p-Schatten graph energy toolkit.

Computes E_p(G) = sum |lambda_i|^p over adjacency eigenvalues three ways
(spectral sum, Coulson-type integral, log-ratio difference integral) and
verifies the extremal position of stars and paths among trees through the
quasi-order on characteristic-polynomial coefficients.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .charpoly import (
    BCoeffs,
    BipartitePatternError,
    CharPoly,
    QuasiOrderResult,
    b_coefficients,
    char_poly,
    matching_count,
    matching_counts,
    quasi_compare,
)
from .energy import (
    CsikvariReport,
    EnergyReport,
    OrderMismatchError,
    PsiPoly,
    QuadratureDiagnostics,
    QuadratureError,
    TreeBoundsReport,
    check_csikvari_direction,
    energy_coulson,
    energy_difference_cj,
    f_alpha,
    integrate_coulson,
    integrate_power_weighted,
    pad_to_even,
    psi_logderiv_term,
    verify_tree_bounds,
)
from .graphs import (
    BipartitionWitness,
    Graph,
    GraphInputError,
    GraphParseError,
    NotBipartiteError,
    TreeEnumerationCapError,
    TREE_ENUMERATION_CAP,
    ahu_code,
    enumerate_trees,
    format_edge_list,
    from_edge_list,
    is_bipartite,
    parse_edge_list,
    parse_graph6,
    path_graph,
    pruefer_from_tree,
    sample_trees,
    star_graph,
    tree_from_pruefer,
    write_graph6,
)
from .spectrum import (
    JacobiConvergenceError,
    Spectrum,
    eigenvalues,
    energy_from_spectrum,
    energy_spectral,
)

__version__ = "0.1.0"
