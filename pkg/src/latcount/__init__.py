"""latcount: exact counting of connected sets in Cartesian products G x P_n.

A connected set of a graph is a nonempty vertex subset inducing a connected
subgraph (a lattice animal, when the graph is a lattice region).  This
package counts them exactly in products of an arbitrary connected base graph
with a path -- grids P_m x P_n, cylinders C_m x P_n, complete-based products
K_m x P_n -- through several independent engines that cross-validate each
other, plus a spectral transfer-matrix lower bound for the general case.
"""

from .complete_products import count_complete_product, f_vector
from .cylinders import count_c4, count_c5, count_cylinder
from .engines import BaseFamily, count_product
from .graphs import (
    Graph,
    build_family,
    column,
    complete_graph,
    component_count,
    cycle_graph,
    induced_is_connected,
    parse_edge_list,
    path_graph,
    product_with_path,
    star_graph,
)
from .oracle import (
    GraphTooLargeError,
    c_value,
    count_connected_sets,
    enumerate_connected_sets,
)
from .pell import count_ladder, count_prism, pell_sequences
from .profile_dp import StateSpaceError, exact_count, span_counts, state_space_size
from .tables import SequenceTable, c_sequence, render_csv, render_json
from .transfer_bound import (
    SpectralEstimate,
    SubsetTransferMatrix,
    build_transfer_matrix,
    c_lower_limit,
    dominant_eigenvalue,
    lower_bound_count,
)

__version__ = "0.1.0"
