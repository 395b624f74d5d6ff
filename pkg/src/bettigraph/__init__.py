"""Betti diagrams of 2-linear resolutions computed and inverted through
chordal and threshold graphs, anti-lecture hall compositions and the
lattice simplices they fill."""

__version__ = "0.1.0"

from bettigraph.alhc import (alhc_to_omega, count_alhc, decompose_module, is_alhc,
                             omega_to_alhc)
from bettigraph.bscore import (BettiDiagram, bs_decompose, chordality_certificate,
                               pure_diagram)
from bettigraph.census import canonical_form, census_table, classify, enumerate_graphs
from bettigraph.errors import (BettiError, NotChordal, NotInCone, NotRealizable,
                               RangeError, ValidationError)
from bettigraph.exact import (Matrix, eta_vector, lambda_matrix, lambda_right_inverse,
                              omega_inverse, omega_matrix, psi_inverse, psi_matrix)
from bettigraph.graphs import (Graph, component_count, froberg_vector, is_chordal,
                               move_vertex)
from bettigraph.kernels import BACKEND
from bettigraph.lattice import (ehrhart_check, interior_point_check,
                                lattice_points_dilation, closed_form_xi, reflexive_dual,
                                truncate)
from bettigraph.threshold import (build_graph, omega_to_threshold, threshold_omega,
                                  threshold_representative)
