"""Exact spectra of corona-style graph compositions via constrained coronals."""

from .polyrat import (NEG_INF, IntMatrix, Poly, PolyMatrix, RatFun, X,
                      charpoly_and_adjugate, lagrange_interpolate,
                      poly_from_json, poly_to_json, polymatrix_det,
                      ratfun_from_json, ratfun_to_json)
from .graphs import (BlockProfile, Graph, SemiRegularParams, UNARY_KINDS,
                     adjacency, block_profile, complement, complete,
                     complete_bipartite, cycle, degree_matrix, empty_graph,
                     from_edge_list, generate, graph_from_json, graph_matrix,
                     graph_to_json, incidence, join, laplacian, line_graph,
                     path, semiregular_params, signless_laplacian, unary_op)
from .coronal import (IndexSet, coronal_constrained_partitioned,
                      coronal_equal_rowsum, coronal_generic,
                      coronal_kpq_subsets, coronal_partitioned,
                      coronal_schur_reduction, coronal_unary_table,
                      table_check)
from .corona import (CoronaSpec, build, cluster, corona_edge_subdivision,
                     corona_vertex_subdivision, generalized, spec_from_json,
                     spec_to_json, unary_variant)
from .spectra import (CharPolyReport, CospectralReport, LhtParams,
                      PerturbedLaplacian, SizeLimitError, adjacency_charpoly,
                      bipartite_copies_laplacian_report,
                      block_structured_charpoly, charpoly_report,
                      cluster_charpolys, complete_copies_laplacian_report,
                      cospectral_family, equal_coronal_charpoly,
                      laplacian_block_corollary, laplacian_charpoly,
                      lht_charpoly, lht_closed_form, numeric_roots,
                      oracle_charpoly, signless_charpoly, small_suite,
                      theorem_charpoly, verify_small_suite)
# submodules stay addressable; the classical corona constructor lives at
# coronaspectra.corona.corona
from . import corona, coronal, graphs, polyrat, spectra  # noqa: E402

__version__ = "0.1.0"
