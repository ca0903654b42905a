"""Partial cubes, sign-vector complexes, and exact Varchenko determinants.

Build partial cubes (hypercubes, paths, the forbidden pc-minor family, or any
edge list), compute their Djokovic-Winkler color classes and halfspaces, take
pc-minors, test the COM tope-graph property, and compute the exact multivariate
determinant of the Varchenko matrix together with its factorization into
terms of the shape (1 - (prod x_i)^2)^b.
"""

from .graph_core import (Graph, UNREACHABLE, distances, forbidden_minor,
                         format_edge_list, hypercube, invariant_key, is_isomorphic,
                         isomorphism, make_graph, parse_edge_list, path_graph)
from .oriented_complex import (AxiomCheck, CovectorSet, check_axioms, compose,
                               covector_set, is_simple, negate, parse_covectors,
                               separator_sv, sign_vector, sign_vector_string,
                               support, tope_graph, tope_graph_class_elements,
                               topes, zero_set)
from .partial_cube import (PartialCubeStructure, RecognitionFailure,
                           build_structure, dw_classes, require_structure,
                           separator)
from .pc_minor import (ComVerdict, MinorOp, apply_op, contract, is_com_tope_graph,
                       pc_minors, restrict)
from .polyring import (Poly, PolyRing, evaluate, exact_div, map_variables,
                       permute_variables, substitute, to_canonical_string)
from .reference import (NINE_TOPE_COVECTORS, NINE_TOPE_FACTORS, NINE_TOPE_TOPES,
                        REFERENCE_CASES, match_up_to_variable_permutation,
                        reference_case)
from .varchenko import (ComFactorizationVerdict, FactorizationReport,
                        InternalDefectError, VarchenkoMatrix, build_matrix,
                        candidate_factor, cofactor_determinant_oracle,
                        determinant, determinant_of_entries, factorize,
                        verify_com_factorization)

__all__ = [name for name in dir() if not name.startswith("_")]
