"""Exact 1-Laplacian eigenpairs, spectra, nodal domains and Cheeger cuts on small graphs."""

from .cheeger import (CkBounds, CutReport, cheeger_h, ck_bounds, k_way_cheeger, min_I_on_subspace,
                      optimal_cheeger_cut)
from .compose import (JoinSpec, ModuleError, MuModule, extend, is_eigencomponent, is_mu_module, join,
                      load_module, paste, plug)
from .eigen import (EigenCertificate, SignPattern, binary_vector, energy_I, in_pi, is_eigenpair,
                    lemma_important_check, lemma_minor_check, load_vertex_function, normalize,
                    one_norm, sign_pattern, ternary_vector)
from .feasibility import EdgeVariableSystem, Equal, FeasibilityResult, Interval, solve
from .graph import (DisconnectedGraphError, Graph, GraphFormatError, boundary_size, complete_graph,
                    connected_components, cycle_graph, enumerate_connected_subsets, generate,
                    load_graph, named_graph, path_graph, psi, subset_volume)
from .multiplicity import FundamentalSystem, algebraic_multiplicity, triangle_decompose
from .nodal import NodalDecomposition, build_max_nodal, nu, nu_closed_form, strong_count, weak_count
from .spectrum import SpectrumReport, census, spectrum, spectrum_closed_form

__version__ = "0.1.0"
