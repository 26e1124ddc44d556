"""Domination by vertices and by classes in multipartite digraphs without cyclic triangles."""

from .core import (
    MultipartiteDigraph,
    SimpleDigraph,
    find_cyclic_triangle,
    find_directed_cycle,
    induced_subdigraph,
    out_neighborhood,
    simple_digraph,
    validate,
)
from .errors import (
    BudgetExceeded,
    InternalContradiction,
    ParseError,
    PreconditionError,
    TridomError,
    ValidationError,
)
from .gallai import EdgeColoredGraph, check_gallai, check_largecomp_bound, cover_by_mono_components
from .generators import (
    gen_Dk,
    gen_pentagons,
    gen_random_bipartite_tournament,
    gen_random_digraph,
    gen_random_gallai,
    gen_random_multipartite_trianglefree,
)
from .io import parse_ecg, parse_mpd, serialize_ecg, serialize_mpd
from .oracles import (
    DominationCertificate,
    alpha_exact,
    beta_exact,
    gamma0_exact,
    gamma_exact,
    k_exact,
    recheck,
)
from .solvers import (
    bound_tables,
    dominate_acyclic_orientation,
    dominate_alpha2,
    dominate_beta1,
    dominate_beta2,
    dominate_clique_acyclic,
    dominate_general,
    dominate_via_clique_cover,
    semi_kernel,
)

__version__ = "0.1.0"
