"""Additive combinatorics over F_q[t] at desk scale.

Canonical degree-echelon bases, block decompositions whose length matches
the growth of a subspace under multiplication by t, generalized
progressions, exact sumset and doubling statistics, greedy Ruzsa covers,
entropic distance diagnostics, and a bivariate model for dilation by a
transcendental element.
"""

from .bivariate import (BiPoly, BiPolySet, GrowthReport, bi_dilate, bi_sumset,
                        dilate_example, growth_report)
from .campaign import (CampaignConfig, CampaignResult, random_polyset,
                       random_subspace, run_cover_campaign,
                       run_decomposition_campaign, run_entropy_campaign)
from .decompose import (Block, DecompositionReport, OracleLimits,
                        StrongDecomposition, decompose, struct_dim_oracle,
                        verify_decomposition)
from .entropy import (Distribution, convolve, entropic_distance, entropy,
                      sum_distribution)
from .errors import InputFormatError, ResourceLimitError
from .field import DEFAULT_MODULI, Field, is_irreducible, is_prime
from .kernels import BACKEND, HAVE_SPEEDUPS, PackSpec
from .poly import NEG_INF, Poly, pol_elements
from .progression import Progression, Term
from .sets import (DoublingStats, PolySet, difference_set, dilate,
                   doubling_stats, iterated_sumset, ruzsa_cover, sumset,
                   translate)
from .spaces import (Subspace, galois_number, gaussian_binomial,
                     iter_subspaces, span)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BiPoly", "BiPolySet", "Block", "CampaignConfig",
    "CampaignResult", "DEFAULT_MODULI", "DecompositionReport", "Distribution",
    "DoublingStats", "Field", "GrowthReport", "HAVE_SPEEDUPS",
    "InputFormatError", "NEG_INF", "OracleLimits", "PackSpec", "Poly",
    "PolySet", "Progression", "ResourceLimitError", "StrongDecomposition",
    "Subspace", "Term", "bi_dilate", "bi_sumset", "convolve", "decompose",
    "difference_set", "dilate", "dilate_example", "doubling_stats",
    "entropic_distance", "entropy", "galois_number", "gaussian_binomial",
    "growth_report", "is_irreducible", "is_prime", "iter_subspaces",
    "iterated_sumset", "pol_elements", "random_polyset", "random_subspace",
    "ruzsa_cover", "run_cover_campaign", "run_decomposition_campaign",
    "run_entropy_campaign", "span", "struct_dim_oracle", "sum_distribution",
    "sumset", "translate", "verify_decomposition", "__version__",
]
