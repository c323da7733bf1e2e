"""cogpoly: cyclically ordered graphs and their polynomial invariants."""

from .model import (Cog, CogError, CogParseError, Gec, GecSum, GeneralisedGec,
                    PointedGec, RotationSystem, SignedRotationSystem,
                    canonical_form, cog_to_gec, delete_e_edge, extract_e_edge,
                    gec_to_cog, is_isomorphic, parse_cog, parse_rotation,
                    parse_srs, partial_petrial, underlying_cog, vertex_flip,
                    vertex_reversal)
from .poly import SIGMA, LaurentPoly, MultiPoly
from .saturation import (saturation_cog, saturation_DX, saturation_recursive,
                         saturation_regular, saturation_statesum, seg,
                         seg_total)
from .surface import FaceTrace, euler_genus, genus_range, is_orientable, trace_boundaries
from .transition import (SpliceResult, contract_e, k_valuation_sum, splice,
                         split, topological_transition, transition_recursive,
                         transition_statesum)
from .yamada import (Drawing, draw, flow_count, invariant_Rm1, invariant_Y,
                     resolve, tutte_at, yamada_R, yamada_R_skein)
from .census import census_report, enumerate_cogs

__version__ = "0.1.0"
