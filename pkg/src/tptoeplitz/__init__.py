"""Totally positive Toeplitz matrices: Edrei parameters, finite and tropical
parametrizations, quantum Schubert evaluations and their asymptotics."""

from .errors import (ConfigError, ConvergenceError, InsufficientCoefficients,
                     NotTotallyPositive, StabilizationError, TPError)
from .scalars import LeadingTerm, LT_ONE, LT_ZERO, val
from .symfun import (Partition, SchoenbergParams, edrei_expand, jacobi_trudi,
                     m_closed, rect_minor, super_schur)
from .toeplitz import FiniteParams, ToeplitzMatrix, d_map, minor, q_map, truncate
from .chart import (QuiverLabeling, StandardChart, chart_to_matrix, chern_values,
                    diagonal_q, is_divergence_free, matrix_to_chart,
                    superpotential_summands, to_givental, vertex_labels)
from .peterson import (MultiPoly, Permutation, dual_eval, frak_S_eval, frak_S_s_k,
                       quantum_e, quantum_schubert, schubert_poly)
from .characters import CycleType, FrobeniusCoords, mn_character, thoma_average, thoma_value, vk_experiment
from .tropical import (MinIdealFilling, TropParams, detrop_check, from_diagonal,
                       is_interlacing, is_weakly_interlacing, trop_asymptotics, trop_E,
                       trop_E_inverse, weight, weight_inverse)
from .solver import solve_d, solve_q
from .asymptotics import sweep_chern, sweep_d, sweep_q, sweep_schubert

__version__ = "0.1.0"
