"""Jack polynomials, the Q-operator and separation of variables."""
from .jack import JackExpansion, SpectralCollisionError, eval_at_ones, jack, jack_poly
from .kernels import BACKEND
from .partitions import PartitionError, enumerate_partitions, lower_set
from .qop import SymZPoly, ZPoly, baxter_residual, beta_lambda, f_polynomial, q_eigenvalue_sum, qz_apply
from .scalars import RatFunc, SpecializedField, SymbolicField, field_from_text
from .sov import MultiZPoly, q0_prime_apply, reconstruct, separate_via_chain, separate_via_q
from .sympoly import RawPoly, SymPoly, E_basis, m_basis

__all__ = [
    "BACKEND",
    "E_basis",
    "JackExpansion",
    "MultiZPoly",
    "PartitionError",
    "RatFunc",
    "RawPoly",
    "SpecializedField",
    "SpectralCollisionError",
    "SymPoly",
    "SymZPoly",
    "SymbolicField",
    "ZPoly",
    "baxter_residual",
    "beta_lambda",
    "enumerate_partitions",
    "eval_at_ones",
    "f_polynomial",
    "field_from_text",
    "jack",
    "jack_poly",
    "lower_set",
    "m_basis",
    "q0_prime_apply",
    "q_eigenvalue_sum",
    "qz_apply",
    "reconstruct",
    "separate_via_chain",
    "separate_via_q",
]
