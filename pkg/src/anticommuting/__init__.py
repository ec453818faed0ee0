"""Exact rational toolkit for pairs of anti-commuting matrices.

Computes solution spaces of AB = sigma BA, classifies pairs into the
irreducible components of the variety {AB + BA = 0}, measures component
dimensions through exact Kronecker-lifted ranks, and evaluates conjugation
invariants, all over exact rational arithmetic.
"""

from .classify import (ClassificationReport, ComponentTriple, bridge_square,
                       bridge_square2, component_of, direct_sum,
                       enumerate_components, flip, is_generic_pair)
from .commutant import (CommutantBasis, commutant_dim_formula, detblock_check,
                        nilpotent_commutant_dim, sigma_commutant,
                        verify_commutant_structure)
from .errors import (IrrationalSpectrum, NotAntiCommuting, NotGeneric,
                     NotInCommutant, RetriesExhausted, ShapeError)
from .exactmat import (Polynomial, RatMatrix, block_diag, charpoly, hstack,
                       inverse, kernel, kron, poly_gcd, rank, rref,
                       solve_exact, unvec, vec, vstack)
from .invariants import (InvariantVector, PlanePointMultiset, eta,
                         invariant_jacobian_rank, omega, trace_invariants)
from .layered import (jbold, jbold_sum, jordan_block, jordan_matrix,
                      layered_block, layered_matrix, match_layered,
                      match_layered_block)
from .sampler import (DimReport, NilpotentSample, SampleConfig, SplitMix64,
                      draw_component, orbit_dim, sample_component,
                      sample_component_flippable, sample_nilpotent_pair,
                      stabilizer_dim, tangent_dim)
from .spectral import (JordanData, Partition, RationalRoots, is_diagonalizable,
                       jordan_data, jordan_type, partitions, rational_roots,
                       squarefree_part, transpose_partition)
from .verify import VerifyReport, run_suite

__version__ = "0.1.0"
