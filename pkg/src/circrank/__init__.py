"""Exact circulant-matrix toolkit over finite fields.

Builds generalized, double, and multiple circulant matrices over GF(p) and
GF(p^k), computes their ranks through polynomial gcd/lcm degree formulas
(cross-checked against exact Gaussian elimination), verifies the spectral
identities behind those formulas, and emits generator matrices for cyclic,
index-1½ quasi-cyclic, and double cyclic codes.
"""

from .backend import BACKEND
from .circulant import (
    CirculantSpec,
    DenseMatrix,
    DoubleCirculantSpec,
    MultiCirculantSpec,
    build_double_circulant,
    build_generalized_circulant,
    build_multiple_circulant,
    generalized_fourier,
    vandermonde_column,
)
from .codes import (
    CyclicCodeSpec,
    DoubleCyclicSpec,
    GeneratorMatrix,
    QC15Spec,
    codeword_membership,
    cyclic_generator,
    double_cyclic_generator,
    minimum_distance,
    qc15_dimension,
    qc15_generator,
)
from .field import (
    ExtField,
    FieldElem,
    PrimeField,
    find_irreducible,
    primitive_root_of_unity,
    root_of_unity_in,
)
from .poly import NEG_INF, Poly, gcd, lcm, x_pow_minus_one, x_pow_plus_one
from .rank import (
    RankReport,
    assert_not_full_rank,
    consecutive_rows_independent,
    double_rank_components,
    gaussian_rank,
    rank_circulant,
    rank_double,
    rank_multiple,
)
from .spectra import (
    KernelBasis,
    KernelVector,
    kernel_basis,
    kernel_dimension_oracle,
    verify_diagonalization,
    verify_double_eigen_identity,
    verify_eigen_identity,
)

__version__ = "0.1.0"
