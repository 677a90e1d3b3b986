"""Sums of three cubes with prescribed height, via divisor triples."""

from .abc import (
    AbcTriple,
    hunt_high_quality,
    implied_C,
    mean_z,
    positive_solutions,
    prime_family,
    quality,
    reduced_count,
    rst_bound,
)
from .arith import (
    Factorization,
    divisors,
    exact_square_root,
    factor,
    rad,
    robin_check,
    sigma,
    tau,
    total_product_triples,
)
from .productsum import (
    ProductSumInstance,
    ProductSumTriple,
    brute_force_count,
    candidates,
    count_triples_delta_form,
    count_triples_formula,
    enumerate_triples,
)
from .records import (
    corollary1_check,
    first_attainments,
    record_jumps,
    record_scan,
    robin_scan,
    sigma_ratio,
    zero_height_count,
)
from .reps import (
    GIANT_TRIPLE,
    CubeTriple,
    RepQuery,
    RepResult,
    band_count,
    brute_cube_search,
    height_residue,
    parametric_witness,
    rep_count,
    rep_enumerate,
    symmetric_profile,
    verify_giant,
)

__version__ = "0.1.0"
