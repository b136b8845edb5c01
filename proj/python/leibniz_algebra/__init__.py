"""Exact Leibniz algebra computations over the rationals."""

from fractions import Fraction

from ._core import (
    Algebra,
    GuardError,
    InputError,
    MathError,
    build_n_c,
    build_r_c,
    build_R,
    build_R_two_block,
    center_dim,
    characteristic_sequence,
    cohomology,
    derivation_dim,
    derived_dims,
    identity_failures,
    inner_derivation_dim,
    is_complete,
    is_lie,
    is_nilpotent,
    is_rigid,
    is_solvable,
    lower_central_dims,
    partition_count,
    right_annihilator_dim,
    run_cli,
)
from ._core import build_L as _build_L

__all__ = [
    "Algebra", "GuardError", "InputError", "MathError", "build_L", "build_n_c", "build_r_c",
    "build_R", "build_R_two_block", "center_dim", "characteristic_sequence", "cohomology",
    "derivation_dim", "derived_dims", "identity_failures", "inner_derivation_dim", "is_complete",
    "is_lie", "is_nilpotent", "is_rigid", "is_solvable", "lower_central_dims", "partition_count",
    "product", "right_annihilator_dim", "run_cli",
]


def build_L(seq, alphas, betas):
    """Nilpotent family member; alphas and betas may be ints, Fractions or strings."""
    return _build_L(seq, [str(Fraction(a)) for a in alphas], [str(Fraction(b)) for b in betas])


def product(algebra, i, j):
    """[e_i, e_j] as {k: Fraction}."""
    return {k: Fraction(v) for k, v in algebra.product(i, j)}
