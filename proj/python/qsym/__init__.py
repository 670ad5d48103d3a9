"""Exact q-Euler polynomials, fermionic p-adic integrals, and their
symmetry identities."""

try:
    from ._qsym import *  # noqa: F401,F403  (installed package layout)
    from ._qsym import __doc__ as _core_doc
except ImportError:  # in-tree builds keep the extension next to the package
    from _qsym import *  # noqa: F401,F403
    from _qsym import __doc__ as _core_doc

__all__ = [
    "Rat",
    "Poly",
    "RatFunc",
    "PadicInt",
    "IntegralConfig",
    "CheckMode",
    "SymmetryCase",
    "SymmetryReport",
    "q_int",
    "q_frac",
    "classical_euler_numbers",
    "classical_euler_poly",
    "q_euler_number",
    "q_euler_poly",
    "q_euler_poly_closed",
    "padic_reduce",
    "is_odd_prime",
    "fermionic_riemann_sum",
    "shift_defect",
    "tuple_count_by_sum",
    "moment_sum",
    "multivariate_moment",
    "t_sum",
    "t_sum_direct",
    "theorem3_side",
    "theorem4_side",
    "theorem3_check",
    "theorem4_check",
    "corollary2_padic_check",
    "corollary2_side_sum",
    "theorem1_series_check",
    "PoleError",
    "NotPAdicInteger",
]
