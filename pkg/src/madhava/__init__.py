"""Kerala-school calculus algorithms with exact rational arithmetic.

Submodules:

- ``arith``: Fraction-based rationals, truncating FixedDecimal, sparse Polynomial
- ``samskaram``: recursive refinement (1/(x-d), square roots, cosine interpolation)
- ``samkalitam``: power sums, I_N(k) limits, pi and arctan series, quadrant geometry
- ``aryabhata``: finite-difference sine tables and central differences
- ``series``: sine/cosine expansions by double integration, trig oracle
- ``cli``: the ``madhava`` command
"""

from .arith import PI_50, DomainError, FixedDecimal, Polynomial, Rational, to_fixed
from .series import eval_trig, expansion

__version__ = "0.1.0"

__all__ = [
    "PI_50",
    "DomainError",
    "FixedDecimal",
    "Polynomial",
    "Rational",
    "to_fixed",
    "eval_trig",
    "expansion",
]
