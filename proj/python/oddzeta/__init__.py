"""High-precision zeta constants, continued fractions and Diophantine checks.

Decimal values come back as strings carrying exactly the certified digits;
exact coefficients and convergents come back as fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import InsufficientPrecision, NearSingularity, check_dioph, derive, evaluate, probe, weyl, zeta

__all__ = [
    "InsufficientPrecision",
    "NearSingularity",
    "check_dioph",
    "coeff",
    "continued_fraction",
    "derive",
    "evaluate",
    "probe",
    "split",
    "weyl",
    "zeta",
]


def coeff(kind, n):
    """Exact coefficient: kind is bernoulli, euler, even-zeta, lerch or beta."""
    return Fraction(_core.coeff(kind, n))


def split(s, digits=50, a=None):
    """zeta(s) = a pi^s + b; a is returned as a Fraction, b as a decimal string."""
    if a is not None:
        a = str(Fraction(a))
    out = _core.split(s, digits, a)
    out["a"] = Fraction(out["a"])
    return out


def continued_fraction(expr, terms=20, digits=50):
    out = _core.continued_fraction(expr, terms, digits)
    out["convergents"] = [Fraction(c) for c in out["convergents"]]
    return out
