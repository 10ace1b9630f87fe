"""Exact rational helpers shared across the package.

All arithmetic in this package is exact: coefficients are Python
``fractions.Fraction`` values and no floats ever enter core code paths.
"""

from fractions import Fraction

Q = Fraction

QZERO = Q(0)
QONE = Q(1)


def qstr(q):
    """Serialize an exact rational as ``"p/q"`` with an explicit denominator."""
    q = Q(q)
    return "%d/%d" % (q.numerator, q.denominator)


def qparse(s):
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.  Inverse of :func:`qstr`."""
    return Q(s.strip())
