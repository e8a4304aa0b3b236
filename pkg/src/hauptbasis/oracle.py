"""Classical q-series generators used as independent ground truth.

Divisor sums, the weight-4 and weight-6 Eisenstein series, the discriminant
cusp form, eta-quotient product expansions and the j-function.  Everything
here is produced from first principles (divisor enumeration and sparse
binomial products), so it can serve as an oracle for series built by any
other route.  This module never imports the basis construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qseries import QSeries

__all__ = [
    "sigma",
    "eisenstein4",
    "eisenstein6",
    "discriminant",
    "EtaQuotientSpec",
    "eta_quotient",
    "j_invariant",
]


def sigma(k, n):
    """Divisor power sum: sum of d^k over the positive divisors d of n."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            other = n // d
            if other != d:
                total += other**k
        d += 1
    return total


def eisenstein4(window):
    """E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n, exact to the window."""
    if window < 1:
        raise ValueError("window must be at least 1")
    terms = {0: Fraction(1)}
    for n in range(1, window):
        terms[n] = Fraction(240 * sigma(3, n))
    return QSeries(1, terms, window)


def eisenstein6(window):
    """E6 = 1 - 504 sum_{n>=1} sigma_5(n) q^n, exact to the window."""
    if window < 1:
        raise ValueError("window must be at least 1")
    terms = {0: Fraction(1)}
    for n in range(1, window):
        terms[n] = Fraction(-504 * sigma(5, n))
    return QSeries(1, terms, window)


def discriminant(window):
    """The discriminant cusp form (E4^3 - E6^2)/1728 = q - 24q^2 + 252q^3 - ...

    The constant terms cancel exactly, so the result has order 1 and leading
    coefficient 1.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    e4 = eisenstein4(window)
    e6 = eisenstein6(window)
    return (e4**3 - e6**2) / 1728


@dataclass(frozen=True)
class EtaQuotientSpec:
    """An eta quotient prod_i eta(m_i * tau / base_den)^(e_i).

    ``factors`` is a sequence of (scale, exponent) pairs with positive integer
    scales measured in units of the cusp width, so base_den 1 gives the plain
    eta(m tau) factors and base_den 2 admits the half-integer arguments needed
    for level-two quotients with q^(1/2) expansions.
    """

    factors: tuple[tuple[int, int], ...]
    base_den: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple((int(m), int(e)) for m, e in self.factors)
        )
        for m, _ in self.factors:
            if m < 1:
                raise ValueError("eta factor scales must be positive integers")
        if self.base_den < 1:
            raise ValueError("base_den must be a positive integer")

    @property
    def leading_exponent(self):
        """The exponent of the q^(1/base_den) prefactor, sum(m*e)/24."""
        total = sum(m * e for m, e in self.factors)
        if total % 24:
            raise ValueError(
                f"fractional leading power {total}/24 is not representable "
                f"as an integer exponent of q^(1/{self.base_den})"
            )
        return total // 24


def eta_quotient(spec, window):
    """Expand an eta quotient to the given window, exactly.

    Each eta factor contributes x^(m/24) * prod_n (1 - x^(m n)) in the local
    variable x = q^(1/base_den); the product of the sparse binomials is formed
    directly and raised to its exponent by squaring, so the computation stays
    in integer arithmetic throughout.
    """
    lead = spec.leading_exponent
    h = spec.base_den
    inner = window - lead
    if inner <= 0:
        return QSeries._build(h, {}, window)
    unit = QSeries.one(inner, base_den=h)
    for m, e in spec.factors:
        if e == 0:
            continue
        product = QSeries.one(inner, base_den=h)
        n = m
        while n < inner:
            product = product * QSeries(h, {0: 1, n: -1}, inner)
            n += m
        unit = unit * product**e
    return unit.shift(lead)


def j_invariant(window):
    """The j-function q^-1 + 744 + 196884 q + ..., computed as E4^3 / Delta."""
    if window < 0:
        raise ValueError("window must be nonnegative")
    e4 = eisenstein4(window + 1)
    delta = discriminant(window + 2)
    return e4**3 / delta
