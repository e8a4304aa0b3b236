"""Exact arithmetic on truncated Laurent/Puiseux series in a cusp coordinate.

A series lives in the variable q^(1/h) for a fixed positive integer h, the
``base_den``.  Terms are stored sparsely: a map from the integer exponent e
(standing for q^(e/h)) to a nonzero rational coefficient, plus a precision
window ``prec``.  Every exponent e < prec is exactly determined; everything at
or beyond ``prec`` is unknown.  Coefficients are ``fractions.Fraction`` and
all arithmetic is exact -- there is no floating point anywhere in this module.

Window bookkeeping is conservative: an operation never reports a coefficient
it cannot guarantee.  In particular multiplication propagates the window as
min(prec_f + ord(g), prec_g + ord(f)), and inversion of a series of order v
known to window B yields a series known to window B - 2v.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational

__all__ = ["PrecisionError", "QSeries", "series_to_json", "series_from_json"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PrecisionError(ValueError):
    """A series window is too short to support the requested operation."""


def _as_fraction(value):
    """Coerce an exact scalar.  Floats are rejected: exactness is the contract."""
    if isinstance(value, float):
        raise TypeError("float scalars are not allowed in exact series arithmetic")
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"exact scalar (int or Fraction) required, got {type(value).__name__}")


class QSeries:
    """A truncated series  sum_e c_e * q^(e/h)  with exact rational c_e.

    Instances are immutable by convention: no method mutates ``terms`` after
    construction, so values are safe to share across threads.
    """

    __slots__ = ("base_den", "terms", "prec")

    def __init__(self, base_den, terms=(), prec=0):
        if not isinstance(base_den, int) or base_den < 1:
            raise ValueError("base_den must be a positive integer")
        if not isinstance(prec, int):
            raise ValueError("prec must be an integer")
        acc: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            if not isinstance(e, int):
                raise ValueError(f"exponent {e!r} is not an integer")
            if e >= prec:
                raise ValueError(
                    f"inconsistent precision: exponent {e} lies at or beyond the window {prec}"
                )
            frac = _as_fraction(c)
            if frac:
                total = acc.get(e, _ZERO) + frac
                if total:
                    acc[e] = total
                elif e in acc:
                    del acc[e]
        self.base_den = base_den
        self.terms = acc
        self.prec = prec

    @classmethod
    def _build(cls, base_den, mapping, prec):
        # Internal constructor: silently drops zero coefficients and terms at
        # or beyond the window (operations legitimately shrink windows).
        out = cls.__new__(cls)
        out.base_den = base_den
        out.terms = {e: c for e, c in mapping.items() if e < prec and c}
        out.prec = prec
        return out

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, prec, base_den=1):
        return cls._build(base_den, {}, prec)

    @classmethod
    def one(cls, prec, base_den=1):
        return cls._build(base_den, {0: _ONE}, prec)

    @classmethod
    def constant(cls, value, prec, base_den=1):
        return cls._build(base_den, {0: _as_fraction(value)}, prec)

    @classmethod
    def monomial(cls, coeff, exponent, prec, base_den=1):
        return cls._build(base_den, {exponent: _as_fraction(coeff)}, prec)

    # ------------------------------------------------------------------
    # inspection

    def is_zero(self):
        """True when no term is visible inside the window."""
        return not self.terms

    def order(self):
        """Least stored exponent, in units of 1/base_den.

        A series that vanishes on its whole window carries no order
        information, so this fails loudly rather than guessing.
        """
        if not self.terms:
            raise PrecisionError(
                "order undetermined: series has no terms inside its window"
            )
        return min(self.terms)

    def leading(self):
        e = self.order()
        return e, self.terms[e]

    def __getitem__(self, exponent):
        """Coefficient of q^(exponent/base_den); only answered inside the window."""
        if exponent >= self.prec:
            raise PrecisionError(
                f"coefficient at exponent {exponent} is outside the window {self.prec}"
            )
        return self.terms.get(exponent, _ZERO)

    def _order_floor(self):
        # Lower bound for the order usable in window arithmetic: the true
        # order of a window-zero series is at least its prec.
        return min(self.terms) if self.terms else self.prec

    # ------------------------------------------------------------------
    # base_den reconciliation

    def rescaled(self, base_den):
        """The same series viewed in q^(1/base_den); base_den must be a multiple."""
        if base_den == self.base_den:
            return self
        if base_den % self.base_den:
            raise ValueError(
                f"cannot rescale base_den {self.base_den} to non-multiple {base_den}"
            )
        k = base_den // self.base_den
        return QSeries._build(
            base_den, {e * k: c for e, c in self.terms.items()}, self.prec * k
        )

    def _common(self, other):
        if self.base_den == other.base_den:
            return self, other
        h = lcm(self.base_den, other.base_den)
        return self.rescaled(h), other.rescaled(h)

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        if isinstance(other, QSeries):
            f, g = self._common(other)
            prec = min(f.prec, g.prec)
            merged = dict(f.terms)
            for e, c in g.terms.items():
                merged[e] = merged.get(e, _ZERO) + c
            return QSeries._build(f.base_den, merged, prec)
        try:
            scalar = _as_fraction(other)
        except TypeError:
            return NotImplemented
        merged = dict(self.terms)
        merged[0] = merged.get(0, _ZERO) + scalar
        return QSeries._build(self.base_den, merged, self.prec)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._build(
            self.base_den, {e: -c for e, c in self.terms.items()}, self.prec
        )

    def __sub__(self, other):
        if isinstance(other, QSeries):
            return self + (-other)
        try:
            scalar = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self + (-scalar)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            f, g = self._common(other)
            prec = min(f.prec + g._order_floor(), g.prec + f._order_floor())
            acc: dict[int, Fraction] = {}
            g_exps = sorted(g.terms)
            for e1, c1 in f.terms.items():
                cap = prec - e1
                gt = g.terms
                for e2 in g_exps:
                    if e2 >= cap:
                        break
                    key = e1 + e2
                    prev = acc.get(key)
                    acc[key] = c1 * gt[e2] if prev is None else prev + c1 * gt[e2]
            return QSeries._build(f.base_den, acc, prec)
        try:
            scalar = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if not scalar:
            return QSeries._build(self.base_den, {}, self.prec)
        return QSeries._build(
            self.base_den, {e: c * scalar for e, c in self.terms.items()}, self.prec
        )

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse by power-series long division.

        For a series of order v known to window B the inverse has order -v and
        is known to window B - 2v: the unknown tail of the input perturbs the
        inverse at that level and no further.
        """
        if not self.terms:
            raise PrecisionError(
                "insufficient precision: no leading term inside the window"
            )
        v = min(self.terms)
        length = self.prec - v
        a = [self.terms.get(v + i, _ZERO) for i in range(length)]
        lead = a[0]
        b = [_ZERO] * length
        b[0] = _ONE / lead
        support = [i for i in range(1, length) if a[i]]
        for n in range(1, length):
            s = _ZERO
            for i in support:
                if i > n:
                    break
                bl = b[n - i]
                if bl:
                    s += a[i] * bl
            if s:
                b[n] = -s / lead
        return QSeries._build(
            self.base_den,
            {i - v: b[i] for i in range(length) if b[i]},
            self.prec - 2 * v,
        )

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        try:
            scalar = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if not scalar:
            raise ZeroDivisionError("division of a series by zero")
        return QSeries._build(
            self.base_den, {e: c / scalar for e, c in self.terms.items()}, self.prec
        )

    def __rtruediv__(self, other):
        try:
            scalar = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.inverse() * scalar

    def __pow__(self, m):
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        if m == 0:
            return QSeries._build(self.base_den, {0: _ONE}, self.prec)
        acc = None
        base = self
        e = m
        while e:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def theta(self):
        """The operator q d/dq in exponent units: q^(e/h) maps to (e/h) q^(e/h).

        Equals (1/(2 pi i)) d/dtau on q = exp(2 pi i tau); coefficients stay
        rational.
        """
        h = self.base_den
        return QSeries._build(
            h, {e: c * Fraction(e, h) for e, c in self.terms.items()}, self.prec
        )

    # ------------------------------------------------------------------
    # normalization and comparison

    def monic(self):
        """Rescale so the leading coefficient is 1."""
        _, lead = self.leading()
        if lead == 1:
            return self
        return self / lead

    def equal_to_prec(self, other, window):
        """Exact coefficient agreement for all exponents below ``window``.

        ``window`` is measured in units of the common base_den (the lcm when
        the operands differ).  Both windows must reach it; a shortfall raises
        instead of silently passing.
        """
        f, g = self._common(other)
        if f.prec < window or g.prec < window:
            raise PrecisionError(
                f"window shortfall: comparison needs {window}, have "
                f"{min(f.prec, g.prec)}"
            )
        for e in set(f.terms) | set(g.terms):
            if e < window and f.terms.get(e, _ZERO) != g.terms.get(e, _ZERO):
                return False
        return True

    def truncate(self, window):
        """Restrict to a smaller window (dropping now-unclaimed terms)."""
        if window > self.prec:
            raise PrecisionError(
                f"cannot extend window {self.prec} to {window} by truncation"
            )
        if window == self.prec:
            return self
        return QSeries._build(self.base_den, self.terms, window)

    def shift(self, offset):
        """Multiply by the exact monomial q^(offset/base_den)."""
        if not isinstance(offset, int):
            raise ValueError("shift offset must be an integer exponent")
        return QSeries._build(
            self.base_den,
            {e + offset: c for e, c in self.terms.items()},
            self.prec + offset,
        )

    # ------------------------------------------------------------------
    # dunder plumbing

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.base_den == other.base_den
            and self.prec == other.prec
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.base_den, self.prec, tuple(sorted(self.terms.items()))))

    def _term_str(self, e, c):
        exp = Fraction(e, self.base_den)
        if exp.denominator == 1:
            exp = int(exp)
        if exp == 0:
            return str(c)
        if exp == 1:
            power = "q"
        elif isinstance(exp, int) and exp > 0:
            power = f"q^{exp}"
        else:
            power = f"q^({exp})"
        if c == 1:
            return power
        if c == -1:
            return f"-{power}"
        return f"{c}*{power}"

    def _joined(self, exponents):
        parts = []
        for e in exponents:
            term = self._term_str(e, self.terms[e])
            if parts and not term.startswith("-"):
                parts.append(f"+ {term}")
            elif parts:
                parts.append(f"- {term[1:]}")
            else:
                parts.append(term)
        return " ".join(parts)

    def _tail_str(self):
        exp = Fraction(self.prec, self.base_den)
        if exp.denominator == 1:
            return f"O(q^{int(exp)})"
        return f"O(q^({exp}))"

    def __str__(self):
        if not self.terms:
            return self._tail_str()
        return f"{self._joined(sorted(self.terms))} + {self._tail_str()}"

    def __repr__(self):
        exps = sorted(self.terms)
        head = self._joined(exps[:6])
        if len(exps) > 6:
            head += " + ..."
        elif exps:
            head += f" + {self._tail_str()}"
        else:
            head = self._tail_str()
        return f"QSeries({head!r}, base_den={self.base_den}, prec={self.prec})"


def series_to_json(f):
    """JSON encoding: {"base_den": h, "prec": B, "terms": [[num, den, exp], ...]}.

    Terms are sorted by exponent; numerators and denominators are decimal
    strings so consumers without big integers stay safe.
    """
    return {
        "base_den": f.base_den,
        "prec": f.prec,
        "terms": [
            [str(c.numerator), str(c.denominator), e]
            for e, c in sorted(f.terms.items())
        ],
    }


def series_from_json(obj):
    terms = [
        (int(entry[2]), Fraction(int(entry[0]), int(entry[1])))
        for entry in obj["terms"]
    ]
    return QSeries(int(obj["base_den"]), terms, int(obj["prec"]))
