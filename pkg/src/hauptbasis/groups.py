"""Registry of genus-zero Fuchsian group data and the Moebius action.

Each registered group carries its signature data (vertex orders and the
Hauptmodul values there), a Hauptmodul q-expansion generated by the oracle
module at load time, and a few known group elements with designated numeric
test points.  Vertex values are extended rationals; the point at infinity is
an explicit symbol, never a sentinel number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import sqrt

from .oracle import EtaQuotientSpec, eta_quotient, j_invariant
from .qseries import QSeries

__all__ = [
    "OO",
    "Infinity",
    "GroupElement",
    "Vertex",
    "SampleElement",
    "GroupData",
    "classify",
    "moebius_apply",
    "get_group",
    "GROUP_NAMES",
    "transform_hauptmodul",
    "TRANSFORM_TESTS",
]


class Infinity:
    """The point at infinity on the extended rational line (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"


OO = Infinity()


class GroupElement:
    """An element of PSL(2, R) with exact rational entries and determinant 1.

    The matrix and its negation are the same element; the sign is
    canonicalized so the first nonzero entry of (a, b, c, d) is positive.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = (Fraction(x) for x in (a, b, c, d))
        if a * d - b * c != 1:
            raise ValueError("group element must have determinant 1")
        for x in (a, b, c, d):
            if x:
                if x < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def trace(self):
        return self.a + self.d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def apply(self, tau):
        return moebius_apply(self, tau)

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"GroupElement({self.a}, {self.b}, {self.c}, {self.d})"


def classify(g):
    """Trace classification: elliptic (<2), parabolic (=2) or hyperbolic (>2)."""
    t = abs(g.trace)
    if t < 2:
        return "elliptic"
    if t == 2:
        return "parabolic"
    return "hyperbolic"


def moebius_apply(g, tau):
    """The action tau -> (a tau + b)/(c tau + d) on the upper half-plane."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("moebius_apply requires a point with positive imaginary part")
    a, b, c, d = (float(x) for x in g.entries())
    return (a * tau + b) / (c * tau + d)


@dataclass(frozen=True)
class Vertex:
    """A vertex of the fundamental domain: an elliptic point or a cusp.

    ``order`` is the integer order of an elliptic point, or None for a cusp
    (infinite order).  ``value`` is the Hauptmodul value there, an extended
    rational.  ``location`` is a double-precision point in the upper
    half-plane, stored only for elliptic points with classically known
    positions; it feeds numeric tests, never exact ones.
    """

    order: int | None
    value: Fraction | Infinity
    location: complex | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 2:
            raise ValueError("elliptic vertex order must be at least 2")
        if not isinstance(self.value, Infinity):
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_cusp(self):
        return self.order is None

    @property
    def kind(self):
        return "cusp" if self.is_cusp else "elliptic"


@dataclass(frozen=True)
class SampleElement:
    """A known group element with a designated numeric test point.

    ``floor`` is a guaranteed lower bound for min(Im tau, Im g(tau)) at the
    designated point.  Elements with |c| >= 2 cannot have both points above
    Im = 1/|c| <= 0.5, so their designated points come with a lower floor.
    """

    matrix: GroupElement
    test_point: complex
    floor: float


@dataclass(frozen=True)
class GroupData:
    """Signature, vertices, Hauptmodul expansion and sample elements of a group."""

    name: str
    genus: int
    vertices: tuple[Vertex, ...]
    hauptmodul: QSeries
    cusp_width: int
    elements: tuple[SampleElement, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a registered group needs at least one sample element")
        if sum(1 for v in self.vertices if v.value is OO) > 1:
            raise ValueError("at most one vertex may carry the value oo")

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def elliptic_count(self):
        return sum(1 for v in self.vertices if not v.is_cusp)

    @property
    def cusp_count(self):
        return sum(1 for v in self.vertices if v.is_cusp)

    def signature(self):
        """(genus; n_1, ..., n_r) with None in place of an infinite order."""
        return (self.genus, tuple(v.order for v in self.vertices))

    def orders(self):
        return tuple(v.order for v in self.vertices)

    def infinite_value_vertex(self):
        """The vertex where the Hauptmodul takes the value oo, if any."""
        for v in self.vertices:
            if v.value is OO:
                return v
        return None


# ----------------------------------------------------------------------
# registry

DEFAULT_WINDOW = 80


def _build_psl2z(window):
    haupt = j_invariant(window)
    vertices = (
        Vertex(2, Fraction(1728), 1j),
        Vertex(3, Fraction(0), complex(-0.5, sqrt(3) / 2)),
        Vertex(None, OO),
    )
    elements = (
        SampleElement(GroupElement(1, 1, 0, 1), complex(0.3, 1.3), 0.8),
        SampleElement(GroupElement(0, -1, 1, 0), complex(0.05, 1.02), 0.8),
        SampleElement(GroupElement(1, -1, 1, 0), complex(0.02, 1.05), 0.8),
    )
    return GroupData("psl2z", 0, vertices, haupt, 1, elements)


def _build_gamma0_2(window):
    haupt = eta_quotient(EtaQuotientSpec(((1, 24), (2, -24))), window)
    vertices = (
        Vertex(2, Fraction(-64), complex(0.5, 0.5)),
        Vertex(None, Fraction(0)),
        Vertex(None, OO),
    )
    elements = (
        SampleElement(GroupElement(1, 1, 0, 1), complex(0.3, 1.3), 0.8),
        SampleElement(GroupElement(1, -1, 2, -1), complex(0.45, 0.52), 0.45),
        SampleElement(GroupElement(3, -2, 2, -1), complex(0.45, 0.5), 0.45),
    )
    return GroupData("gamma0_2", 0, vertices, haupt, 1, elements)


def _build_gamma_2(window):
    spec = EtaQuotientSpec(((1, 8), (4, 16), (2, -24)), base_den=2)
    haupt = 16 * eta_quotient(spec, window)
    vertices = (
        Vertex(None, Fraction(0)),
        Vertex(None, Fraction(1)),
        Vertex(None, OO),
    )
    elements = (
        SampleElement(GroupElement(1, 2, 0, 1), complex(0.3, 1.1), 0.8),
        SampleElement(GroupElement(1, 0, 2, 1), complex(-0.45, 0.5), 0.45),
        SampleElement(GroupElement(5, 2, 2, 1), complex(-0.48, 0.5), 0.45),
    )
    return GroupData("gamma_2", 0, vertices, haupt, 2, elements)


_BUILDERS = {
    "psl2z": _build_psl2z,
    "gamma0_2": _build_gamma0_2,
    "gamma_2": _build_gamma_2,
}

GROUP_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def get_group(name, window=DEFAULT_WINDOW):
    """Immutable data for a registered group, with the Hauptmodul expanded
    to the requested window (in units of 1/cusp_width)."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown group {name!r}; registered groups: {', '.join(GROUP_NAMES)}"
        ) from None
    return builder(window)


# Moebius reparametrizations of the psl2z Hauptmodul exercised by the
# verification suites: (p, q, r, s) for t -> (p t + q)/(r t + s).
TRANSFORM_TESTS = {
    "psl2z": ((0, 1, 1, -1000), (1, -1728, 0, 1)),
}


def transform_hauptmodul(gd, p, q, r, s, name=None):
    """Reparametrize the Hauptmodul by t -> (p t + q)/(r t + s).

    Any Moebius transform of a Hauptmodul is again a Hauptmodul; the vertex
    values travel through the same map on the extended rational line (with oo
    handled projectively) and everything else about the group is unchanged.
    """
    p, q, r, s = (Fraction(x) for x in (p, q, r, s))
    if p * s - q * r == 0:
        raise ValueError("degenerate transform: ps - qr must be nonzero")
    w = gd.hauptmodul
    numerator = w * p + q
    if r == 0:
        new_series = numerator / s
    else:
        new_series = numerator / (w * r + s)

    def map_value(v):
        if v is OO:
            return (p / r) if r else OO
        den = r * v + s
        if den == 0:
            return OO
        return (p * v + q) / den

    vertices = tuple(
        Vertex(v.order, map_value(v.value), v.location) for v in gd.vertices
    )
    return GroupData(
        name or f"{gd.name}~moebius",
        gd.genus,
        vertices,
        new_series,
        gd.cusp_width,
        gd.elements,
    )
