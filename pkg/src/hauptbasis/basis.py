"""Dimension counts and explicit bases of weight-k forms from a Hauptmodul.

For a genus-zero group with Hauptmodul w and vertex data (n_i, w_i), the
weight-k space has dimension d = 1 - k + sum(a_i) with
a_i = floor((k/2)(1 - 1/n_i)), cusps contributing k/2.  A basis is

    h_j = (theta w)^(k/2) * w^j / prod_{w_i finite} (w - w_i)^(a_i),
    j = 0, ..., d-1,

computed entirely in exact series arithmetic and returned monic at the cusp.
The order ledger reproduces, in exact integers, the local zero/pole bounds
that make each h_j holomorphic: a zero of order (k/2)(n_i-1) - n_i a_i >= 0
at a finite-valued elliptic vertex, a pole of order at most
-(k/2)(n_i-1) + n_i a_i <= 0 where the Hauptmodul's pole sits at an elliptic
vertex, and a pole of order at most 0 when the pole avoids the vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import OO, GroupData, Vertex
from .qseries import PrecisionError, QSeries

__all__ = [
    "vertex_exponent",
    "dim_forms",
    "WeightData",
    "weight_exponents",
    "Basis",
    "build_basis",
    "LedgerEntry",
    "OrderLedger",
    "order_ledger",
    "holomorphic_at_cusp",
    "independent",
    "span_equal",
]


def vertex_exponent(order, k):
    """floor((k/2)(1 - 1/n)) for an elliptic vertex of order n; k/2 for a cusp
    (the n -> oo limit).  k must be even."""
    half = k // 2
    if order is None:
        return half
    return half * (order - 1) // order


def dim_forms(genus, orders, k):
    """Dimension of the space of weight-k forms for signature (genus; orders).

    Cusps are passed as None in ``orders``.  The weight must be even:
    0 for k < 0, 1 for k = 0, genus for k = 2, and
    (genus-1)(k-1) + sum of the vertex exponents for k >= 4.
    """
    if k % 2:
        raise ValueError("unsupported weight parity: k must be even")
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k == 2:
        return genus
    return (genus - 1) * (k - 1) + sum(vertex_exponent(n, k) for n in orders)


@dataclass(frozen=True)
class WeightData:
    """The exponents a_i (aligned with the group's vertices) and the
    dimension d for one (group, k) pair."""

    k: int
    exponents: tuple[int, ...]
    dim: int


def weight_exponents(gd, k):
    if k % 2:
        raise ValueError("unsupported weight parity: k must be even")
    if k < 4:
        raise ValueError("weight exponents are defined for k >= 4; use dim_forms below that")
    if gd.genus != 0:
        raise ValueError("basis construction requires a genus-zero group")
    exponents = tuple(vertex_exponent(v.order, k) for v in gd.vertices)
    return WeightData(k, exponents, 1 - k + sum(exponents))


@dataclass(frozen=True)
class Basis:
    """The constructed forms h_0 .. h_{d-1}, monic, on a shared window."""

    group: GroupData
    weight: WeightData
    forms: tuple[QSeries, ...]
    window: int


def build_basis(gd, k, window=50):
    """Construct the weight-k basis for a registered (or transformed) group.

    Vertices with value oo are omitted from the denominator product.  Forms
    are normalized monic and truncated to the shared window; if the
    Hauptmodul's own window cannot support the request, the error reports the
    achievable window.  d <= 0 yields an empty basis, not an error.
    """
    wd = weight_exponents(gd, k)
    if wd.dim <= 0:
        return Basis(gd, wd, (), window)
    w = gd.hauptmodul
    dw = w.theta()
    numerator = dw ** (k // 2)
    denominator = None
    for vertex, a in zip(gd.vertices, wd.exponents):
        if vertex.value is OO:
            continue
        factor = (w - vertex.value) ** a
        denominator = factor if denominator is None else denominator * factor
    current = numerator if denominator is None else numerator * denominator.inverse()
    forms = []
    for _ in range(wd.dim):
        forms.append(current.monic())
        current = current * w
    achievable = min(f.prec for f in forms)
    if achievable < window:
        raise PrecisionError(
            f"window shortfall: requested {window} but the Hauptmodul window "
            f"only supports {achievable}"
        )
    return Basis(gd, wd, tuple(f.truncate(window) for f in forms), window)


@dataclass(frozen=True)
class LedgerEntry:
    """One exact order bound: the vertex it concerns (None for a pole of the
    Hauptmodul away from the vertex set), the case label, and the bound."""

    vertex: Vertex | None
    case: str
    bound: int


@dataclass(frozen=True)
class OrderLedger:
    group: str
    k: int
    j: int
    entries: tuple[LedgerEntry, ...]


def order_ledger(gd, k, j):
    """Exact integer order bounds guaranteeing holomorphy of h_j on the
    upper half-plane.

    Case i  (elliptic vertex, finite value):  zero order (k/2)(n-1) - n*a >= 0.
    Case ii (elliptic vertex, value oo):      pole order -(k/2)(n-1) + n*a <= 0,
             the bound at the extreme index j = d-1, valid for every smaller j.
    Case iii (pole of w at a non-vertex):     pole order k + sum(a) - k - sum(a) = 0.

    Cusp vertices carry no tau-local entry; their accounting happens in the
    q-coordinate, where holomorphic_at_cusp checks the constructed series
    directly.
    """
    wd = weight_exponents(gd, k)
    if wd.dim <= 0:
        raise ValueError(f"no forms at weight {k}: dimension {wd.dim}")
    if not 0 <= j < wd.dim:
        raise ValueError(f"form index {j} outside [0, {wd.dim - 1}]")
    half = k // 2
    entries = []
    for vertex, a in zip(gd.vertices, wd.exponents):
        if vertex.is_cusp:
            continue
        n = vertex.order
        if vertex.value is OO:
            entries.append(LedgerEntry(vertex, "ii", -half * (n - 1) + n * a))
        else:
            entries.append(LedgerEntry(vertex, "i", half * (n - 1) - n * a))
    if gd.infinite_value_vertex() is None:
        total = sum(wd.exponents)
        entries.append(LedgerEntry(None, "iii", (k + total) - k - total))
    return OrderLedger(gd.name, k, j, tuple(entries))


def holomorphic_at_cusp(basis):
    """True when every form's least exponent is >= 0 (empty basis: vacuously).

    The construction guarantees holomorphy on the upper half-plane; behavior
    at the cusp is verified on the series, never assumed.
    """
    for f in basis.forms:
        if f.prec < 1:
            raise PrecisionError("holomorphy check needs a window of at least 1")
        if f.terms and min(f.terms) < 0:
            return False
    return True


def _coefficient_matrix(forms, window):
    low = min(f.order() for f in forms)
    for f in forms:
        if f.prec < window:
            raise PrecisionError(
                f"window shortfall: matrix needs {window}, have {f.prec}"
            )
    zero = Fraction(0)
    return [[f.terms.get(e, zero) for e in range(low, window)] for f in forms]


def _rref(matrix):
    """Reduced row echelon form over the rationals; returns the nonzero rows."""
    rows = [list(row) for row in matrix]
    if not rows:
        return ()
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][col]), None
        )
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return tuple(tuple(row) for row in rows[:pivot_row] if any(row))


def independent(basis):
    """Linear independence of the constructed forms.

    Pairwise distinct leading exponents are sufficient; when leading orders
    collide the check falls back to exact rational row reduction.
    """
    forms = basis.forms
    if not forms:
        return True
    leads = []
    for f in forms:
        if f.is_zero():
            return False
        leads.append(f.order())
    if len(set(leads)) == len(forms):
        return True
    window = min(f.prec for f in forms)
    return len(_rref(_coefficient_matrix(forms, window))) == len(forms)


def span_equal(b1, b2, window):
    """Exact equality of the two spans over the shared window.

    Both bases are row-reduced over the rationals on the coefficient range
    [min order, window); the spans agree exactly when the reduced matrices
    coincide.
    """
    if len(b1.forms) != len(b2.forms):
        raise ValueError("span comparison requires bases of equal dimension")
    if not b1.forms:
        return True
    forms = list(b1.forms) + list(b2.forms)
    low = min(f.order() for f in forms)
    zero = Fraction(0)

    def matrix(forms_subset):
        for f in forms_subset:
            if f.prec < window:
                raise PrecisionError(
                    f"window shortfall: span comparison needs {window}, have {f.prec}"
                )
        return [[f.terms.get(e, zero) for e in range(low, window)] for f in forms_subset]

    return _rref(matrix(b1.forms)) == _rref(matrix(b2.forms))
