"""Command-line front end: dimensions, bases, verification suites, evaluation.

Output is deterministic: identical argv produces identical bytes.  JSON is
canonical (sorted keys, no whitespace) with big integers rendered as decimal
strings.  Exit codes: 0 success / all checks passed, 1 at least one failed
check, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .basis import (
    Basis,
    build_basis,
    dim_forms,
    holomorphic_at_cusp,
    independent,
    order_ledger,
    span_equal,
    vertex_exponent,
)
from .groups import (
    GROUP_NAMES,
    OO,
    TRANSFORM_TESTS,
    classify,
    get_group,
    transform_hauptmodul,
)
from .numeric import EvalConfig, automorphy_residual, eval_series, invariance_residual
from .oracle import (
    EtaQuotientSpec,
    discriminant,
    eisenstein4,
    eisenstein6,
    eta_quotient,
    j_invariant,
)
from .qseries import PrecisionError, series_to_json

NORMALIZATION_NOTE = (
    "forms are monic at the cusp; the Hauptmodul derivative is taken as "
    "q*d/dq = (1/(2*pi*i))*d/dtau, so each form differs from the d/dtau "
    "convention by a fixed nonzero constant"
)
COCYCLE_NOTE = (
    "the derivative of an automorphic function transforms with cocycle "
    "exponent 2 (chain rule), so (theta w)^(k/2) carries (c*tau+d)^k"
)

VERIFY_SUITES = ("all", "holomorphy", "automorphy", "ledger", "oracle", "span")

BASIS_TERMS_DEFAULT = 50
NUMERIC_TERMS_DEFAULT = 80


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _window_for(k, terms):
    # Hauptmodul window with headroom for the precision lost while forming
    # (theta w)^(k/2) * w^j / prod(w - w_i)^(a_i).
    return terms + k + 8


def _basis_for(name, k, terms):
    return build_basis(get_group(name, _window_for(k, terms)), k, terms)


def _value_str(value):
    if value is OO:
        return "oo"
    frac = Fraction(value)
    return str(frac)


def _parse_tau(text):
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        tau = complex(cleaned)
    except ValueError:
        raise ValueError(f"malformed tau {text!r}: expected a+bi with b > 0") from None
    if tau.imag <= 0:
        raise ValueError(f"tau must lie in the upper half-plane, got {text!r}")
    return tau


def _require_even(k):
    if k % 2:
        raise ValueError(f"unsupported weight parity: {k} is odd")


# ----------------------------------------------------------------------
# subcommands


def cmd_dim(args):
    _require_even(args.weight)
    gd = get_group(args.group, window=8)
    print(dim_forms(gd.genus, gd.orders(), args.weight))
    return 0


def _ledger_json(gd, k, dim):
    if dim <= 0:
        return []
    ledger = order_ledger(gd, k, dim - 1)
    out = []
    for entry in ledger.entries:
        if entry.vertex is None:
            out.append({"case": entry.case, "vertex_order": None,
                        "vertex_value": None, "bound": entry.bound})
        else:
            order = "oo" if entry.vertex.is_cusp else entry.vertex.order
            out.append({
                "case": entry.case,
                "vertex_order": order,
                "vertex_value": _value_str(entry.vertex.value),
                "bound": entry.bound,
            })
    return out


def cmd_basis(args):
    _require_even(args.weight)
    basis = _basis_for(args.group, args.weight, args.terms)
    d = basis.weight.dim
    payload = {
        "group": args.group,
        "k": args.weight,
        "d": d,
        "window": args.terms,
        "normalization": NORMALIZATION_NOTE,
        "forms": [series_to_json(f) for f in basis.forms],
        "ledger": _ledger_json(basis.group, args.weight, d),
    }
    if args.format == "json":
        print(canonical_json(payload))
        return 0
    print(f"group {args.group}  weight {args.weight}  dimension {d}  window {args.terms}")
    print(f"normalization: {NORMALIZATION_NOTE}")
    if d <= 0:
        print("empty basis: the dimension formula gives no forms at this weight")
        return 0
    for j, form in enumerate(basis.forms):
        print(f"h_{j} = {form}")
    for entry in payload["ledger"]:
        where = (
            "pole of the Hauptmodul away from the vertices"
            if entry["vertex_order"] is None
            else f"vertex of order {entry['vertex_order']} (value {entry['vertex_value']})"
        )
        print(f"ledger case {entry['case']}: bound {entry['bound']} at {where}")
    return 0


def cmd_eval(args):
    _require_even(args.weight)
    tau = _parse_tau(args.tau)
    cfg = EvalConfig(terms_used=args.terms, min_imag=args.min_imag)
    basis = _basis_for(args.group, args.weight, args.terms)
    if not 0 <= args.j < len(basis.forms):
        raise ValueError(
            f"form index {args.j} outside [0, {len(basis.forms) - 1}] at weight {args.weight}"
        )
    value = eval_series(basis.forms[args.j], tau, cfg)
    if args.format == "json":
        print(canonical_json({
            "group": args.group, "k": args.weight, "j": args.j,
            "tau": [tau.real, tau.imag],
            "value": [value.real, value.imag],
        }))
    else:
        print(f"{value.real:.12g} {value.imag:+.12g}i")
    return 0


def _group_json(gd, terms):
    return {
        "name": gd.name,
        "genus": gd.genus,
        "cusp_width": gd.cusp_width,
        "signature": ["oo" if v.is_cusp else v.order for v in gd.vertices],
        "vertices": [
            {
                "kind": v.kind,
                "order": "oo" if v.is_cusp else v.order,
                "value": _value_str(v.value),
                "location": None if v.location is None
                else [v.location.real, v.location.imag],
            }
            for v in gd.vertices
        ],
        "elements": [
            {
                "matrix": [str(x) for x in s.matrix.entries()],
                "classification": classify(s.matrix),
                "test_point": [s.test_point.real, s.test_point.imag],
                "floor": s.floor,
            }
            for s in gd.elements
        ],
        "hauptmodul": series_to_json(gd.hauptmodul.truncate(terms)),
    }


def cmd_groups(args):
    if args.action == "list":
        if args.format == "json":
            print(canonical_json({"groups": list(GROUP_NAMES)}))
        else:
            for name in GROUP_NAMES:
                print(name)
        return 0
    if not args.name:
        raise ValueError("groups show requires a group name")
    gd = get_group(args.name, window=max(args.terms, 8))
    if args.format == "json":
        print(canonical_json(_group_json(gd, args.terms)))
        return 0
    sig = ", ".join("oo" if v.is_cusp else str(v.order) for v in gd.vertices)
    print(f"{gd.name}: signature ({gd.genus}; {sig}), cusp width {gd.cusp_width}")
    for v in gd.vertices:
        loc = "" if v.location is None else f"  location {v.location:.6g}"
        print(f"  {v.kind} vertex, order {'oo' if v.is_cusp else v.order}, "
              f"value {_value_str(v.value)}{loc}")
    for s in gd.elements:
        a, b, c, d = s.matrix.entries()
        print(f"  element ({a} {b}; {c} {d})  {classify(s.matrix)}  "
              f"test point {s.test_point:.6g}  floor {s.floor}")
    print(f"  hauptmodul = {gd.hauptmodul.truncate(args.terms)}")
    return 0


# ----------------------------------------------------------------------
# verification suites


def _row(suite, check, group="", k="", j="", value="", threshold="", ok=True):
    return {
        "suite": suite, "check": check, "group": group, "k": str(k),
        "j": str(j), "value": value, "threshold": threshold,
        "status": "pass" if ok else "FAIL",
    }


def _even_range(lo, hi, kmin, kmax):
    lo = max(lo, kmin if kmin is not None else lo)
    hi = min(hi, kmax if kmax is not None else hi)
    start = lo if lo % 2 == 0 else lo + 1
    return range(start, hi + 1, 2)


def _holomorphy_rows(groups, kmin, kmax):
    rows = []
    for name in groups:
        for k in _even_range(4, 24, kmin, kmax):
            basis = _basis_for(name, k, 30)
            if basis.forms:
                low = min(f.order() for f in basis.forms)
                ok = holomorphic_at_cusp(basis) and independent(basis)
                value = f"min exponent {low}, {len(basis.forms)} forms"
            else:
                ok = True
                value = "empty basis"
            rows.append(_row("holomorphy", "cusp holomorphy + independence",
                             name, k, "", value, ">= 0", ok))
    return rows


def _automorphy_rows(groups, kmin, kmax):
    rows = []
    for name in groups:
        gd = get_group(name, _window_for(12, NUMERIC_TERMS_DEFAULT))
        for sample in gd.elements:
            cfg = EvalConfig(terms_used=NUMERIC_TERMS_DEFAULT,
                             min_imag=min(0.8, sample.floor))
            res = invariance_residual(gd, sample.matrix, sample.test_point, cfg)
            rows.append(_row(
                "automorphy", "weight-0 invariance", name, "",
                "", f"{res:.3e}", f"< {cfg.tolerance:.0e}", res < cfg.tolerance))
        for k in [k for k in (4, 8, 12) if k in _even_range(4, 12, kmin, kmax)]:
            basis = build_basis(gd, k, NUMERIC_TERMS_DEFAULT)
            for sample in gd.elements:
                cfg = EvalConfig(terms_used=NUMERIC_TERMS_DEFAULT,
                                 min_imag=min(0.8, sample.floor))
                for j in range(basis.weight.dim):
                    res = automorphy_residual(
                        gd, k, j, sample.matrix, sample.test_point, cfg, basis)
                    rows.append(_row(
                        "automorphy", "weight-k law", name, k, j,
                        f"{res:.3e}", f"< {cfg.tolerance:.0e}",
                        res < cfg.tolerance))
    return rows


def _ledger_rows(groups, kmin, kmax):
    rows = []
    for k in _even_range(4, 40, kmin, kmax):
        worst = min(
            (k // 2) * (n - 1) - n * vertex_exponent(n, k) for n in range(2, 65)
        )
        rows.append(_row("ledger", "case-i floor sweep, n in [2,64]", "", k, "",
                         f"min bound {worst}", ">= 0", worst >= 0))
    for name in groups:
        for k in [k for k in (4, 12) if k in _even_range(4, 12, kmin, kmax)]:
            gd = get_group(name, window=8)
            d = dim_forms(gd.genus, gd.orders(), k)
            if d <= 0:
                continue
            ledger = order_ledger(gd, k, d - 1)
            for entry in ledger.entries:
                if entry.case == "i":
                    ok, bound = entry.bound >= 0, ">= 0"
                elif entry.case == "ii":
                    ok, bound = entry.bound <= 0, "<= 0"
                else:
                    ok, bound = entry.bound == 0, "== 0"
                rows.append(_row("ledger", f"case {entry.case} bound", name, k, "",
                                 str(entry.bound), bound, ok))
    return rows


def _oracle_rows():
    rows = []
    width = 200
    eta24 = eta_quotient(EtaQuotientSpec(((1, 24),)), width)
    delta = discriminant(width)
    rows.append(_row("oracle", "eta^24 product equals (E4^3-E6^2)/1728", "", "", "",
                     f"window {width}", "exact",
                     eta24.equal_to_prec(delta, width)))
    e4 = eisenstein4(60)
    e6 = eisenstein6(60)
    gap = e4**3 - e6**2
    rows.append(_row("oracle", "E4^3 - E6^2 has order 1, leading 1728", "", "", "",
                     f"order {gap.order()}, leading {gap.leading()[1]}", "exact",
                     gap.order() == 1 and gap.leading()[1] == 1728))
    jq = j_invariant(50)
    rows.append(_row("oracle", "j * Delta equals E4^3", "", "", "",
                     "window 48", "exact",
                     (jq * discriminant(52)).equal_to_prec(eisenstein4(50)**3, 48)))
    targets = {4: eisenstein4(50), 6: eisenstein6(50), 8: eisenstein4(50)**2}
    for k, target in targets.items():
        basis = _basis_for("psl2z", k, 50)
        ok = len(basis.forms) == 1 and basis.forms[0].equal_to_prec(target, 50)
        rows.append(_row("oracle", "monic basis equals classical series",
                         "psl2z", k, 0, "window 50", "exact", ok))
    basis12 = _basis_for("psl2z", 12, 50)
    oracle_pair = Basis(
        basis12.group, basis12.weight,
        (discriminant(50), eisenstein4(50)**3), 50,
    )
    rows.append(_row("oracle", "weight-12 span equals {Delta, E4^3}",
                     "psl2z", 12, "", "window 50", "exact",
                     span_equal(basis12, oracle_pair, 50)))
    return rows


def _moebius_label(p, q, r, s):
    def linear(u, v):
        if u == 0:
            return str(v)
        head = "t" if u == 1 else f"{u}t"
        if v == 0:
            return head
        return f"{head}{'+' if v > 0 else '-'}{abs(v)}"

    return f"({linear(p, q)})/({linear(r, s)})"


def _span_rows(kmin, kmax):
    rows = []
    for p, q, r, s in TRANSFORM_TESTS["psl2z"]:
        for k in [k for k in (4, 12) if k in _even_range(4, 12, kmin, kmax)]:
            gd = get_group("psl2z", _window_for(k, 60))
            moved = transform_hauptmodul(gd, p, q, r, s)
            ok = span_equal(build_basis(gd, k, 40), build_basis(moved, k, 40), 40)
            rows.append(_row("span", f"Hauptmodul {_moebius_label(p, q, r, s)}",
                             "psl2z", k, "", "window 40", "exact", ok))
    return rows


def cmd_verify(args):
    groups = [args.group] if args.group else list(GROUP_NAMES)
    kmin, kmax = args.k_min, args.k_max
    rows = []
    suite = args.suite
    if suite in ("all", "holomorphy"):
        rows += _holomorphy_rows(groups, kmin, kmax)
    if suite in ("all", "automorphy"):
        rows += _automorphy_rows(groups, kmin, kmax)
    if suite in ("all", "ledger"):
        rows += _ledger_rows(groups, kmin, kmax)
    if suite in ("all", "oracle"):
        rows += _oracle_rows()
    if suite in ("all", "span"):
        rows += _span_rows(kmin, kmax)
    passed = all(r["status"] == "pass" for r in rows)
    if args.format == "json":
        print(canonical_json({
            "suite": suite,
            "notes": [COCYCLE_NOTE, NORMALIZATION_NOTE],
            "rows": rows,
            "passed": passed,
        }))
    else:
        print(f"note: {COCYCLE_NOTE}")
        widths = (10, 44, 9, 4, 3, 30, 10, 6)
        header = ("suite", "check", "group", "k", "j", "value", "threshold", "status")
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            cells = (r["suite"], r["check"], r["group"], r["k"], r["j"],
                     r["value"], r["threshold"], r["status"])
            print("  ".join(str(c).ljust(w) for c, w in zip(cells, widths)))
        print(f"{'all checks passed' if passed else 'FAILURES present'} "
              f"({len(rows)} checks)")
    return 0 if passed else 1


# ----------------------------------------------------------------------
# argument parsing


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="hauptbasis",
        description="Exact bases of weight-k automorphic forms for genus-zero "
                    "Fuchsian groups, built from a Hauptmodul.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="dimension of the weight-k space")
    p_dim.add_argument("--group", required=True, choices=GROUP_NAMES)
    p_dim.add_argument("--weight", "-k", required=True, type=int)

    p_basis = sub.add_parser("basis", help="construct and print a basis")
    p_basis.add_argument("--group", required=True, choices=GROUP_NAMES)
    p_basis.add_argument("--weight", "-k", required=True, type=int)
    p_basis.add_argument("--terms", type=int, default=BASIS_TERMS_DEFAULT)
    p_basis.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    p_verify.add_argument("--group", choices=GROUP_NAMES)
    p_verify.add_argument("--k-min", type=int, default=None)
    p_verify.add_argument("--k-max", type=int, default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_eval = sub.add_parser("eval", help="evaluate a constructed form at a point")
    p_eval.add_argument("--group", required=True, choices=GROUP_NAMES)
    p_eval.add_argument("--weight", "-k", required=True, type=int)
    p_eval.add_argument("--j", type=int, default=0)
    p_eval.add_argument("--tau", required=True)
    p_eval.add_argument("--terms", type=int, default=NUMERIC_TERMS_DEFAULT)
    p_eval.add_argument("--min-imag", type=float, default=0.8)
    p_eval.add_argument("--format", choices=("text", "json"), default="text")

    p_groups = sub.add_parser("groups", help="list registered groups or show one")
    p_groups.add_argument("action", choices=("list", "show"))
    p_groups.add_argument("name", nargs="?", choices=GROUP_NAMES)
    p_groups.add_argument("--terms", type=int, default=10)
    p_groups.add_argument("--format", choices=("text", "json"), default="text")

    return parser


_DISPATCH = {
    "dim": cmd_dim,
    "basis": cmd_basis,
    "verify": cmd_verify,
    "eval": cmd_eval,
    "groups": cmd_groups,
}


def main(argv=None):
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
