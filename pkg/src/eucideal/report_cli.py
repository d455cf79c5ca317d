"""Per-field reporting pipeline, grid search, serialization, and the CLI.

A report bundles everything the package can say about one parameter tuple:
validation, conductor and discriminant, class number (computed for the
biquadratic family, fixture-ingested for the cyclic one), eligibility, the
defining polynomials, and the witness pair when the field is eligible.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import primes_below
from .class_number import class_number_biquadratic, class_number_cyclic, load_fixture
from .errors import (ConditionFailure, EucidealError, HypothesisViolation,
                     InternalInconsistency, UnknownClassNumber)
from .fields import (invariants, is_irreducible_quartic, validate_biquadratic,
                     validate_cyclic)
from .motzkin import build_ladder, euclidean_property_check, psi
from .witness import (DEFAULT_SEARCH_BOUND, check_conditions, derive_u, find_s,
                      witness_pair)

CSV_HEADER = "family,q,k,r_or_b,conductor,discriminant,h_K,h_K_source,eligible,g_coeffs,f_coeffs,s,u"

# built-in grid reproduced by the table1 command
TABLE1_RANGES = {"q_min": 29, "q_max": 41, "kr_min": 29, "kr_max": 100}

# built-in rows reproduced by the table2 command, in presentation order
# (grouped by q, then by b, then by k); the printed reference sweep is not a
# plain rectangular grid, so the rows are pinned explicitly
TABLE2_ROWS = (
    (17, 41, 4), (17, 97, 4), (17, 73, 8), (17, 89, 8), (17, 113, 8),
    (17, 193, 12), (17, 257, 16), (17, 281, 16), (17, 337, 16),
    (29, 17, 4), (29, 41, 4), (29, 97, 4), (29, 73, 8), (29, 89, 8),
    (29, 113, 8), (29, 193, 12), (29, 257, 16), (29, 281, 16), (29, 337, 16),
    (37, 17, 4), (37, 41, 4), (37, 97, 4), (37, 73, 8), (37, 89, 8),
    (37, 113, 8), (37, 193, 12), (37, 257, 16), (37, 281, 16), (37, 337, 16),
    (41, 17, 4), (41, 97, 4), (41, 73, 8), (41, 89, 8), (41, 113, 8),
    (41, 193, 12), (41, 257, 16), (41, 281, 16), (41, 337, 16),
)


@dataclass(frozen=True)
class FieldReport:
    family: str
    q: int
    k: int
    third: int          # r for biquadratic rows, b for cyclic rows
    conductor: int
    discriminant: int
    h_K: object         # int, or None when undetermined
    h_K_source: object  # "computed-kuroda", "fixture", or None
    eligible: bool
    g: tuple
    f: tuple
    s: object
    u: object
    ell: object
    diagnostics: tuple


def build_report(family: str, q: int, k: int, third: int, fixture=None,
                 search_bound: int = DEFAULT_SEARCH_BOUND) -> FieldReport:
    """Full eligibility report for one parameter tuple.

    Raises HypothesisViolation for invalid parameters and UnknownClassNumber
    for a cyclic tuple missing from the fixture.
    """
    if family == "biquadratic":
        spec = validate_biquadratic(q, k, third)
        h = class_number_biquadratic(spec)
        source = "computed-kuroda"
    elif family == "cyclic":
        spec = validate_cyclic(q, k, third)
        h = class_number_cyclic(spec, load_fixture() if fixture is None else fixture)
        source = "fixture"
    else:
        raise ValueError("unknown family %r" % family)
    inv = invariants(spec)
    eligible = h == 2
    s = u = ell = None
    diagnostics = []
    if eligible:
        if not is_irreducible_quartic(inv.g):
            raise InternalInconsistency("defining quartic factors for %r" % (spec,))
        try:
            wp = witness_pair(spec, search_bound)
        except ConditionFailure as exc:
            raise InternalInconsistency(
                "constructed witness fails its own audit: %s" % exc) from exc
        s, u, ell = wp.s, wp.u, wp.ell
    else:
        diagnostics.append("class number %d differs from 2; not eligible" % h)
    return FieldReport(family=family, q=q, k=k, third=third,
                       conductor=inv.conductor, discriminant=inv.discriminant,
                       h_K=h, h_K_source=source, eligible=eligible,
                       g=inv.g, f=inv.f, s=s, u=u, ell=ell,
                       diagnostics=tuple(diagnostics))


def _row_task(args) -> FieldReport:
    family, q, k, third, fixture, search_bound = args
    try:
        return build_report(family, q, k, third, fixture, search_bound)
    except UnknownClassNumber as exc:
        spec = validate_cyclic(q, k, third)
        inv = invariants(spec)
        return FieldReport(family=family, q=q, k=k, third=third,
                           conductor=inv.conductor, discriminant=inv.discriminant,
                           h_K=None, h_K_source=None, eligible=False,
                           g=inv.g, f=inv.f, s=None, u=None, ell=None,
                           diagnostics=("class number undetermined: %s" % exc,))


def _biquadratic_tuples(ranges) -> list:
    qs = [p for p in primes_below(ranges["q_max"] + 1) if p >= ranges["q_min"] and p % 4 == 1]
    pool = [p for p in primes_below(ranges["kr_max"] + 1) if p >= ranges["kr_min"] and p % 4 == 1]
    out = []
    for q in qs:
        for i, k in enumerate(pool):
            if k == q:
                continue
            for r in pool[i + 1:]:
                if r == q:
                    continue
                out.append((q, k, r))
    return out


def _cyclic_tuples(ranges) -> list:
    qs = [p for p in primes_below(ranges["q_max"] + 1) if p >= ranges["q_min"] and p % 4 == 1]
    ks = [p for p in primes_below(ranges["k_max"] + 1) if p >= ranges["k_min"] and p % 4 == 1]
    b_lo = ranges["b_min"] + (-ranges["b_min"]) % 4
    out = []
    for q in qs:
        for k in ks:
            if k == q:
                continue
            for b in range(max(b_lo, 4), ranges["b_max"] + 1, 4):
                out.append((q, k, b))
    return out


def search_grid(family: str, ranges: dict, fixture=None, workers: int = 1,
                search_bound: int = DEFAULT_SEARCH_BOUND) -> list:
    """Reports for every admissible tuple in the ranges, in canonical order.

    Tuples failing the family hypotheses are not admissible and produce no
    row; per-row class-number gaps are reported in diagnostics, never aborting
    the sweep.  The output order is independent of the worker count.
    """
    candidates = (_biquadratic_tuples(ranges) if family == "biquadratic"
                  else _cyclic_tuples(ranges))
    if family == "cyclic" and fixture is None:
        fixture = load_fixture()
    admissible = []
    for q, k, third in candidates:
        try:
            (validate_biquadratic if family == "biquadratic" else validate_cyclic)(q, k, third)
        except HypothesisViolation:
            continue
        admissible.append((family, q, k, third, fixture, search_bound))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_row_task, admissible,
                                    chunksize=max(1, len(admissible) // (4 * workers) or 1)))
    else:
        reports = [_row_task(a) for a in admissible]
    reports.sort(key=lambda r: (r.q, r.k, r.third))
    return reports


def table1(fixture=None, workers: int = 1) -> list:
    """Regenerate the built-in biquadratic survey grid."""
    return search_grid("biquadratic", TABLE1_RANGES, fixture, workers)


def table2(fixture=None, workers: int = 1) -> list:
    """Regenerate the built-in cyclic survey rows, in presentation order."""
    if fixture is None:
        fixture = load_fixture()
    tasks = [("cyclic", q, k, b, fixture, DEFAULT_SEARCH_BOUND) for q, k, b in TABLE2_ROWS]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_row_task, tasks))
    return [_row_task(t) for t in tasks]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit(reports, fmt: str) -> bytes:
    """Serialize reports; CSV and JSON are lossless, LaTeX is presentational."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in reports:
            lines.append(",".join((
                r.family, str(r.q), str(r.k), str(r.third), str(r.conductor),
                str(r.discriminant), _csv_cell(r.h_K), _csv_cell(r.h_K_source),
                _csv_cell(r.eligible),
                ";".join(str(c) for c in r.g), ";".join(str(c) for c in r.f),
                _csv_cell(r.s), _csv_cell(r.u))))
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        payload = [{
            "family": r.family, "q": r.q, "k": r.k, "r_or_b": r.third,
            "conductor": r.conductor, "discriminant": r.discriminant,
            "h_K": r.h_K, "h_K_source": r.h_K_source, "eligible": r.eligible,
            "g_coeffs": list(r.g), "f_coeffs": list(r.f),
            "s": r.s, "u": r.u, "ell": r.ell, "diagnostics": list(r.diagnostics),
        } for r in reports]
        return (json.dumps(payload, indent=1) + "\n").encode("utf-8")
    if fmt == "latex":
        lines = ["% parameters & h_K & defining polynomials & (s, u)"]
        for r in reports:
            witness_cell = "$(%d, %d)$" % (r.s, r.u) if r.eligible else ""
            h_cell = "$%s$" % r.h_K if r.h_K is not None else "?"
            lines.append("$(%d, %d, %d)$ & %s & $%s$ & %s \\\\"
                         % (r.q, r.k, r.third, h_cell, poly_to_tex(r.f, "y"), witness_cell))
            lines.append(" & & $%s$ & \\\\" % poly_to_tex(r.g, "x"))
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError("unknown format %r" % fmt)


def parse_reports(blob: bytes) -> list:
    """Inverse of emit(..., 'json')."""
    out = []
    for item in json.loads(blob.decode("utf-8")):
        out.append(FieldReport(
            family=item["family"], q=item["q"], k=item["k"], third=item["r_or_b"],
            conductor=item["conductor"], discriminant=item["discriminant"],
            h_K=item["h_K"], h_K_source=item["h_K_source"], eligible=item["eligible"],
            g=tuple(item["g_coeffs"]), f=tuple(item["f_coeffs"]),
            s=item["s"], u=item["u"], ell=item["ell"],
            diagnostics=tuple(item["diagnostics"])))
    return out


def poly_to_tex(p, var: str) -> str:
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = head + (var if i == 1 else "%s^{%d}" % (var, i))
        parts.append(sign + body)
    return "".join(parts) or "0"


# ---------------------------------------------------------------------------
# command line front end


def _read_config(path) -> dict:
    known = {"search_bound", "workers", "fixture", "precision_policy"}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError("config line %d is not key=value: %r" % (lineno, line))
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in known:
                raise ValueError("unknown config key %r" % key)
            out[key] = value
    if out.get("precision_policy", "certified") != "certified":
        raise ValueError("the only supported precision policy is 'certified'")
    return out


def _add_common(sub, fixture=True):
    sub.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    sub.add_argument("--output", help="write the delimited output to this file")
    sub.add_argument("--figures", metavar="DIR", help="also render figures into DIR")
    if fixture:
        sub.add_argument("--fixture", help="class-number fixture path (default: shipped)")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="eucideal",
        description="Workbench for quartic fields carrying a non-principal Euclidean ideal.")
    ap.add_argument("--workers", type=int, default=None, help="parallel row workers")
    ap.add_argument("--config", help="key=value config file")
    ap.add_argument("--search-bound", type=int, default=None,
                    help="upper bound for the witness prime search")
    cmds = ap.add_subparsers(dest="command", required=True)

    check = cmds.add_parser("check", help="report on a single parameter tuple")
    fam = check.add_subparsers(dest="family", required=True)
    biq = fam.add_parser("biq")
    for name in ("--q", "--k", "--r"):
        biq.add_argument(name, type=int, required=True)
    _add_common(biq)
    cyc = fam.add_parser("cyc")
    for name in ("--q", "--k", "--b"):
        cyc.add_argument(name, type=int, required=True)
    _add_common(cyc)

    search = cmds.add_parser("search", help="sweep a parameter grid")
    fam = search.add_subparsers(dest="family", required=True)
    biq = fam.add_parser("biq")
    for name in ("--q-min", "--q-max", "--kr-min", "--kr-max"):
        biq.add_argument(name, type=int, required=True)
    _add_common(biq)
    cyc = fam.add_parser("cyc")
    for name in ("--q-min", "--q-max", "--k-min", "--k-max", "--b-min", "--b-max"):
        cyc.add_argument(name, type=int, required=True)
    _add_common(cyc)

    wit = cmds.add_parser("witness", help="print the witness pair and its audit")
    fam = wit.add_subparsers(dest="family", required=True)
    biq = fam.add_parser("biq")
    for name in ("--q", "--k", "--r"):
        biq.add_argument(name, type=int, required=True)
    cyc = fam.add_parser("cyc")
    for name in ("--q", "--k", "--b"):
        cyc.add_argument(name, type=int, required=True)

    mot = cmds.add_parser("motzkin", help="build a ladder over the integers")
    mot.add_argument("--c", type=int, required=True)
    mot.add_argument("--n-max", type=int, required=True)
    mot.add_argument("--level-cap", type=int, required=True)
    mot.add_argument("--audit-window", type=int, default=0)
    mot.add_argument("--samples", type=int, default=1000,
                     help="random shrink-property checks to run")
    mot.add_argument("--figures", metavar="DIR")

    for name in ("table1", "table2"):
        tab = cmds.add_parser(name, help="regenerate the built-in %s grid" % name)
        _add_common(tab)
    return ap


def _deliver(reports, ns, command: str) -> None:
    blob = emit(reports, ns.format)
    if ns.output:
        with open(ns.output, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.write(blob.decode("utf-8"))
    if ns.figures:
        import os

        from .figures import save_class_number_figure, save_witness_figure
        os.makedirs(ns.figures, exist_ok=True)
        for path in (
            save_class_number_figure(reports, os.path.join(ns.figures, command + "_class_numbers.png")),
            save_witness_figure(reports, os.path.join(ns.figures, command + "_witnesses.png")),
        ):
            print("wrote figure", path, file=sys.stderr)


def _run(ns) -> int:
    config = _read_config(ns.config) if ns.config else {}
    workers = ns.workers if ns.workers is not None else int(config.get("workers", 1))
    bound = (ns.search_bound if ns.search_bound is not None
             else int(config.get("search_bound", DEFAULT_SEARCH_BOUND)))
    fixture_path = getattr(ns, "fixture", None) or config.get("fixture")
    fixture = load_fixture(fixture_path) if fixture_path else None

    if ns.command == "check":
        family = "biquadratic" if ns.family == "biq" else "cyclic"
        third = ns.r if ns.family == "biq" else ns.b
        report = build_report(family, ns.q, ns.k, third, fixture, bound)
        _deliver([report], ns, "check")
        return 0
    if ns.command == "search":
        if ns.family == "biq":
            ranges = {"q_min": ns.q_min, "q_max": ns.q_max,
                      "kr_min": ns.kr_min, "kr_max": ns.kr_max}
            reports = search_grid("biquadratic", ranges, fixture, workers, bound)
        else:
            ranges = {"q_min": ns.q_min, "q_max": ns.q_max, "k_min": ns.k_min,
                      "k_max": ns.k_max, "b_min": ns.b_min, "b_max": ns.b_max}
            reports = search_grid("cyclic", ranges, fixture, workers, bound)
        _deliver(reports, ns, "search")
        return 0
    if ns.command == "witness":
        family = "biquadratic" if ns.family == "biq" else "cyclic"
        third = ns.r if ns.family == "biq" else ns.b
        spec = (validate_biquadratic if family == "biquadratic" else validate_cyclic)(ns.q, ns.k, third)
        s = find_s(spec, bound)
        u = derive_u(s, spec)
        report = check_conditions(u, spec)
        print("s = %d" % s)
        print("u = %d" % u)
        print("ell = %d" % report.ell)
        for i, ok in enumerate((report.cond1, report.cond2, report.cond3), 1):
            print("condition (%d): %s" % (i, "pass" if ok else "FAIL"))
        return 0
    if ns.command == "motzkin":
        ladder = build_ladder(ns.c, ns.n_max, ns.level_cap, ns.audit_window)
        for n in range(1, ns.n_max + 1):
            value = psi(ladder, n)
            print("%d\t%s" % (n, value if isinstance(value, int) else value.value))
        shrink = euclidean_property_check(ladder, ns.samples)
        print("# assigned: %d of %d; shrink checks: %d, violations: %d"
              % (len(ladder.levels), ns.n_max, shrink.samples, len(shrink.violations)),
              file=sys.stderr)
        if ns.audit_window:
            print("# audit window %d: levels confirmed" % ns.audit_window, file=sys.stderr)
        if shrink.violations:
            raise InternalInconsistency("shrink property failed at %r" % (shrink.violations[:5],))
        if ns.figures:
            import os

            from .figures import save_ladder_figure
            os.makedirs(ns.figures, exist_ok=True)
            path = save_ladder_figure(ladder, os.path.join(ns.figures, "motzkin_ladder.png"))
            print("wrote figure", path, file=sys.stderr)
        return 0
    if ns.command == "table1":
        _deliver(table1(fixture, workers), ns, "table1")
        return 0
    if ns.command == "table2":
        _deliver(table2(fixture, workers), ns, "table2")
        return 0
    raise ValueError("unreachable command %r" % ns.command)


def main(argv=None) -> int:
    ns = _parser().parse_args(argv)
    try:
        return _run(ns)
    except EucidealError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # anything else is an internal failure
        print("internal error: %r" % exc, file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
