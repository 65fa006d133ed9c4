"""Command-line front end.

Subcommands:
  construct   materialize a defining set from a construction spec
  analyze     full report: weights, minimality (both routes), blocking,
              cutting, bound audit
  reproduce   run the six golden examples and print a pass/fail table

Exit codes: 0 ok, 1 usage/guard/IO error, 2 mathematical contradiction
or reproduction failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import blocking, bounds, code, constructions, linalg
from .errors import MincodeError
from .gf import field_from_json, field_from_order
from .linalg import VectorMultiset, project_multiset

SCHEMA = "mincode/1"


# ---------------------------------------------------------------------------
# Defining-set files and construction specs
# ---------------------------------------------------------------------------

def multiset_to_json(D: VectorMultiset) -> dict:
    return {
        "field": D.field.to_json(),
        "k": D.k,
        "vectors": [list(v) for v in D.vectors()],
    }


def multiset_from_json(d: dict) -> VectorMultiset:
    field = field_from_json(d["field"])
    return VectorMultiset(field, int(d["k"]), [tuple(v) for v in d["vectors"]])


def build_from_spec(spec: dict) -> VectorMultiset:
    family = spec["family"]
    if family == "lift":
        inner = spec["inner"]
        if len(inner) != 2:
            raise MincodeError("lift spec needs exactly two inner specs")
        D = constructions.lift(build_from_spec(inner[0]),
                               build_from_spec(inner[1]))
    elif family == "monomial":
        D = constructions.monomial_zero_set(spec["q"], spec["k"], spec["h"])
    elif family == "monomial_plus_sum":
        D = constructions.monomial_plus_sum_set(spec["q"], spec["k"], spec["h"])
    elif family == "weight_le":
        D = constructions.weight_range_set(spec["q"], spec["k"], "at_most", spec["h"])
    elif family == "weight_ge":
        D = constructions.weight_range_set(spec["q"], spec["k"], "at_least", spec["h"])
    elif family == "hyperplane_union":
        field = field_from_order(spec["q"])
        D = constructions.hyperplane_union(field, spec["k"],
                                           [tuple(a) for a in spec["S"]])
    elif family == "forms_product":
        field = field_from_order(spec["q"])
        D = constructions.forms_product_set(field, spec["k"],
                                            [tuple(a) for a in spec["forms"]])
    elif family == "scaled_basis":
        D = constructions.scaled_basis_set(spec["q"], spec["k"])
    else:
        raise MincodeError(f"unknown construction family {family!r}")
    if spec.get("projective"):
        D = project_multiset(D)
    return D


def _predicted_family(spec: dict):
    if spec is None:
        return None
    fam, proj = spec.get("family"), bool(spec.get("projective"))
    if fam == "monomial":
        return "monomial_projective" if proj else "monomial"
    if fam == "monomial_plus_sum" and spec.get("h") == 3 and not proj:
        return "monomial_plus_sum_h3"
    return None


# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------

def analyze(D: VectorMultiset, checks, guard=None, threads=1, spec=None):
    """Returns (report dict, exit code)."""
    C = code.build_code(D)
    contradiction = False
    report = {
        "schema": SCHEMA,
        "field": C.field.to_json(),
        "k": C.k_ambient,
        "n": C.n,
        "dim": C.dim,
        "projective": code.is_projective(C),
    }

    wd = None
    if "weights" in checks or "bounds" in checks or "predicted" in checks:
        wd = code.weight_distribution(C, guard=guard, threads=threads)
        report["weight_distribution"] = wd.to_json()
        report["w_min"] = wd.w_min
        report["w_max"] = wd.w_max
        report["ab_condition"] = code.ab_condition(C, guard=guard)
        report["ab_ratio"] = str(code.ab_ratio(C, guard=guard))

    minimal = None
    if "minimality" in checks:
        rep_ex = code.is_minimal_exhaustive(C, guard=guard, threads=threads)
        rep_cut = blocking.is_minimal_cutting(C)
        agree = rep_ex.is_minimal == rep_cut.is_minimal
        minimal = rep_ex.is_minimal
        report["minimal"] = minimal
        report["method"] = "exhaustive+cutting"
        report["minimality"] = {
            "exhaustive": rep_ex.to_json(),
            "cutting": rep_cut.to_json(),
            "agree": agree,
        }
        if not agree:
            contradiction = True

    fold = None
    if "blocking" in checks:
        Dbar = project_multiset(D)
        fold_rep = blocking.fold_multiplicity(Dbar, 1)
        fold = fold_rep.fold
        report["blocking"] = fold_rep.to_json()
        cut_def = blocking.is_cutting_definition(Dbar)
        cut_span = blocking.is_cutting_span(Dbar)
        report["cutting"] = {
            "definition": cut_def.to_json(),
            "span": cut_span.to_json(),
            "agree": cut_def.is_cutting == cut_span.is_cutting,
        }
        if cut_def.is_cutting != cut_span.is_cutting:
            contradiction = True

    if "bounds" in checks and wd is not None:
        audit = bounds.audit(C, minimal=bool(minimal), fold=fold)
        report["bounds"] = audit.to_json()
        if minimal and not audit.all_ok:
            contradiction = True

    fam = _predicted_family(spec)
    if "predicted" in checks and fam is not None and wd is not None:
        predicted = constructions.predicted_weight_distribution(
            fam, spec["q"], spec["k"], spec.get("h", 3))
        match = predicted == wd
        report["predicted"] = {
            "family": fam,
            "weight_distribution": predicted.to_json(),
            "match": match,
        }
        if not match:
            contradiction = True

    return report, (2 if contradiction else 0)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args):
    spec = json.loads(args.spec)
    D = build_from_spec(spec)
    payload = json.dumps(multiset_to_json(D), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    print(f"size={D.size} span_dim={linalg.span_dim(D.field, D.support_vectors())}",
          file=sys.stderr)
    return 0


DEFAULT_CHECKS = ["weights", "minimality", "blocking", "bounds", "predicted"]


def cmd_analyze(args):
    spec = json.loads(args.spec) if args.spec else None
    if spec is not None:
        D = build_from_spec(spec)
    elif args.infile:
        with open(args.infile) as fh:
            D = multiset_from_json(json.load(fh))
    else:
        print("analyze needs --spec or --in", file=sys.stderr)
        return 1
    checks = args.checks.split(",") if args.checks else DEFAULT_CHECKS
    report, status = analyze(D, checks, guard=args.max_space,
                             threads=args.threads, spec=spec)
    if args.text:
        _print_text(report)
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return status


def _print_text(report):
    print(f"[{report['n']},{report['dim']}] code over GF "
          f"p={report['field']['p']} e={report['field']['e']}, "
          f"ambient k={report['k']}, projective={report['projective']}")
    if "w_min" in report:
        print(f"  w_min={report['w_min']} w_max={report['w_max']} "
              f"ab_condition={report['ab_condition']} (ratio {report['ab_ratio']})")
    if "minimal" in report:
        m = report["minimality"]
        print(f"  minimal={report['minimal']} (methods agree: {m['agree']})")
    if "blocking" in report:
        b = report["blocking"]
        print(f"  fold={b['fold']} cutting={report['cutting']['span']['is_cutting']}")
    if "bounds" in report:
        print(f"  bounds: {json.dumps(report['bounds'])}")


GOLDEN = [
    ("monomial-q3k4h3", {"family": "monomial", "q": 3, "k": 4, "h": 3},
     {"n": 56, "dim": 4, "w_min": 30,
      "wd": {30: 6, 36: 8, 38: 54, 42: 12}, "minimal": True}),
    ("monomial-q4k4h3", {"family": "monomial", "q": 4, "k": 4, "h": 3},
     {"n": 147, "dim": 4, "w_min": 84,
      "wd": {84: 9, 108: 27, 111: 192, 120: 27}, "minimal": True}),
    ("plus-sum-q3k4h3", {"family": "monomial_plus_sum", "q": 3, "k": 4, "h": 3},
     {"n": 62, "dim": 4, "w_min": 36,
      "wd": {36: 8, 42: 66, 48: 6}, "minimal": True}),
    ("plus-sum-q4k4h3", {"family": "monomial_plus_sum", "q": 4, "k": 4, "h": 3},
     {"n": 171, "dim": 4, "w_min": 108,
      "wd": {108: 12, 120: 6, 129: 192, 132: 36, 144: 9}, "minimal": True}),
    ("lift-monomial-q4k5h3", {"family": "lift",
                  "inner": [{"family": "monomial", "q": 4, "k": 5, "h": 3},
                            {"family": "monomial", "q": 4, "k": 5, "h": 3}]},
     {"n": 1182, "dim": 6, "w_min": 591, "w_max": 960, "minimal": True}),
    ("lift-weight-le2-q3k6", {"family": "lift",
                  "inner": [{"family": "weight_le", "q": 3, "k": 6, "h": 2},
                            {"family": "weight_le", "q": 3, "k": 6, "h": 2}]},
     {"n": 144, "dim": 7, "w_min": 44, "w_max": 104, "minimal": True}),
]


def run_golden(threads=1):
    """Run the six golden examples; returns a list of result dicts."""
    results = []
    for name, spec, want in GOLDEN:
        t0 = time.perf_counter()
        D = build_from_spec(spec)
        C = code.build_code(D)
        wd = code.weight_distribution(C, threads=threads)
        got = {"n": C.n, "dim": C.dim, "w_min": wd.w_min, "w_max": wd.w_max}
        ok = got["n"] == want["n"] and got["dim"] == want["dim"] \
            and got["w_min"] == want["w_min"]
        if "w_max" in want:
            ok = ok and got["w_max"] == want["w_max"]
        if "wd" in want:
            ok = ok and wd == want["wd"]
        if want.get("minimal") is not None:
            ex = code.is_minimal_exhaustive(C, threads=threads)
            cut = blocking.is_minimal_cutting(C)
            ok = ok and ex.is_minimal == want["minimal"] \
                and cut.is_minimal == want["minimal"]
        results.append({"name": name, "ok": ok, "got": got,
                        "seconds": time.perf_counter() - t0})
    return results


def cmd_reproduce(args):
    results = run_golden(threads=args.threads)
    width = max(len(r["name"]) for r in results)
    for r in results:
        g = r["got"]
        print(f"{r['name']:<{width}}  [{g['n']},{g['dim']},{g['w_min']}] "
              f"w_max={g['w_max']}  {'PASS' if r['ok'] else 'FAIL'} "
              f"({r['seconds']:.2f}s)")
    n_ok = sum(r["ok"] for r in results)
    print(f"{n_ok}/{len(results)} examples reproduced")
    return 0 if n_ok == len(results) else 2


# ---------------------------------------------------------------------------

def make_parser():
    ap = argparse.ArgumentParser(prog="mincode")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="materialize a defining set")
    p.add_argument("--spec", required=True, help="construction spec JSON")
    p.add_argument("--out", help="output defining-set file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="analyze a code")
    p.add_argument("--spec", help="construction spec JSON")
    p.add_argument("--in", dest="infile", help="defining-set file")
    p.add_argument("--checks", help="comma-separated subset of "
                   "weights,minimality,blocking,bounds,predicted")
    p.add_argument("--max-space", type=int, default=None,
                   help="override the q^k enumeration guard")
    p.add_argument("--json", action="store_true", default=True)
    p.add_argument("--text", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reproduce", help="run the six golden examples")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except MincodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
