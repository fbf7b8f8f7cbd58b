"""Command-line front end: construct family members, analyze matrices
from text files, run the structure recognizers, and emit the catalog
with per-entry JSON reports.

Families and their parameters:

  i            --m        binary extended Hamming, n = 2^m, m >= 2
  ii           --q        hyperoval code [q+2, q-1, 4], q = 2^r >= 4
  iii          --q --m    difference-matrix code [q^m, q^m-m-1, 3], q >= 3
  iv           --q --n    latin-square code [n, n-2, 3], 3 <= n <= q
  v            --q        external lines of a hyperoval, q = 2^r >= 4
  vi           --q --h    degree-h maximal arc code, h | q, 1 < h < q
  vii          --q --h    external lines of the degree-h arc
  lifted       --q --r    Hamming [q+1, q-1, 3] read over GF(q^r), r >= 2
  d1antipodal  --q        the length-4 [4, 2, 3] member, q >= 4

Exit codes: 0 success, 2 parameter or input-domain errors, 3 matrix
parse errors, 4 budget exhaustion, 5 failed verification assertions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .budgets import DEFAULT_BUDGETS, BudgetExceeded, Budgets
from .classify import (
    NoZeroColumnReachable,
    NotOfForm,
    Rho1Form,
    TrivialCode,
    classify_rho1,
    two_weight_structure,
    verify_theorem31,
    verify_theorem41,
)
from .codes import (
    LinearCode,
    macwilliams_transform,
    nonzero_weights,
    weight_distribution,
)
from .constructions import build_family, family_catalog
from .matio import MatrixFormatError, format_matrix, read_matrix
from .regularity import (
    SyndromeTable,
    beta_solve,
    complete_regularity,
    complete_regularity_bruteforce,
)

FAMILIES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "lifted", "d1antipodal")


def _budgets(args) -> Budgets:
    return Budgets(args.max_syndromes, args.max_codewords, args.max_vectors)


def _add_budget_flags(p: argparse.ArgumentParser):
    p.add_argument(
        "--max-syndromes", type=int, default=DEFAULT_BUDGETS.max_syndromes,
        help="cap on syndrome-table size (default 2^24)",
    )
    p.add_argument(
        "--max-codewords", type=int, default=DEFAULT_BUDGETS.max_codewords,
        help="cap on codeword enumerations (default 2^26)",
    )
    p.add_argument(
        "--max-vectors", type=int, default=DEFAULT_BUDGETS.max_vectors,
        help="cap on ambient-space walks (default 2^20)",
    )


# -- report assembly --------------------------------------------------------


def _weight_pair(code: LinearCode, budget: Budgets):
    """Primal and dual weight distributions, enumerating whichever side
    is smaller and transforming across."""
    q = code.field.q
    direct = q**code.k
    via_dual = q**code.redundancy
    if direct <= budget.max_codewords:
        counts = weight_distribution(code, budget)
        dual_counts = macwilliams_transform(counts, q)
    elif via_dual <= budget.max_codewords:
        dual_counts = weight_distribution(code.dual(), budget)
        counts = macwilliams_transform(dual_counts, q)
    else:
        raise BudgetExceeded(
            "max_codewords", min(direct, via_dual), budget.max_codewords
        )
    return counts, dual_counts


def _form_json(form: Rho1Form | None) -> dict | None:
    if form is None:
        return None
    return {"m": form.m, "ell": form.ell, "u": form.u}


def _rho1_json(code: LinearCode) -> dict | None:
    try:
        form = classify_rho1(code)
    except TrivialCode:
        return None
    return _form_json(form if isinstance(form, Rho1Form) else None)


def _rho2_json(code: LinearCode, budget: Budgets) -> dict | None:
    try:
        rep = verify_theorem41(code, budget)
    except TrivialCode:
        return None
    return {
        "dual_antipodal": rep.dual_antipodal,
        "equidistant_ok": rep.equidistant_ok,
        "symbol_frequency_ok": rep.symbol_frequency_ok,
        "punctured_rho1_form": _form_json(rep.punctured_rho1_form),
        "puncture_column": rep.puncture_column,
        "all_flags": rep.all_flags,
    }


def analysis_report(
    code: LinearCode,
    budget: Budgets = DEFAULT_BUDGETS,
    with_beta: bool = False,
    brute_force: bool = False,
) -> dict:
    """The full analysis dictionary; field order is part of the format."""
    counts, dual_counts = _weight_pair(code, budget)
    weights = nonzero_weights(counts)
    dual_weights = nonzero_weights(dual_counts)
    st = SyndromeTable(code, budget)
    rep = complete_regularity(code, budget, table=st)
    s = len(dual_weights)
    report = {
        "q": code.field.q,
        "n": code.n,
        "k": code.k,
        "d": weights[0] if weights else 0,
        "rho": rep.rho,
        "s": s,
        "weights": weights,
        "dual_weights": dual_weights,
        "is_completely_regular": rep.is_completely_regular,
        "intersection_array": (
            {
                "b": list(rep.array.b),
                "c": list(rep.array.c),
                "a": list(rep.array.a),
            }
            if rep.is_completely_regular
            else None
        ),
        "uniformly_packed": rep.rho == s,
    }
    if with_beta:
        beta = beta_solve(code, budget)
        report["beta"] = None if beta is None else [str(x) for x in beta]
    if brute_force:
        ref = complete_regularity_bruteforce(code, budget)
        ref_level = ref.witness.level if ref.witness else None
        rep_level = rep.witness.level if rep.witness else None
        if (
            ref.is_completely_regular != rep.is_completely_regular
            or ref.array != rep.array
            or ref_level != rep_level
        ):
            raise AssertionError(
                "syndrome-level and vector-level regularity scans disagree"
            )
        report["brute_force_agrees"] = True
    report["classification"] = {
        "rho1": _rho1_json(code),
        "rho2": _rho2_json(code, budget),
    }
    return report


def _print_report(report: dict):
    q, n, k, d = report["q"], report["n"], report["k"], report["d"]
    print(f"[{n},{k},{d}]_{q}")
    cr = "yes" if report["is_completely_regular"] else "no"
    print(f"rho={report['rho']} s={report['s']} completely regular: {cr}")
    arr = report["intersection_array"]
    if arr is not None:
        b = ",".join(str(x) for x in arr["b"])
        c = ",".join(str(x) for x in arr["c"])
        a = ",".join(str(x) for x in arr["a"])
        print(f"intersection array ({b};{c}) with a=({a})")
    print(f"uniformly packed: {'yes' if report['uniformly_packed'] else 'no'}")
    if "beta" in report:
        beta = report["beta"]
        print("beta: " + (", ".join(beta) if beta else "none"))
    if report.get("brute_force_agrees"):
        print("brute-force oracle agrees")
    print("weights: " + " ".join(str(w) for w in report["weights"]))
    print("dual weights: " + " ".join(str(w) for w in report["dual_weights"]))
    rho1 = report["classification"]["rho1"]
    if rho1 is None:
        print("radius-1 column form: none")
    else:
        print(
            f"radius-1 column form: m={rho1['m']} ell={rho1['ell']} u={rho1['u']}"
        )
    rho2 = report["classification"]["rho2"]
    if rho2 is None:
        print("radius-2 normal form: not applicable")
    elif rho2["all_flags"]:
        form = rho2["punctured_rho1_form"]
        print(
            "radius-2 normal form: all flags hold; punctured form "
            f"m={form['m']} ell={form['ell']} u={form['u']} "
            f"at column {rho2['puncture_column']}"
        )
    else:
        flags = ", ".join(
            name
            for name in ("dual_antipodal", "equidistant_ok", "symbol_frequency_ok")
            if not rho2[name]
        )
        if rho2["punctured_rho1_form"] is None:
            flags = flags + ", no punctured form" if flags else "no punctured form"
        print(f"radius-2 normal form: fails ({flags})")


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _write_json_atomic(path: str, payload):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(_dump_json(payload))
    os.replace(tmp, path)


# -- subcommands ------------------------------------------------------------


def cmd_construct(args) -> int:
    params = {
        name: getattr(args, name)
        for name in ("q", "m", "n", "h", "r")
        if getattr(args, name) is not None
    }
    desc, code = build_family(args.family, **params)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(format_matrix(code.H, comment=f"{desc.slug} parity check"))
    q = code.field.q
    print(
        f"{desc.slug}: [{desc.n},{desc.k},{desc.d}]_{q} "
        f"expected rho={desc.rho} intersection array {desc.array}"
    )
    return 0


def cmd_analyze(args) -> int:
    code = LinearCode.from_parity(read_matrix(args.path))
    report = analysis_report(
        code, _budgets(args), with_beta=args.beta, brute_force=args.brute_force
    )
    if args.json:
        sys.stdout.write(_dump_json(report))
    else:
        _print_report(report)
    return 0


def cmd_classify(args) -> int:
    budget = _budgets(args)
    code = LinearCode.from_parity(read_matrix(args.path))
    if args.theorem == "31":
        form = classify_rho1(code)
        holds = verify_theorem31(code, budget)
        recognized = isinstance(form, Rho1Form)
        payload = {
            "theorem": "31",
            "holds": holds,
            "form": _form_json(form if recognized else None),
            "reason": form.reason if isinstance(form, NotOfForm) else None,
        }
        if args.json:
            sys.stdout.write(_dump_json(payload))
        else:
            if recognized:
                print(f"column form: m={form.m} ell={form.ell} u={form.u}")
            else:
                print(f"column form: none ({form.reason})")
            print(f"radius-1 equivalence holds: {'yes' if holds else 'no'}")
        return 0 if holds else 5
    if args.theorem == "41":
        rep = verify_theorem41(code, budget)
        payload = {
            "theorem": "41",
            "dual_antipodal": rep.dual_antipodal,
            "column_scaling": (
                list(rep.column_scaling) if rep.column_scaling else None
            ),
            "M": [list(row) for row in rep.M.data] if rep.M else None,
            "equidistant_ok": rep.equidistant_ok,
            "symbol_frequency_ok": rep.symbol_frequency_ok,
            "punctured_rho1_form": _form_json(rep.punctured_rho1_form),
            "puncture_column": rep.puncture_column,
            "all_flags": rep.all_flags,
        }
        if args.json:
            sys.stdout.write(_dump_json(payload))
        else:
            print(f"dual antipodal: {rep.dual_antipodal}")
            print(f"equidistant residual: {rep.equidistant_ok}")
            print(f"symbol frequency: {rep.symbol_frequency_ok}")
            form = rep.punctured_rho1_form
            if form is not None:
                print(
                    f"punctured form: m={form.m} ell={form.ell} u={form.u} "
                    f"at column {rep.puncture_column}"
                )
            else:
                print("punctured form: none")
            print(f"all flags: {rep.all_flags}")
        return 0
    st = two_weight_structure(code, budget)
    payload = {
        "theorem": "52",
        "w1": st.w1,
        "w2": st.w2,
        "w1_is_length": st.w1_is_length,
        "column_scaling": list(st.column_scaling) if st.column_scaling else None,
        "generator": [list(r) for r in st.generator.data] if st.generator else None,
        "M": [list(r) for r in st.M.data] if st.M else None,
        "equidistant_ok": st.equidistant_ok,
        "symbol_frequency_ok": st.symbol_frequency_ok,
    }
    if args.json:
        sys.stdout.write(_dump_json(payload))
    else:
        print(f"weights: w1={st.w1} w2={st.w2}")
        if not st.w1_is_length:
            print("w1 differs from the length; structure theorem not applicable")
        else:
            print(f"equidistant residual: {st.equidistant_ok}")
            print(f"symbol frequency: {st.symbol_frequency_ok}")
            print("generator normal form:")
            sys.stdout.write(format_matrix(st.generator))
    return 0


def cmd_catalog(args) -> int:
    budget = _budgets(args)
    entries = family_catalog(args.qn_bound)
    os.makedirs(args.out, exist_ok=True)
    slugs = []
    mismatches = []
    for desc, code in entries:
        report = analysis_report(code, budget)
        expected_array = {
            "b": list(desc.array.b),
            "c": list(desc.array.c),
            "a": list(desc.array.a),
        }
        match = (
            report["n"] == desc.n
            and report["k"] == desc.k
            and report["d"] == desc.d
            and report["rho"] == desc.rho
            and report["is_completely_regular"]
            and report["intersection_array"] == expected_array
        )
        entry = {
            "slug": desc.slug,
            "family": desc.family,
            "params": desc.params_dict(),
            "expected": {
                "n": desc.n,
                "k": desc.k,
                "d": desc.d,
                "rho": desc.rho,
                "intersection_array": expected_array,
            },
            "computed": report,
            "match": match,
        }
        _write_json_atomic(os.path.join(args.out, desc.slug + ".json"), entry)
        slugs.append(desc.slug)
        if not match:
            mismatches.append(desc.slug)
    index = {
        "qn_bound": args.qn_bound,
        "entries": slugs,
        "all_match": not mismatches,
    }
    _write_json_atomic(os.path.join(args.out, "index.json"), index)
    if mismatches:
        for slug in mismatches:
            print(f"mismatch: {slug}", file=sys.stderr)
        return 5
    print(f"wrote {len(slugs)} entries and index.json to {args.out}")
    return 0


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crcodes",
        description="construct and verify completely regular q-ary codes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--q", type=int, help="field order")
    p.add_argument("--m", type=int, help="redundancy-style parameter")
    p.add_argument("--n", type=int, help="length parameter")
    p.add_argument("--h", type=int, help="arc degree")
    p.add_argument("--r", type=int, help="extension degree")
    p.add_argument("--out", required=True, help="matrix output path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="full report for a parity-check file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--beta", action="store_true", help="include the packing solution")
    p.add_argument(
        "--brute-force", dest="brute_force", action="store_true",
        help="cross-check regularity against the vector-level scan",
    )
    _add_budget_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="run one structure recognizer")
    p.add_argument("path")
    p.add_argument("--theorem", choices=("31", "41", "52"), required=True)
    p.add_argument("--json", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="emit all family instances under a bound")
    p.add_argument("--qn-bound", dest="qn_bound", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NoZeroColumnReachable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
