"""Command-line front end.

Exit codes: 0 when the checked property holds (or the command just
produces data), 1 when it fails with a witness, 2 for usage, parse and
validation errors.  ``--json`` switches every report to verdict documents.
"""

from __future__ import annotations

import argparse
import sys

from . import carrier, crisp, documents, ideals, ifs, lab
from .carrier import LawId
from .errors import GammaAGError

OK, FAILS, ERROR = 0, 1, 2


# --------------------------------------------------------------------------
# argument helpers


def _ints(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise GammaAGError("USAGE", f"expected comma-separated integers, got {text!r}") from None


def _law(text: str) -> LawId:
    key = text.strip().lower().replace("_", "-")
    aliases = {"ag**": "ag-star-star", "band": "idempotent-band", "s=sgs": "s-equals-sgs"}
    key = aliases.get(key, key)
    for law in LawId:
        if key in (law.value, law.name.lower().replace("_", "-")):
            return law
    raise GammaAGError("USAGE", f"unknown law {text!r}; choose from {', '.join(l.value for l in LawId)}")


def _crisp_kind(text: str) -> crisp.CrispKind:
    key = text.strip().lower().replace("_", "-")
    for kind in crisp.CrispKind:
        if key in (kind.value, kind.name.lower().replace("_", "-")):
            return kind
    raise GammaAGError("USAGE", f"unknown crisp kind {text!r}")


def _subset(G, text: str) -> crisp.CrispSubset:
    elements = _ints(text)
    for e in elements:
        if not 1 <= e <= G.n:
            raise GammaAGError("OUT_OF_RANGE", f"element {e} not in 1..{G.n}")
    return crisp.CrispSubset.of(G.n, [e - 1 for e in elements])


# --------------------------------------------------------------------------
# human-readable rendering


def _el(G, xs):
    return ", ".join(G.labels[x] for x in xs)


def _ops(G, gs):
    return ", ".join(G.gamma_labels[o] for o in gs)


def _grades(A) -> str:
    mu = " ".join(ifs.format_grade(g) for g in A.mu)
    nu = " ".join(ifs.format_grade(g) for g in A.nu)
    return f"mu = [{mu}]\nnu = [{nu}]"


def _law_line(G, r) -> str:
    if r.holds:
        return f"{r.law.value}: holds"
    w = r.witness
    at = f"elements ({_el(G, w.elements)})" + (f" gammas ({_ops(G, w.gammas)})" if w.gammas else "")
    if w.rhs is None:
        return f"{r.law.value}: fails at {at}: no factorization"
    return f"{r.law.value}: fails at {at}: {G.labels[w.lhs]} != {G.labels[w.rhs]}"


def _render(v, G=None) -> str:
    if isinstance(v, carrier.IntraRegularityReport):
        lines = [f"intra-regular: {'yes' if v.regular else 'no'}"]
        for a, w in sorted(v.witnesses.items()):
            lines.append(f"  {G.labels[a]} = ({G.labels[w.x]} {G.gamma_labels[w.alpha]} "
                         f"({G.labels[a]} {G.gamma_labels[w.beta]} {G.labels[a]})) {G.gamma_labels[w.gamma]} {G.labels[w.y]}")
        if v.failures:
            lines.append(f"  no witness for: {_el(G, v.failures)}")
        return "\n".join(lines)
    if isinstance(v, crisp.CrispVerdict):
        if v.holds:
            return f"{v.kind.value}: holds" + ("" if v.nonempty else " (empty set)")
        w = v.witness
        return (f"{v.kind.value}: fails: product {G.labels[w.product]} of elements ({_el(G, w.elements)}) "
                f"gammas ({_ops(G, w.gammas)}) escapes the set")
    if isinstance(v, ideals.IfsVerdict):
        if v.holds:
            return f"IF {v.kind.value}: holds"
        w = v.witness
        rel = ">=" if w.component == "mu" else "<="
        line = (f"IF {v.kind.value}: fails at elements ({_el(G, w.elements)})"
                + (f" gammas ({_ops(G, w.gammas)})" if w.gammas else "")
                + f": {w.component}({G.labels[w.at]}) = {ifs.format_grade(w.value)} "
                f"but needs {rel} {ifs.format_grade(w.bound)}")
        return line
    if isinstance(v, lab.TheoremVerdict):
        lines = [f"theorem {v.id.value}" + (" (role hypotheses relaxed)" if v.relaxed else "")]
        for name, ok in v.hypotheses.items():
            lines.append(f"  hypothesis {name}: {'yes' if ok else 'no'}")
        if not v.hypotheses_hold:
            lines.append("  hypotheses fail; conclusion not checked")
        else:
            for name, ok in v.parts.items():
                lines.append(f"  {name}: {'holds' if ok else 'fails'}")
            lines.append(f"  conclusion: {'holds' if v.conclusion_holds else 'fails'}")
        for name, value in v.observed.items():
            lines.append(f"  observed {name}: {documents._value(value)}")
        if v.witness is not None:
            w = v.witness
            at = "" if w.element is None else f" at {G.labels[w.element]}"
            lines.append(f"  witness: {w.part}{' (' + w.direction + ')' if w.direction else ''}{at} "
                         f"{documents._value(w.values)}")
        return "\n".join(lines)
    if isinstance(v, lab.HuntReport):
        head = (f"hunt {v.theorem.value}: {v.groupoid_count} groupoids, {v.tried} samples, "
                f"{v.qualified} met the hypotheses")
        if not v.found:
            return head + "\nno counterexample"
        b = v.counterexample
        lines = [head, f"counterexample at sample {v.sample_index}:", "  groupoid tables:"]
        for t, table in enumerate(b.G.to_lists(one_based=True)):
            lines.append(f"    {b.G.gamma_labels[t]}: {table}")
        for i, A in enumerate(b.ifs):
            lines.append(f"  IFS #{i + 1}:")
            lines.extend("    " + s for s in _grades(A).splitlines())
        lines.append("  " + _render(v.verdict, b.G).replace("\n", "\n  "))
        return "\n".join(lines)
    raise TypeError(type(v).__name__)


def _emit(args, doc, text):
    print(documents.dumps(doc) if args.json else text, end="" if args.json else "\n")


# --------------------------------------------------------------------------
# commands


def cmd_check_laws(args) -> int:
    G = documents.load_groupoid(args.groupoid)
    laws = [_law(t) for t in args.laws.split(",")] if args.laws else list(LawId)
    reports = [carrier.check_law(G, law) for law in laws]
    ok = all(r.holds for r in reports)
    doc = {"format": documents.VERDICT_FORMAT, "check": "laws", "holds": ok,
           "reports": [documents.verdict_document(r) for r in reports]}
    _emit(args, doc, "\n".join(_law_line(G, r) for r in reports))
    return OK if ok else FAILS


def cmd_intra(args) -> int:
    G = documents.load_groupoid(args.groupoid)
    v = carrier.intra_regularity(G)
    _emit(args, documents.verdict_document(v), _render(v, G))
    return OK if v.regular else FAILS


def cmd_crisp_check(args) -> int:
    G = documents.load_groupoid(args.groupoid)
    v = crisp.is_crisp(G, _subset(G, args.set), _crisp_kind(args.kind))
    _emit(args, documents.verdict_document(v), _render(v, G))
    return OK if v.holds else FAILS


def cmd_ifs_check(args) -> int:
    G = documents.load_groupoid(args.groupoid)
    A = documents.load_ifs(args.ifs)
    v = ideals.is_if(G, A, ideals.IfsKind.parse(args.kind))
    _emit(args, documents.verdict_document(v), _render(v, G))
    return OK if v.holds else FAILS


def cmd_compose(args) -> int:
    G = documents.load_groupoid(args.groupoid)
    C = ifs.compose(G, documents.load_ifs(args.ifs_a), documents.load_ifs(args.ifs_b))
    _emit(args, documents.ifs_document(C), _grades(C))
    return OK


def cmd_levelcut(args) -> int:
    A = documents.load_ifs(args.ifs)
    alpha = ifs.parse_grade(args.alpha)
    cut = crisp.level_cut(A, alpha)
    doc = {"format": "gammaag.subset", "alpha": ifs.format_grade(alpha), "elements": [e + 1 for e in cut]}
    _emit(args, doc, "{" + ", ".join(str(e + 1) for e in cut) + "}")
    return OK


def cmd_theorem_verify(args) -> int:
    G = documents.load_groupoid(args.groupoid)
    sets = tuple(documents.load_ifs(s) for s in args.ifs)
    alphas = tuple(ifs.parse_grade(a) for a in args.alpha.split(",")) if args.alpha else None
    v = lab.verify(lab.TheoremId.parse(args.id), lab.InstanceBundle(G, sets, alphas), args.relax_hypotheses)
    _emit(args, documents.verdict_document(v), _render(v, G))
    return FAILS if v.conclusion_holds is False else OK


def cmd_theorem_hunt(args) -> int:
    groupoids = None
    sizes, gammas = tuple(_ints(args.n)), tuple(_ints(args.gamma))
    if args.groupoid:
        groupoids = tuple(documents.load_groupoid(s) for s in args.groupoid)
        sizes = tuple(sorted({G.n for G in groupoids}))
        gammas = tuple(sorted({G.g for G in groupoids}))
    config = lab.HuntConfig(
        sizes=sizes, gammas=gammas, denominator=args.denominator,
        budget=args.samples, seed=args.seed, relax_hypotheses=args.relax_hypotheses, groupoids=groupoids,
    )
    report = lab.hunt(lab.TheoremId.parse(args.id), config)
    _emit(args, documents.verdict_document(report), _render(report))
    return FAILS if report.found else OK


def cmd_enumerate(args) -> int:
    laws = [_law(t) for t in args.laws.split(",")] if args.laws else [LawId.LEFT_INVERTIVE]
    found = list(lab.enumerate_groupoids(args.n, args.gamma, laws, args.limit))
    if args.json:
        doc = {"format": "gammaag.enumeration", "n": args.n, "gamma": args.gamma,
               "laws": [l.value for l in laws], "count": len(found)}
        if not args.count_only:
            doc["groupoids"] = [G.to_lists(one_based=True) for G in found]
        _emit(args, doc, "")
    else:
        lines = [] if args.count_only else [str(G.to_lists(one_based=True)) for G in found]
        lines.append(f"{len(found)} groupoids (n={args.n}, gamma={args.gamma}, laws: {', '.join(l.value for l in laws)})")
        print("\n".join(lines))
    return OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        if args.json:
            print(documents.dumps({"format": "gammaag.fixtures",
                                   "fixtures": {k: v[0] for k, v in documents.FIXTURES.items()}}), end="")
        else:
            print("\n".join(f"{k}\t{v[0]}" for k, v in documents.FIXTURES.items()))
        return OK
    if not args.name:
        raise GammaAGError("USAGE", "fixtures dump needs a fixture name")
    print(documents.fixture_text(args.name), end="")
    return OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print verdict documents instead of text")

    p = argparse.ArgumentParser(prog="gammaag", parents=[common],
                                description="Check laws, ideals and theorems on finite Gamma-AG-groupoids.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("check-laws", cmd_check_laws, "check groupoid laws")
    sp.add_argument("groupoid", help="groupoid file, JSON text or fixture name")
    sp.add_argument("--laws", help="comma-separated law ids (default: all)")

    sp = add("intra", cmd_intra, "decide intra-regularity")
    sp.add_argument("groupoid")

    sp = add("crisp-check", cmd_crisp_check, "check a crisp ideal kind on a subset")
    sp.add_argument("groupoid")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--set", required=True, help="1-based elements, e.g. 1,2")

    sp = add("ifs-check", cmd_ifs_check, "check an IF ideal kind")
    sp.add_argument("groupoid")
    sp.add_argument("ifs")
    sp.add_argument("--kind", required=True)

    sp = add("compose", cmd_compose, "compose two IFS")
    sp.add_argument("groupoid")
    sp.add_argument("ifs_a")
    sp.add_argument("ifs_b")

    sp = add("levelcut", cmd_levelcut, "crisp level cut of an IFS")
    sp.add_argument("ifs")
    sp.add_argument("--alpha", required=True)

    sp = add("theorem", None, "verify a theorem on an instance or hunt for counterexamples")
    tsub = sp.add_subparsers(dest="action", required=True)
    tv = tsub.add_parser("verify", parents=[common])
    tv.set_defaults(func=cmd_theorem_verify)
    tv.add_argument("--id", required=True)
    tv.add_argument("groupoid")
    tv.add_argument("ifs", nargs="*")
    tv.add_argument("--alpha", help="comma-separated thresholds for levelcut")
    tv.add_argument("--relax-hypotheses", action="store_true")
    th = tsub.add_parser("hunt", parents=[common])
    th.set_defaults(func=cmd_theorem_hunt)
    th.add_argument("--id", required=True)
    th.add_argument("--n", default="3", help="carrier sizes, comma-separated (ignored with --groupoid)")
    th.add_argument("--gamma", default="1", help="operation counts, comma-separated")
    th.add_argument("--denominator", type=int, default=4)
    th.add_argument("--samples", type=int, default=1000)
    th.add_argument("--seed", type=int, default=0)
    th.add_argument("--relax-hypotheses", action="store_true")
    th.add_argument("--groupoid", action="append", help="hunt on this groupoid instead of enumerating (repeatable)")

    sp = add("enumerate", cmd_enumerate, "enumerate groupoids satisfying laws")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gamma", type=int, default=1)
    sp.add_argument("--laws", default="left-invertive")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--count-only", action="store_true")

    sp = add("fixtures", cmd_fixtures, "list or print bundled fixtures")
    sp.add_argument("action", choices=("list", "dump"))
    sp.add_argument("name", nargs="?")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except GammaAGError as exc:
        print(f"gammaag: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
