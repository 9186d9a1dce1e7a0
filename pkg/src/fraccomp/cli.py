"""Command-line front end emitting deterministic JSON reports.

Every numeric value is serialised losslessly as integer numerator/denominator
strings; the decimal approximation is display-only. Infeasible and unbounded
LP outcomes are results, not errors (exit 0). Exit 2 flags usage, file or
domain-precondition problems; exit 3 flags an exceeded enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction

from . import graphapps, hypergraph, lpcomp, matroid, ratlp
from .errors import BudgetExceeded, FraccompError
from .graphs import Digraph, Graph, digraph_to_text, graph_to_digraph, graph_to_text, parse_graph_text

getcontext().prec = 28

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _rat(x: Fraction) -> dict:
    approx = Decimal(x.numerator) / Decimal(x.denominator)
    return {
        "num": str(x.numerator),
        "den": str(x.denominator),
        "approx": str(approx.normalize()),
    }


def _rat_or_status(x) -> dict:
    if x is None:
        return {"status": "infinite"}
    return _rat(Fraction(x))


@dataclass
class Report:
    status: str = "ok"
    values: dict | None = None
    booleans: dict | None = None
    witness: dict | None = None
    error: dict | None = None

    def emit(self, command: str, output: str) -> None:
        doc = {"command": command, "status": self.status}
        if self.values:
            doc["values"] = self.values
        if self.booleans:
            doc["booleans"] = self.booleans
        if self.witness:
            doc["witness"] = self.witness
        if self.error:
            doc["error"] = self.error
        if output == "json":
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            _print_table(doc)


def _print_table(doc: dict) -> None:
    print(f"command: {doc['command']}")
    print(f"status: {doc['status']}")
    for name, val in sorted((doc.get("values") or {}).items()):
        if "num" in val:
            txt = val["num"] if val["den"] == "1" else f"{val['num']}/{val['den']}"
            print(f"{name} = {txt}")
        else:
            print(f"{name} = {val['status']}")
    for name, val in sorted((doc.get("booleans") or {}).items()):
        print(f"{name} = {str(val).lower()}")
    if doc.get("error"):
        print(f"error: {doc['error']['type']}: {doc['error']['message']}")


def _outcome_fields(out: ratlp.LpOutcome, prefix: str, values: dict, witness: dict) -> None:
    if out.is_optimal:
        values[prefix] = _rat(out.value)
        witness[prefix + "_solution"] = [_rat(x) for x in out.solution]
    else:
        values[prefix] = {"status": out.status}


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FraccompError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Command handlers. Each returns a Report.


def _cmd_lp(args) -> Report:
    lp = ratlp.parse_lp_text(_read(args.file))
    if args.action == "solve":
        out = ratlp.solve(lp)
        rep = Report(status=out.status if not out.is_optimal else "ok")
        rep.values, rep.witness = {}, {}
        _outcome_fields(out, "value", rep.values, rep.witness)
        return rep
    if args.action == "complement":
        comp = lpcomp.complement(lp)
        return Report(witness={"lp_text": ratlp.lp_to_text(comp)})
    if args.action == "verify":
        r = lpcomp.verify_complementation(lp)
        values: dict = {}
        witness: dict = {"case": r.case}
        _outcome_fields(r.opt_p, "opt_p", values, witness)
        _outcome_fields(r.opt_c, "opt_c", values, witness)
        booleans = {}
        if r.identity_lhs is not None:
            values["identity_lhs"] = _rat(r.identity_lhs)
        if r.identity_holds is not None:
            booleans["identity"] = r.identity_holds
        booleans["lemma_applies"] = r.lemma_applies
        if r.lemma_holds is not None:
            booleans["lemma_holds"] = r.lemma_holds
        return Report(values=values, booleans=booleans, witness=witness)
    if args.action == "ip-pair":
        r = lpcomp.ip_scaled_pair(lp)
        return Report(
            values={"s": _rat(Fraction(r.s)), "t": _rat(Fraction(r.t)), "value": _rat(Fraction(r.value))},
            witness={"x_hat": list(r.x_hat)},
        )
    raise AssertionError(args.action)


def _cmd_game(args) -> Report:
    game = lpcomp.parse_game_text(_read(args.file))
    if args.action == "value":
        r = lpcomp.game_value(game)
        return Report(
            values={"value": _rat(r.value)},
            witness={"rose_strategy": [_rat(p) for p in r.rose_strategy]},
        )
    if args.action == "verify":
        r = lpcomp.complementary_game_check(game)
        return Report(
            values={"v": _rat(r.v), "v_bar": _rat(r.v_bar)},
            booleans={"sum_is_one": r.sum_is_one},
        )
    raise AssertionError(args.action)


def _cmd_hyper(args) -> Report:
    h = hypergraph.parse_hypergraph_text(_read(args.file))
    if args.action == "params":
        values = {}
        for kind in hypergraph.ParamKind:
            short = {"covering": "k", "packing": "p", "matching": "mu", "transversal": "tau"}[kind.value]
            try:
                values[short + "_f"] = _rat(hypergraph.fractional_param(h, kind))
            except FraccompError as exc:
                values[short + "_f"] = {"status": _degenerate_status(exc)}
            try:
                values[short] = _rat(Fraction(hypergraph.integer_param(h, kind, args.max_enum)))
            except BudgetExceeded:
                raise
            except FraccompError as exc:
                values[short] = {"status": _degenerate_status(exc)}
        return Report(values=values)
    if args.action == "dual":
        return Report(witness={"hypergraph_text": hypergraph.hypergraph_to_text(hypergraph.dual(h))})
    if args.action == "complement":
        return Report(witness={"hypergraph_text": hypergraph.hypergraph_to_text(hypergraph.complement(h))})
    if args.action == "verify":
        r = hypergraph.verify_hypergraph_complementation(h)
        values = {}
        booleans = {"all_identities": r.all_hold}
        for name in ("covering", "packing", "matching", "transversal"):
            check = getattr(r, name)
            values[name + "_dual"] = _rat_or_status(check.value_dual)
            values[name + "_complement"] = _rat_or_status(check.value_complement)
            values[name + "_lhs"] = _rat(check.lhs)
            booleans[name] = check.holds
        return Report(values=values, booleans=booleans)
    if args.action == "chain":
        r = hypergraph.verify_chain(h, args.max_enum)
        return Report(
            values={
                "p": _rat(Fraction(r.p)),
                "alpha": _rat(r.alpha),
                "p_f": _rat(r.p_f),
                "k_f": _rat(r.k_f),
                "beta": _rat(r.beta),
                "k": _rat(Fraction(r.k)),
            },
            booleans={"chain": r.holds},
        )
    if args.action == "alphabeta":
        r = hypergraph.verify_alpha_beta(h, args.max_enum)
        return Report(
            values={
                "alpha_of_complement": _rat(r.alpha_of_complement),
                "beta_of_dual": _rat(r.beta_of_dual),
                "lhs": _rat(r.lhs),
            },
            booleans={"identity": r.holds},
        )
    raise AssertionError(args.action)


def _degenerate_status(exc: FraccompError) -> str:
    from .errors import InfeasibleParameter, UnboundedParameter

    if isinstance(exc, InfeasibleParameter):
        return "infeasible"
    if isinstance(exc, UnboundedParameter):
        return "unbounded"
    raise exc


def _cmd_matroid(args) -> Report:
    h = hypergraph.parse_hypergraph_text(_read(args.file))
    m = matroid.from_bases(h, validate=args.validate)
    if args.action == "toughness":
        return Report(values={"sigma": _rat(matroid.edge_toughness_matroid(m, args.max_enum))})
    if args.action == "verify":
        r = matroid.verify_matroid_theorem(m, args.max_enum)
        values = {
            "mu_f": _rat(r.mu_f),
            "tau_f": _rat(r.tau_f),
            "sigma": _rat(r.sigma),
            "k_f": _rat_or_status(r.k_f),
            "alpha": _rat_or_status(r.alpha),
            "beta_of_dual": _rat(r.beta_of_dual),
        }
        booleans = {
            "theorem": r.equal,
            "sigma_equals_beta": r.sigma_equals_beta,
        }
        if r.k_f_reaches_alpha is not None:
            booleans["k_f_reaches_alpha"] = r.k_f_reaches_alpha
        return Report(values=values, booleans=booleans)
    raise AssertionError(args.action)


def _as_graph(obj) -> Graph:
    if isinstance(obj, Digraph):
        raise FraccompError("this command needs an undirected graph file")
    return obj


def _cmd_graph(args) -> Report:
    obj = parse_graph_text(_read(args.file))
    if args.action == "domination":
        d = graph_to_digraph(obj) if isinstance(obj, Graph) else obj
        if args.spec:
            side, closure = args.spec.split("-")
            value = graphapps.fractional_domination(d, graphapps.NeighborhoodSpec(side, closure))
            return Report(values={"domination": _rat(value)})
        r = graphapps.verify_domination(d)
        values = {
            "gamma_in": _rat(r.gamma_in),
            "big_gamma_out_of_complement": _rat(r.big_gamma_out_of_complement),
            "identity_lhs": _rat(r.identity_lhs),
        }
        booleans = {"identity": r.identity_holds}
        if r.tournament_identity_holds is not None:
            values["tournament_big_gamma_in"] = _rat(r.tournament_big_gamma_in)
            booleans["tournament_identity"] = r.tournament_identity_holds
        if r.regular_k is not None:
            values["regular_k"] = _rat(Fraction(r.regular_k))
            booleans["regular_gamma_matches"] = r.regular_gamma_matches
            if r.regular_big_gamma_matches is not None:
                booleans["regular_big_gamma_matches"] = r.regular_big_gamma_matches
        return Report(values=values, booleans=booleans)
    g = _as_graph(obj)
    if args.action == "chromatic":
        return Report(values={"chi": _rat(Fraction(graphapps.chromatic_number(g, args.max_enum)))})
    if args.action == "cfold":
        if args.c is None:
            raise FraccompError("cfold needs --c")
        chi_c = graphapps.c_fold_chromatic(g, args.c, args.max_enum)
        return Report(values={"chi_c": _rat(Fraction(chi_c))})
    if args.action == "budget":
        if args.b is None:
            raise FraccompError("budget needs --b")
        r = graphapps.budget_cover(g, args.b, args.max_enum)
        return Report(
            values={"t": _rat(Fraction(r.t)), "budget_used": _rat(Fraction(r.witness.budget_used))},
            witness={"covers": [sorted(s) for s in r.witness.covers]},
        )
    if args.action == "toughness":
        return Report(values={"sigma": _rat(matroid.edge_toughness_graph(g, args.max_enum))})
    if args.action == "verify-budget":
        if args.b is None:
            raise FraccompError("verify-budget needs --b")
        r = graphapps.verify_budget(g, args.b, args.max_enum)
        values = {
            "chi": _rat(Fraction(r.chi)),
            "omega": _rat(Fraction(r.omega)),
            "kappa": _rat(r.kappa),
        }
        if r.beta_found is not None:
            values["beta"] = _rat(Fraction(r.beta_found))
        booleans = {
            "all_checks": r.all_ok,
            "bipartite": r.bipartite,
            "equivalence_consistent": r.equivalence_consistent,
            "beta_found_in_window": r.beta_found is not None,
        }
        witness = {
            "t_by_b": {str(e.b): e.t for e in r.entries},
            "beta_window": r.beta_window,
        }
        return Report(values=values, booleans=booleans, witness=witness)
    raise AssertionError(args.action)


_HANDLERS = {
    "lp": _cmd_lp,
    "game": _cmd_game,
    "hyper": _cmd_hyper,
    "matroid": _cmd_matroid,
    "graph": _cmd_graph,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fraccomp", description=__doc__)
    sub = parser.add_subparsers(dest="group", required=True)

    def add(group: str, actions: list[str], extra=()):
        gp = sub.add_parser(group)
        gsub = gp.add_subparsers(dest="action", required=True)
        for action in actions:
            ap = gsub.add_parser(action)
            ap.add_argument("file")
            ap.add_argument("--output", choices=["json", "table"], default="json")
            ap.add_argument("--max-enum", type=int, default=None, dest="max_enum")
            for name, kwargs in extra:
                ap.add_argument(name, **kwargs)

    add("lp", ["solve", "complement", "verify", "ip-pair"])
    add("game", ["value", "verify"])
    add("hyper", ["params", "dual", "complement", "verify", "chain", "alphabeta"])
    add("matroid", ["toughness", "verify"], extra=[("--validate", {"action": "store_true"})])
    add(
        "graph",
        ["domination", "chromatic", "cfold", "budget", "toughness", "verify-budget"],
        extra=[
            ("--b", {"type": int, "default": None}),
            ("--c", {"type": int, "default": None}),
            ("--spec", {"choices": ["in-open", "in-closed", "out-open", "out-closed"], "default": None}),
        ],
    )
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.max_enum is None:
        env = os.environ.get("FRACCOMP_MAX_ENUM")
        args.max_enum = int(env) if env else 1 << 22
    if args.max_enum < 1:
        print(json.dumps({"status": "error", "error": {"type": "Usage", "message": "max-enum must be >= 1"}}))
        return EXIT_USAGE
    command = f"{args.group} {args.action}"
    try:
        report = _HANDLERS[args.group](args)
    except BudgetExceeded as exc:
        Report(status="error", error={"type": "BudgetExceeded", "message": str(exc)}).emit(command, args.output)
        return EXIT_BUDGET
    except (FraccompError, ValueError) as exc:
        Report(status="error", error={"type": type(exc).__name__, "message": str(exc)}).emit(command, args.output)
        return EXIT_USAGE
    report.emit(command, args.output)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
