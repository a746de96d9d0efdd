"""Command-line interface: ``setsol <verb> ...``.

Exit codes: 0 when every verdict holds, 1 when a checked property fails
(the report carries the counterexample), 2 for usage or input errors.
"""

import argparse
import sys

from . import __version__
from .conditions import kernel
from .constructions import (
    build_matched_semigroup,
    build_matched_solution,
    build_ybe_from_alpha_system,
    build_ybe_from_pentagon_quadruple,
)
from .corpus import fixture, fixture_ids, run_fixture
from .enumeration import SearchSpec, enumerate_solutions
from .errors import AlgebraError, BadParams, CapExceeded, PreconditionFailed, SpecTooLarge, UnknownFixture
from .files import (
    dumps,
    load_quadruple,
    load_search_spec,
    load_semigroup,
    load_solution,
    load_system,
)
from .named import build_named_solution
from .powers import DEFAULT_CAP, power_profile, verify_power_theorem
from .semigroup import build_inflation, classify
from .solution import decompose_product_form, verify_equation

FORMAT_VERSION = 1
CLI_EQUATIONS = {
    "pentagon": "pentagon",
    "reversed-pentagon": "reversed_pentagon",
    "qybe": "qybe",
    "braid": "braid",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _maps(text, flag):
    try:
        return [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _report(command, **payload):
    return {"command": command, "format_version": FORMAT_VERSION, "version": __version__, **payload}


# -------------------------------------------------------------- rendering

def _table(rows):
    width = max((len(str(x)) for r in rows for x in r), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows)


def _human(report):
    cmd = report.get("command")
    lines = []
    if cmd == "verify":
        v = report["verdict"]
        state = "holds" if v["holds"] else f"fails at {tuple(v['counterexample'])}"
        lines.append(f"{v['equation']}: {state}")
    elif cmd == "classify":
        for k, v in report["properties"].items():
            if k != "witnesses":
                lines.append(f"{k:20s} {v}")
    elif cmd == "analyze-powers":
        lines.append(f"index {report['index']}  period {report['period']}")
        lines.append("exp  pentagon  qybe  braid")
        for row in report["power_verdicts"]:
            lines.append(f"{row['exponent']:3d}  {str(row['pentagon']):8s}  {str(row['qybe']):5s}  {row['braid']}")
    elif cmd == "corpus-run":
        for fx in report["fixtures"]:
            lines.append(f"{'PASS' if fx['passed'] else 'FAIL'}  {fx['id']}")
            for r in fx["results"]:
                if not r["passed"]:
                    lines.append(f"      {r['operation']}: expected {r['expected']}, got {r['observed']}")
    elif cmd == "corpus-list":
        for fx in report["fixtures"]:
            lines.append(f"{fx['id']:36s} {fx['summary']}")
    elif "first" in report and "second" in report:
        lines.append("first:")
        lines.append(_table(report["first"]))
        lines.append("second:")
        lines.append(_table(report["second"]))
    else:
        import json
        lines.append(json.dumps(report, indent=1))
    return "\n".join(lines)


# -------------------------------------------------------------- verbs

def _verify(args, out):
    s, _ = load_solution(args.solution)
    verdict = verify_equation(s, CLI_EQUATIONS[args.equation])
    out(_report("verify", verdict=verdict.to_dict()))
    return 0 if verdict.holds else 1


def _classify(args, out):
    sg = load_semigroup(args.semigroup)
    out(_report("classify", properties=classify(sg).to_dict()))
    return 0


def _solution_out(s, semigroup=None):
    return s.to_dict(None if semigroup is None else semigroup.to_dict())


def _construct(args, out):
    kind = args.kind
    if kind == "inflation":
        if not args.semigroup:
            raise UsageError("inflation needs --semigroup")
        T = load_semigroup(args.semigroup)
        phi = _maps(args.phi, "--phi")
        S = build_inflation(T, len(phi), phi)
        if args.solution:
            t, _ = load_solution(args.solution)
            parts = decompose_product_form(t)
            if parts is None or parts[0] != T:
                raise PreconditionFailed("--solution must be of product form over --semigroup")
            out(_solution_out(build_named_solution("inflation", T=T, theta=parts[1], phi=phi), S))
        else:
            out(S.to_dict())
        return 0
    if kind == "matched-semigroup":
        out(build_matched_semigroup(load_system(_need(args.system, "--system"))).to_dict())
        return 0
    if kind in ("matched-solution", "ybe-from-quadruple", "ybe-from-alpha"):
        quad = load_quadruple(_need(args.quadruple, "--quadruple"))
        builder = {"matched-solution": build_matched_solution,
                   "ybe-from-quadruple": build_ybe_from_pentagon_quadruple,
                   "ybe-from-alpha": build_ybe_from_alpha_system}[kind]
        s = builder(quad)
        carrier = build_matched_semigroup(quad.system) if kind == "matched-solution" else None
        out(_solution_out(s, carrier))
        return 0
    # named-solution
    name = _need(args.name, "--name")
    params = {}
    sg = load_semigroup(args.semigroup) if args.semigroup else None
    if name in ("gamma", "constant", "product_form", "sandwich"):
        params["semigroup"] = _need(sg, "--semigroup")
    if name == "gamma":
        params["gamma"] = _maps(_need(args.gamma, "--gamma"), "--gamma")
    elif name == "constant":
        params["e"] = int(_need(args.element, "--element"))
    elif name == "militaru":
        params["f"] = _maps(_need(args.f, "--f"), "--f")
        params["g"] = _maps(_need(args.g, "--g"), "--g")
    elif name == "right_zero":
        params["phi"] = _maps(_need(args.phi, "--phi"), "--phi")
    elif name == "product_form":
        rows = _need(args.theta, "--theta").split(";")
        params["theta"] = [_maps(r, "--theta") for r in rows]
    s = build_named_solution(name, **params)
    out(_solution_out(s, sg if name != "militaru" and name != "right_zero" else None))
    return 0


def _need(value, flag):
    if value is None:
        raise UsageError(f"missing {flag}")
    return value


def _enumerate(args, out):
    if args.spec:
        spec = load_search_spec(args.spec)
        if args.workers is not None:
            spec.workers = args.workers
        spec.force = spec.force or args.force
    else:
        sg = load_semigroup(args.semigroup) if args.semigroup else None
        try:
            spec = SearchSpec(target=args.target, shape=args.shape, semigroup=sg, order=args.order,
                              mode=args.mode, limit=args.limit, workers=args.workers or 1, force=args.force)
        except BadParams as exc:
            raise UsageError(str(exc)) from None
    spec.check_size()
    out(_report("enumerate", header={"spec": spec.to_dict()}))
    result = enumerate_solutions(spec)
    for s in result.solutions:
        out(_solution_out(s, spec.semigroup))
    out({"trailer": result.stats()})
    return 0


def _analyze(args, out):
    s, _ = load_solution(args.solution)
    if args.what == "powers":
        try:
            prof = power_profile(s, args.cap)
        except CapExceeded as exc:
            out(_report("analyze-powers", error=str(exc), cap=exc.cap))
            return 1
        report = _report("analyze-powers", **prof.to_dict())
        try:
            report["power_theorem"] = verify_power_theorem(s).to_dict()
        except PreconditionFailed as exc:
            report["power_theorem"] = {"applicable": False, "reason": str(exc)}
        out(report)
        return 0
    parts = decompose_product_form(s)
    if parts is None:
        raise PreconditionFailed("solution is not of the form (xy, theta_x(y)) over an associative table")
    rep = kernel(*parts)
    out(_report("analyze-kernel", **rep.to_dict()))
    return 0 if rep.is_subgroup and rep.is_normal else 1


def _corpus(args, out):
    if args.action == "list":
        out(_report("corpus-list", fixtures=[
            {"id": fid, "summary": fixture(fid).summary, "source": fixture(fid).source}
            for fid in fixture_ids()]))
        return 0
    ids = args.ids or fixture_ids()
    for fid in ids:
        if fid not in fixture_ids():
            raise UnknownFixture(fid)
    reports = [run_fixture(fid).to_dict() for fid in ids]
    ok = all(r["passed"] for r in reports)
    out(_report("corpus-run", passed=ok, fixtures=reports))
    return 0 if ok else 1


def build_parser():
    p = _Parser(prog="setsol", description="Pentagon, Yang-Baxter and braid solutions on finite semigroups")
    p.add_argument("--human", action="store_true", help="render tables instead of JSON")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check one equation on a solution file")
    v.add_argument("--equation", required=True, choices=sorted(CLI_EQUATIONS))
    v.add_argument("--solution", required=True)
    v.set_defaults(run=_verify)

    c = sub.add_parser("classify", help="variety and identity properties of a semigroup")
    c.add_argument("--semigroup", required=True)
    c.set_defaults(run=_classify)

    k = sub.add_parser("construct", help="build a semigroup or solution")
    k.add_argument("kind", choices=["inflation", "matched-semigroup", "matched-solution",
                                    "ybe-from-quadruple", "ybe-from-alpha", "named-solution"])
    k.add_argument("--semigroup")
    k.add_argument("--solution")
    k.add_argument("--system")
    k.add_argument("--quadruple")
    k.add_argument("--name", choices=["gamma", "constant", "militaru", "right_zero",
                                      "product_form", "sandwich"])
    k.add_argument("--phi", help="comma-separated images")
    k.add_argument("--gamma")
    k.add_argument("--element")
    k.add_argument("--f")
    k.add_argument("--g")
    k.add_argument("--theta", help="rows separated by ';', entries by ','")
    k.set_defaults(run=_construct)

    e = sub.add_parser("enumerate", help="exhaustive search for solutions")
    e.add_argument("--spec")
    e.add_argument("--target", default="pentagon")
    e.add_argument("--shape", default="product_form_theta")
    e.add_argument("--semigroup")
    e.add_argument("--order", type=int)
    e.add_argument("--mode", default="count", choices=["count", "collect"])
    e.add_argument("--limit", type=int, default=1000)
    e.add_argument("--workers", type=int)
    e.add_argument("--force", action="store_true")
    e.set_defaults(run=_enumerate)

    a = sub.add_parser("analyze", help="powers or kernel of a solution")
    a.add_argument("what", choices=["powers", "kernel"])
    a.add_argument("--solution", required=True)
    a.add_argument("--cap", type=int, default=DEFAULT_CAP)
    a.set_defaults(run=_analyze)

    r = sub.add_parser("corpus", help="list or run the worked-example fixtures")
    r.add_argument("action", choices=["list", "run"])
    r.add_argument("ids", nargs="*")
    r.set_defaults(run=_corpus)
    return p


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"setsol: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help, --version
        return int(exc.code or 0)

    def out(obj):
        print(_human(obj) if args.human else dumps(obj), file=stdout)

    try:
        return args.run(args, out)
    except UsageError as exc:
        print(f"setsol: {exc}", file=stderr)
        return 2
    except PreconditionFailed as exc:
        payload = {"error": type(exc).__name__, "message": str(exc), "layer": exc.layer}
        if exc.verdict is not None:
            payload["verdict"] = exc.verdict.to_dict()
        verb = args.verb if args.verb not in ("analyze", "corpus") else f"{args.verb}-{getattr(args, 'what', None) or args.action}"
        out(_report(verb, **payload))
        return 1
    except UnknownFixture as exc:
        print(f"setsol: unknown fixture {exc.args[0]!r}", file=stderr)
        return 2
    except (SpecTooLarge, BadParams, AlgebraError) as exc:
        print(f"setsol: {exc}", file=stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
