"""``magma`` command-line entry point.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage or
parse error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import dot
from .arithmetic import divisor_chain, factorize, gcd, is_prime, left_divide, multiply
from .config import LIMITS
from .counting import (catalan_count, prime_count_closed, prime_count_oracle,
                       prime_count_recursive, prime_table)
from .elements import enumerate_level, format_element, format_set, parse_element, parse_set
from .errors import DomainError, ParseError, ResourceCapError
from .families import enumerate_rooted_trees, family_record
from .primesets import (PrimeSet, arborescence, decomposition_digraph, enumerate_prime_sets,
                        is_closed_set, is_prime_set, kmax_level, spectrum)
from .submagmas import (contains, longitudinal_hull, pentagon_witness, submagma,
                        symmetric_analyze)
from .verify import DEFAULTS, SUITES, run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class CommandReport:
    command: str
    parameters: dict = field(default_factory=dict)
    results: object = None
    status: int = EXIT_OK
    dot: str = field(default=None, repr=False)

    def to_dict(self):
        return {"command": self.command, "parameters": self.parameters,
                "results": self.results, "status": self.status}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run() can map usage errors to a report
    def error(self, message):
        raise UsageError(message)


def _canon(e):
    return format_element(e, "canonical")


def _pretty(e):
    return format_element(e, "pretty")


def _frac(q: Fraction):
    return f"{q.numerator}/{q.denominator}"


def _positive(name):
    def check(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {v}")
        return v
    return check


def _globals():
    g = _Parser(add_help=False)
    S = argparse.SUPPRESS
    g.add_argument("--json", action="store_true", default=S, help="emit one JSON document")
    g.add_argument("--dot", metavar="FILE", default=S, help="write a DOT graph to FILE")
    g.add_argument("--max-len", type=_positive("--max-len"), default=S,
                   help="truncation bound on element length")
    g.add_argument("--cap", type=_positive("--cap"), default=S,
                   help="override the enumeration caps")
    g.add_argument("--threads", type=_positive("--threads"), default=S,
                   help="worker threads for verify all")
    return g


def build_parser():
    g = _globals()
    p = _Parser(prog="magma", parents=[g], description="Exact arithmetic in the cyclic free magma.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        return sub.add_parser(name, parents=[g], help=help_)

    cmd("eval", "describe an element").add_argument("expr")
    cmd("enum", "list every element of one length").add_argument("n", type=_positive("n"))
    for name, help_ in (("mul", "product x*y"), ("divide", "left quotient of x by a"),
                        ("gcd", "longest common left divisor")):
        s = cmd(name, help_)
        s.add_argument("x" if name != "divide" else "a")
        s.add_argument("y" if name != "divide" else "x")
    cmd("factor", "prime factorization").add_argument("expr")

    pr = cmd("primes", "prime counts").add_subparsers(dest="sub", required=True,
                                                      parser_class=_Parser)
    c = pr.add_parser("count", parents=[g])
    c.add_argument("n", type=_positive("n"))
    t = pr.add_parser("table", parents=[g])
    t.add_argument("--max", type=_positive("--max"), default=13)

    sm = cmd("submagma", "finitely generated submagmas").add_subparsers(
        dest="sub", required=True, parser_class=_Parser)
    sm.add_parser("gens", parents=[g]).add_argument("set")
    m = sm.add_parser("member", parents=[g])
    m.add_argument("set")
    m.add_argument("expr")

    ps = cmd("primeset", "additive prime sets").add_subparsers(
        dest="sub", required=True, parser_class=_Parser)
    ps.add_parser("check", parents=[g]).add_argument("set")
    ps.add_parser("spectrum", parents=[g]).add_argument("set")
    ps.add_parser("digraph", parents=[g]).add_argument("set")
    e = ps.add_parser("enum", parents=[g])
    e.add_argument("--size", type=int, required=True)

    f = cmd("families", "labelled rooted-tree families")
    f.add_argument("--size", type=_positive("--size"), required=True)
    h = cmd("hasse", "top levels of the k-maximal submagma poset")
    h.add_argument("--levels", type=_positive("--levels"), default=3)
    cmd("pentagon", "pentagon sublattice witness")
    cmd("verify", "replay invariant suites").add_argument(
        "suite", choices=sorted(SUITES) + ["all"])
    return p


# ------------------------------------------------------------ commands

def _eval(a, rep):
    x = parse_element(a.expr)
    return {"canonical": _canon(x), "pretty": _pretty(x), "length": x.length,
            "prime": is_prime(x), "factors": [_pretty(p) for p in factorize(x).factors]}


def _enum(a, rep):
    n = a.n
    return {"length": n, "count": catalan_count(n),
            "elements": [_canon(x) for x in enumerate_level(n)]}


def _mul(a, rep):
    z = multiply(parse_element(a.x), parse_element(a.y))
    return {"canonical": _canon(z), "pretty": _pretty(z), "length": z.length}


def _divide(a, rep):
    d, x = parse_element(a.a), parse_element(a.x)
    q = left_divide(d, x)
    if q is None:
        raise DomainError(f"{_pretty(d)} does not left-divide {_pretty(x)}")
    return {"quotient": _canon(q), "pretty": _pretty(q)}


def _gcd(a, rep):
    d = gcd(parse_element(a.x), parse_element(a.y))
    return {"gcd": _canon(d), "pretty": _pretty(d)}


def _factor(a, rep):
    x = parse_element(a.expr)
    fac = factorize(x)
    return {"subject": _canon(x), "factors": [_canon(p) for p in fac.factors],
            "pretty": [_pretty(p) for p in fac.factors],
            "divisors": [_canon(p) for p in divisor_chain(x)]}


def _primes(a, rep):
    if a.sub == "count":
        n = a.n
        out = {"n": n, "c": catalan_count(n), "recursive": prime_count_recursive(n)}
        if n >= 2:
            out["closed"] = prime_count_closed(n)
        if n <= LIMITS.oracle_max_len:
            out["oracle"] = prime_count_oracle(n)
        return out
    rep.parameters["max"] = a.max
    return [{"n": n, "c": c, "Pi": pi, "gap": _frac(gap)}
            for n, c, pi, gap in prime_table(a.max)]


def _submagma(a, rep):
    gens = parse_set(a.set)
    if not gens:
        raise DomainError("need at least one generator")
    N = submagma(gens)
    if a.sub == "gens":
        sym = symmetric_analyze(N)
        return {"generators": [_canon(g) for g in N.generators],
                "pretty": format_set(N.generators), "rank": N.rank,
                "symmetric": sym.is_symmetric,
                "longitudinal_hull": sorted(longitudinal_hull(N).numeric_generators)}
    x = parse_element(a.expr)
    return {"member": contains(N, x), "element": _canon(x),
            "generators": [_canon(g) for g in N.generators]}


def _primeset(a, rep):
    if a.sub == "enum":
        L = rep.parameters.setdefault("max_len", 5)
        rep.parameters["size"] = a.size
        return [p.to_dict() for p in enumerate_prime_sets(a.size, L)]
    P = parse_set(a.set)
    if a.sub == "check":
        return {"prime": is_prime_set(P), "closed": is_closed_set(P),
                "elements": PrimeSet(P).to_dict()["elements"]}
    if a.sub == "spectrum":
        s = spectrum(P)
        rep.dot = dot.spectrum_dot(s, f"spectrum {format_set(P)}")
        return s.to_dict()
    edges = decomposition_digraph(P)
    rep.dot = dot.digraph_dot(edges, f"digraph {format_set(P)}")
    return {"edges": [[_canon(z), _canon(c)] for z, c in edges],
            "arborescence": arborescence(P).encoding if P else None}


def _families(a, rep):
    L = rep.parameters.get("max_len")
    rep.parameters["size"] = a.size
    return [family_record(T, L) for T in enumerate_rooted_trees(a.size)]


def _hasse(a, rep):
    L = rep.parameters.setdefault("max_len", 4)
    rep.parameters["levels"] = a.levels
    levels = [kmax_level(k, L) for k in range(0, a.levels + 1)]
    rep.dot = dot.hasse_dot(levels, f"hasse levels={a.levels} max_len={L}")
    return [[{"set": p.to_dict()["elements"],
              "parents": [q.to_dict()["elements"] for q in parents]}
             for p, parents in level] for level in levels]


def _pentagon(a, rep):
    L = rep.parameters.setdefault("max_len", 12)
    rep.dot = dot.pentagon_dot(f"pentagon max_len={L}")
    recs = pentagon_witness(L)
    if not all(r.passed for r in recs):
        rep.status = EXIT_DOMAIN
    return [r.to_dict() for r in recs]


def _verify(a, rep):
    names = sorted(SUITES) if a.suite == "all" else [a.suite]
    L = rep.parameters.get("max_len")
    rep.parameters["bounds"] = {n: L or DEFAULTS[n] for n in names}
    threads = rep.parameters.get("threads", 1)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            done = list(pool.map(lambda n: run_suite(n, L), names))
    else:
        done = [run_suite(n, L) for n in names]
    out = {}
    for name, recs in zip(names, done):
        out[name] = [r.to_dict() for r in recs]
        if not all(r.passed for r in recs):
            rep.status = EXIT_DOMAIN
    return out


COMMANDS = {
    "eval": _eval, "enum": _enum, "mul": _mul, "divide": _divide, "gcd": _gcd,
    "factor": _factor, "primes": _primes, "submagma": _submagma, "primeset": _primeset,
    "families": _families, "hasse": _hasse, "pentagon": _pentagon, "verify": _verify,
}


# ------------------------------------------------------------ output

def _human(rep, out):
    r = rep.results
    if rep.command == "primes table":
        print("n\tc_n\tPi_n\tgap", file=out)
        for row in r:
            print(f"{row['n']}\t{row['c']}\t{row['Pi']}\t{row['gap']}", file=out)
    elif rep.command == "verify":
        for name, recs in r.items():
            for rec in recs:
                line = f"{'PASS' if rec['passed'] else 'FAIL'}\t{name}\t{rec['check']}"
                if rec.get("bound") is not None:
                    line += f"\t(bound {rec['bound']})"
                if not rec["passed"]:
                    line += f"\tcounterexample: {rec.get('witness') or rec.get('detail')}"
                print(line, file=out)
    elif rep.command == "enum" or rep.command == "primeset enum":
        items = r["elements"] if rep.command == "enum" else r
        for item in items:
            print(item if isinstance(item, str) else "{" + ", ".join(item["elements"]) + "}",
                  file=out)
    elif isinstance(r, dict):
        for k, v in r.items():
            print(f"{k}\t{json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}",
                  file=out)
    else:
        for item in r:
            print(json.dumps(item, ensure_ascii=False), file=out)
    bound = rep.parameters.get("max_len")
    if bound is not None and rep.command != "verify":
        print(f"# truncated at length {bound}", file=out)


def run(argv, out=None, err=None) -> CommandReport:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        rep = CommandReport("usage", {"argv": list(argv)}, {"error": str(exc)}, EXIT_USAGE)
        _emit_error(rep, want_json, out, err)
        return rep
    name = args.command + (f" {args.sub}" if getattr(args, "sub", None) else "")
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "sub", "json", "dot") and v is not None}
    rep = CommandReport(name, params)
    saved = dataclasses.asdict(LIMITS)
    try:
        if "cap" in params:
            LIMITS.enumeration_cap = params["cap"]
            LIMITS.primeset_cap = params["cap"]
        rep.results = COMMANDS[args.command](args, rep)
    except ParseError as exc:
        rep.status, rep.results = EXIT_USAGE, {"error": str(exc)}
    except DomainError as exc:
        rep.status, rep.results = EXIT_DOMAIN, {"error": str(exc)}
    except ResourceCapError as exc:
        rep.status = EXIT_CAP
        rep.results = {"error": str(exc), "cap": exc.cap_name, "limit": exc.cap,
                       "requested": exc.requested}
    finally:
        for k, v in saved.items():
            setattr(LIMITS, k, v)
    if isinstance(rep.results, dict) and "error" in rep.results and rep.status != EXIT_OK:
        _emit_error(rep, getattr(args, "json", False), out, err)
        return rep
    if getattr(args, "dot", None):
        if rep.dot is None:
            print(f"magma: {name} has no graph output; --dot ignored", file=err)
        else:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(rep.dot)
    if getattr(args, "json", False):
        json.dump(rep.to_dict(), out, ensure_ascii=False)
        out.write("\n")
    else:
        _human(rep, out)
    return rep


def _emit_error(rep, as_json, out, err):
    print(f"magma: {rep.results['error']}", file=err)
    if as_json:
        json.dump(rep.to_dict(), out, ensure_ascii=False)
        out.write("\n")


def main(argv=None):
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))
    rep = run(sys.argv[1:] if argv is None else argv)
    sys.exit(rep.status)


if __name__ == "__main__":
    main()
