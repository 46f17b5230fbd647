"""Write DOT analogues of the pentagon, spectra, digraph and Hasse figures.

    python scripts/regenerate_figures.py --out figures/
    dot -Tsvg figures/spectra_1.dot -o spectra_1.svg   # optional, needs graphviz
"""
import argparse
import pathlib
import sys

from freemagma import dot
from freemagma.arithmetic import multiply
from freemagma.elements import format_set, parse_element, parse_set
from freemagma.primesets import decomposition_digraph, is_prime_set, kmax_level, spectrum

SPECTRA = ["{1, 3_-, 5_+}", "{1, 2, 2^2, 3_-}", "{1, 2, 2^2, 2^3, 2^4}"]

# vertices of the drawn fragment of the decomposition digraph
FRAGMENT = ["1", "2", "3_-", "3_+", "2^2", "2^3", "2^4", "(2+3_-)", "(3_-+2)", "(2+3_+)",
            "(3_++2)", "4_-", "(1+3_-)", "(3_++1)", "4_+", "(1+4_-)", "(4_++1)", "5_-", "5_+"]
PRODUCTS = [("3_-", "2"), ("3_-", "2^2"), ("3_+", "2"), ("3_+", "2^2")]


def fragment():
    elems = {parse_element(t) for t in FRAGMENT}
    elems |= {multiply(parse_element(a), parse_element(b)) for a, b in PRODUCTS}
    return frozenset(elems)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--hasse-levels", type=int, default=3)
    ap.add_argument("--hasse-max-len", type=int, default=4)
    args = ap.parse_args(argv)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    (out / "pentagon.dot").write_text(dot.pentagon_dot("pentagon"))
    for i, text in enumerate(SPECTRA, 1):
        s = spectrum(parse_set(text))
        (out / f"spectra_{i}.dot").write_text(dot.spectrum_dot(s, f"spectrum {text}"))
        print(f"spectrum {text}: {len(s.nodes)} nodes, length {s.length}, width {s.width}")

    frag = fragment()
    if not is_prime_set(frag):
        print("digraph fragment is not a prime set; skipped", file=sys.stderr)
    else:
        edges = decomposition_digraph(frag)
        (out / "digraph.dot").write_text(dot.digraph_dot(edges, "digraph fragment"))
        print(f"digraph on {format_set(frag)}: {len(edges)} edges")

    levels = [kmax_level(k, args.hasse_max_len) for k in range(args.hasse_levels + 1)]
    name = f"hasse levels={args.hasse_levels} max_len={args.hasse_max_len}"
    (out / "hasse.dot").write_text(dot.hasse_dot(levels, name))
    print(f"hasse: level sizes {[len(lv) for lv in levels]} (elements of length <= "
          f"{args.hasse_max_len})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
