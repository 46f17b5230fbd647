"""Print the prime counts with the composite fraction and the abundance bound.

    python scripts/prime_table.py --max 48 --check-oracle 10
"""
import argparse
import sys

from freemagma.counting import abundance_bound, prime_count_closed, prime_count_oracle, prime_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=30)
    ap.add_argument("--check-oracle", type=int, default=0,
                    help="also count primes by enumeration up to this length")
    args = ap.parse_args(argv)
    print("n\tc_n\tPi_n\tgap\tbound\tgap<=bound")
    bad = 0
    for n, c, pi, gap in prime_table(args.max):
        if n >= 2 and prime_count_closed(n) != pi:
            print(f"closed form disagrees at n={n}", file=sys.stderr)
            bad += 1
        if n <= args.check_oracle and prime_count_oracle(n) != pi:
            print(f"enumeration disagrees at n={n}", file=sys.stderr)
            bad += 1
        if n >= 16:
            b = abundance_bound(n)
            print(f"{n}\t{c}\t{pi}\t{float(gap):.3e}\t{float(b):.3e}\t{gap <= b}")
        else:
            print(f"{n}\t{c}\t{pi}\t{float(gap):.3e}\t-\t-")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
