"""Compare the compiled search kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_oracle.py [--trials N] [--seed S] [--n N]
"""

import argparse

from lossycvc.bench import compare_backends, format_rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=14, help="vertices per random graph")
    args = p.parse_args()
    rows = compare_backends(args.trials, args.seed, n_search=args.n, n_tw=args.n)
    print(format_rows(rows), end="")


if __name__ == "__main__":
    main()
