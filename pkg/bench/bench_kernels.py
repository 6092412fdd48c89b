"""Compare the compiled kernels with the pure-Python fallback.

    python bench/bench_kernels.py [--quick]
"""

import argparse

from zkpot.kernel_bench import format_table, run

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="smaller inputs, shorter timing loops")
    args = ap.parse_args()
    print(format_table(run(quick=args.quick, min_time=0.05 if args.quick else 0.3)))
