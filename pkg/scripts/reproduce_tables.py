"""Regenerate the seed-42 datasets and print the first ten rows and the axiom matrix."""

import argparse
import time

from ordinal_gate import check_all, run_simulation
from ordinal_gate.simulate import SimulationConfig, format_head, write_dataset
from ordinal_gate.stats import composite_score, summarize


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--n", type=int, default=10000)
    ap.add_argument("--out", help="optional dataset CSV path")
    args = ap.parse_args()

    cfg = SimulationConfig(seed=args.seed, n=args.n)
    t0 = time.perf_counter()
    samples = run_simulation(cfg)
    t_sim = time.perf_counter() - t0
    if args.out:
        write_dataset(args.out, samples)

    print(format_head(samples, 10))
    print()
    t0 = time.perf_counter()
    matrix = check_all(samples)
    t_chk = time.perf_counter() - t0
    print(matrix.render())
    print()
    for row_name, row in zip(matrix.rows, matrix.cells):
        w4, w5, w6 = (v.witness.to_json() for v in row[3:])
        print(f"{row_name}: max {w4['value']}, min {w5['value']}, first gap ({w6['a']}, {w6['b']})")

    score, weights = composite_score([summarize(s) for s in samples], cfg.themes)
    print()
    print("weights:", ", ".join(f"{w:.4f}" for w in weights.weights), f"-> composite {score:.4f}")
    print(f"simulate {t_sim:.3f} s, check {t_chk:.3f} s")


if __name__ == "__main__":
    main()
