"""Write the histogram/sine/tangent figure (SVG + CSV series) and print curve landmarks."""

import argparse

from ordinal_gate import plot


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figure4.svg")
    ap.add_argument("--seed", type=int, default=plot.FIGURE_SEED)
    args = ap.parse_args()

    bundle = plot.build_bundle(plot.figure_source(args.seed))
    for path in plot.emit_plot(bundle, args.out):
        print("wrote", path)
    h = bundle.histogram
    mode = max(range(len(h.heights)), key=h.heights.__getitem__)
    print(f"histogram: {len(h.counts)} bins on [{h.edges[0]:.4f}, {h.edges[-1]:.4f}], "
          f"modal bin [{h.edges[mode]:.4f}, {h.edges[mode + 1]:.4f}), mass {h.mass():.12f}")
    for x0, m, b in bundle.curve.tangents:
        print(f"tangent at x={x0:g}: f={plot.kant_curve(x0):.6f} slope={m:+.5f} intercept={b:+.5f}")


if __name__ == "__main__":
    main()
