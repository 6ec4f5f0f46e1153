#!/usr/bin/env python3
"""Render vorticity snapshots written by `nsfourier simulate` as a grid of images."""
import argparse
import pathlib

import matplotlib.pyplot as plt
import numpy as np


def read_snapshot(path):
    with open(path) as f:
        header = dict(tok.split("=") for tok in f.readline().split())
        data = np.loadtxt(f, delimiter=",")
    m, comps = int(header["M"]), int(header["components"])
    return float(header["time"]), data.reshape(comps, m, m)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("run_dir", type=pathlib.Path)
    ap.add_argument("--out", type=pathlib.Path, default=None, help="image file (default <run_dir>/vorticity.png)")
    ap.add_argument("--cols", type=int, default=4)
    args = ap.parse_args()

    frames = sorted(args.run_dir.glob("vorticity_*.csv"))
    if not frames:
        raise SystemExit(f"no vorticity_*.csv files in {args.run_dir}")
    rows = -(-len(frames) // args.cols)
    fig, axes = plt.subplots(rows, args.cols, figsize=(3 * args.cols, 3 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for ax, path in zip(axes.flat, frames):
        t, w = read_snapshot(path)
        # rows are y, columns are x; shift so the domain reads (-pi, pi]
        ax.imshow(np.fft.fftshift(w[0]), origin="lower", extent=(-np.pi, np.pi, -np.pi, np.pi), cmap="RdBu_r")
        ax.set_title(f"t = {t:g}")
    fig.tight_layout()
    out = args.out or args.run_dir / "vorticity.png"
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
