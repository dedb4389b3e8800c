"""Plot a sweep CSV produced by ``bisqueeze sweep``.

    bisqueeze sweep --out sweep.csv --r-steps 81
    python demos/plot_sweep.py sweep.csv

Needs matplotlib, which the library itself does not depend on.
"""
import csv
import sys

import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "sweep.csv"
with open(path) as fh:
    rows = list(csv.DictReader(fh))
cols = {k: [float(row[k]) for row in rows] for k in rows[0]}
r = cols["r"]

groups = [
    ("tripartite", ["N_abc", "N_a-bc", "N_b-ac", "N_c-ab"]),
    ("bipartite", ["N_ab", "N_bc", "N_ac", "adagc", "C_ac"]),
    ("after idler measurement", ["N_out", "adagc_out", "C_out"]),
    ("conditional state entries", [k for k in cols if k.startswith("sigma_out")]),
]
fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
for ax, (title, keys) in zip(axes.flat, groups):
    for key in keys:
        if key in cols:
            ax.plot(r, cols[key], label=key)
    ax.set_title(title)
    ax.set_xlabel("r")
    ax.legend(fontsize=8)
fig.tight_layout()
out = path.rsplit(".", 1)[0] + ".png"
fig.savefig(out, dpi=120)
print("saved", out)
