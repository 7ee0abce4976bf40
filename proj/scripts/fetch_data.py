#!/usr/bin/env python3
"""Materialize the benchmark datasets as CSV files under data/.

Produces wdbc.csv, sonar.csv and ionosphere.csv in the format the CLI
expects: a header row, numeric feature columns, class column last.

wdbc ships with scikit-learn. sonar and ionosphere are taken from the
bundled copies in the `keel-ds` package when it is installed, falling
back to a direct download from the UCI repository.
"""

import argparse
import csv
import io
import os
import sys

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
UCI_URLS = {
    "sonar": f"{UCI}/undocumented/connectionist-bench/sonar/sonar.all-data",
    "ionosphere": f"{UCI}/ionosphere/ionosphere.data",
}


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows x {len(header) - 1} features)")


def fetch_wdbc(out_dir):
    from sklearn.datasets import load_breast_cancer

    ds = load_breast_cancer()
    header = [n.replace(" ", "_") for n in ds.feature_names] + ["diagnosis"]
    names = ["malignant", "benign"]
    rows = [
        [repr(float(v)) for v in x] + [names[y]]
        for x, y in zip(ds.data, ds.target)
    ]
    write_csv(os.path.join(out_dir, "wdbc.csv"), header, rows)


def keel_raw(name):
    """Raw KEEL .dat rows bundled with the keel-ds package, or None."""
    try:
        import keel_ds
    except ImportError:
        return None
    path = os.path.join(
        os.path.dirname(keel_ds.__file__), "data", "balanced", "raw", f"{name}.dat"
    )
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.startswith("@")]


def uci_raw(name):
    from urllib.request import urlopen

    with urlopen(UCI_URLS[name], timeout=60) as resp:
        text = resp.read().decode()
    return [ln.strip() for ln in io.StringIO(text) if ln.strip()]


def fetch_tabular(out_dir, name, n_features, class_name):
    lines = keel_raw(name)
    source = "keel-ds"
    if lines is None:
        lines = uci_raw(name)
        source = "UCI"
    rows = []
    for ln in lines:
        cells = [c.strip() for c in ln.split(",")]
        if len(cells) != n_features + 1:
            raise SystemExit(f"{name}: expected {n_features + 1} columns, got {len(cells)}")
        rows.append(cells)
    header = [f"a{i + 1:02d}" for i in range(n_features)] + [class_name]
    write_csv(os.path.join(out_dir, f"{name}.csv"), header, rows)
    print(f"  source: {source}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data", help="output directory (default: data/)")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    fetch_wdbc(args.out)
    fetch_tabular(args.out, "sonar", 60, "object")
    fetch_tabular(args.out, "ionosphere", 33, "signal")


if __name__ == "__main__":
    sys.exit(main())
