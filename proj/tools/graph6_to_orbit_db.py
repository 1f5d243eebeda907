#!/usr/bin/env python3
"""Convert graph6 lines (one graph per line) into the orbit-database format
read by `plc egs --database`: blocks of "n=<count>" plus 1-indexed edge lines,
separated by blank lines.

    python3 tools/graph6_to_orbit_db.py orbits8.g6 > orbits8.txt
"""

import argparse
import sys

import networkx as nx


def convert(lines, out):
    first = True
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            g = nx.from_graph6_bytes(line.encode("ascii"))
        except Exception as exc:  # networkx raises a mix of types here
            raise SystemExit(f"line {lineno}: not graph6: {exc}")
        if not first:
            out.write("\n")
        first = False
        out.write(f"n={g.number_of_nodes()}\n")
        for i, j in sorted(tuple(sorted(e)) for e in g.edges()):
            out.write(f"{i + 1} {j + 1}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    args = ap.parse_args()
    if args.input:
        with open(args.input, encoding="ascii") as f:
            convert(f, sys.stdout)
    else:
        convert(sys.stdin, sys.stdout)


if __name__ == "__main__":
    main()
