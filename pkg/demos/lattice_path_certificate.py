"""Certify a minor nonnegative by listing disjoint path families.

A determinant computed by elimination says nothing about why it comes
out nonnegative. The lattice-path route does: each minor of the path
matrix is a sum of positive family weights, so printing the families is
a proof you can read. This script does that for a couple of minors of
the order-6 path matrix, including one that vanishes because no disjoint
family exists at all.
"""

from polytnn import (
    determinant,
    lattice_graph,
    nonintersecting_families,
    path_matrix,
)
from polytnn.tnn import as_matrix


def describe(path):
    return " -> ".join(f"({x},{y})" for x, y in path)


def main():
    n = 6
    graph = lattice_graph(n)
    w = as_matrix(path_matrix(n))
    print(f"lattice graph of order {n}: {len(graph.vertices)} vertices, "
          f"{len(graph.arcs)} arcs")
    print(f"sources: {graph.sources}")
    print(f"sinks:   {graph.sinks}")
    print()

    for rows, cols in (((0, 1), (1, 2)), ((0, 1), (4, 5)), ((0, 1, 2), (0, 1, 2))):
        sub = w.submatrix(rows, cols)
        det = determinant(sub)
        families = nonintersecting_families(graph, rows, cols)
        total = sum(f.weight for f in families)
        print(f"rows {rows} x cols {cols}: determinant {det}, "
              f"{len(families)} disjoint families, total weight {total}")
        for fam in families:
            print(f"   weight {fam.weight}:")
            for path in fam.paths:
                print(f"      {describe(path)}")
        print()


if __name__ == "__main__":
    main()
