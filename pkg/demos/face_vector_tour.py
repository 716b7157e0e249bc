"""Walk a few classic 3-polytopes through the f / h / g transforms.

For each solid the script prints the face counts, the h-vector (note the
palindrome), the g-vector, and then runs the feasibility verdict both on
the real vector and on a couple of doctored ones to show each failure
mode: a broken Euler sum, too few vertices, a g that is not an
M-sequence, and a vector that passes every numeric test yet reconstructs
to something else.
"""

from polytnn import FVector, GVector, f_to_g, f_to_h, g_to_f, is_polytopal


SOLIDS = [
    ("tetrahedron", 3, (4, 6, 4)),
    ("octahedron", 3, (6, 12, 8)),
    # the cube is not simplicial, and no simplicial polytope shares its
    # face counts (triangular facets force 2 f_1 = 3 f_2), so it fails
    ("cube, not simplicial", 3, (8, 12, 6)),
    ("icosahedron", 3, (12, 30, 20)),
    ("triangular bipyramid", 3, (5, 9, 6)),
]

DOCTORED = [
    ("Euler sum off by one", 3, (4, 6, 5)),
    ("three vertices in dimension three", 3, (3, 3, 2)),
    ("g fails the boundary test", 4, g_to_f(GVector(4, (1, 2, 4))).counts),
    ("reconstructs to the tetrahedron instead", 3, (4, 7, 5)),
]


def main():
    for name, d, counts in SOLIDS:
        f = FVector(d, counts)
        h = f_to_h(f)
        g = f_to_g(f)
        verdict = is_polytopal(f)
        status = "feasible" if verdict else f"infeasible ({verdict.failed_condition})"
        print(f"{name}: f={counts}")
        print(f"   h={h.values}  g={g.values}  -> {status}")

    print()
    print("doctored vectors:")
    for name, d, counts in DOCTORED:
        verdict = is_polytopal(FVector(d, counts))
        print(f"   f={tuple(counts)} in dimension {d}: "
              f"condition={verdict.failed_condition}  ({name})")


if __name__ == "__main__":
    main()
