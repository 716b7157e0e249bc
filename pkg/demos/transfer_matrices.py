"""Print the small transfer and path matrices and their relationship.

The path matrix of order n carries an extra leading column (1, 0, ...)
compared to the transfer matrix one dimension down; dropping it recovers
that matrix exactly. This script shows both families side by side for
the first few sizes.
"""

from polytnn import path_matrix, strip_leading_column, transfer_matrix


def show(entries):
    width = max(len(str(x)) for row in entries for x in row)
    for row in entries:
        print("   " + " ".join(str(x).rjust(width) for x in row))


def main():
    for n in range(2, 7):
        d = n - 1
        w = path_matrix(n)
        m = transfer_matrix(d)
        print(f"path matrix, order {n}:")
        show(w.entries)
        print(f"transfer matrix, dimension {d}:")
        show(m.entries)
        stripped = strip_leading_column(w)
        print(f"strip leading column of order-{n} path matrix -> "
              f"{'same' if stripped == m else 'DIFFERENT'}")
        print()


if __name__ == "__main__":
    main()
