#!/usr/bin/env python3
"""A tour of the triangles: recurrence rows, special values, point queries,
and the exact text exports."""

from stirling import StirlingKind, build_triangle, factorial, stirling

FIRST = StirlingKind.FIRST_SIGNED
UNSIGNED = StirlingKind.FIRST_UNSIGNED
SECOND = StirlingKind.SECOND

print("Second kind, rows 0..6 (S(n, m) counts partitions of an n-set")
print("into m nonempty blocks):\n")
for row in build_triangle(SECOND, 6).rows:
    print("   ", row)

print("\nSigned first kind, rows 0..6 (coefficients of the falling")
print("factorial x (x-1) ... (x-n+1)):\n")
for row in build_triangle(FIRST, 6).rows:
    print("   ", row)

print("\nColumn m=1 of the signed first kind alternates factorials,")
print("s(n, 1) = (-1)^(n-1) (n-1)!:\n")
for n in range(1, 9):
    print(f"    s({n}, 1) = {stirling(FIRST, n, 1):>6}"
          f"    (n-1)! = {factorial(n - 1)}")

print("\nThe unsigned view strips the signs; its row sums count all")
print("permutations, so they are n!:\n")
for n in range(1, 9):
    row = build_triangle(UNSIGNED, n).rows[n]
    print(f"    n={n}: sum {sum(row):>6} = {factorial(n):>6} = n!")

print("\nQueries outside a triangle are zero, never an error:")
print(f"    S(3, 5) = {stirling(SECOND, 3, 5)}")
print(f"    s(4, 0) = {stirling(FIRST, 4, 0)}")

print("\nExports are exact decimal text. CSV (ragged, no header):\n")
print(build_triangle(SECOND, 4).to_csv())
print("JSON (arrays of decimal strings):\n")
print(build_triangle(FIRST, 3).to_json())
