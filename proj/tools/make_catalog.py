#!/usr/bin/env python3
"""Regenerates the group catalog under data/catalog/.

Every entry is written as permutation generators (or an explicit table for
the trivial group). Orders are verified by closing the generators here, so a
bad formula fails loudly instead of producing a wrong file.
"""

import os
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "catalog")


def compose(a, b):
    # (a o b)(x) = a[b[x]]
    return tuple(a[x] for x in b)


def closure_order(gens):
    deg = len(gens[0])
    ident = tuple(range(deg))
    seen = {ident}
    queue = [ident]
    while queue:
        cur = queue.pop()
        for s in gens:
            nxt = compose(cur, s)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen)


def cycle(n):
    return [(i + 1) % n for i in range(n)]


def quaternion_gens(n):
    """Q_{2^n} = <x, y | x^(2^(n-1)) = 1, y^2 = x^(2^(n-2)), y x y^-1 = x^-1>,
    acting on itself by left translation. Element x^a y^b -> index a + m*b,
    m = 2^(n-1)."""
    m = 2 ** (n - 1)
    size = 2 * m
    px = [0] * size
    py = [0] * size
    for a in range(m):
        # x . x^a y^b = x^(a+1) y^b
        px[a] = (a + 1) % m
        px[a + m] = (a + 1) % m + m
        # y . x^a = x^-a y ; y . x^a y = x^(m/2 - a)
        py[a] = (-a) % m + m
        py[a + m] = (m // 2 - a) % m
    return [px, py]


def dihedral_gens(order):
    m = order // 2
    rot = cycle(m)
    refl = [(-k) % m for k in range(m)]
    return [rot, refl]


def semidihedral16_gens():
    rot = cycle(8)
    s = [(3 * k) % 8 for k in range(8)]
    return [rot, s]


def product_of_cycles(sizes):
    """Direct product of cyclic groups acting on the disjoint union of circles."""
    gens = []
    offset = 0
    total = sum(sizes)
    for n in sizes:
        perm = list(range(total))
        for i in range(n):
            perm[offset + i] = offset + (i + 1) % n
        gens.append(perm)
        offset += n
    return gens


def f9_points():
    return [(x, y) for y in range(3) for x in range(3)]


def f9_index(v):
    x, y = v
    return (x % 3) + 3 * (y % 3)


def linear_perm(mat):
    a, b, c, d = mat  # [[a, b], [c, d]]
    return [f9_index((a * x + b * y, c * x + d * y)) for (x, y) in f9_points()]


def affine_translation(t):
    tx, ty = t
    return [f9_index((x + tx, y + ty)) for (x, y) in f9_points()]


GROUPS = {}

for p in (2, 3, 5):
    for n in range(1, 5):
        GROUPS[f"C{p ** n}"] = [cycle(p ** n)]

GROUPS["V4"] = product_of_cycles([2, 2])
GROUPS["C2xC4"] = product_of_cycles([2, 4])
GROUPS["C2xC2xC2"] = product_of_cycles([2, 2, 2])
GROUPS["C3xC3"] = product_of_cycles([3, 3])
GROUPS["D8"] = dihedral_gens(8)
GROUPS["D16"] = dihedral_gens(16)
GROUPS["SD16"] = semidihedral16_gens()
GROUPS["Q8"] = quaternion_gens(3)
GROUPS["Q16"] = quaternion_gens(4)
GROUPS["Q32"] = quaternion_gens(5)
GROUPS["S3"] = [[1, 2, 0], [1, 0, 2]]
GROUPS["S4"] = [[1, 2, 3, 0], [1, 0, 2, 3]]
GROUPS["A4"] = [[1, 2, 0, 3], [1, 0, 3, 2]]
# SL_2(F_3) acting linearly on F_3^2 (nine points), generated by the two
# elementary transvections.
GROUPS["SL2F3"] = [linear_perm((1, 0, 1, 1)), linear_perm((1, 1, 0, 1))]
# Q8 acting on F_3^2 through i -> [[0,-1],[1,0]], j -> [[1,1],[1,-1]];
# the semidirect product is the affine group generated together with the
# translations. Faithful on the nine points.
GROUPS["Q8_semidirect_F3sq"] = [
    linear_perm((0, -1, 1, 0)),
    linear_perm((1, 1, 1, -1)),
    affine_translation((1, 0)),
    affine_translation((0, 1)),
]

EXPECTED_ORDER = {
    "V4": 4, "C2xC4": 8, "C2xC2xC2": 8, "C3xC3": 9,
    "D8": 8, "D16": 16, "SD16": 16,
    "Q8": 8, "Q16": 16, "Q32": 32,
    "S3": 6, "S4": 24, "A4": 12,
    "SL2F3": 24, "Q8_semidirect_F3sq": 72,
}
for p in (2, 3, 5):
    for n in range(1, 5):
        EXPECTED_ORDER[f"C{p ** n}"] = p ** n


def main():
    os.makedirs(OUT, exist_ok=True)
    with open(os.path.join(OUT, "C1.grp"), "w") as f:
        f.write("name C1\norder 1\ntable 1\n0\n")
    for name, gens in sorted(GROUPS.items()):
        order = closure_order([tuple(g) for g in gens])
        if order != EXPECTED_ORDER[name]:
            sys.exit(f"{name}: closure has order {order}, expected {EXPECTED_ORDER[name]}")
        with open(os.path.join(OUT, name + ".grp"), "w") as f:
            f.write(f"name {name}\norder {order}\n")
            f.write(f"generators {len(gens)}\n")
            for g in gens:
                f.write(" ".join(str(v) for v in g) + "\n")
    print(f"wrote {len(GROUPS) + 1} catalog files to {OUT}")


if __name__ == "__main__":
    main()
