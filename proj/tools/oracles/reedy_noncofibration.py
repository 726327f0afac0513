#!/usr/bin/env python3
"""Search for a componentwise-mono map of [1]-diagrams of finite sets that is
not a Reedy cofibration.

A diagram over the arrow category [1] is a map of sets s : A0 -> A1.  For a
natural transformation eta : X -> Y the latching object at degree 0 is empty
and at degree 1 is X0, so the Reedy condition asks that eta0, and the induced
map X1 u_{X0} Y0 -> Y1 out of the pushout, are injective.  This script scans
instances in a fixed deterministic order (total size, then shape, then maps)
and freezes the first one that is componentwise injective but fails the
pushout condition into data/golden/reedy_noncofibration.json.

Run from the repository root:  python3 tools/oracles/reedy_noncofibration.py
"""

import itertools
import json
import os
import sys


def maps(a, b):
    """All functions a -> b as tuples, lexicographic."""
    if a == 0:
        return [()]
    return list(itertools.product(range(b), repeat=a))


def injective(f):
    return len(set(f)) == len(f)


def pushout(x0, x1, y0, sx, e0):
    """Pushout of x1 <-sx- x0 -e0-> y0 via union-find on the disjoint union
    {0..x1-1} u {x1..x1+y0-1}; returns (size, class of each X1 elem, class of
    each Y0 elem) with classes numbered by first occurrence."""
    parent = list(range(x1 + y0))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(x0):
        i, j = find(sx[a]), find(x1 + e0[a])
        if i != j:
            parent[max(i, j)] = min(i, j)
    rep = {}
    classes = []
    for i in range(x1 + y0):
        r = find(i)
        if r not in rep:
            rep[r] = len(rep)
        classes.append(rep[r])
    return len(rep), classes[:x1], classes[x1:]


def main():
    shapes = sorted(itertools.product(range(3), repeat=4),
                    key=lambda t: (sum(t), t))
    for (x0, x1, y0, y1) in shapes:
        for sx in maps(x0, x1):
            for sy in maps(y0, y1):
                for e0 in maps(x0, y0):
                    if not injective(e0):
                        continue
                    for e1 in maps(x1, y1):
                        if not injective(e1):
                            continue
                        # naturality: sy . e0 = e1 . sx
                        if any(sy[e0[a]] != e1[sx[a]] for a in range(x0)):
                            continue
                        size, cx, cy = pushout(x0, x1, y0, sx, e0)
                        # induced map to Y1: e1 on the X1 leg, sy on the Y0 leg
                        img = [None] * size
                        ok = True
                        for i in range(x1):
                            img[cx[i]] = e1[i]
                        for j in range(y0):
                            v = sy[j]
                            if img[cy[j]] is None:
                                img[cy[j]] = v
                            elif img[cy[j]] != v:
                                raise AssertionError("cocone not well defined")
                        if injective(img):
                            continue
                        out = {
                            "X": {"at0": x0, "at1": x1, "map": list(sx)},
                            "Y": {"at0": y0, "at1": y1, "map": list(sy)},
                            "eta": {"at0": list(e0), "at1": list(e1)},
                            "latching_pushout_size": size,
                            "expected": {"componentwise_mono": True,
                                         "reedy_cofibration": False,
                                         "witness_degree": 1},
                        }
                        root = os.path.dirname(os.path.dirname(
                            os.path.dirname(os.path.abspath(__file__))))
                        dest = os.path.join(root, "data", "golden",
                                            "reedy_noncofibration.json")
                        with open(dest, "w") as fh:
                            json.dump(out, fh, indent=2, sort_keys=True)
                            fh.write("\n")
                        print(f"found: X=({x0}->{x1}) sx={list(sx)}, "
                              f"Y=({y0}->{y1}) sy={list(sy)}, "
                              f"eta=({list(e0)},{list(e1)}), "
                              f"pushout size {size} -> {y1}")
                        return 0
    print("no instance found")
    return 1


if __name__ == "__main__":
    sys.exit(main())
