#!/usr/bin/env python3
"""Decide extensibility for the identity functor between two named model
structures on the square poset, definitionally.

A left Quillen functor F : M -> N is extensible when for every cofibrant
object m of M and every cofibration g : Fm -> n' in N there are a cofibration
f : m -> m' in M and an isomorphism psi' : Fm' -> n' with psi' . Ff = g.  In
a poset the only isomorphisms are identities, so for the identity functor the
condition reads: every cofibration of N out of a cofibrant object of M is
already a cofibration of M.

The two structures are located inside the independently enumerated weak
factorization systems of the square (see structure_counts.py): M doubles the
factorization system with left class {10<=11} plus identities, and N pairs
that same system (as the anodyne half) with the maximal one.  The verdict and
the first failing pair (m, g) in scan order are frozen into
data/golden/extensible_verdict.json.

Run from the repository root:  python3 tools/oracles/extensible_verdict.py
"""

import json
import os
import sys

from structure_counts import Poset, enumerate_wfs, names_to_mask


def main():
    sq = Poset("square", ["00", "01", "10", "11"],
               [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")])
    wfss = enumerate_wfs(sq)
    ids = sum(1 << k for k in sq.identities())
    w_bo = names_to_mask(sq, [["10", "11"]]) | ids
    w_all = (1 << len(sq.mors)) - 1
    lefts = [L for (L, R) in wfss]
    assert w_bo in lefts and w_all in lefts

    # (C, AC) masks; identity functor F : M -> N
    M = {"C": w_bo, "AC": w_bo}
    N = {"C": w_all, "AC": w_bo}
    left_quillen = not (M["C"] & ~N["C"]) and not (M["AC"] & ~N["AC"])

    # initial object: the unique one admitting a morphism to every object
    nobj = len(sq.elems)
    initial = [x for x in range(nobj)
               if all(sq.leq[x][y] for y in range(nobj))]
    assert len(initial) == 1
    bottom = initial[0]

    witness = None
    for m in range(nobj):
        if not (M["C"] >> sq.mor_index[(bottom, m)] & 1):
            continue  # m not cofibrant in M
        for g in range(len(sq.mors)):
            src, dst = sq.mors[g]
            if src != m or not (N["C"] >> g & 1):
                continue
            # poset: need f = g itself to be a cofibration of M
            if not (M["C"] >> g & 1):
                witness = (m, g)
                break
        if witness:
            break

    out = {
        "category": "square",
        "M": {"C": [sq.mor_name(k) for k in range(len(sq.mors))
                    if M["C"] >> k & 1],
              "AC": [sq.mor_name(k) for k in range(len(sq.mors))
                     if M["AC"] >> k & 1]},
        "N": {"C": [sq.mor_name(k) for k in range(len(sq.mors))
                    if N["C"] >> k & 1],
              "AC": [sq.mor_name(k) for k in range(len(sq.mors))
                     if N["AC"] >> k & 1]},
        "expected": {
            "left_quillen": left_quillen,
            "extensible": witness is None,
        },
    }
    if witness is not None:
        m, g = witness
        out["expected"]["witness"] = {"m": sq.elems[m], "g": sq.mor_name(g)}
    root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    dest = os.path.join(root, "data", "golden", "extensible_verdict.json")
    with open(dest, "w") as fh:
        json.dump(out, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"left_quillen={left_quillen} extensible={witness is None} "
          f"witness={out['expected'].get('witness')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
