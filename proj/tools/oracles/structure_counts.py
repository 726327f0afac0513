#!/usr/bin/env python3
"""Reference enumeration of weak factorization systems, premodel structures and
model structures on small posets, by definitional subset scans.

This script is deliberately independent of the C++ engine: every axiom is
checked straight from its definition (full scans over candidate pairs of
families, no closure operators, no pruning).  Its output is frozen in
data/golden/structure_counts.json and the test suite compares the engine's
enumeration against it.

Run from the repository root:  python3 tools/oracles/structure_counts.py
"""

import itertools
import json
import os
import sys


class Poset:
    """Finite poset as a category: morphisms are ordered pairs x <= y."""

    def __init__(self, name, elems, leq_pairs):
        self.name = name
        self.elems = list(elems)
        n = len(self.elems)
        idx = {e: i for i, e in enumerate(self.elems)}
        rel = [[False] * n for _ in range(n)]
        for i in range(n):
            rel[i][i] = True
        for a, b in leq_pairs:
            rel[idx[a]][idx[b]] = True
        # transitive closure, then sanity checks
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if rel[i][k] and rel[k][j]:
                        rel[i][j] = True
        for i in range(n):
            for j in range(n):
                if i != j and rel[i][j] and rel[j][i]:
                    raise ValueError("not antisymmetric")
        self.leq = rel
        self.mors = [(x, y) for x in range(n) for y in range(n) if rel[x][y]]
        self.mor_index = {m: k for k, m in enumerate(self.mors)}

    def mor_name(self, k):
        x, y = self.mors[k]
        return [self.elems[x], self.elems[y]]

    def identities(self):
        return {self.mor_index[(x, x)] for x in range(len(self.elems))}

    def lifts(self, i, p):
        """i has the left lifting property against p: every commuting square
        (top, bottom) admits a diagonal filler.  Scanned literally."""
        a, b = self.mors[i]
        x, y = self.mors[p]
        for top in ([(a, x)] if self.leq[a][x] else []):
            for bottom in ([(b, y)] if self.leq[b][y] else []):
                # square commutes automatically in a poset; filler is b -> x
                if not self.leq[b][x]:
                    return False
        return True

    def factor_pairs(self, f):
        """All (h, g) with g∘h = f."""
        x, y = self.mors[f]
        out = []
        for w in range(len(self.elems)):
            if self.leq[x][w] and self.leq[w][y]:
                out.append((self.mor_index[(x, w)], self.mor_index[(w, y)]))
        return out

    def composable_pairs(self):
        """All (f, g, g∘f) with dst f = src g."""
        out = []
        for f, (a, b) in enumerate(self.mors):
            for g, (c, d) in enumerate(self.mors):
                if b == c:
                    out.append((f, g, self.mor_index[(a, d)]))
        return out


def enumerate_wfs(P):
    """Scan every pair (L, R) of subsets of morphisms and keep those satisfying
    the definition: mutual determination by lifting plus factorization."""
    m = len(P.mors)
    lift = [[P.lifts(i, p) for p in range(m)] for i in range(m)]
    liftmask = [sum(1 << p for p in range(m) if lift[i][p]) for i in range(m)]
    nolift_i = [sum(1 << i for i in range(m) if not lift[i][p]) for p in range(m)]
    factors = [P.factor_pairs(f) for f in range(m)]
    full = (1 << m) - 1
    found = []
    for L in range(1 << m):
        for R in range(1 << m):
            ok = True
            for i in range(m):
                if L >> i & 1:
                    if R & ~liftmask[i] & full:   # some p in R that i fails against
                        ok = False
                        break
                else:
                    if not (R & ~liftmask[i] & full):  # i lifts against all of R
                        ok = False
                        break
            if not ok:
                continue
            for p in range(m):
                if not (R >> p & 1) and not (L & nolift_i[p]):
                    ok = False
                    break
            if not ok:
                continue
            for f in range(m):
                if not any((L >> h & 1) and (R >> g & 1) for h, g in factors[f]):
                    ok = False
                    break
            if ok:
                found.append((L, R))
    return found


def weq_class(P, AC, AF):
    """Morphisms factoring as an AF-morphism after an AC-morphism."""
    W = 0
    for f in range(len(P.mors)):
        if any((AC >> h & 1) and (AF >> g & 1) for h, g in P.factor_pairs(f)):
            W |= 1 << f
    return W


def two_out_of_three_ok(P, W):
    for f, g, gf in P.composable_pairs():
        ins = (W >> f & 1) + (W >> g & 1) + (W >> gf & 1)
        if ins == 2:
            return False
    return True


def enumerate_models(P, wfss):
    """Premodel structures are nested WFS pairs; model structures additionally
    have a two-out-of-three weak equivalence class agreeing with AC and AF."""
    premodel = []
    model = []
    for (L1, R1) in wfss:          # (AC, F)
        for (L2, R2) in wfss:      # (C, AF)
            if L1 & ~L2:
                continue           # need AC ⊆ C
            premodel.append((L2, L1, R2, R1))  # (C, AC, AF, F)
            W = weq_class(P, L1, R2)
            if not two_out_of_three_ok(P, W):
                continue
            if (L2 & W) != L1 or (R1 & W) != R2:
                continue
            model.append({"C": L2, "AC": L1, "F": R1, "AF": R2, "W": W})
    return premodel, model


def mask_to_names(P, mask):
    return sorted(P.mor_name(k) for k in range(len(P.mors)) if mask >> k & 1)


def names_to_mask(P, pairs):
    mask = 0
    idx = {e: i for i, e in enumerate(P.elems)}
    for a, b in pairs:
        mask |= 1 << P.mor_index[(idx[a], idx[b])]
    return mask


def model_leq(a, b):
    return (a["C"] & ~b["C"]) == 0 and (a["AC"] & ~b["AC"]) == 0


def meet_info(models, a, b):
    lower = [x for x in models if model_leq(x, a) and model_leq(x, b)]
    maximal = [x for x in lower
               if not any(y is not x and model_leq(x, y) and not model_leq(y, x)
                          for y in lower)]
    meet = None
    if len(maximal) == 1 and all(model_leq(x, maximal[0]) for x in lower):
        meet = maximal[0]
    return meet, maximal


def all_pairs_have_meets(models):
    for a, b in itertools.combinations(models, 2):
        meet, _ = meet_info(models, a, b)
        if meet is None:
            return False
    return True


def model_entry(P, st):
    return {
        "C": mask_to_names(P, st["C"]),
        "AC": mask_to_names(P, st["AC"]),
        "F": mask_to_names(P, st["F"]),
        "AF": mask_to_names(P, st["AF"]),
        "W": mask_to_names(P, st["W"]),
    }


def analyze(P, meet_demo=None):
    wfss = enumerate_wfs(P)
    premodel, models = enumerate_models(P, wfss)
    entry = {
        "wfs": len(wfss),
        "premodel": len(premodel),
        "model": len(models),
        "wfs_left_classes": sorted(mask_to_names(P, L) for (L, R) in wfss),
        "models": sorted((model_entry(P, st) for st in models),
                         key=lambda e: (e["C"], e["AC"])),
        "all_model_pairs_have_meets": all_pairs_have_meets(models),
    }
    if meet_demo is not None:
        def locate(desc):
            c = names_to_mask(P, desc["C"])
            ac = names_to_mask(P, desc["AC"])
            matches = [st for st in models if st["C"] == c and st["AC"] == ac]
            assert len(matches) == 1, "demo structure not found in enumeration"
            return matches[0]

        ul, ur = locate(meet_demo["upper_left"]), locate(meet_demo["upper_right"])
        ll, lr = locate(meet_demo["lower_left"]), locate(meet_demo["lower_right"])
        for low in (ll, lr):
            for up in (ul, ur):
                assert model_leq(low, up)
        meet, maximal = meet_info(models, ul, ur)
        entry["meet_demo"] = {
            "upper_left": model_entry(P, ul),
            "upper_right": model_entry(P, ur),
            "has_meet": meet is not None,
            "maximal_lower_bounds": sorted((model_entry(P, st) for st in maximal),
                                           key=lambda e: (e["C"], e["AC"])),
        }
    return entry


def main():
    point = Poset("point", ["*"], [])
    interval = Poset("interval", ["0", "1"], [("0", "1")])
    chain2 = Poset("chain2", ["0", "1", "2"], [("0", "1"), ("1", "2")])
    square = Poset("square", ["00", "01", "10", "11"],
                   [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")])

    ids = [["00", "00"], ["01", "01"], ["10", "10"], ["11", "11"]]
    vert_right = ids + [["10", "11"]]                  # the single arrow 10 -> 11
    two_sides = ids + [["00", "01"], ["10", "11"]]     # both "vertical" arrows
    demo = {
        # ordered by inclusion of (C, AC): lower_* <= upper_*
        "upper_left": {"C": sorted(ids + [["00", "01"], ["00", "10"], ["00", "11"],
                                          ["01", "11"], ["10", "11"]]),
                       "AC": vert_right},
        "upper_right": {"C": two_sides, "AC": two_sides},
        "lower_left": {"C": vert_right, "AC": vert_right},
        "lower_right": {"C": two_sides, "AC": ids},
    }

    out = {"categories": {
        "point": analyze(point),
        "interval": analyze(interval),
        "chain2": analyze(chain2),
        "square": analyze(square, meet_demo=demo),
    }}

    root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    dest = os.path.join(root, "data", "golden", "structure_counts.json")
    with open(dest, "w") as fh:
        json.dump(out, fh, indent=2, sort_keys=True)
        fh.write("\n")

    for name, entry in out["categories"].items():
        print(f"{name}: wfs={entry['wfs']} premodel={entry['premodel']} "
              f"model={entry['model']} meets_ok={entry['all_model_pairs_have_meets']}")
    demo_entry = out["categories"]["square"]["meet_demo"]
    print(f"square meet demo: has_meet={demo_entry['has_meet']} "
          f"maximal_lower_bounds={len(demo_entry['maximal_lower_bounds'])}")


if __name__ == "__main__":
    sys.exit(main())
