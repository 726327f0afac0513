#!/usr/bin/env python3
"""Search for a right-induced transfer whose factorization axiom fails.

Given an adjunction F -| G between finite posets and a premodel structure on
the source of F, the right-induced candidate structure on the target takes
the (anodyne) fibrations to be the G-preimages and closes the other classes
under the left lifting property.  On finite posets the factorization axiom
can fail; this script scans small posets in a fixed deterministic order and
freezes the first failing instance with a non-lattice target into
data/golden/transfer_failure.json.

Only posets with a least element can carry a monotone map to a bottomed
poset admitting a left adjoint (the preimage of the whole target must have a
least element), so the generator pins element 0 as a global bottom.

Run from the repository root:  python3 tools/oracles/transfer_failure.py
"""

import itertools
import json
import os
import sys

from structure_counts import Poset, enumerate_wfs


def bottomed_posets(n):
    """All partial orders on 0..n-1 with 0 a least element, in a fixed order
    (scanning relation bitmasks over the strict pairs among 1..n-1)."""
    elems = [str(i) for i in range(n)]
    pairs = [(i, j) for i in range(1, n) for j in range(1, n) if i != j]
    for bits in range(1 << len(pairs)):
        rel = [[i == j or i == 0 for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rel[i][j] = True
        ok = True
        for i in range(1, n):
            if not ok:
                break
            for j in range(1, n):
                if i != j and rel[i][j]:
                    if rel[j][i]:
                        ok = False
                        break
                    for k in range(1, n):
                        if rel[j][k] and not rel[i][k]:
                            ok = False
                            break
        if not ok:
            continue
        leq_pairs = [(elems[i], elems[j]) for i in range(n) for j in range(n)
                     if i != j and rel[i][j]]
        yield Poset(f"p{n}_{bits}", elems, leq_pairs)


def is_lattice(P):
    n = len(P.elems)
    for x in range(n):
        for y in range(x + 1, n):
            ub = [z for z in range(n) if P.leq[x][z] and P.leq[y][z]]
            if not any(all(P.leq[z][w] for w in ub) for z in ub):
                return False
            lb = [z for z in range(n) if P.leq[z][x] and P.leq[z][y]]
            if not any(all(P.leq[w][z] for w in lb) for z in lb):
                return False
    return True


def monotone_maps(N, M):
    """All monotone maps N -> M as object-index tuples, lexicographic."""
    n, m = len(N.elems), len(M.elems)
    for tup in itertools.product(range(m), repeat=n):
        if all(M.leq[tup[x]][tup[y]]
               for x in range(n) for y in range(n) if N.leq[x][y]):
            yield tup


def left_adjoint(N, M, G):
    """F(a) = least element of {x in N : a <= G(x)}, if it exists for all a."""
    F = []
    for a in range(len(M.elems)):
        cands = [x for x in range(len(N.elems)) if M.leq[a][G[x]]]
        least = [x for x in cands if all(N.leq[x][y] for y in cands)]
        if len(least) != 1:
            return None
        F.append(least[0])
    assert all(M.leq[a][G[F[a]]] for a in range(len(M.elems)))
    assert all(N.leq[F[G[x]]][x] for x in range(len(N.elems)))
    return F


def check_transfer(N, lift, M, G, pm):
    """Right-induced candidate on N from masks pm = (C, AC, F, AF) on M.
    Returns (kind, pair, witness_mor) for the first failure, or None."""
    m = len(N.mors)
    gm = [M.mor_index[(G[x], G[y])] for (x, y) in N.mors]
    fib = sum(1 << k for k in range(m) if pm["F"] >> gm[k] & 1)
    afib = sum(1 << k for k in range(m) if pm["AF"] >> gm[k] & 1)

    def llp(against):
        return sum(1 << i for i in range(m)
                   if all(lift[i][p] for p in range(m) if against >> p & 1))

    def rlp(of):
        return sum(1 << p for p in range(m)
                   if all(lift[i][p] for i in range(m) if of >> i & 1))

    ac, c = llp(fib), llp(afib)
    for (pair, L, R) in (("c_af", c, afib), ("ac_f", ac, fib)):
        for f in range(m):
            if not any((L >> h & 1) and (R >> g & 1)
                       for h, g in N.factor_pairs(f)):
                return ("FactorizationFailure", pair, f)
    for (pair, L, R) in (("c_af", c, afib), ("ac_f", ac, fib)):
        if rlp(L) != R:
            return ("ClosureFailure", pair, None)
    if ac & ~c:
        return ("NestingFailure", "", None)
    return None


def main():
    sources = [Poset("interval", ["0", "1"], [("0", "1")]),
               Poset("chain2", ["0", "1", "2"], [("0", "1"), ("1", "2")])]
    hit = None
    for M in sources:
        premodels = []
        wfss = enumerate_wfs(M)
        for (L1, R1) in wfss:      # (AC, F)
            for (L2, R2) in wfss:  # (C, AF)
                if not (L1 & ~L2):
                    premodels.append({"C": L2, "AC": L1, "F": R1, "AF": R2})
        for n in range(3, 7):
            for N in bottomed_posets(n):
                if is_lattice(N):
                    continue
                m = len(N.mors)
                lift = [[N.lifts(i, p) for p in range(m)] for i in range(m)]
                for G in monotone_maps(N, M):
                    F = left_adjoint(N, M, G)
                    if F is None:
                        continue
                    for pm in premodels:
                        res = check_transfer(N, lift, M, G, pm)
                        if res and res[0] == "FactorizationFailure":
                            hit = (N, M, G, F, pm, res)
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit:
                break
        if hit:
            break

    if not hit:
        print("no failing instance found in search space")
        return 1

    N, M, G, F, pm, (kind, pair, witness) = hit

    def names(P, mask):
        return sorted(P.mor_name(k) for k in range(len(P.mors)) if mask >> k & 1)

    out = {
        "target": {"elems": N.elems,
                   "leq": sorted([N.elems[x], N.elems[y]] for (x, y) in N.mors
                                 if x != y)},
        "source": {"elems": M.elems,
                   "leq": sorted([M.elems[x], M.elems[y]] for (x, y) in M.mors
                                 if x != y)},
        "G": {N.elems[x]: M.elems[G[x]] for x in range(len(N.elems))},
        "F": {M.elems[a]: N.elems[F[a]] for a in range(len(M.elems))},
        "premodel": {k: names(M, pm[k]) for k in ("C", "AC", "F", "AF")},
        "expected": {"kind": kind, "pair": pair,
                     "witness": N.mor_name(witness)},
    }
    root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    dest = os.path.join(root, "data", "golden", "transfer_failure.json")
    with open(dest, "w") as fh:
        json.dump(out, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"found on {len(N.elems)} elements: leq={out['target']['leq']}")
    print(f"G={out['G']}  premodel C={out['premodel']['C']} AC={out['premodel']['AC']}")
    print(f"witness={out['expected']['witness']} in pair {pair}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
