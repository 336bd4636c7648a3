#!/usr/bin/env python3
"""Brute-force oracle used to derive frozen expected values for the C++ tests.

Everything here is computed from first principles: the order is the
reflexive-transitive closure of the cover rewrite DU^kD -> U^kDD applied on
the full set of Dyck words, never the below-and-refines characterisation.
"""
import itertools
import sys
from fractions import Fraction
from functools import lru_cache


def dyck_words(size):
    out = []

    def rec(prefix, ups, downs):
        if ups == size and downs == size:
            out.append(prefix)
            return
        if ups < size:
            rec(prefix + "U", ups + 1, downs)
        if downs < ups:
            rec(prefix + "D", ups, downs + 1)

    rec("", 0, 0)
    return out


def runs(word, ch):
    return [len(r) for r in word.replace("U" if ch == "D" else "D", " ").split()]


def family(size, m, kind):
    words = dyck_words(size * m)
    if kind == "plain":
        return words
    if kind == "mdyck":
        return [w for w in words if all(r % m == 0 for r in runs(w, "U"))]
    return [w for w in words if all(r % m == 0 for r in runs(w, "D"))]


def raw_covers(word):
    res = []
    i = 0
    n = len(word)
    while i < n:
        if word[i] == "D" and i + 1 < n and word[i + 1] == "U":
            j = i + 1
            while j < n and word[j] == "U":
                j += 1
            k = j - (i + 1)
            res.append(word[:i] + "U" * k + "DD" + word[j + 1:])
        i += 1
    return res


def closure_order(words_all):
    """upset[w] = set of words >= w in the full poset D_N."""
    idx = {w: i for i, w in enumerate(words_all)}
    up = {}
    # process from top (more area) to bottom: sort by area descending
    def area(w):
        h, a = 0, 0
        for c in w:
            h += 1 if c == "U" else -1
            a += h
        return a
    for w in sorted(words_all, key=area, reverse=True):
        s = {w}
        for c in raw_covers(w):
            s |= up[c]
        up[w] = s
    return up


def intervals(size, m, kind):
    fam = family(size, m, kind)
    up = closure_order(dyck_words(size * m))
    fs = set(fam)
    return [(p, q) for p in fam for q in sorted(up[p]) if q in fs]


def main():
    print("interval counts plain:", [len(intervals(n, 1, "plain")) for n in range(1, 7)])
    print("mdyck m=2:", [len(intervals(n, 2, "mdyck")) for n in range(1, 5)])
    print("mirrored m=2:", [len(intervals(n, 2, "mirrored")) for n in range(1, 5)])
    print("covers UDUD:", raw_covers("UDUD"))
    # meet in D4
    up = closure_order(dyck_words(4))
    fam = dyck_words(4)
    P, Q = "UUDDUUDD", "UUDUDDUD"
    lower = [w for w in fam if P in up[w] and Q in up[w]]
    maxl = [w for w in lower if not any(w2 != w and w2 in up[w] for w2 in lower)]
    print("meet D4:", maxl)
    upper = [w for w in fam if w in up[P] and w in up[Q]]
    minu = [w for w in upper if not any(w2 != w and w in up[w2] for w2 in upper)]
    print("join D4:", minu)
    # mirrored D'_{2,3}: minimal elements and NoMeet pairs
    fam = family(3, 2, "mirrored")
    up6 = closure_order(dyck_words(6))
    fs = set(fam)
    mins = [w for w in fam if not any(w2 != w and w in up6[w2] for w2 in fam)]
    print("D'23 size", len(fam), "minimal:", sorted(mins))
    nomeet = []
    for a, b in itertools.combinations(fam, 2):
        lower = [w for w in fam if a in up6[w] and b in up6[w]]
        maxl = [w for w in lower if not any(w2 != w and w2 in up6[w] for w2 in lower)]
        if len(maxl) != 1:
            nomeet.append((a, b, len(lower)))
    print("D'23 pairs without meet:", len(nomeet), "first:", nomeet[:3])
    # weighted walks
    print("weighted m=1:", [weighted(1, n) for n in range(1, 6)])
    print("weighted m=2:", [weighted(2, n) for n in range(1, 5)])
    print("S' m=2 n=2 table:", sprime_table(2, 2))
    print("S m=1 n=3 excursions:", s_table(1, 3).get((0, 0)))
    # final-peak deletion chain on the Fig. 2 pair
    print("walk fig2:", fig2_walk())
    # parking class reps for m=2, n=3
    cnt = 0
    for w in itertools.product(range(1, 6), repeat=3):
        if avoids(w) and all(x <= i * 2 + 1 for i, x in enumerate(sorted(w))):
            cnt += 1
    print("2-parking reps n=3:", cnt)


def avoids(w):
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if w[i] <= w[k] < w[j]:
                    return False
    return True


def weighted(m, n):
    # Laurent expansion of (1+u)^m (1+v) (1+u+v) / (uv) by brute force
    steps = {}
    for a in range(m + 1):
        from math import comb
        for b in range(2):
            for (c, d) in ((0, 0), (1, 0), (0, 1)):
                key = (a + c - 1, b + d - 1)
                steps[key] = steps.get(key, 0) + comb(m, a)
    cur = {(0, 0): 1}
    for _ in range(n - 1):
        nxt = {}
        for (i, j), c in cur.items():
            for (dx, dy), mult in steps.items():
                k, l = i + dx, j + dy
                if k >= 0 and l >= 0:
                    nxt[(k, l)] = nxt.get((k, l), 0) + c * mult
        cur = nxt
    return cur.get((0, 0), 0)


def sprime_table(m, nsteps):
    cur = {(0, 0): 1}
    for _ in range(nsteps):
        nxt = {}
        for (i, j), c in cur.items():
            for k in range(0, i + m + 1):
                for l in range(0, j + 2):
                    dx, dy = k - i, l - j
                    if (dx == m and dy <= 0) or (dx < m and dy <= 1):
                        nxt[(k, l)] = nxt.get((k, l), 0) + c
        cur = nxt
    return sum(cur.values()), cur.get((0, 0), 0)


def s_table(m, nsteps):
    cur = {(0, 0): 1}
    for _ in range(nsteps):
        nxt = {}
        for (i, j), c in cur.items():
            for k in range(0, i + m + 1):
                for l in range(0, i + j + m + 1):
                    dx, dy = k - i, l - j
                    if (dx, dy) == (m, 0) or (dx < m and dx + dy <= m):
                        nxt[(k, l)] = nxt.get((k, l), 0) + c
        cur = nxt
    return cur


def final_descent(w):
    return len(w) - len(w.rstrip("D"))


def delete_final_peak(w, m):
    p = w.rfind("U")
    return w[:p - m + 1] + w[p + m + 1:]


def fig2_walk():
    P, Q = "UUDUUDUUDDDD", "UUDUUUUDDDDD"
    verts = []
    while True:
        a, b = final_descent(P), final_descent(Q)
        verts.append((a - 1, b - a))
        if len(P) == 2:
            break
        P, Q = delete_final_peak(P, 1), delete_final_peak(Q, 1)
    verts.reverse()
    return verts


if __name__ == "__main__":
    main()
