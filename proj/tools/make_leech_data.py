#!/usr/bin/env python3
"""Regenerates data/leech.gram and the data/co0_*.mat generator files.

The Leech lattice is built from the extended quadratic-residue Golay code on
the projective line over F_23 (scaled by sqrt(8)), reduced with exact LLL so
that every basis vector has norm 4. Generators of Co_0 are written in that
basis: four permutations generating M24, a sign change on an octad, and the
sextet element xi acting by (J - 2I)/2 on each tetrad with one tetrad negated.

Requires sympy. Output is deterministic.
"""
import itertools
import os
import sys
from fractions import Fraction

import sympy

INF = 23
QR = sorted({(i * i) % 23 for i in range(1, 23)})


def golay_rows():
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # 1+x^2+x^4+x^5+x^6+x^10+x^11
    rows = []
    for s in range(12):
        v = [0] * 24
        for k, c in enumerate(g):
            if c:
                v[(k + s) % 23] = 1
        v[INF] = sum(v) % 2
        rows.append(v)
    return rows


def span(rows):
    words = set()
    for mask in range(1 << len(rows)):
        v = [0] * 24
        for i, r in enumerate(rows):
            if mask >> i & 1:
                v = [a ^ b for a, b in zip(v, r)]
        words.add(tuple(v))
    return words


def inv23(x):
    return pow(x, 21, 23)


def perm(f):
    return [f(i) for i in range(24)]


def delta(i):
    if i in (INF, 0):
        return i
    if i in QR:
        return (pow(i, 3, 23) * inv23(9)) % 23
    return (9 * pow(i, 3, 23)) % 23


def hnf(rows):
    a = [list(r) for r in rows]
    r0 = 0
    for c in range(24):
        piv = [i for i in range(r0, len(a)) if a[i][c] != 0]
        while len(piv) > 1:
            piv.sort(key=lambda i: abs(a[i][c]))
            p = piv[0]
            for i in piv[1:]:
                q = a[i][c] // a[p][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[p])]
            piv = [i for i in range(r0, len(a)) if a[i][c] != 0]
        if piv:
            a[r0], a[piv[0]] = a[piv[0]], a[r0]
            r0 += 1
    return a[:r0]


def lll(b, delta_=Fraction(99, 100)):
    b = [list(r) for r in b]
    n = len(b)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gso():
        bs, nb = [], []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = Fraction(dot(b[i], bs[j])) / nb[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bs[j])]
            bs.append(v)
            nb.append(dot(v, v))
        return mu, nb

    mu, nb = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, nb = gso()
        if nb[k] >= (delta_ - mu[k][k - 1] ** 2) * nb[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, nb = gso()
            k = max(k - 1, 1)
    return b


def write_matrix(path, rows, header):
    with open(path, "w") as f:
        for line in header:
            f.write("# " + line + "\n")
        f.write(f"{len(rows)}\n")
        for r in rows:
            f.write(" ".join(f"{int(x):3d}" for x in r) + "\n")


def main(out_dir):
    rows = golay_rows()
    code = span(rows)
    gens = [[2 * t for t in r] for r in rows]
    for i in range(23):
        v = [0] * 24
        v[i], v[i + 1] = 4, -4
        gens.append(v)
    v = [0] * 24
    v[0] = v[1] = 4
    gens.append(v)
    gens.append([-3] + [1] * 23)
    basis = lll(hnf(gens))
    basis.sort(key=lambda r: sum(x * x for x in r))
    bm = sympy.Matrix(basis)
    gram = (bm * bm.T) / 8
    assert all(x.q == 1 for x in gram) and gram.det() == 1
    write_matrix(os.path.join(out_dir, "leech.gram"), gram.tolist(),
                 ["label: leech",
                  "Leech lattice, basis of norm-4 vectors (LLL-reduced),",
                  "built from the extended QR Golay code on PG(1,23)."])

    binv = bm.inv()

    def to_basis(p):
        m = (bm * p * binv).T
        assert all(x.q == 1 for x in m)
        assert m.T * gram * m == gram
        return m.tolist()

    def permmat(pm):
        p = sympy.zeros(24, 24)
        for i in range(24):
            p[i, pm[i]] = 1
        return p

    octads = [w for w in code if sum(w) == 8]
    tetrads = [[0, 1, 2, 3]]
    for o in octads:
        s = {i for i in range(24) if o[i]}
        if set(tetrads[0]) <= s:
            tetrads.append(sorted(s - set(tetrads[0])))
    octad = set(tetrads[0] + tetrads[1])
    h = (sympy.ones(4, 4) - 2 * sympy.eye(4)) / 2
    xi = sympy.zeros(24, 24)
    for ti, t in enumerate(tetrads):
        for a, b in itertools.product(range(4), range(4)):
            xi[t[a], t[b]] = h[a, b] * (-1 if ti == 0 else 1)

    gens_out = [
        ("co0_shift", permmat(perm(lambda i: i if i == INF else (i + 1) % 23)),
         "coordinate permutation x -> x + 1 on PG(1,23)"),
        ("co0_double", permmat(perm(lambda i: i if i == INF else (2 * i) % 23)),
         "coordinate permutation x -> 2x on PG(1,23)"),
        ("co0_neginv", permmat(perm(lambda i: 0 if i == INF else (INF if i == 0 else (-inv23(i)) % 23))),
         "coordinate permutation x -> -1/x on PG(1,23)"),
        ("co0_delta", permmat(perm(delta)),
         "coordinate permutation x -> x^3/9 (x square), 9x^3 (otherwise)"),
        ("co0_octad_sign", sympy.diag(*[(-1 if i in octad else 1) for i in range(24)]),
         "sign change on the octad " + " ".join(map(str, sorted(octad)))),
        ("co0_xi", xi, "sextet element (J-2I)/2 on each tetrad, first tetrad negated"),
    ]
    for name, p, desc in gens_out:
        write_matrix(os.path.join(out_dir, name + ".mat"), to_basis(p),
                     ["lattice: leech", desc])


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data"))
