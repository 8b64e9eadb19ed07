#!/usr/bin/env python3
"""Regenerates the bundled group catalog under catalog/.

Every group is built from an explicit construction (affine maps, projective
lines, coset actions, classical permutation generators) and its order is
checked with sympy before the JSON file is written. The C++ loader re-checks
orders, transitivity and primitivity when the files are read.

    python3 tools/catalog/make_catalog.py [--out catalog]
"""

import argparse
import itertools
import json
import pathlib

from sympy.combinatorics import Permutation, PermutationGroup


# ---------------------------------------------------------------------------
# permutation helpers (0-based image tuples)

def compose(p, q):
    """p then q."""
    return tuple(q[x] for x in p)


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def identity(n):
    return tuple(range(n))


def cycles_text(p):
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s] or p[s] == s:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = p[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def from_cycles(n, cycles):
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def closure(gens):
    n = len(gens[0])
    elems = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = compose(e, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return elems


def sympy_order(gens):
    return PermutationGroup([Permutation(list(g)) for g in gens]).order()


# ---------------------------------------------------------------------------
# finite fields GF(p^k), elements encoded as integers in base p

class GF:
    def __init__(self, p, k, modulus):
        # modulus: coefficients of a monic irreducible polynomial, low degree first
        self.p, self.k, self.q = p, k, p ** k
        self.mod = modulus
        self._mul = {}
        for a in range(self.q):
            for b in range(self.q):
                self._mul[a, b] = self._slow_mul(a, b)
        self.prim = next(a for a in range(2, self.q) if self.order(a) == self.q - 1) \
            if self.q > 2 else 1

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def number(self, ds):
        return sum(d * self.p ** i for i, d in enumerate(ds))

    def add(self, a, b):
        return self.number([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.number([(-x) % self.p for x in self.digits(a)])

    def _slow_mul(self, a, b):
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % self.p
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i in range(self.k + 1):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * self.mod[i]) % self.p
        return self.number(prod[: self.k])

    def mul(self, a, b):
        return self._mul[a, b]

    def inv(self, a):
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def order(self, a):
        x, e = a, 1
        while x != 1:
            x, e = self.mul(x, a), e + 1
        return e


FIELDS = {
    2: GF(2, 1, [0, 1]),
    3: GF(3, 1, [0, 1]),
    4: GF(2, 2, [1, 1, 1]),
    5: GF(5, 1, [0, 1]),
    7: GF(7, 1, [0, 1]),
    8: GF(2, 3, [1, 1, 0, 1]),
    9: GF(3, 2, [1, 0, 1]),
    11: GF(11, 1, [0, 1]),
}


def projective_map(F, a, b, c, d, frob=0):
    """z -> (a z^(p^frob) + b) / (c z^(p^frob) + d) on {0..q-1} plus infinity q."""
    q = F.q
    img = []
    for z in range(q + 1):
        if z < q:
            zz = z
            for _ in range(frob):
                zz = F.pow(zz, F.p)
            num = F.add(F.mul(a, zz), b)
            den = F.add(F.mul(c, zz), d)
        else:
            num, den = a, c
        img.append(q if den == 0 else F.mul(num, F.inv(den)))
    return tuple(img)


def psl2(q, kind="psl"):
    F = FIELDS[q]
    w = F.prim
    gens = [projective_map(F, 1, 1, 0, 1),                     # z + 1
            projective_map(F, F.mul(w, w), 0, 0, 1),           # w^2 z
            projective_map(F, 0, F.neg(1), 1, 0)]              # -1/z
    if kind in ("pgl", "pgaml"):
        gens.append(projective_map(F, w, 0, 0, 1))
    if kind in ("psigl", "pgaml"):
        gens.append(projective_map(F, 1, 0, 0, 1, frob=1))
    if kind == "m10":
        gens.append(projective_map(F, w, 0, 0, 1, frob=1))
    return gens


def affine_group(F_or_p, dim, matrices, translations=True):
    """Affine group on F_p^dim generated by translations and linear maps."""
    p = F_or_p
    pts = list(itertools.product(range(p), repeat=dim))
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    if translations:
        for k in range(dim):
            e = tuple(1 if i == k else 0 for i in range(dim))
            gens.append(tuple(index[tuple((v[i] + e[i]) % p for i in range(dim))] for v in pts))
    for m in matrices:
        gens.append(tuple(index[tuple(sum(m[r][c] * v[c] for c in range(dim)) % p
                                      for r in range(dim))] for v in pts))
    return gens


def field_affine(q, mults, frob=False):
    """x -> a x + b over GF(q), multipliers generated by `mults`."""
    F = FIELDS[q]
    gens = [tuple(F.add(x, 1) for x in range(q))]
    if F.k > 1:
        gens = [tuple(F.add(x, F.number([1 if i == k else 0 for i in range(F.k)]))
                      for x in range(q)) for k in range(F.k)]
    for a in mults:
        gens.append(tuple(F.mul(a, x) for x in range(q)))
    if frob:
        gens.append(tuple(F.pow(x, F.p) for x in range(q)))
    return gens


def symmetric(n):
    if n == 2:
        return [from_cycles(2, [[1, 2]])]
    return [from_cycles(n, [[1, 2]]), from_cycles(n, [list(range(1, n + 1))])]


def alternating(n):
    if n == 3:
        return [from_cycles(3, [[1, 2, 3]])]
    long = list(range(1, n + 1)) if n % 2 == 1 else list(range(2, n + 1))
    return [from_cycles(n, [[1, 2, 3]]), from_cycles(n, [long])]


def cyclic(n):
    return [from_cycles(n, [list(range(1, n + 1))])]


def dihedral(n):
    refl = [[i, n + 1 - i] for i in range(1, n // 2 + 1) if i != n + 1 - i]
    return [from_cycles(n, [list(range(1, n + 1))]), from_cycles(n, refl)]


def on_pairs(gens, n):
    pairs = list(itertools.combinations(range(n), 2))
    index = {pr: i for i, pr in enumerate(pairs)}
    return [tuple(index[tuple(sorted((g[a], g[b])))] for a, b in pairs) for g in gens]


def coset_action(elems, gens, sub):
    """Right action of the group on right cosets of `sub` (sets of elements)."""
    cosets = []
    label = {}
    for x in sorted(elems):
        if x in label:
            continue
        c = frozenset(compose(h, x) for h in sub)
        for y in c:
            label[y] = len(cosets)
        cosets.append(c)
    reps = [min(c) for c in cosets]
    return [tuple(label[compose(r, g)] for r in reps) for g in gens]


def find_subgroup_of_order(elems, base_gens, order):
    """First subgroup <base_gens, x> of the given order, x in sorted element order."""
    for x in sorted(elems):
        gens = list(base_gens) + [x]
        if sympy_order(gens) == order:
            return closure(gens)
    raise RuntimeError("no subgroup of order %d found" % order)


def gl2_3_subgroups():
    mats = [((a, b), (c, d)) for a, b, c, d in itertools.product(range(3), repeat=4)
            if (a * d - b * c) % 3]

    def mmul(x, y):
        return tuple(tuple(sum(x[r][k] * y[k][c] for k in range(2)) % 3 for c in range(2))
                     for r in range(2))

    def gen(gs):
        ident = ((1, 0), (0, 1))
        s = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gs:
                    h = mmul(e, g)
                    if h not in s:
                        s.add(h)
                        nxt.append(h)
            frontier = nxt
        return s

    def order(m):
        ident = ((1, 0), (0, 1))
        x, e = m, 1
        while x != ident:
            x, e = mmul(x, m), e + 1
        return e

    lines = [(1, 0), (0, 1), (1, 1), (1, 2)]

    def irreducible(s):
        for v in lines:
            span = {tuple((k * v[i]) % 3 for i in range(2)) for k in range(3)}
            if all(tuple(sum(m[r][c] * v[c] for c in range(2)) % 3 for r in range(2)) in span
                   for m in s):
                return False
        return True

    def signature(s):
        return tuple(sorted(order(m) for m in s))

    wanted = {
        "C4": (4, lambda s: max(order(m) for m in s) == 4),
        "Q8": (8, lambda s: signature(s).count(4) == 6),
        "D8": (8, lambda s: signature(s).count(2) == 5),
        "C8": (8, lambda s: max(order(m) for m in s) == 8),
        "SD16": (16, lambda s: True),
        "SL(2,3)": (24, lambda s: all((m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 3 == 1 for m in s)),
        "GL(2,3)": (48, lambda s: True),
    }
    found = {}
    for x in mats:
        for y in mats:
            s = gen([x, y])
            for name, (size, pred) in wanted.items():
                if name not in found and len(s) == size and irreducible(s) and pred(s):
                    found[name] = [x, y]
    return found


# ---------------------------------------------------------------------------

def primitive_groups():
    groups = []

    def add(degree, name, gens, order):
        groups.append({"name": name, "degree": degree, "gens": gens, "order": order})

    add(2, "S2", symmetric(2), 2)
    add(3, "A3", alternating(3), 3)
    add(3, "S3", symmetric(3), 6)
    add(4, "A4", alternating(4), 12)
    add(4, "S4", symmetric(4), 24)

    add(5, "C5", cyclic(5), 5)
    add(5, "D10", field_affine(5, [4]), 10)
    add(5, "AGL(1,5)", field_affine(5, [2]), 20)
    add(5, "A5", alternating(5), 60)
    add(5, "S5", symmetric(5), 120)

    add(6, "PSL(2,5)", psl2(5), 60)
    add(6, "PGL(2,5)", psl2(5, "pgl"), 120)
    add(6, "A6", alternating(6), 360)
    add(6, "S6", symmetric(6), 720)

    add(7, "C7", cyclic(7), 7)
    add(7, "D14", field_affine(7, [6]), 14)
    add(7, "F21", field_affine(7, [2]), 21)
    add(7, "AGL(1,7)", field_affine(7, [3]), 42)
    gl32 = [((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((0, 0, 1), (1, 0, 0), (0, 1, 0))]
    pts7 = [v for v in itertools.product(range(2), repeat=3) if any(v)]
    idx7 = {v: i for i, v in enumerate(pts7)}
    add(7, "PSL(3,2)", [tuple(idx7[tuple(sum(m[r][c] * v[c] for c in range(3)) % 2
                                             for r in range(3))] for v in pts7) for m in gl32], 168)
    add(7, "A7", alternating(7), 2520)
    add(7, "S7", symmetric(7), 5040)

    F8 = FIELDS[8]
    add(8, "AGL(1,8)", field_affine(8, [F8.prim]), 56)
    add(8, "AGammaL(1,8)", field_affine(8, [F8.prim], frob=True), 168)
    add(8, "AGL(3,2)", affine_group(2, 3, gl32), 1344)
    add(8, "PSL(2,7)", psl2(7), 168)
    add(8, "PGL(2,7)", psl2(7, "pgl"), 336)
    add(8, "A8", alternating(8), 20160)
    add(8, "S8", symmetric(8), 40320)

    sub = gl2_3_subgroups()
    add(9, "3^2:4", affine_group(3, 2, sub["C4"]), 36)
    add(9, "3^2:D8", affine_group(3, 2, sub["D8"]), 72)
    add(9, "AGL(1,9)", affine_group(3, 2, sub["C8"]), 72)
    add(9, "3^2:Q8", affine_group(3, 2, sub["Q8"]), 72)
    add(9, "AGammaL(1,9)", affine_group(3, 2, sub["SD16"]), 144)
    add(9, "ASL(2,3)", affine_group(3, 2, sub["SL(2,3)"]), 216)
    add(9, "AGL(2,3)", affine_group(3, 2, sub["GL(2,3)"]), 432)
    add(9, "PSL(2,8)", psl2(8), 504)
    add(9, "PGammaL(2,8)", psl2(8, "psigl"), 1512)
    add(9, "A9", alternating(9), 181440)
    add(9, "S9", symmetric(9), 362880)

    add(10, "A5 on pairs", on_pairs(alternating(5), 5), 60)
    add(10, "S5 on pairs", on_pairs(symmetric(5), 5), 120)
    add(10, "PSL(2,9)", psl2(9), 360)
    add(10, "PSigmaL(2,9)", psl2(9, "psigl"), 720)
    add(10, "PGL(2,9)", psl2(9, "pgl"), 720)
    add(10, "M10", psl2(9, "m10"), 720)
    add(10, "PGammaL(2,9)", psl2(9, "pgaml"), 1440)
    add(10, "A10", alternating(10), 1814400)
    add(10, "S10", symmetric(10), 3628800)

    add(11, "C11", cyclic(11), 11)
    add(11, "D22", field_affine(11, [10]), 22)
    add(11, "11:5", field_affine(11, [3]), 55)
    add(11, "AGL(1,11)", field_affine(11, [2]), 110)
    l211_12 = psl2(11)
    l211_elems = closure(l211_12)
    a5 = None
    for a in sorted(l211_elems):
        if a5:
            break
        if compose(a, a) != identity(12) or a == identity(12):
            continue
        for b in sorted(l211_elems):
            if compose(b, compose(b, b)) != identity(12) or b == identity(12):
                continue
            s = closure([a, b])
            if len(s) == 60:
                a5 = s
                break
    add(11, "PSL(2,11)", coset_action(l211_elems, l211_12, a5), 660)
    m11 = [from_cycles(11, [list(range(1, 12))]), from_cycles(11, [[3, 7, 11, 8], [4, 10, 5, 6]])]
    add(11, "M11", m11, 7920)
    add(11, "A11", alternating(11), 19958400)
    add(11, "S11", symmetric(11), 39916800)

    m11_elems = closure(m11)
    l2 = find_subgroup_of_order(m11_elems, [m11[0]], 660)
    add(12, "M11", coset_action(m11_elems, m11, l2), 7920)
    m12 = [from_cycles(12, [list(range(1, 12))]), from_cycles(12, [[3, 7, 11, 8], [4, 10, 5, 6]]),
           from_cycles(12, [[1, 12], [2, 11], [3, 6], [4, 8], [5, 9], [7, 10]])]
    add(12, "M12", m12, 95040)
    add(12, "PSL(2,11)", psl2(11), 660)
    add(12, "PGL(2,11)", psl2(11, "pgl"), 1320)
    add(12, "A12", alternating(12), 239500800)
    add(12, "S12", symmetric(12), 479001600)
    return groups


def quaternion_regular():
    # elements (sign, unit) with unit in 1, i, j, k; right regular action
    units = ["1", "i", "j", "k"]
    table = {("1", u): (1, u) for u in units}
    table.update({(u, "1"): (1, u) for u in units})
    table.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                  ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {e: n for n, e in enumerate(elems)}

    def mul(a, b):
        s, u = table[a[1], b[1]]
        return (a[0] * b[0] * s, u)

    return [tuple(index[mul(e, g)] for e in elems) for g in [(1, "i"), (1, "j")]]


def linear_on_nonzero(p, dim, matrices):
    pts = [v for v in itertools.product(range(p), repeat=dim) if any(v)]
    index = {v: i for i, v in enumerate(pts)}
    return [tuple(index[tuple(sum(m[r][c] * v[c] for c in range(dim)) % p for r in range(dim))]
                  for v in pts) for m in matrices]


def small_groups():
    """Groups in actions outside the primitive catalog (regular, intransitive,
    imprimitive)."""
    groups = []

    def add(name, degree, gens, order):
        groups.append({"name": name, "degree": degree, "gens": gens, "order": order})

    def cyc(degree, *cycles):
        return from_cycles(degree, list(cycles))

    for n in (4, 6, 8, 9, 10, 12):
        add("C%d" % n, n, cyclic(n), n)
    add("V4", 4, [cyc(4, [1, 2], [3, 4]), cyc(4, [1, 3], [2, 4])], 4)
    add("D8", 4, dihedral(4), 8)
    add("Q8", 8, quaternion_regular(), 8)
    add("C2xC4", 6, [cyc(6, [1, 2]), cyc(6, [3, 4, 5, 6])], 8)
    add("C3xC3", 6, [cyc(6, [1, 2, 3]), cyc(6, [4, 5, 6])], 9)
    add("D12", 6, dihedral(6), 12)
    add("S3 regular", 6, [cyc(6, [1, 2], [3, 6], [4, 5]), cyc(6, [1, 3, 5], [2, 4, 6])], 6)
    add("S4 on pairs", 6, on_pairs(symmetric(4), 4), 24)
    add("SL(2,3)", 8, linear_on_nonzero(3, 2, [((1, 1), (0, 1)), ((0, 2), (1, 0))]), 24)
    add("A4xC2", 6, [cyc(6, [1, 2, 3]), cyc(6, [1, 2], [3, 4]), cyc(6, [5, 6])], 24)
    add("S3xS3", 6, [cyc(6, [1, 2]), cyc(6, [1, 2, 3]), cyc(6, [4, 5]), cyc(6, [4, 5, 6])], 36)
    add("S3xA5", 8, [cyc(8, [1, 2]), cyc(8, [1, 2, 3]), cyc(8, [4, 5, 6]), cyc(8, [6, 7, 8])], 360)
    return groups


def sp6_2():
    vecs = list(range(1, 64))

    def form(x, y):
        return bin((x & 7) & (y >> 3) ^ (x >> 3) & (y & 7)).count("1") % 2

    def transvection(v):
        return tuple((x ^ v if form(x, v) else x) - 1 for x in vecs)

    gens = []
    order = 1
    for v in vecs:
        t = transvection(v)
        trial = sympy_order(gens + [t])
        if trial > order:
            gens.append(t)
            order = trial
        if order == 1451520:
            break
    return {"name": "Sp(6,2)", "degree": 63, "gens": gens, "order": order}


def write(group, path):
    got = sympy_order(group["gens"])
    if got != group["order"]:
        raise RuntimeError("%s: expected order %d, computed %d" % (group["name"], group["order"], got))
    doc = {
        "name": group["name"],
        "degree": group["degree"],
        "order": str(group["order"]),
        "generators": [cycles_text(g) for g in group["gens"]],
    }
    path.write_text(json.dumps(doc, indent=2) + "\n")


def slug(name):
    keep = []
    for ch in name:
        if ch.isalnum():
            keep.append(ch)
        elif ch in "(),: ^":
            keep.append("_")
    s = "".join(keep)
    while "__" in s:
        s = s.replace("__", "_")
    return s.strip("_")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[2] / "catalog"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    (out / "small").mkdir(parents=True, exist_ok=True)
    (out / "primitive").mkdir(parents=True, exist_ok=True)

    counters = {}
    for g in primitive_groups():
        counters[g["degree"]] = counters.get(g["degree"], 0) + 1
        fname = "deg%02d_%02d_%s.json" % (g["degree"], counters[g["degree"]], slug(g["name"]))
        write(g, out / "primitive" / fname)
    for i, g in enumerate(small_groups()):
        write(g, out / "small" / ("%02d_%s.json" % (i, slug(g["name"]))))
    write(sp6_2(), out / "sp6_2.json")


if __name__ == "__main__":
    main()
