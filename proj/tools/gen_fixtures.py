#!/usr/bin/env python3
"""Writes the JSON fixtures under tests/fixtures from explicit matrices.

Structure constants are computed here with plain fractions, independently
of the library, so the fixtures double as an oracle.
"""

import json
import sys
from fractions import Fraction
from pathlib import Path


def scalar(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def unit_matrix(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def bracket_entries(basis, coords, sign=None):
    """[x_a, x_b] in coordinates, as sparse (row, col, value) entries.

    sign(a, b) multiplies the second product (super commutators)."""
    d = len(basis)
    out = []
    for a in range(d):
        for b in range(d):
            s = 1 if sign is None else sign(a, b)
            ab = matmul(basis[a], basis[b])
            ba = matmul(basis[b], basis[a])
            n = len(ab)
            c = [[ab[i][j] - s * ba[i][j] for j in range(n)] for i in range(n)]
            for k, v in enumerate(coords(c)):
                if v != 0:
                    out.append([k, a * d + b, scalar(v)])
    return sorted(out, key=lambda e: (e[1], e[0]))


def sl2():
    e, h, f = unit_matrix(2, 0, 1), [[1, 0], [0, -1]], unit_matrix(2, 1, 0)
    return [e, h, f], lambda c: [c[0][1], c[0][0], c[1][0]]


def sl3():
    basis, offdiag = [], []
    for i in range(3):
        for j in range(3):
            if i != j:
                basis.append(unit_matrix(3, i, j))
                offdiag.append((i, j))
    basis.append([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    basis.append([[0, 0, 0], [0, 1, 0], [0, 0, -1]])

    def coords(c):
        return [c[i][j] for i, j in offdiag] + [c[0][0], c[0][0] + c[1][1]]

    return basis, coords


def gl(n):
    basis = [unit_matrix(n, i, j) for i in range(n) for j in range(n)]
    return basis, lambda c: [c[i][j] for i in range(n) for j in range(n)]


def shift(entries, offset, d_small, d_big):
    """Moves bracket entries of a summand into a direct sum of dimension d_big."""
    out = []
    for row, col, v in entries:
        a, b = divmod(col, d_small)
        out.append([row + offset, (a + offset) * d_big + b + offset, v])
    return out


def trivial_object(n):
    return {"grades": [[] for _ in range(n)]}


def lie_workspace(name, dim, entries, extra=None):
    ws = {
        "objects": {"L": trivial_object(dim), "LL": {"tensor": ["L", "L"]}},
        "morphisms": {"br": {"src": "LL", "dst": "L", "entries": entries}},
        "lie_algebras": {name: {"object": "L", "bracket": "br"}},
    }
    if extra:
        extra(ws)
    return ws


def matrix_algebra_workspace():
    # A_U for U = k^2, slot a*2 + b = E_ab, with the unit, counit (trace) and
    # the coproduct E_ab -> sum_c E_ac (x) E_cb.
    n = 2
    d = n * n
    product, coproduct = [], []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        product.append([a * n + e, (a * n + b) * d + c * n + e, "1"])
            for c in range(n):
                coproduct.append([(a * n + c) * d + c * n + b, a * n + b, "1"])
    basis, coords = gl(n)
    return {
        "objects": {
            "one": trivial_object(1),
            "U": trivial_object(n),
            "A": {"tensor": ["U", "Ud"]},
            "Ud": {"dual": "U"},
            "AA": {"tensor": ["A", "A"]},
        },
        "morphisms": {
            "m": {"src": "AA", "dst": "A", "entries": sorted(product, key=lambda e: (e[1], e[0]))},
            "eta": {"src": "one", "dst": "A", "entries": [[a * n + a, 0, "1"] for a in range(n)]},
            "delta": {"src": "A", "dst": "AA", "entries": sorted(coproduct, key=lambda e: (e[1], e[0]))},
            "eps": {"src": "A", "dst": "one", "entries": [[0, a * n + a, "1"] for a in range(n)]},
            "br": {"src": "AA", "dst": "A", "entries": bracket_entries(basis, coords)},
        },
        "algebras": {
            "A": {"kind": "frobenius", "object": "A", "product": "m", "unit": "eta",
                  "coproduct": "delta", "counit": "eps"}
        },
        "lie_algebras": {"gl2": {"object": "A", "bracket": "br"}},
    }


def gl11_workspace():
    # gl(1|1) with E00, E01, E10, E11; E01 and E10 are odd.
    basis, coords = gl(2)
    parity = [0, 1, 1, 0]
    entries = bracket_entries(basis, coords, lambda a, b: -1 if parity[a] and parity[b] else 1)
    return {
        "context": {"cyclic_orders": [2], "bicharacter_exponents": [[1]], "ribbon_signs": [1]},
        "objects": {"L": {"grades": [[p] for p in parity]}, "LL": {"tensor": ["L", "L"]}},
        "morphisms": {"br": {"src": "LL", "dst": "L", "entries": entries}},
        "lie_algebras": {"gl11": {"object": "L", "bracket": "br"}},
    }


def add_abelian(ws):
    ws["objects"]["K"] = trivial_object(2)
    ws["objects"]["KK"] = {"tensor": ["K", "K"]}
    ws["morphisms"]["zero"] = {"src": "KK", "dst": "K", "entries": []}
    ws["lie_algebras"]["ab"] = {"object": "K", "bracket": "zero"}


def fixtures():
    b2, c2 = sl2()
    sl2_entries = bracket_entries(b2, c2)
    b3, c3 = sl3()
    sl3_entries = bracket_entries(b3, c3)
    summed = shift(sl2_entries, 0, 3, 11) + shift(sl3_entries, 3, 8, 11)
    perturbed = sl2_entries + [[0, 0 * 3 + 2, "1"], [0, 2 * 3 + 0, "-1"]]
    perturbed = merge(perturbed)
    return {
        "empty.json": {},
        "minimal.json": {"objects": {"X": trivial_object(1)}},
        "sl2.json": lie_workspace("sl2", 3, sl2_entries, add_abelian),
        "sl2_sl3.json": lie_workspace("sl2_sl3", 11, sorted(summed, key=lambda e: (e[1], e[0]))),
        "perturbed_jacobi.json": lie_workspace("bad", 3, perturbed),
        "gl2.json": matrix_algebra_workspace(),
        "gl11.json": gl11_workspace(),
    }


def merge(entries):
    acc = {}
    for row, col, v in entries:
        acc[(row, col)] = acc.get((row, col), Fraction(0)) + Fraction(v)
    return [[r, c, scalar(v)] for (r, c), v in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0])) if v != 0]


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    for name, doc in fixtures().items():
        (out / name).write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
