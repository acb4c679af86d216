#!/usr/bin/env python3
"""Regenerates the presentation fixtures in this directory.

Every rational is written as a "p/q" or "p" string.
"""
import json
import os
from fractions import Fraction

HERE = os.path.dirname(os.path.abspath(__file__))


def zeros(n, m=None):
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def ident(n):
    a = zeros(n)
    for i in range(n):
        a[i][i] = Fraction(1)
    return a


def unit(n, i, j):
    a = zeros(n)
    a[i][j] = Fraction(1)
    return a


def add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    a = zeros(n)
    o = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                a[o + i][o + j] = Fraction(x)
        o += len(b)
    return a


def text(a):
    return [[str(x) for x in row] for row in a]


def dumps(v, indent=0):
    pad = "  " * indent
    if isinstance(v, dict):
        items = ['%s  %s: %s' % (pad, json.dumps(k), dumps(x, indent + 1)) for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list) and v and all(isinstance(x, (list, dict)) for x in v):
        items = [pad + "  " + dumps(x, indent + 1) for x in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(v)


def write(name, doc):
    with open(os.path.join(HERE, name + ".json"), "w") as f:
        f.write(dumps(doc) + "\n")


def gen(name, s, u, t_word=None):
    g = {"name": name, "s": text(s), "u": text(u)}
    if t_word is not None:
        g["t_word"] = t_word
    return g


def heisenberg(module=False):
    n = 3
    x, y, z = unit(n, 0, 1), unit(n, 1, 2), unit(n, 0, 2)
    i = ident(n)
    doc = {
        "ambient_dim": n,
        "u_basis": [text(x), text(y), text(z)],
        "t_generators": [],
        "gamma_generators": [
            gen("x", i, add(i, x)),
            gen("y", i, add(i, y)),
            gen("z", i, add(i, z)),
        ],
        "declared_rank": 3,
    }
    if module:
        # defining representation of the Lie algebra on Q^3
        doc["module"] = {"dim": 3, "R_gens": [], "r_basis": [text(x), text(y), text(z)]}
    doc["oracle"] = {
        "class": "z_ltimes_zm",
        "stable": "x",
        "base": ["y", "z"],
        "monodromy": text([[1, 0], [1, 1]]),
    }
    return doc


def affine_extension(blocks, module_dim=None):
    """Gamma = Z x|_A Z^m with A = diag(blocks), realised in the affine group
    of Q^{m+1}: T is generated by S = diag(1, A) and U is the translations."""
    a = block_diag(*blocks)
    m = len(a)
    dim = m + 1
    n = dim + 1
    b = block_diag([[1]], a)
    s = block_diag(b, [[1]])
    i = ident(n)
    u_basis = [unit(n, k, dim) for k in range(dim)]
    gens = [gen("t", s, add(i, u_basis[0]))]
    gens += [gen("a%d" % k, i, add(i, u_basis[k])) for k in range(1, dim)]
    doc = {
        "ambient_dim": n,
        "u_basis": [text(x) for x in u_basis],
        "t_generators": [text(s)],
        "gamma_generators": gens,
        "declared_rank": dim,
        "oracle": {
            "class": "z_ltimes_zm",
            "stable": "t",
            "base": ["a%d" % k for k in range(1, dim)],
            "monodromy": text(a),
        },
    }
    if module_dim is not None:
        doc["module"] = {
            "dim": dim,
            "R_gens": [text(b)],
            "r_basis": [text(zeros(dim)) for _ in range(dim)],
        }
    return doc


def torus(dim):
    n = dim + 1
    i = ident(n)
    u_basis = [unit(n, k, dim) for k in range(dim)]
    return {
        "ambient_dim": n,
        "u_basis": [text(x) for x in u_basis],
        "t_generators": [],
        "gamma_generators": [gen("e%d" % (k + 1), i, add(i, u_basis[k])) for k in range(dim)],
        "declared_rank": dim,
        "oracle": {
            "class": "z_ltimes_zm",
            "stable": "e1",
            "base": ["e%d" % (k + 1) for k in range(1, dim)],
            "monodromy": text(ident(dim - 1)),
        },
    }


def kodaira_thurston():
    # Heisenberg x Z inside 5x5 matrices (3x3 block plus a 2x2 block).
    n = 5
    x, y, z, w = unit(n, 0, 1), unit(n, 1, 2), unit(n, 0, 2), unit(n, 3, 4)
    i = ident(n)
    return {
        "ambient_dim": n,
        "u_basis": [text(x), text(y), text(z), text(w)],
        "t_generators": [],
        "gamma_generators": [
            gen("x", i, add(i, x)),
            gen("y", i, add(i, y)),
            gen("z", i, add(i, z)),
            gen("w", i, add(i, w)),
        ],
        "declared_rank": 4,
        "oracle": {
            "class": "z_ltimes_zm",
            "stable": "x",
            "base": ["y", "z", "w"],
            "monodromy": text([[1, 0, 0], [1, 1, 0], [0, 0, 1]]),
        },
    }


CAT = [[2, 1], [1, 1]]
SECOND = [[3, 2], [1, 1]]

write("heisenberg", heisenberg())
write("heisenberg_std", heisenberg(module=True))
write("sol", affine_extension([CAT]))
write("sol_std", affine_extension([CAT], module_dim=3))
write("paper_k1", affine_extension([[[1]], CAT]))
write("paper_k2", affine_extension([[[1]], CAT, SECOND]))
write("torus4", torus(4))
write("kodaira_thurston", kodaira_thurston())
