"""Independent brute-force oracles.  Nothing here imports cpog internals
beyond the plain group descriptions."""

import itertools

import sympy


def abelian_elements(factors):
    return list(itertools.product(*(range(m) for m in factors)))


def dihedral_elements(n):
    return [(f, r) for f in (0, 1) for r in range(n)]


def abelian_op(factors):
    return lambda x, y: tuple((a + b) % m for a, b, m in zip(x, y, factors))


def dihedral_op(n):
    # (f^a r^b)(f^c r^d) = f^(a+c) r^((-1)^c b + d)
    def op(x, y):
        a, b = x
        c, d = y
        return ((a + c) % 2, ((-b if c else b) + d) % n)
    return op


def order_by_iteration(g, op, identity):
    x, k = g, 1
    while x != identity:
        x, k = op(x, g), k + 1
    return k


def group_table(kind, param):
    """(elements, op, identity) for ('abelian', factors) or ('dihedral', n)."""
    if kind == "abelian":
        els = abelian_elements(param)
        return els, abelian_op(param), tuple(0 for _ in param)
    return dihedral_elements(param), dihedral_op(param), (0, 0)


def orders(kind, param):
    els, op, e = group_table(kind, param)
    return {g: order_by_iteration(g, op, e) for g in els}


def degrees(kind, param):
    """element -> degree in the co-prime order graph, pairwise brute force."""
    o = orders(kind, param)
    els = list(o)
    out = {}
    for x in els:
        d = 0
        for y in els:
            if x != y:
                g = sympy.gcd(o[x], o[y])
                d += g == 1 or sympy.isprime(g)
        out[x] = d
    return out


def cofactor_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total
