#!/usr/bin/env python3
"""Independent derivations of the constants frozen into the C++ tests.

Everything here is computed with sympy from first principles (definitions of
the weight functions, transition matrices, and the joining conditions), not
with the library under test.  Run and diff the output when updating tests.
"""

from fractions import Fraction
from itertools import product

import sympy as sp


def cycle_weights(m):
    a = {}
    for i in range(m):
        j = (i + 1) % m
        a[(i, j)] = Fraction(1, 2 * m)
        a[(j, i)] = Fraction(1, 2 * m)
    return m, a


def path_weights(n):
    a = {}
    for i in range(n - 1):
        a[(i, i + 1)] = Fraction(1, 2 * (n - 1))
        a[(i + 1, i)] = Fraction(1, 2 * (n - 1))
    return n, a


def complete_bipartite_weights(k, l):
    a = {}
    for i in range(k):
        for j in range(l):
            a[(i, k + j)] = Fraction(1, 2 * k * l)
            a[(k + j, i)] = Fraction(1, 2 * k * l)
    return k + l, a


def degree(n, a):
    p = [Fraction(0)] * n
    for (i, j), w in a.items():
        p[i] += w
    return p


def transition(n, a):
    p = degree(n, a)
    return sp.Matrix(n, n, lambda i, j: sp.Rational(a.get((i, j), Fraction(0))) / sp.Rational(p[i]))


def charpoly_coeffs(M):
    x = sp.symbols("x")
    cp = M.charpoly(x).as_expr()
    poly = sp.Poly(cp, x)
    return poly.all_coeffs()


def main():
    x = sp.symbols("x")

    print("== characteristic polynomials (coefficients, descending degree) ==")
    for m in range(3, 9):
        n, a = cycle_weights(m)
        print(f"C_{m}: {charpoly_coeffs(transition(n, a))}")
    for k in range(2, 9):
        n, a = path_weights(k)
        print(f"P_{k}: {charpoly_coeffs(transition(n, a))}")

    print("\n== rational eigenvalues with multiplicity ==")
    for name, (n, a) in [("C_3", cycle_weights(3)), ("C_4", cycle_weights(4)),
                         ("C_6", cycle_weights(6)), ("P_2", path_weights(2)),
                         ("P_3", path_weights(3)), ("P_5", path_weights(5))]:
        ev = transition(n, a).eigenvals()
        rat = {str(k): v for k, v in ev.items() if k.is_rational}
        print(f"{name}: {rat}")

    print("\n== polynomial gcds ==")
    def cp(spec):
        n, a = spec
        return sp.Poly(transition(n, a).charpoly(x).as_expr(), x)
    g34 = sp.gcd(cp(cycle_weights(3)), cp(cycle_weights(4)))
    g36 = sp.gcd(cp(cycle_weights(3)), cp(cycle_weights(6)))
    print(f"gcd(C_3, C_4) = {g34.as_expr()}")
    print(f"gcd(C_3, C_6) = {g36.as_expr()}  coeffs {g36.all_coeffs()}")

    print("\n== eigenpair for the perturbation example (lambda = 0) ==")
    nP, aP = path_weights(3)
    nC, aC = cycle_weights(4)
    P = transition(nP, aP)
    Q = transition(nC, aC)
    xv = sp.Matrix([1, 0, -1])
    yv = sp.Matrix([[1, 0, -1, 0]])
    print(f"P_3: P^T x = {(P.T * xv).T}  (expect zero)")
    print(f"C_4: y^T Q = {yv * Q}  (expect zero)")

    # Joining feasibility straight from the definition: variables gamma(s,t)
    # over ordered support pairs of alpha (x) beta, equations are symmetry,
    # normalization, degree coupling, and transition coupling.
    def joining_solution_space(gspec, hspec):
        (mg, a), (mh, b) = gspec, hspec
        p, q = degree(mg, a), degree(mh, b)
        keys = [((u, v), (up, vp))
                for (u, up) in a for (v, vp) in b]
        keys.sort()
        var = {k: sp.Symbol(f"g{idx}") for idx, k in enumerate(keys)}
        eqs = []
        for (s, t) in keys:
            if (t, s) in var and s < t:
                eqs.append(var[(s, t)] - var[(t, s)])
        # ordered-pair sum; a product self-loop key (s,s) appears once in keys
        eqs.append(sum(var[k] for k in keys) - 1)
        r = {}
        for u in range(mg):
            for v in range(mh):
                r[(u, v)] = sum(var[k] for k in keys if k[0] == (u, v))
        for u in range(mg):
            eqs.append(sum(r[(u, v)] for v in range(mh)) - sp.Rational(p[u]))
        for v in range(mh):
            eqs.append(sum(r[(u, v)] for u in range(mg)) - sp.Rational(q[v]))
        for u in range(mg):
            for v in range(mh):
                for up in range(mg):
                    lhs = sp.Rational(p[u]) * sum(var[k] for k in keys
                                                  if k[0] == (u, v) and k[1][0] == up)
                    eqs.append(lhs - sp.Rational(a.get((u, up), Fraction(0))) * r[(u, v)])
                for vp in range(mh):
                    lhs = sp.Rational(q[v]) * sum(var[k] for k in keys
                                                  if k[0] == (u, v) and k[1][1] == vp)
                    eqs.append(lhs - sp.Rational(b.get((v, vp), Fraction(0))) * r[(u, v)])
        sols = sp.linsolve(eqs, [var[k] for k in keys])
        (sol,) = sols
        free = sorted(sol.free_symbols, key=str)
        return keys, var, sol, free

    print("\n== affine joining solution spaces (straight from the definition) ==")
    keys, var, sol, free = joining_solution_space(cycle_weights(3), path_weights(2))
    print(f"(C_3, P_2): affine dimension {len(free)} (0 means unique joining)")
    if not free:
        vals = sorted(set(sol))
        print(f"  unique solution values: {vals} (expect 0 and 1/12)")
        nz = [k for k, s in zip(keys, sol) if s != 0]
        print(f"  support size (ordered pairs): {len(nz)}")
    keys, var, sol, free = joining_solution_space(cycle_weights(3), cycle_weights(4))
    print(f"(C_3, C_4): affine dimension {len(free)} (expect >= 1)")
    keys, var, sol, free = joining_solution_space(path_weights(2), complete_bipartite_weights(2, 2))
    print(f"(P_2, K_2,2): affine dimension {len(free)} (expect >= 1)")

    print("\n== Fig 1(D) style pair: joining validity check ==")
    # G: path g1-g2-g3 with loops at g2, g3; H: edge h1-h2 with loop at h2
    aG = {(0, 1): Fraction(1, 6), (1, 0): Fraction(1, 6),
          (1, 2): Fraction(1, 6), (2, 1): Fraction(1, 6),
          (1, 1): Fraction(1, 6), (2, 2): Fraction(1, 6)}
    aH = {(0, 1): Fraction(1, 3), (1, 0): Fraction(1, 3), (1, 1): Fraction(1, 3)}
    p, q = degree(3, aG), degree(2, aH)
    print(f"p = {p}, q = {q}")
    # joining entries, ordered pairs
    ent = {}
    def put(s, t, w):
        ent[(s, t)] = Fraction(w[0], w[1])
        if s != t:
            ent[(t, s)] = Fraction(w[0], w[1])
    put((0, 0), (1, 1), (1, 6))
    put((1, 1), (2, 0), (1, 12))
    put((2, 0), (2, 1), (1, 12))
    put((2, 1), (1, 1), (1, 12))
    put((1, 1), (1, 1), (1, 6))
    total = sum(ent.values())
    print(f"normalization: {total} (expect 1)")
    r = {}
    for (s, t), w in ent.items():
        r[s] = r.get(s, Fraction(0)) + w
    okA = all(sum(r.get((u, v), Fraction(0)) for v in range(2)) == p[u] for u in range(3)) and \
          all(sum(r.get((u, v), Fraction(0)) for u in range(3)) == q[v] for v in range(2))
    print(f"degree coupling: {okA}")
    okB = True
    for u, v in product(range(3), range(2)):
        rv = r.get((u, v), Fraction(0))
        for up in range(3):
            lhs = p[u] * sum(w for (s, t), w in ent.items() if s == (u, v) and t[0] == up)
            if lhs != aG.get((u, up), Fraction(0)) * rv:
                okB = False
        for vp in range(2):
            lhs = q[v] * sum(w for (s, t), w in ent.items() if s == (u, v) and t[1] == vp)
            if lhs != aH.get((v, vp), Fraction(0)) * rv:
                okB = False
    print(f"transition coupling: {okB}")
    zero_r = [(u, v) for u, v in product(range(3), range(2))
              if r.get((u, v), Fraction(0)) == 0]
    print(f"zero-degree product vertices: {zero_r} (expect two)")

    print("\n== common factor of C_9 and P_4 (r = 3 looped path) ==")
    aK = {(0, 1): Fraction(1, 3), (1, 0): Fraction(1, 3), (1, 1): Fraction(1, 3)}
    qK = degree(2, aK)

    def verify_factor(ng, ag, nk, ak, phi):
        pg, pk = degree(ng, ag), degree(nk, ak)
        if set(phi) != set(range(nk)):
            return False
        for v in range(nk):
            if sum(pg[u] for u in range(ng) if phi[u] == v) != pk[v]:
                return False
        for u in range(ng):
            v = phi[u]
            for vp in range(nk):
                s = sum(ag.get((u, up), Fraction(0)) for up in range(ng) if phi[up] == vp)
                if pk[v] * s != pg[u] * ak.get((v, vp), Fraction(0)):
                    return False
        return True

    n9, a9 = cycle_weights(9)
    found = [phi for phi in product(range(2), repeat=9) if verify_factor(9, a9, 2, aK, phi)]
    print(f"C_9 -> K factor maps: {len(found)} (expect > 0), e.g. {found[0] if found else None}")
    n4, a4 = path_weights(4)
    found4 = [phi for phi in product(range(2), repeat=4) if verify_factor(4, a4, 2, aK, phi)]
    print(f"P_4 -> K factor maps: {len(found4)} (expect > 0), e.g. {found4[0] if found4 else None}")

    print("\n== 1:1:2 triangle spectrum ==")
    a = {}
    for (i, j, w) in [(0, 1, Fraction(1, 8)), (1, 2, Fraction(1, 8)), (0, 2, Fraction(1, 4))]:
        a[(i, j)] = w
        a[(j, i)] = w
    ev = transition(3, a).eigenvals()
    print({str(k): v for k, v in ev.items()})


if __name__ == "__main__":
    main()
