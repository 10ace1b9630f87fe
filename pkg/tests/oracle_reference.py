"""Standalone reference calculations for the test suite.

Run manually:

    python3 tests/oracle_reference.py

Every integral below is evaluated by brute-force iterated integration
with sympy, with no shared code with the package under test.  The
printed tables are frozen as literals into the test modules so that
``pytest`` itself never imports sympy.

Conventions match the library: the geometric n-simplex is the region
t_1 >= 0, ..., t_n >= 0, t_1 + ... + t_n <= 1 with t_0 = 1 - sum(t_i),
and integrals are taken against dt_1 ... dt_n (so the empty product for
n = 0 integrates constants to themselves).
"""

import sympy


def simplex_integral(n, integrand, ts):
    """Iterated integral of ``integrand`` over the n-simplex."""
    expr = integrand
    # innermost variable first: t_n from 0 to 1 - t_1 - ... - t_{n-1}
    for k in range(n, 0, -1):
        upper = 1 - sum(ts[1:k])
        expr = sympy.integrate(expr, (ts[k], 0, upper))
    return sympy.nsimplify(expr)


def monomial_table():
    cases = [
        (1, (0, 0)), (1, (1, 0)), (1, (0, 1)), (1, (1, 1)),
        (1, (2, 0)), (1, (2, 3)),
        (2, (0, 0, 0)), (2, (1, 0, 0)), (2, (0, 1, 0)), (2, (1, 1, 1)),
        (2, (2, 0, 1)), (2, (0, 0, 3)),
        (3, (0, 0, 0, 0)), (3, (1, 1, 0, 0)), (3, (2, 1, 1, 0)),
        (3, (0, 1, 0, 2)),
    ]
    out = {}
    for n, nu in cases:
        ts = sympy.symbols("t0:%d" % (n + 1))
        t0 = 1 - sum(ts[1:])
        integrand = t0 ** nu[0]
        for i in range(1, n + 1):
            integrand *= ts[i] ** nu[i]
        out[(n, nu)] = simplex_integral(n, integrand, ts)
    return out


def s_monomial_table():
    # s_k = t_0 + ... + t_{k-1} for k = 1..n
    cases = [
        (2, (1, 0)), (2, (0, 1)), (2, (1, 1)), (2, (2, 1)),
        (3, (1, 0, 0)), (3, (0, 2, 0)), (3, (1, 1, 1)),
    ]
    out = {}
    for n, kappa in cases:
        ts = sympy.symbols("t0:%d" % (n + 1))
        t0 = 1 - sum(ts[1:])
        coords = (t0,) + tuple(ts[1:])
        integrand = sympy.Integer(1)
        for k in range(1, n + 1):
            s_k = sum(coords[:k])
            integrand *= s_k ** kappa[k - 1]
        out[(n, kappa)] = simplex_integral(n, sympy.expand(integrand), ts)
    return out


def print_table(name, table):
    print("%s = {" % name)
    for key, val in table.items():
        q = sympy.Rational(val)
        print("    %r: Q(%d, %d)," % (key, q.p, q.q))
    print("}")


if __name__ == "__main__":
    print_table("MONOMIAL_INTEGRALS", monomial_table())
    print()
    print_table("S_MONOMIAL_INTEGRALS", s_monomial_table())
