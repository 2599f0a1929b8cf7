"""Independent test-only oracles.

Neither oracle shares code with the package: root counting goes through
numpy's companion-matrix eigenvalues, and the K_f count through a sympy
lex Groebner basis.
"""
from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import sympy

CLUSTER_TOL = 1e-6
_ZETA = cmath.exp(2j * cmath.pi / 12)


def to_complex(x) -> complex:
    """Cyclo (coordinates over 1, zeta, zeta^2, zeta^3) to a complex float."""
    return sum(complex(Fraction(int(q.numerator), int(q.denominator))) * _ZETA ** k
               for k, q in enumerate(x.c))


def float_distinct_roots(coeffs, tol=CLUSTER_TOL) -> int:
    """Distinct roots of a polynomial given lowest degree first, by clustering eigenvalues."""
    cs = [to_complex(c) if not isinstance(c, (int, float, complex)) else complex(c) for c in coeffs]
    roots = np.roots(cs[::-1])
    clusters: list[list[complex]] = []
    for r in roots:
        for cl in clusters:
            if min(abs(r - s) for s in cl) < tol:
                cl.append(r)
                break
        else:
            clusters.append([r])
    return len(clusters)


_u, _v, _w, _t = sympy.symbols("u v w t")
SEPARATING_FORMS = ((1, 3, 7), (2, -5, 11), (1, -2, 13))


def elimination_point_count(alpha, beta, gamma, a, b, c) -> int:
    """#K_f for f = a x^2 + b y^2 + c z^2 in S^(alpha,beta,gamma), over the rationals.

    Solves u^2 - alpha vw = a, v^2 - beta wu = b, w^2 - gamma uv = c by eliminating
    everything but t = l(u,v,w); the squarefree degree of the eliminant counts distinct
    affine solutions when l separates them.  Solutions come in pairs +-(u,v,w).
    """
    q = [sympy.Rational(str(Fraction(x))) for x in (alpha, beta, gamma, a, b, c)]
    al, be, ga, A, B, C = q
    best = 0
    for l1, l2, l3 in SEPARATING_FORMS:
        G = sympy.groebner(
            [_u**2 - al * _v * _w - A, _v**2 - be * _w * _u - B, _w**2 - ga * _u * _v - C,
             _t - (l1 * _u + l2 * _v + l3 * _w)],
            _u, _v, _w, _t, order="lex")
        elim = [g for g in G.exprs if g.free_symbols <= {_t}]
        if not elim:
            raise ValueError("solution set is not finite")
        best = max(best, sympy.Poly(elim[0], _t).sqf_part().degree())
    if best % 2:
        raise ValueError("odd affine count; the sign pairing is broken")
    return best // 2
