"""Exact integer and rational linear algebra on tuples of Python ints.

Matrices are passed around as lists of row tuples. sympy does the rank,
nullspace, determinant and Smith form work; integer kernels are computed by
unimodular column operations driven by the extended gcd.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

import sympy
from sympy.core.intfunc import igcdex
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def subtract(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u):
    return tuple(c * a for a in u)


def content(vec):
    return reduce(math.gcd, (abs(int(a)) for a in vec), 0)


def primitive(vec):
    """Smallest positive multiple of a rational vector that is integral and primitive."""

    fractions = [Fraction(a) for a in vec]
    denominator = reduce(lambda a, b: a * b // math.gcd(a, b), (f.denominator for f in fractions), 1)
    ints = [int(f * denominator) for f in fractions]
    g = content(ints)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rank(rows):
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def determinant(rows):
    if not rows:
        return 1
    return int(sympy.Matrix([list(r) for r in rows]).det(method="bareiss"))


def adjugate(rows):
    """Returns (columns of the adjugate, determinant) of a square integer matrix."""

    matrix = sympy.Matrix([list(r) for r in rows])
    adj = matrix.adjugate()
    columns = [tuple(int(adj[i, j]) for i in range(adj.rows)) for j in range(adj.cols)]
    return columns, int(matrix.det(method="bareiss"))


def nullspace(rows, n):
    """Primitive integer vectors spanning {x in Q^n : row . x = 0 for every row} over Q."""

    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    return [primitive([to_fraction(x) for x in vec]) for vec in sympy.Matrix(rows).nullspace()]


def integer_kernel(rows, n):
    """Lattice basis of {x in Z^n : A x = 0} via unimodular column reduction of A."""

    matrix = [list(r) for r in rows if any(r)]
    transform = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def combine(target, i, j, a, b, c, d):
        # columns (i, j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        for row in target:
            x, y = row[i], row[j]
            row[i], row[j] = a * x + b * y, c * x + d * y

    pivot = 0
    for row in matrix:
        if pivot >= n:
            break
        for j in range(pivot + 1, n):
            a, b = row[pivot], row[j]
            if b == 0:
                continue
            x, y, g = igcdex(a, b)
            x, y, g = int(x), int(y), int(g)
            combine(matrix, pivot, j, x, y, -b // g, a // g)
            combine(transform, pivot, j, x, y, -b // g, a // g)
        if row[pivot] != 0:
            pivot += 1
    return [tuple(transform[i][j] for i in range(n)) for j in range(pivot, n)]


def saturated_basis(vectors, n):
    """Lattice basis of Z^n intersected with the linear span of the given vectors."""

    vectors = [tuple(v) for v in vectors if any(v)]
    if not vectors:
        return []
    if rank(vectors) == n:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    orthogonal = nullspace(vectors, n)
    return integer_kernel(orthogonal, n)


def is_saturated(basis):
    """True when every elementary divisor of the basis matrix is 1."""

    if not basis:
        return True
    snf = smith_normal_form(sympy.Matrix([list(b) for b in basis]), domain=ZZ)
    return all(abs(int(snf[i, i])) == 1 for i in range(len(basis)))


def coordinate_map(basis):
    """Rows of (B B^T)^{-1} B: maps a vector of span(B) to its coordinates in B."""

    if not basis:
        return ()
    b = sympy.Matrix([list(v) for v in basis])
    m = (b * b.T).inv() * b
    return tuple(tuple(to_fraction(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


def lcm_of_denominators(values):
    return reduce(lambda a, b: a * b // math.gcd(a, b), (Fraction(v).denominator for v in values), 1)
