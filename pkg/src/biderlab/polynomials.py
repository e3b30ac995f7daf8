"""Multilinear polynomials indexed by permutations.

A polynomial of arity n is a finite sum of monomials x_{pi(1)} ... x_{pi(n)},
one per permutation pi of {1..n}, each with a rational coefficient.  The
classical derivation flavors all arise this way: the plain product, the
Jordan product x1 x2 + x2 x1, the Lie bracket, and their triple versions.

Permutations are stored in one-line notation, 0-indexed internally and
1-indexed in files: the stored tuple p means the monomial
x_{p[0]+1} x_{p[1]+1} ... x_{p[n-1]+1}.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import as_rational

NAMED_POLYNOMIALS = ("product", "jordan", "lie", "jordan_triple", "lie_triple")


class MultilinearPolynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        n = int(n)
        if n < 2:
            raise ValueError("arity must be at least 2")
        clean = {}
        for perm, coeff in terms.items():
            p = tuple(int(v) for v in perm)
            if sorted(p) != list(range(n)):
                raise ValueError(f"{p} is not a permutation of 0..{n - 1}")
            q = as_rational(coeff)
            if q:
                clean[p] = clean.get(p, Fraction(0)) + q
        clean = {p: c for p, c in clean.items() if c}
        if not clean:
            raise ValueError("polynomial must have at least one nonzero coefficient")
        self.n = n
        self.terms = dict(sorted(clean.items()))

    def __eq__(self, other):
        if not isinstance(other, MultilinearPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(
            f"{c}*x{''.join(str(v + 1) for v in p)}" for p, c in self.terms.items()
        )
        return f"MultilinearPolynomial({body})"

    def stats(self):
        """(alpha, beta, gamma): total coefficient sum and its split by
        whether x1 appears before or after x2 in the monomial."""
        alpha = beta = gamma = Fraction(0)
        for p, c in self.terms.items():
            alpha += c
            if p.index(0) < p.index(1):
                beta += c
            else:
                gamma += c
        return alpha, beta, gamma

    def evaluate(self, alg, args):
        """Evaluate on algebra elements, multiplying each monomial left to right."""
        if len(args) != self.n:
            raise ValueError(f"expected {self.n} arguments, got {len(args)}")
        for x in args:
            if x.alg is not alg:
                raise ValueError("argument from a different algebra")
        total = alg.zero()
        for p, c in self.terms.items():
            prod = args[p[0]]
            for q in p[1:]:
                prod = prod * args[q]
            total = total + c * prod
        return total


def build_named_poly(name):
    """One of: product, jordan, lie, jordan_triple, lie_triple."""
    if name == "product":
        return MultilinearPolynomial(2, {(0, 1): 1})
    if name == "jordan":
        return MultilinearPolynomial(2, {(0, 1): 1, (1, 0): 1})
    if name == "lie":
        return MultilinearPolynomial(2, {(0, 1): 1, (1, 0): -1})
    if name == "jordan_triple":
        return MultilinearPolynomial(3, {(0, 1, 2): 1, (2, 1, 0): 1})
    if name == "lie_triple":
        # [[x1, x2], x3] expanded into its four signed monomials
        return MultilinearPolynomial(
            3, {(0, 1, 2): 1, (1, 0, 2): -1, (2, 0, 1): -1, (2, 1, 0): 1}
        )
    raise ValueError(f"unknown polynomial name {name!r}; expected one of {NAMED_POLYNOMIALS}")


def evaluate_poly(poly, alg, args):
    return poly.evaluate(alg, args)


def poly_stats(poly):
    return poly.stats()
