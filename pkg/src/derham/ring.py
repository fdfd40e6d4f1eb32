"""Sparse Laurent polynomials over the rationals.

Coefficients are exact `fractions.Fraction` values throughout; floats are
rejected so no rank computation can silently lose exactness.  A polynomial
carries its ambient dimension and the set of divisor variables on which
negative exponents are permitted.  Mixing values from different ambient
contexts raises instead of coercing.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional

Rational = Fraction


class RingError(ValueError):
    """Ambient-context mismatch or an invalid coefficient/exponent."""


def _coerce_coeff(c) -> Fraction:
    if isinstance(c, float):
        raise RingError("coefficients must be exact rationals, not floats")
    return Fraction(c)


class LaurentPolynomial:
    """Sparse map from exponent vectors to rational coefficients.

    Negative exponents are allowed only at positions in `divisor`.
    Instances are immutable by convention: no operation mutates its inputs.
    """

    __slots__ = ("nvars", "divisor", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping] = None,
                 divisor: Iterable[int] = ()):
        divisor = frozenset(divisor)
        if any(not (0 <= i < nvars) for i in divisor):
            raise RingError("divisor indices out of range")
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            c = _coerce_coeff(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise RingError("exponent vector length != ambient dimension")
            for i, e in enumerate(exps):
                if e < 0 and i not in divisor:
                    raise RingError(
                        f"negative exponent at non-divisor position {i}")
            clean[exps] = c
        self.nvars = nvars
        self.divisor = divisor
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, divisor: Iterable[int] = ()) -> "LaurentPolynomial":
        return cls(nvars, {}, divisor)

    @classmethod
    def constant(cls, nvars: int, c, divisor: Iterable[int] = ()) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c}, divisor)

    @classmethod
    def variable(cls, nvars: int, i: int, divisor: Iterable[int] = ()) -> "LaurentPolynomial":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: 1}, divisor)

    @classmethod
    def monomial(cls, nvars: int, exps, c=1, divisor: Iterable[int] = ()) -> "LaurentPolynomial":
        return cls(nvars, {tuple(exps): c}, divisor)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def _check_compat(self, other: "LaurentPolynomial") -> None:
        if self.nvars != other.nvars or self.divisor != other.divisor:
            raise RingError("operands live in different ambient contexts")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, float, Fraction)):
            other = LaurentPolynomial.constant(self.nvars, other, self.divisor)
        self._check_compat(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return LaurentPolynomial(self.nvars, terms, self.divisor)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(
            self.nvars, {e: -c for e, c in self.terms.items()}, self.divisor)

    def __sub__(self, other):
        if isinstance(other, (int, float, Fraction)):
            other = LaurentPolynomial.constant(self.nvars, other, self.divisor)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            c = _coerce_coeff(other)
            if c == 0:
                return LaurentPolynomial.zero(self.nvars, self.divisor)
            return LaurentPolynomial(
                self.nvars, {e: c * v for e, v in self.terms.items()},
                self.divisor)
        self._check_compat(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return LaurentPolynomial(self.nvars, terms, self.divisor)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise RingError("negative polynomial powers are not defined")
        result = LaurentPolynomial.constant(self.nvars, 1, self.divisor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.nvars, other, self.divisor)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return (self.nvars == other.nvars and self.divisor == other.divisor
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.divisor, frozenset(self.terms.items())))

    def __repr__(self):
        from .textform import render_polynomial
        return f"LaurentPolynomial({render_polynomial(self)!r})"

    # -- degrees -----------------------------------------------------------

    def total_degree(self) -> int:
        """Max over terms of the sum of exponents; zero polynomial rejected."""
        if self.is_zero():
            raise RingError("total degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)


class MonomialOrder:
    """Total multiplicative well-founded order on exponent vectors.

    `key(exps)` returns a tuple that compares the way the order does, so
    the leading term of a polynomial is the term with the largest key.
    """

    DEGREVLEX = "degrevlex"
    LEX = "lex"
    WEIGHTED = "weighted-degrevlex"

    def __init__(self, kind: str = DEGREVLEX, weights=None):
        if kind not in (self.DEGREVLEX, self.LEX, self.WEIGHTED):
            raise ValueError(f"unknown monomial order kind {kind!r}")
        if kind == self.WEIGHTED:
            if weights is None or any(w <= 0 for w in weights):
                raise ValueError("weighted order needs positive weights")
            weights = tuple(int(w) for w in weights)
        self.kind = kind
        self.weights = weights

    def key(self, exps):
        if self.kind == self.LEX:
            return tuple(exps)
        if self.kind == self.WEIGHTED:
            deg = sum(w * e for w, e in zip(self.weights, exps))
        else:
            deg = sum(exps)
        return (deg,) + tuple(-e for e in reversed(exps))

    def sorted_terms(self, p: LaurentPolynomial, reverse: bool = True):
        """Terms of p as (exps, coeff) pairs, leading term first by default."""
        return sorted(p.terms.items(), key=lambda t: self.key(t[0]),
                      reverse=reverse)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind and self.weights == other.weights)

    def __repr__(self):
        if self.kind == self.WEIGHTED:
            return f"MonomialOrder({self.kind!r}, weights={self.weights})"
        return f"MonomialOrder({self.kind!r})"


def partial_derivative(p: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """Formal partial derivative with respect to variable i (0-based)."""
    if not (0 <= i < p.nvars):
        raise RingError("variable index out of range")
    terms: dict[tuple, Fraction] = {}
    for exps, c in p.terms.items():
        e = exps[i]
        if e == 0:
            continue
        new = exps[:i] + (e - 1,) + exps[i + 1:]
        s = terms.get(new, Fraction(0)) + c * e
        if s == 0:
            terms.pop(new, None)
        else:
            terms[new] = s
    return LaurentPolynomial(p.nvars, terms, p.divisor)


def gradient(p: LaurentPolynomial) -> list[LaurentPolynomial]:
    return [partial_derivative(p, i) for i in range(p.nvars)]


def weighted_degree(p: LaurentPolynomial, weights) -> tuple[int, bool]:
    """Max weighted degree over terms and whether all terms attain it."""
    if p.is_zero():
        raise RingError("weighted degree of the zero polynomial is undefined")
    weights = tuple(int(w) for w in weights)
    if len(weights) != p.nvars or any(w <= 0 for w in weights):
        raise RingError("weights must be positive, one per variable")
    degs = [sum(w * e for w, e in zip(weights, exps)) for exps in p.terms]
    top = max(degs)
    return top, all(d == top for d in degs)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot cols)."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def find_quasi_homogeneous_weights(p: LaurentPolynomial):
    """Positive integer weights making every term of p the same weighted
    degree, or None when no such weights exist.

    Solves the homogeneous linear system "all exponent vectors have equal
    weighted degree" exactly, then searches small assignments of the free
    parameters for a strictly positive solution and clears denominators.
    """
    if p.is_zero():
        raise RingError("weights of the zero polynomial are undefined")
    if p.divisor:
        raise RingError("quasi-homogeneity is defined for S-free polynomials")
    n = p.nvars
    exps = list(p.terms)
    base = exps[0]
    eqs = [[Fraction(a - b) for a, b in zip(e, base)] for e in exps[1:]]
    eqs = [row for row in eqs if any(x != 0 for x in row)]
    if not eqs:
        return (1,) * n
    rref, pivots = _rref(eqs)
    free = [c for c in range(n) if c not in pivots]

    def solve(assign):
        w = [Fraction(0)] * n
        for c, v in zip(free, assign):
            w[c] = Fraction(v)
        for row, pc in zip(rref, pivots):
            w[pc] = -sum(row[c] * w[c] for c in free)
        return w

    candidates = [(1,) * len(free)]
    if len(free) <= 2:
        grid = (1, 2, 3, -1, -2, -3)
        candidates += [tuple(a) for a in _product(grid, len(free))]
    for assign in candidates:
        w = solve(assign)
        if all(x > 0 for x in w):
            den = 1
            for x in w:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in w]
            g = 0
            for x in ints:
                g = gcd(g, x)
            return tuple(x // g for x in ints)
    return None


def _product(choices, repeat):
    if repeat == 0:
        return [()]
    rest = _product(choices, repeat - 1)
    return [(c,) + r for c in choices for r in rest]
