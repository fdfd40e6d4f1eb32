"""Buchberger's algorithm, normal forms, and staircase dimension counts.

All operations require S-free input (no negative exponents): meromorphic
questions are reduced to polynomial ones by the callers, which keeps local
orderings out of scope entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .ring import LaurentPolynomial, MonomialOrder, RingError


class GroebnerError(ValueError):
    pass


def _check_polynomial_ring(polys: Sequence[LaurentPolynomial]) -> None:
    if not polys:
        return
    n, s = polys[0].nvars, polys[0].divisor
    for p in polys:
        if p.nvars != n or p.divisor != s:
            raise RingError("generators live in different ambient contexts")
        if p.divisor:
            raise GroebnerError("Groebner operations require S-free input")
        for exps in p.terms:
            if any(e < 0 for e in exps):
                raise GroebnerError("Groebner operations require S-free input")


def leading_term(p: LaurentPolynomial, order: MonomialOrder):
    """(exponent vector, coefficient) of the leading term under `order`."""
    if p.is_zero():
        raise GroebnerError("zero polynomial has no leading term")
    exps = max(p.terms, key=order.key)
    return exps, p.terms[exps]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(p: LaurentPolynomial, basis, order: Optional[MonomialOrder] = None
                ) -> LaurentPolynomial:
    """Remainder of p on full division by `basis` (a GroebnerBasis or a list).

    No term of the result is divisible by any leading term of the divisors,
    and p minus the result lies in the ideal they generate.
    """
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        divisors = basis.generators
    else:
        divisors = [g for g in basis if not g.is_zero()]
        if order is None:
            order = MonomialOrder()
    _check_polynomial_ring([p] + list(divisors))
    lts = [leading_term(g, order) for g in divisors]
    remainder = LaurentPolynomial.zero(p.nvars)
    work = p
    while not work.is_zero():
        exps, coeff = leading_term(work, order)
        for g, (lexp, lcoeff) in zip(divisors, lts):
            if _divides(lexp, exps):
                shift = tuple(a - b for a, b in zip(exps, lexp))
                factor = LaurentPolynomial.monomial(
                    p.nvars, shift, coeff / lcoeff)
                work = work - factor * g
                break
        else:
            mono = LaurentPolynomial.monomial(p.nvars, exps, coeff)
            remainder = remainder + mono
            work = work - mono
    return remainder


def _s_polynomial(f, g, order):
    (ef, cf), (eg, cg) = leading_term(f, order), leading_term(g, order)
    l = _lcm(ef, eg)
    mf = LaurentPolynomial.monomial(
        f.nvars, tuple(a - b for a, b in zip(l, ef)), Fraction(1) / cf)
    mg = LaurentPolynomial.monomial(
        g.nvars, tuple(a - b for a, b in zip(l, eg)), Fraction(1) / cg)
    return mf * f - mg * g


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with its minimal leading-term staircase."""

    order: MonomialOrder
    generators: tuple
    staircase: frozenset  # minimal leading exponent vectors

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars


def buchberger(gens: Sequence[LaurentPolynomial],
               order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Normal selection strategy (smallest lcm first) with the coprime and
    chain criteria.  Output is deterministic for fixed input and order.
    """
    if order is None:
        order = MonomialOrder()
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise GroebnerError("empty generator list")
    _check_polynomial_ring(gens)

    basis = []
    for g in gens:
        _, c = leading_term(g, order)
        basis.append(g * (Fraction(1) / c))
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lt(i):
        return leading_term(basis[i], order)[0]

    while pending:
        i, j = min(pending, key=lambda ij: (order.key(_lcm(lt(ij[0]), lt(ij[1]))), ij))
        pending.remove((i, j))
        lij = _lcm(lt(i), lt(j))
        # coprime criterion
        if lij == tuple(a + b for a, b in zip(lt(i), lt(j))):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lt(k), lij):
                continue
            if (tuple(sorted((i, k))) not in pending
                    and tuple(sorted((j, k))) not in pending):
                skip = True
                break
        if skip:
            continue
        h = normal_form(_s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        _, c = leading_term(h, order)
        h = h * (Fraction(1) / c)
        basis.append(h)
        new = len(basis) - 1
        pending.update((k, new) for k in range(new))

    # minimalize: drop elements whose leading term another's divides
    lts = [leading_term(g, order)[0] for g in basis]
    keep = []
    for i, e in enumerate(lts):
        if any(j != i and _divides(lts[j], e) and (lts[j] != e or j < i)
               for j in range(len(basis))):
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    # interreduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order) if others else g
        _, c = leading_term(r, order)
        reduced.append(r * (Fraction(1) / c))
    reduced.sort(key=lambda g: order.key(leading_term(g, order)[0]), reverse=True)
    staircase = frozenset(leading_term(g, order)[0] for g in reduced)
    return GroebnerBasis(order=order, generators=tuple(reduced),
                         staircase=staircase)


@dataclass(frozen=True)
class QuotientInfo:
    finite: bool
    dim: Optional[int]           # None when infinite
    basis: Optional[tuple]       # standard monomials (exponent vectors)


def quotient_dimension(gens, order: Optional[MonomialOrder] = None) -> QuotientInfo:
    """Vector-space dimension of the quotient ring by the generated ideal.

    Finite iff every variable has a pure power among the leading terms;
    the basis of standard monomials is returned sorted by the order.
    """
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, order)
    order = gb.order
    lts = sorted(gb.staircase)
    n = gb.nvars
    bounds = []
    for i in range(n):
        pure = [e[i] for e in lts if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            return QuotientInfo(finite=False, dim=None, basis=None)
        bounds.append(min(pure))
    standard = []
    for exps in product(*(range(b) for b in bounds)):
        if not any(_divides(l, exps) for l in lts):
            standard.append(exps)
    standard.sort(key=order.key)
    return QuotientInfo(finite=True, dim=len(standard), basis=tuple(standard))


def is_zero_dimensional(gens, order: Optional[MonomialOrder] = None) -> bool:
    return quotient_dimension(gens, order).finite


def ideal_membership(p: LaurentPolynomial, gens,
                     order: Optional[MonomialOrder] = None) -> bool:
    if p.is_zero():
        return True
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, order)
    return normal_form(p, gb).is_zero()
