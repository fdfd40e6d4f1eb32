"""Exterior algebra of differential forms and the operators acting on it.

Three coefficient modes share one representation:

  * polynomial:  coefficients in Q[x], basis covectors dx_i;
  * log:         divisor positions i in S use dlog x_i = dx_i/x_i as basis
                 covector, coefficients stay polynomial;
  * meromorphic: coefficients are Laurent with poles only on S, basis dx_i.

Sign convention, shared by every operator: wedging a covector at position i
into a sorted index set I contributes (-1)^(number of elements of I below i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .ring import LaurentPolynomial, RingError, partial_derivative

POLYNOMIAL = "polynomial"
LOG = "log"
MEROMORPHIC = "meromorphic"


class FormError(ValueError):
    pass


@dataclass(frozen=True)
class FormContext:
    """Ambient dimension, divisor positions, and coefficient mode."""

    nvars: int
    divisor: frozenset
    mode: str

    def __init__(self, nvars: int, divisor: Iterable[int] = (),
                 mode: str = POLYNOMIAL):
        divisor = frozenset(divisor)
        if mode not in (POLYNOMIAL, LOG, MEROMORPHIC):
            raise FormError(f"unknown coefficient mode {mode!r}")
        if mode in (LOG, MEROMORPHIC) and not divisor:
            raise FormError(f"{mode} mode requires a nonempty divisor set")
        if any(not (0 <= i < nvars) for i in divisor):
            raise FormError("divisor indices out of range")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "divisor", divisor)
        object.__setattr__(self, "mode", mode)

    def coefficient_divisor(self) -> frozenset:
        """Divisor set of coefficient polynomials (poles allowed only in
        meromorphic mode)."""
        return self.divisor if self.mode == MEROMORPHIC else frozenset()

    def zero_coefficient(self) -> LaurentPolynomial:
        return LaurentPolynomial.zero(self.nvars, self.coefficient_divisor())


class DifferentialForm:
    """Degree-k form: map from sorted k-element index tuples to coefficients."""

    __slots__ = ("context", "degree", "components")

    def __init__(self, context: FormContext, degree: int,
                 components: Optional[Mapping] = None):
        if degree < 0 or degree > context.nvars + 1:
            raise FormError("form degree out of range")
        clean = {}
        want_divisor = context.coefficient_divisor()
        for idx, coeff in (components or {}).items():
            idx = tuple(idx)
            if list(idx) != sorted(set(idx)) or len(idx) != degree:
                raise FormError(f"index set {idx} must be sorted, distinct, "
                                f"of size {degree}")
            if any(not (0 <= i < context.nvars) for i in idx):
                raise FormError("covector index out of range")
            if not isinstance(coeff, LaurentPolynomial):
                coeff = LaurentPolynomial.constant(
                    context.nvars, coeff, want_divisor)
            if coeff.nvars != context.nvars or coeff.divisor != want_divisor:
                raise FormError("coefficient ring does not match the context")
            if not coeff.is_zero():
                clean[idx] = coeff
        if degree > context.nvars and clean:
            raise FormError("nonzero form above top degree")
        self.context = context
        self.degree = degree
        self.components = clean

    @classmethod
    def zero(cls, context: FormContext, degree: int) -> "DifferentialForm":
        return cls(context, degree, {})

    @classmethod
    def from_function(cls, context: FormContext, g) -> "DifferentialForm":
        return cls(context, 0, {(): g})

    def is_zero(self) -> bool:
        return not self.components

    def _check_compat(self, other: "DifferentialForm") -> None:
        if self.context != other.context or self.degree != other.degree:
            raise FormError("forms of different context or degree")

    def __add__(self, other):
        self._check_compat(other)
        comps = dict(self.components)
        for idx, c in other.components.items():
            s = comps.get(idx)
            s = c if s is None else s + c
            if s.is_zero():
                comps.pop(idx, None)
            else:
                comps[idx] = s
        return DifferentialForm(self.context, self.degree, comps)

    def __neg__(self):
        return DifferentialForm(
            self.context, self.degree,
            {i: -c for i, c in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, LaurentPolynomial)):
            comps = {i: c * scalar for i, c in self.components.items()}
            return DifferentialForm(self.context, self.degree, comps)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return (self.context == other.context and self.degree == other.degree
                and self.components == other.components)

    def __repr__(self):
        return (f"DifferentialForm(degree={self.degree}, "
                f"components={self.components!r})")


def _insert_index(i: int, idx: tuple):
    """(sign, sorted index tuple) for covector i wedged into idx, or None."""
    if i in idx:
        return None
    below = sum(1 for j in idx if j < i)
    pos = below
    return (-1) ** below, idx[:pos] + (i,) + idx[pos:]


def _df_components(context: FormContext, f: LaurentPolynomial):
    """df expanded in the context basis: pairs (i, coefficient)."""
    out = []
    want_divisor = context.coefficient_divisor()
    for i in range(context.nvars):
        d = partial_derivative(f, i)
        if context.mode == LOG and i in context.divisor:
            d = LaurentPolynomial.variable(f.nvars, i) * d
        if d.is_zero():
            continue
        if d.divisor != want_divisor:
            d = LaurentPolynomial(d.nvars, d.terms, want_divisor)
        out.append((i, d))
    return out


def _as_context_coefficient(context: FormContext, p: LaurentPolynomial):
    want = context.coefficient_divisor()
    if p.divisor == want:
        return p
    return LaurentPolynomial(p.nvars, p.terms, want)


def wedge_df(omega: DifferentialForm, f: LaurentPolynomial) -> DifferentialForm:
    """df wedged onto omega; raises the degree by one.

    f must be S-free; in log mode the divisor components of df are expanded
    as x_i * (df/dx_i) * dlog x_i.
    """
    ctx = omega.context
    if f.nvars != ctx.nvars:
        raise FormError("f lives in a different ambient dimension")
    if any(e < 0 for exps in f.terms for e in exps):
        raise FormError("f must be polynomial (no poles)")
    df = _df_components(ctx, f)
    comps: dict = {}
    for idx, g in omega.components.items():
        for i, coeff in df:
            ins = _insert_index(i, idx)
            if ins is None:
                continue
            sign, new_idx = ins
            add = coeff * g * sign
            s = comps.get(new_idx)
            s = add if s is None else s + add
            if s.is_zero():
                comps.pop(new_idx, None)
            else:
                comps[new_idx] = s
    return DifferentialForm(ctx, omega.degree + 1, comps)


def exterior_derivative(omega: DifferentialForm) -> DifferentialForm:
    """d(g * basis_I) = sum_j (dg/dx_j) dx_j wedge basis_I, with dx_j
    rewritten as x_j dlog x_j in log mode; basis covectors are closed."""
    ctx = omega.context
    comps: dict = {}
    for idx, g in omega.components.items():
        for j in range(ctx.nvars):
            d = partial_derivative(g, j)
            if ctx.mode == LOG and j in ctx.divisor:
                d = LaurentPolynomial.variable(g.nvars, j) * d
            if d.is_zero():
                continue
            ins = _insert_index(j, idx)
            if ins is None:
                continue
            sign, new_idx = ins
            add = _as_context_coefficient(ctx, d) * sign
            s = comps.get(new_idx)
            s = add if s is None else s + add
            if s.is_zero():
                comps.pop(new_idx, None)
            else:
                comps[new_idx] = s
    return DifferentialForm(ctx, omega.degree + 1, comps)


def twisted_operator(omega: DifferentialForm, f: LaurentPolynomial,
                     u) -> DifferentialForm:
    """u * d(omega) - df wedge omega."""
    return exterior_derivative(omega) * Fraction(u) - wedge_df(omega, f)


def pole_filtration_level(g: LaurentPolynomial) -> int:
    """Smallest k with g in F_k: the largest per-component pole order."""
    if g.is_zero():
        raise RingError("pole level of the zero polynomial is undefined")
    level = 0
    for exps in g.terms:
        for i in g.divisor:
            level = max(level, -exps[i])
    return max(level, 0)


def monomial_pole_level(exps, divisor) -> int:
    return max([0] + [-exps[i] for i in divisor if exps[i] < 0])


def _filter_by_level(ctx: FormContext, form: DifferentialForm, level: int
                     ) -> DifferentialForm:
    """Keep only coefficient monomials of exactly the given pole level."""
    comps = {}
    for idx, g in form.components.items():
        kept = {e: c for e, c in g.terms.items()
                if monomial_pole_level(e, ctx.divisor) == level}
        if kept:
            comps[idx] = LaurentPolynomial(g.nvars, kept, g.divisor)
    return DifferentialForm(ctx, form.degree, comps)


def _pure_level(ctx: FormContext, omega: DifferentialForm) -> int:
    levels = {monomial_pole_level(e, ctx.divisor)
              for g in omega.components.values() for e in g.terms}
    if len(levels) != 1:
        raise FormError("graded operators need a pure pole-level input")
    return levels.pop()


def graded_exterior_derivative(omega: DifferentialForm,
                               level: Optional[int] = None) -> DifferentialForm:
    """Symbol of d on the pole-order graded pieces: apply d, then discard
    every resulting term whose pole level did not rise to level+1."""
    ctx = omega.context
    if ctx.mode != MEROMORPHIC:
        raise FormError("graded derivative is defined in meromorphic mode")
    if omega.is_zero():
        return DifferentialForm.zero(ctx, omega.degree + 1)
    p = _pure_level(ctx, omega)
    if level is not None and level != p:
        raise FormError(f"input has pole level {p}, expected {level}")
    return _filter_by_level(ctx, exterior_derivative(omega), p + 1)


def graded_wedge_df(omega: DifferentialForm, f: LaurentPolynomial
                    ) -> DifferentialForm:
    """df wedge omega in the pole-order graded ring: products whose pole
    level drops below the input level die in the associated graded."""
    ctx = omega.context
    if ctx.mode != MEROMORPHIC:
        raise FormError("graded wedge is defined in meromorphic mode")
    if omega.is_zero():
        return DifferentialForm.zero(ctx, omega.degree + 1)
    p = _pure_level(ctx, omega)
    return _filter_by_level(ctx, wedge_df(omega, f), p)


def graded_twisted_operator(omega: DifferentialForm, f: LaurentPolynomial
                            ) -> DifferentialForm:
    """gr^F d - df wedge, on a pure pole-level form."""
    return graded_exterior_derivative(omega) - graded_wedge_df(omega, f)


def embed_log_in_meromorphic(omega: DifferentialForm) -> DifferentialForm:
    """Rewrite dlog x_i as x_i^-1 dx_i, landing in meromorphic mode."""
    ctx = omega.context
    if ctx.mode != LOG:
        raise FormError("only log forms embed this way")
    mero = FormContext(ctx.nvars, ctx.divisor, MEROMORPHIC)
    comps = {}
    for idx, g in omega.components.items():
        coeff = LaurentPolynomial(g.nvars, g.terms, mero.divisor)
        for i in idx:
            if i in ctx.divisor:
                inv = LaurentPolynomial.monomial(
                    g.nvars, tuple(-1 if j == i else 0 for j in range(g.nvars)),
                    1, mero.divisor)
                coeff = coeff * inv
        comps[idx] = coeff
    return DifferentialForm(mero, omega.degree, comps)
