"""Sparse multivariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` throughout: every operation is exact,
so ranks and signatures computed downstream are never perturbed by rounding.
Terms are kept in strictly descending order under the polynomial's monomial
order, with no zero coefficients and no duplicate monomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]

LEX = "lex"
GRLEX = "grlex"
GREVLEX = "grevlex"
ORDER_KINDS = (LEX, GRLEX, GREVLEX)


class Monomial:
    """A power product, stored as one exponent per ambient variable."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in monomial {exps}")
        self.exponents = exps

    @classmethod
    def unit(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        return cls(tuple(1 if i == index else 0 for i in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_same_nvars(other)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        self._check_same_nvars(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __floordiv__(self, other: "Monomial") -> "Monomial":
        self._check_same_nvars(other)
        diff = tuple(a - b for a, b in zip(self.exponents, other.exponents))
        if any(d < 0 for d in diff):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(diff)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_nvars(other)
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def is_coprime_with(self, other: "Monomial") -> bool:
        self._check_same_nvars(other)
        return all(min(a, b) == 0 for a, b in zip(self.exponents, other.exponents))

    def _check_same_nvars(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise ValueError(
                f"monomial dimension mismatch: {len(self.exponents)} vs {len(other.exponents)}"
            )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial{self.exponents}"


class MonomialOrder:
    """A term order on monomials in a fixed number of variables.

    All three kinds are total orders compatible with multiplication and with
    the unit monomial as minimum.  `grevlex` and `grlex` compare total degree
    first; `grevlex` breaks degree ties at the last differing exponent, the
    smaller exponent winning.
    """

    __slots__ = ("kind", "nvars")

    def __init__(self, kind: str, nvars: int):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {kind!r}; expected one of {ORDER_KINDS}")
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        self.kind = kind
        self.nvars = nvars

    def key(self, m: Monomial):
        """Sort key: key(a) < key(b) iff a < b under this order."""
        if m.nvars != self.nvars:
            raise ValueError(f"monomial has {m.nvars} variables, order expects {self.nvars}")
        e = m.exponents
        if self.kind == LEX:
            return e
        if self.kind == GRLEX:
            return (sum(e), e)
        # grevlex: on a degree tie the last differing exponent decides,
        # smaller exponent meaning the larger monomial.
        return (sum(e), tuple(-x for x in reversed(e)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as a <, =, > b."""
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.nvars == other.nvars
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.nvars))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind!r}, {self.nvars})"


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients.

    `terms` is a tuple of (Monomial, Fraction) pairs, strictly descending
    under `order`; the leading term is `terms[0]`.  The zero polynomial has
    an empty term tuple.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: MonomialOrder, terms: Union[Mapping[Monomial, Scalar], Iterable[tuple[Monomial, Scalar]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            if mono.nvars != order.nvars:
                raise ValueError(
                    f"term has {mono.nvars} variables, polynomial ring has {order.nvars}"
                )
            c = acc.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        self.order = order
        self.terms = tuple(sorted(acc.items(), key=lambda t: order.key(t[0]), reverse=True))

    @classmethod
    def zero(cls, order: MonomialOrder) -> "Polynomial":
        return cls(order)

    @classmethod
    def constant(cls, order: MonomialOrder, value: Scalar) -> "Polynomial":
        return cls(order, {Monomial.unit(order.nvars): value})

    @classmethod
    def variable(cls, order: MonomialOrder, index: int) -> "Polynomial":
        return cls(order, {Monomial.variable(index, order.nvars): 1})

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m, _ in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0][0]

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0][1]

    def coefficient(self, mono: Monomial) -> Fraction:
        for m, c in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.order != other.order:
            raise ValueError(
                f"polynomial ring mismatch: {self.order!r} vs {other.order!r}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial(self.order, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, Fraction(0)) - c
        return Polynomial(self.order, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.order, [(m, -c) for m, c in self.terms])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.order, acc)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = Polynomial.constant(self.order, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, coeff: Scalar) -> "Polynomial":
        c = Fraction(coeff)
        if not c:
            return Polynomial.zero(self.order)
        return Polynomial(self.order, [(m, c * v) for m, v in self.terms])

    def mul_term(self, coeff: Scalar, mono: Monomial) -> "Polynomial":
        """Multiply by the single term coeff*mono (division workhorse)."""
        c = Fraction(coeff)
        if not c:
            return Polynomial.zero(self.order)
        return Polynomial(self.order, [(m * mono, c * v) for m, v in self.terms])

    def monic(self) -> "Polynomial":
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.terms[0][1]
        return self if lc == 1 else self.scale(Fraction(1) / lc)

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        """The same polynomial, re-sorted under another order."""
        if order.nvars != self.nvars:
            raise ValueError(f"order has {order.nvars} variables, polynomial has {self.nvars}")
        return Polynomial(order, self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms)))

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        body = " + ".join(f"{c}*{m!r}" for m, c in self.terms)
        return f"Polynomial({body})"
