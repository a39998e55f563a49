"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ``z1 .. zk``. A :class:`PolyRing` fixes the number of
variables and the monomial order; every :class:`Polynomial` belongs to one
ring and keeps its terms sorted strictly descending under that order.

Monomials are exponent tuples at the API level. Internally each monomial is
packed into a single int (see :mod:`groebner_sat._kernel_py`) laid out so
that integer comparison is the monomial order:

=========  ==============================================
lex        ``e1, ..., ek``
grlex      ``deg, e1, ..., ek``
grevlex    ``deg, e1+..+e(k-1), ..., e1, e1, ..., ek``
=========  ==============================================

Fields are listed most significant first. The grevlex prefix sums make
"rightmost differing exponent smaller wins" a plain lexicographic compare
while keeping the layout additive under multiplication; the trailing
exponent fields make the guard-bit divisibility test exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from groebner_sat import kernel
from groebner_sat.kernel import ExponentOverflowError

FIELD_BITS = 32
# bound on every exponent and on the total degree of a monomial
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1

Monomial = tuple  # tuple[int, ...] of nonnegative exponents

__all__ = [
    "ExponentOverflowError",
    "Ideal",
    "MAX_EXPONENT",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PolynomialParseError",
    "compare_monomials",
    "leading_term",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
    "normal_form",
    "total_degree",
]


class MonomialOrder(str, Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    def __str__(self) -> str:
        return self.value


class PolynomialParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# monomials


def _check_monomial(m: Sequence[int], nvars: int | None = None) -> tuple:
    m = tuple(m)
    if nvars is not None and len(m) != nvars:
        raise ValueError(f"monomial {m} has dimension {len(m)}, expected {nvars}")
    for e in m:
        if type(e) is not int or e < 0:
            raise ValueError(f"invalid exponent {e!r} in monomial {m}")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return m


def _same_dim(a, b):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def total_degree(m: Sequence[int]) -> int:
    return sum(m)


def monomial_mul(a: Sequence[int], b: Sequence[int]) -> tuple:
    _same_dim(a, b)
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflowError(f"exponent overflow in {a} * {b}")
    return out


def monomial_divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if ``a`` divides ``b``."""
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Sequence[int], b: Sequence[int]) -> tuple:
    _same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


_KINDS = (MonomialOrder.LEX, MonomialOrder.GRLEX, MonomialOrder.GREVLEX)


class _Layout:
    """Packing of exponent tuples into order-comparable ints."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        if order is MonomialOrder.LEX:
            nfields = nvars
        elif order is MonomialOrder.GRLEX:
            nfields = nvars + 1
        else:
            nfields = 2 * nvars if nvars else 1
        self.nfields = nfields
        self.kind = _KINDS.index(order)
        guard = 0
        for i in range(nfields):
            guard |= 1 << (FIELD_BITS * i + FIELD_BITS - 1)
        self.guard = guard
        self.one_key = self.encode((0,) * nvars)
        self.var_keys = [self.encode(tuple(int(j == i) for j in range(nvars))) for i in range(nvars)]

    def encode(self, exps: Sequence[int]) -> int:
        return kernel.pack(exps, self.nvars, self.kind)

    def decode(self, key: int) -> tuple:
        return kernel.decode(key, self.nvars)

    def lcm(self, a: int, b: int) -> int:
        return kernel.lcm(a, b, self.nvars, self.kind)


@lru_cache(maxsize=None)
def _layout(nvars: int, order: MonomialOrder) -> _Layout:
    return _Layout(nvars, order)


def compare_monomials(a: Sequence[int], b: Sequence[int], order: MonomialOrder | str) -> int:
    """Compare two monomials; returns -1, 0 or 1."""
    order = MonomialOrder(order)
    _same_dim(a, b)
    lay = _layout(len(a), order)
    ka = lay.encode(_check_monomial(a))
    kb = lay.encode(_check_monomial(b))
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# coefficients


def _coef(c) -> int | Fraction:
    if isinstance(c, bool) or isinstance(c, float):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    if type(c) is int:
        return c
    if isinstance(c, (Rational, str)):
        f = Fraction(c)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"coefficients must be exact rationals, got {c!r}")


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring ``Q[z1, ..., zk]`` with a fixed monomial order."""

    nvars: int
    order: MonomialOrder = MonomialOrder.GREVLEX

    def __post_init__(self):
        if type(self.nvars) is not int or self.nvars < 0:
            raise ValueError(f"invalid ring dimension {self.nvars!r}")
        object.__setattr__(self, "order", MonomialOrder(self.order))

    @property
    def _layout(self) -> _Layout:
        return _layout(self.nvars, self.order)

    def with_order(self, order: MonomialOrder | str) -> PolyRing:
        return PolyRing(self.nvars, MonomialOrder(order))

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, [], [])

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = _coef(c)
        if not c:
            return self.zero()
        return Polynomial._raw(self, [self._layout.one_key], [c])

    def var(self, i: int) -> Polynomial:
        """The variable ``z_i`` (1-based)."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"variable index {i} out of range 1..{self.nvars}")
        return Polynomial._raw(self, [self._layout.var_keys[i - 1]], [1])

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(1, self.nvars + 1)]

    def monomial(self, exps: Sequence[int], coef=1) -> Polynomial:
        exps = _check_monomial(exps, self.nvars)
        c = _coef(coef)
        if not c:
            return self.zero()
        return Polynomial._raw(self, [self._layout.encode(exps)], [c])

    def from_terms(self, terms: Iterable[tuple]) -> Polynomial:
        """Build a polynomial from ``(coefficient, exponents)`` pairs; duplicates are summed."""
        lay = self._layout
        acc: dict[int, int | Fraction] = {}
        for c, exps in terms:
            k = lay.encode(_check_monomial(exps, self.nvars))
            acc[k] = acc.get(k, 0) + _coef(c)
        keys = sorted((k for k, c in acc.items() if c), reverse=True)
        return Polynomial._raw(self, keys, [_coef(acc[k]) for k in keys])

    def from_dict(self, d: dict) -> Polynomial:
        return self.from_terms((c, m) for m, c in d.items())

    def parse(self, text: str) -> Polynomial:
        return _Parser(text, self).parse()


class Polynomial:
    """Immutable polynomial in a :class:`PolyRing`."""

    __slots__ = ("ring", "_keys", "_coefs", "_hash")

    def __init__(self, ring: PolyRing, terms: Iterable[tuple] = ()):
        p = ring.from_terms(terms)
        self.ring = ring
        self._keys = p._keys
        self._coefs = p._coefs
        self._hash = None

    @classmethod
    def _raw(cls, ring, keys, coefs) -> Polynomial:
        p = object.__new__(cls)
        p.ring = ring
        p._keys = keys
        p._coefs = coefs
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def terms(self) -> tuple:
        """``(Fraction, exponents)`` pairs, descending under the ring order."""
        dec = self.ring._layout.decode
        return tuple((Fraction(c), dec(k)) for k, c in zip(self._keys, self._coefs))

    @property
    def monomials(self) -> list[tuple]:
        dec = self.ring._layout.decode
        return [dec(k) for k in self._keys]

    @property
    def coefficients(self) -> list[Fraction]:
        return [Fraction(c) for c in self._coefs]

    def is_zero(self) -> bool:
        return not self._keys

    def __bool__(self) -> bool:
        return bool(self._keys)

    def __len__(self) -> int:
        return len(self._keys)

    def is_constant(self) -> bool:
        return not self._keys or (len(self._keys) == 1 and not any(self.lm))

    def _require_nonzero(self):
        if not self._keys:
            raise ValueError("zero polynomial has no leading term")

    @property
    def lm(self) -> tuple:
        self._require_nonzero()
        return self.ring._layout.decode(self._keys[0])

    @property
    def lc(self) -> Fraction:
        self._require_nonzero()
        return Fraction(self._coefs[0])

    @property
    def lt(self) -> tuple:
        return self.lc, self.lm

    def total_degree(self) -> int:
        if not self._keys:
            return -1
        return max(sum(m) for m in self.monomials)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has dimension {len(point)}, expected {self.nvars}")
        pt = [Fraction(_coef(x)) for x in point]
        total = Fraction(0)
        for c, m in self.terms:
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x**e
            total += v
        return total

    # -- conversion ---------------------------------------------------------

    def to_order(self, order: MonomialOrder | str) -> Polynomial:
        order = MonomialOrder(order)
        if order is self.ring.order:
            return self
        ring = self.ring.with_order(order)
        return ring.from_terms(self.terms)

    def monic(self) -> Polynomial:
        if not self._keys:
            return self
        lc = self._coefs[0]
        if lc == 1:
            return self
        inv = kernel.coef_div(1, lc)
        return Polynomial._raw(self.ring, list(self._keys), [kernel.coef_mul(c, inv) for c in self._coefs])

    def mul_term(self, coef, exps: Sequence[int]) -> Polynomial:
        c = _coef(coef)
        if not c or not self._keys:
            return self.ring.zero()
        shift = self.ring._layout.encode(_check_monomial(exps, self.nvars))
        k, cs = kernel.scale_shift(self._keys, self._coefs, shift, c, self.ring._layout.guard)
        return Polynomial._raw(self.ring, k, cs)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def _combine(self, other: Polynomial, factor) -> Polynomial:
        k, c = kernel.add_scaled(
            self._keys, self._coefs, 0, other._keys, other._coefs, 0, 0, factor, self.ring._layout.guard
        )
        return Polynomial._raw(self.ring, k, c)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self):
        return Polynomial._raw(self.ring, list(self._keys), [-c for c in self._coefs])

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = _coef(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            k, cs = kernel.scale_shift(self._keys, self._coefs, 0, c, self.ring._layout.guard)
            return Polynomial._raw(self.ring, k, cs)
        other = self._coerce(other)
        k, c = kernel.mul(self._keys, self._coefs, other._keys, other._coefs, self.ring._layout.guard)
        return Polynomial._raw(self.ring, k, c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if type(n) is not int or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._keys == other._keys and self._coefs == other._coefs
        try:
            other = self.ring.const(other)
        except TypeError:
            return NotImplemented
        return self._keys == other._keys and self._coefs == other._coefs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self._keys), tuple(self._coefs)))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self}, nvars={self.nvars}, order={self.order.value})"

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# ideals, leading terms, division


@dataclass(frozen=True)
class Ideal:
    """Ideal given by generators; zero generators are dropped."""

    ring: PolyRing
    generators: tuple

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generator {g!r} is not a Polynomial")
            if g.ring != self.ring:
                raise ValueError(f"generator ring {g.ring} differs from ideal ring {self.ring}")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def to_order(self, order: MonomialOrder | str) -> Ideal:
        ring = self.ring.with_order(order)
        return Ideal(ring, tuple(g.to_order(order) for g in self.generators))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def leading_term(f: Polynomial, order: MonomialOrder | str | None = None) -> tuple:
    """Leading ``(coefficient, monomial)`` of ``f`` under ``order`` (default: the ring's)."""
    if order is not None:
        f = f.to_order(order)
    return f.lt


def _as_order(polys, order):
    if order is None:
        return list(polys)
    return [p.to_order(order) for p in polys]


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | str | None = None):
    """Divide ``f`` by the list ``G``.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + remainder`` and
    no monomial of the remainder divisible by any leading monomial of ``G``.
    """
    f, *G = _as_order([f, *G], order)
    for g in G:
        if g.ring != f.ring:
            raise ValueError(f"ring mismatch: {f.ring} vs {g.ring}")
        if not g:
            raise ValueError("cannot divide by the zero polynomial")
    ring = f.ring
    rk, rc, qs = kernel.reduce(
        f._keys, f._coefs, [(g._keys, g._coefs) for g in G], ring._layout.guard, True
    )
    quotients = [Polynomial._raw(ring, qk, qc) for qk, qc in qs]
    return quotients, Polynomial._raw(ring, rk, rc)


# ---------------------------------------------------------------------------
# text format


def _format_coef(c) -> str:
    return str(c)


def format_monomial(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps, 1):
        if e == 1:
            parts.append(f"z{i}")
        elif e:
            parts.append(f"z{i}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Render as e.g. ``z1*z2*z3 - z1*z2 - z2*z3 + z2``."""
    if not p:
        return "0"
    out = []
    dec = p.ring._layout.decode
    for idx, (k, c) in enumerate(zip(p._keys, p._coefs)):
        mono = format_monomial(dec(k))
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _format_coef(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coef(a)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|z(\d+)|(\*\*|[-+*/^()]))")


def max_variable_index(text: str) -> int:
    """Largest ``i`` such that ``z<i>`` occurs in ``text`` (0 if none)."""
    return max((int(m) for m in re.findall(r"z(\d+)", text)), default=0)


class _Parser:
    """Recursive-descent parser for the polynomial text format.

    Accepts sums of products of integers, ``z<i>`` variables, ``^``/``**``
    powers, parentheses and division by nonzero constants.
    """

    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m or m.end() == pos:
                raise PolynomialParseError(f"unexpected character at offset {pos} in {text!r}")
            if m.group(1) is not None:
                self.tokens.append(("num", int(m.group(1))))
            elif m.group(2) is not None:
                self.tokens.append(("var", int(m.group(2))))
            else:
                op = m.group(3)
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, what):
        raise PolynomialParseError(f"{what} in {self.text!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._fail("empty polynomial")
        p = self._expr()
        if self.i != len(self.tokens):
            self._fail(f"unexpected token {self._peek()[1]!r}")
        return p

    def _expr(self):
        p = self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            _, op = self._next()
            q = self._term()
            p = p + q if op == "+" else p - q
        return p

    def _term(self):
        p = self._unary()
        while self._peek() in (("op", "*"), ("op", "/")):
            _, op = self._next()
            q = self._unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or not q:
                    self._fail("division by a non-constant or zero")
                p = p * (1 / q.lc)
        return p

    def _unary(self):
        if self._peek() == ("op", "-"):
            self._next()
            return -self._unary()
        if self._peek() == ("op", "+"):
            self._next()
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        if self._peek() == ("op", "^"):
            self._next()
            kind, val = self._next()
            if kind != "num":
                self._fail("exponent must be a nonnegative integer")
            if val > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {val} exceeds {MAX_EXPONENT}")
            base = base**val
        return base

    def _atom(self):
        kind, val = self._next()
        if kind == "num":
            return self.ring.const(val)
        if kind == "var":
            if not 1 <= val <= self.ring.nvars:
                self._fail(f"variable z{val} outside ring of dimension {self.ring.nvars}")
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            p = self._expr()
            if self._next() != ("op", ")"):
                self._fail("missing ')'")
            return p
        self._fail("unexpected end of input" if kind is None else f"unexpected token {val!r}")
