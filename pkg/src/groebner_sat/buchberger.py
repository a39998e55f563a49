"""Buchberger's algorithm and reduced Gröbner bases."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from groebner_sat import kernel
from groebner_sat.polyring import Ideal, MonomialOrder, PolyRing, Polynomial

STRATEGIES = ("normal", "first", "degree")

__all__ = [
    "BudgetExhausted",
    "BuchbergerStats",
    "GroebnerBasis",
    "STRATEGIES",
    "buchberger",
    "groebner",
    "is_groebner",
    "reduce_basis",
    "s_polynomial",
]


@dataclass
class BuchbergerStats:
    pairs_processed: int = 0
    pairs_coprime: int = 0
    pairs_chain: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    elapsed: float = 0.0

    def merge(self, other: BuchbergerStats) -> None:
        self.pairs_processed += other.pairs_processed
        self.pairs_coprime += other.pairs_coprime
        self.pairs_chain += other.pairs_chain
        self.zero_reductions += other.zero_reductions
        self.elapsed += other.elapsed


class BudgetExhausted(RuntimeError):
    """Raised when a run exceeds its pair-reduction budget; carries partial stats."""

    def __init__(self, budget: int, stats: BuchbergerStats):
        super().__init__(f"budget of {budget} pair reductions exhausted")
        self.budget = budget
        self.stats = stats


@dataclass(frozen=True)
class GroebnerBasis:
    polynomials: tuple
    ring: PolyRing
    reduced: bool = False
    stats: BuchbergerStats | None = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def is_unit(self) -> bool:
        """True iff this is exactly the basis ``{1}``."""
        return len(self.polynomials) == 1 and self.polynomials[0] == 1

    def __iter__(self):
        return iter(self.polynomials)

    def __len__(self):
        return len(self.polynomials)

    def __str__(self):
        return "\n".join(str(p) for p in self.polynomials)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | str | None = None) -> Polynomial:
    if order is not None:
        f, g = f.to_order(order), g.to_order(order)
    if f.ring != g.ring:
        raise ValueError(f"ring mismatch: {f.ring} vs {g.ring}")
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    lay = f.ring._layout
    lcm = lay.lcm(f._keys[0], g._keys[0])
    k, c = kernel.spoly(f._keys, f._coefs, g._keys, g._coefs, lcm, lay.guard)
    return Polynomial._raw(f.ring, k, c)


def _monic_raw(keys, coefs):  # reduced-basis normalization
    lc = coefs[0]
    if lc == 1:
        return keys, coefs
    inv = kernel.coef_div(1, lc)
    return keys, [kernel.coef_mul(c, inv) for c in coefs]


def _prepare(ideal, order) -> tuple[PolyRing, list[Polynomial]]:
    if isinstance(ideal, Ideal):
        ring, gens = ideal.ring, list(ideal.generators)
    else:
        gens = [g for g in ideal if g]
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list; pass an Ideal")
        ring = gens[0].ring
    if order is not None and MonomialOrder(order) is not ring.order:
        ring = ring.with_order(order)
        gens = [g.to_order(order) for g in gens]
    for g in gens:
        if g.ring != ring:
            raise ValueError(f"ring mismatch: {g.ring} vs {ring}")
    return ring, gens


def buchberger(
    ideal: Ideal | Sequence[Polynomial],
    *,
    order: MonomialOrder | str | None = None,
    strategy: str = "normal",
    coprime: bool = True,
    chain: bool = True,
    budget: int | None = None,
) -> GroebnerBasis:
    """Complete the generators of ``ideal`` to a (non-reduced) Gröbner basis.

    Critical pairs are selected by ``strategy``: ``normal`` takes the smallest
    lcm under the order, ``first`` takes pairs in creation order, ``degree``
    the smallest total degree of the lcm; ties break on the index pair.
    ``coprime`` drops pairs with coprime leading monomials and ``chain``
    drops a pair (i, j) when some other leading monomial divides its lcm and
    both of its pairs with i and j are already settled.

    Every S-polynomial remainder is fully reduced and made monic before it is
    added. If a nonzero constant appears the run stops early: the ideal is the
    unit ideal and any set containing 1 is a Gröbner basis of it.

    ``budget`` caps the number of S-polynomial reductions; exceeding it raises
    :class:`BudgetExhausted`.
    """
    t0 = time.perf_counter()
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown pair strategy {strategy!r}")
    ring, gens = _prepare(ideal, order)
    lay = ring._layout
    raw, counts, exhausted = kernel.buchberger(
        [(list(g._keys), list(g._coefs)) for g in gens],
        ring.nvars,
        lay.kind,
        lay.guard,
        lay.one_key,
        STRATEGIES.index(strategy),
        coprime,
        chain,
        -1 if budget is None else budget,
    )
    stats = BuchbergerStats(*counts, basis_size=len(raw), elapsed=time.perf_counter() - t0)
    if exhausted:
        raise BudgetExhausted(budget, stats)
    polys = tuple(Polynomial._raw(ring, k, c) for k, c in raw)
    return GroebnerBasis(polys, ring, reduced=False, stats=stats)


def reduce_basis(G: GroebnerBasis | Sequence[Polynomial]) -> GroebnerBasis:
    """Turn a Gröbner basis into the unique reduced one.

    The result is monic, interreduced, and sorted by leading monomial,
    largest first.
    """
    if isinstance(G, GroebnerBasis):
        ring, polys, stats = G.ring, [p for p in G.polynomials if p], G.stats
    else:
        polys = [p for p in G if p]
        if not polys:
            raise ValueError("cannot infer the ring of an empty basis; pass a GroebnerBasis")
        ring, stats = polys[0].ring, None
    guard = ring._layout.guard
    minimal: list[Polynomial] = []
    for p in sorted(polys, key=lambda p: (p._keys[0], len(p._keys))):
        lm = p._keys[0]
        if any(not (lm - q._keys[0]) & guard for q in minimal):
            continue
        minimal.append(p)
    reduced = []
    for idx, p in enumerate(minimal):
        others = [(q._keys, q._coefs) for n, q in enumerate(minimal) if n != idx]
        rk, rc, _ = kernel.reduce(p._keys, p._coefs, others, guard)
        rk, rc = _monic_raw(rk, rc)
        reduced.append(Polynomial._raw(ring, rk, rc))
    reduced.sort(key=lambda p: p._keys[0], reverse=True)
    if stats is not None:
        stats.basis_size = len(reduced)
    return GroebnerBasis(tuple(reduced), ring, reduced=True, stats=stats)


def groebner(ideal: Ideal | Sequence[Polynomial], **kwargs) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal``; keyword arguments go to :func:`buchberger`."""
    ring, _ = _prepare(ideal, kwargs.get("order"))
    if isinstance(ideal, Ideal) and not ideal.generators:
        return GroebnerBasis((), ring, reduced=True, stats=BuchbergerStats())
    return reduce_basis(buchberger(ideal, **kwargs))


def is_groebner(G: Iterable[Polynomial], order: MonomialOrder | str | None = None) -> bool:
    """Buchberger's criterion: every pairwise S-polynomial reduces to zero modulo ``G``."""
    polys = [p for p in G]
    if order is not None:
        polys = [p.to_order(order) for p in polys]
    if not polys:
        return True
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise ValueError(f"ring mismatch: {p.ring} vs {ring}")
        if not p:
            raise ValueError("Gröbner basis elements must be nonzero")
    lay = ring._layout
    raw = [(p._keys, p._coefs) for p in polys]
    for j in range(len(raw)):
        for i in range(j):
            lcm = lay.lcm(raw[i][0][0], raw[j][0][0])
            sk, sc = kernel.spoly(raw[i][0], raw[i][1], raw[j][0], raw[j][1], lcm, lay.guard)
            rk, _, _ = kernel.reduce(sk, sc, raw, lay.guard)
            if rk:
                return False
    return True
