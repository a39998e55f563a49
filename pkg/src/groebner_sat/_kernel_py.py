"""Pure-Python reduction kernels.

A polynomial is handled here as two parallel lists: ``keys`` (packed
monomials, strictly descending) and ``coefs`` (``int`` when integral,
otherwise a non-integral ``Fraction``). Packed monomials are Python ints
made of fixed-width fields whose top bit is a guard bit, so that

* the monomial order is integer comparison,
* multiplying monomials is integer addition,
* ``a`` divides ``b`` iff ``(b - a) & guard == 0``.

``_kernel.pyx`` implements the same functions; the two must agree exactly.
"""

from fractions import Fraction
from heapq import heappop, heappush


class ExponentOverflowError(OverflowError):
    """An exponent or degree field exceeded the fixed-width limit."""


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def coef_mul(a, b):
    if type(a) is int and type(b) is int:
        return a * b
    return _norm(a * b)


def coef_div(a, b):
    if type(b) is int:
        if b == 1:
            return a
        if type(a) is int:
            q, r = divmod(a, b)
            if not r:
                return q
            return Fraction(a, b)
    return _norm(Fraction(a) / b)


LEX, GRLEX, GREVLEX = 0, 1, 2
_W = 32
_M = (1 << _W) - 1
_MAXE = (1 << (_W - 1)) - 1


def decode(key, nvars):
    """Exponent tuple stored in the low ``nvars`` fields of a packed monomial."""
    sh = _W * (nvars - 1)
    exps = []
    for _ in range(nvars):
        exps.append((key >> sh) & _M)
        sh -= _W
    return tuple(exps)


def lcm(a, b, nvars, kind):
    """Packed lcm of two packed monomials."""
    return pack([x if x > y else y for x, y in zip(decode(a, nvars), decode(b, nvars))], nvars, kind)


def pack(exps, nvars, kind):
    """Packed monomial for an exponent sequence."""
    deg = 0
    for e in exps:
        deg += e
    if deg > _MAXE:
        raise ExponentOverflowError(f"degree {deg} exceeds {_MAXE}")
    key = 0
    if kind == GRLEX or (kind == GREVLEX and not nvars):
        key = deg
    elif kind == GREVLEX:
        key = deg
        s = deg
        for i in range(nvars - 1, 0, -1):
            s -= exps[i]
            key = (key << _W) | s
    for e in exps:
        key = (key << _W) | e
    return key


def _overflow(key):
    raise ExponentOverflowError(f"exponent field overflow in monomial key {key:#x}")


def add_scaled(ak, ac, astart, bk, bc, bstart, shift, factor, guard):
    """Return ``a[astart:] + factor * x**shift * b[bstart:]`` as (keys, coefs)."""
    out_k = []
    out_c = []
    na = len(ak)
    nb = len(bk)
    i = astart
    j = bstart
    check = shift != 0
    if j < nb:
        kb = bk[j] + shift
        if check and kb & guard:
            _overflow(kb)
    while i < na and j < nb:
        ka = ak[i]
        if ka > kb:
            out_k.append(ka)
            out_c.append(ac[i])
            i += 1
            continue
        cb = bc[j]
        if type(cb) is int and type(factor) is int:
            cb = cb * factor
        else:
            cb = _norm(cb * factor)
        if ka < kb:
            out_k.append(kb)
            out_c.append(cb)
        else:
            ca = ac[i]
            if type(ca) is int and type(cb) is int:
                c = ca + cb
            else:
                c = _norm(ca + cb)
            if c:
                out_k.append(ka)
                out_c.append(c)
            i += 1
        j += 1
        if j < nb:
            kb = bk[j] + shift
            if check and kb & guard:
                _overflow(kb)
    if i < na:
        out_k.extend(ak[i:])
        out_c.extend(ac[i:])
    while j < nb:
        kb = bk[j] + shift
        if check and kb & guard:
            _overflow(kb)
        out_k.append(kb)
        out_c.append(coef_mul(bc[j], factor))
        j += 1
    return out_k, out_c


def scale_shift(keys, coefs, shift, factor, guard):
    """Return ``factor * x**shift * p``; ``factor`` must be nonzero."""
    if shift:
        out_k = []
        for k in keys:
            k += shift
            if k & guard:
                _overflow(k)
            out_k.append(k)
    else:
        out_k = list(keys)
    if factor == 1:
        return out_k, list(coefs)
    return out_k, [coef_mul(c, factor) for c in coefs]


def mul(ak, ac, bk, bc, guard):
    """Product of two polynomials."""
    if len(ak) > len(bk):
        ak, ac, bk, bc = bk, bc, ak, ac
    acc = {}
    get = acc.get
    for ka, ca in zip(ak, ac):
        for kb, cb in zip(bk, bc):
            k = ka + kb
            if k & guard:
                _overflow(k)
            prev = get(k)
            prod = coef_mul(ca, cb)
            if prev is None:
                acc[k] = prod
            elif type(prev) is int and type(prod) is int:
                acc[k] = prev + prod
            else:
                acc[k] = _norm(prev + prod)
    out_k = sorted((k for k, c in acc.items() if c), reverse=True)
    return out_k, [acc[k] for k in out_k]


def spoly(ak, ac, bk, bc, lcm, guard):
    """S-polynomial ``(lcm/LT(a)) a - (lcm/LT(b)) b`` with the leading terms cancelled."""
    fa = coef_div(1, ac[0])
    fb = coef_div(-1, bc[0])
    sk, sc = scale_shift(ak[1:], ac[1:], lcm - ak[0], fa, guard)
    return add_scaled(sk, sc, 0, bk, bc, 1, lcm - bk[0], fb, guard)


def reduce(keys, coefs, basis, guard, want_quotients=False):
    """Multivariate division of ``(keys, coefs)`` by ``basis``.

    The leading term is reduced first, scanning ``basis`` in list order.
    Returns ``(rem_keys, rem_coefs, quotients)``; ``quotients`` is a list of
    ``(keys, coefs)`` pairs, or None unless ``want_quotients``.
    """
    nb = len(basis)
    lms = [g[0][0] for g in basis]
    lcs = [g[1][0] for g in basis]
    qs = [([], []) for _ in range(nb)] if want_quotients else None
    rk = []
    rc = []
    pk = keys
    pc = coefs
    pos = 0
    while pos < len(pk):
        lead = pk[pos]
        for j in range(nb):
            d = lead - lms[j]
            if not d & guard:
                break
        else:
            rk.append(lead)
            rc.append(pc[pos])
            pos += 1
            continue
        c = coef_div(pc[pos], lcs[j])
        if qs is not None:
            qs[j][0].append(d)
            qs[j][1].append(c)
        gk, gc = basis[j]
        pk, pc = add_scaled(pk, pc, pos + 1, gk, gc, 1, d, -c, guard)
        pos = 0
    return rk, rc, qs


NORMAL, FIRST, DEGREE = 0, 1, 2


def buchberger(gens, nvars, kind, guard, one_key, strategy, coprime, chain, budget):
    """Complete ``gens`` (nonzero ``(keys, coefs)`` pairs) to a Gröbner basis.

    Returns ``(basis, stats, exhausted)`` where ``stats`` is
    ``(pairs_processed, pairs_coprime, pairs_chain, zero_reductions)``.
    Coprime pairs are dropped when they are created; the chain test runs
    when a pair is selected. A nonzero constant stops the run.
    """
    basis = []
    lms = []
    exps = []
    heap = []
    pending = set()
    counter = 0
    n_proc = n_cop = n_chain = n_zero = 0

    def insert(keys, coefs):
        nonlocal counter, n_cop
        lc = coefs[0]
        if lc != 1:
            inv = coef_div(1, lc)
            coefs = [coef_mul(c, inv) for c in coefs]
        j = len(basis)
        e = decode(keys[0], nvars)
        for i in range(j):
            ei = exps[i]
            if coprime and all(not x or not y for x, y in zip(ei, e)):
                n_cop += 1
                continue
            m = [x if x > y else y for x, y in zip(ei, e)]
            key = pack(m, nvars, kind)
            if strategy == NORMAL:
                prio = key
            elif strategy == FIRST:
                prio = counter
            else:
                prio = sum(m)
            counter += 1
            heappush(heap, (prio, i, j, key))
            pending.add((i, j))
        basis.append((keys, coefs))
        lms.append(keys[0])
        exps.append(e)

    for keys, coefs in gens:
        insert(keys, coefs)
        if keys[0] == one_key:
            return basis, (n_proc, n_cop, n_chain, n_zero), False

    while heap:
        _, i, j, key = heappop(heap)
        pending.discard((i, j))
        if chain:
            hit = False
            for t in range(len(basis)):
                if t == i or t == j or (key - lms[t]) & guard:
                    continue
                if ((i, t) if i < t else (t, i)) in pending or ((j, t) if j < t else (t, j)) in pending:
                    continue
                hit = True
                break
            if hit:
                n_chain += 1
                continue
        if budget >= 0 and n_proc >= budget:
            return basis, (n_proc, n_cop, n_chain, n_zero), True
        n_proc += 1
        fk, fc = basis[i]
        gk, gc = basis[j]
        sk, sc = spoly(fk, fc, gk, gc, key, guard)
        rk, rc, _ = reduce(sk, sc, basis, guard)
        if not rk:
            n_zero += 1
            continue
        insert(rk, rc)
        if rk[0] == one_key:
            break
    return basis, (n_proc, n_cop, n_chain, n_zero), False
