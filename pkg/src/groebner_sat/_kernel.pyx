# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled reduction kernels; same contract as ``_kernel_py``."""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport calloc, free, malloc, realloc
from libc.string cimport memcpy

from fractions import Fraction
from heapq import heappop, heappush

from groebner_sat._kernel_py import ExponentOverflowError

cdef object _Fraction = Fraction
cdef object _from_bytes = int.from_bytes

DEF W = 32
cdef object _M = (1 << W) - 1
cdef Py_ssize_t _MAXE = (1 << (W - 1)) - 1


cdef inline object _norm(object x):
    if type(x) is _Fraction and x.denominator == 1:
        return x.numerator
    return x


cdef inline object _cmul(object a, object b):
    if type(a) is int and type(b) is int:
        return a * b
    return _norm(a * b)


cdef inline object _cadd(object a, object b):
    if type(a) is int and type(b) is int:
        return a + b
    return _norm(a + b)


cpdef object coef_mul(object a, object b):
    return _cmul(a, b)


cpdef object coef_div(object a, object b):
    if type(b) is int:
        if b == 1:
            return a
        if type(a) is int:
            q, r = divmod(a, b)
            if not r:
                return q
            return _Fraction(a, b)
    return _norm(_Fraction(a) / b)


cdef void _overflow(object key) except *:
    raise ExponentOverflowError(f"exponent field overflow in monomial key {key:#x}")


cdef inline Py_ssize_t _nfields(Py_ssize_t nvars, int kind):
    if kind == 0:
        return nvars
    if kind == 1:
        return nvars + 1
    return 2 * nvars if nvars else 1


cdef object _pack_c(const int *exps, Py_ssize_t nvars, int kind, unsigned char *buf):
    """Pack ``exps`` using ``buf`` (at least 4 * nfields bytes) as scratch."""
    cdef Py_ssize_t nf = _nfields(nvars, kind), i, f = 0
    cdef long long deg = 0, s
    for i in range(nvars):
        deg += exps[i]
    if deg > _MAXE:
        raise ExponentOverflowError(f"degree {deg} exceeds {_MAXE}")
    if kind != 0:
        _put(buf, f, deg)
        f += 1
    if kind == 2:
        s = deg
        for i in range(nvars - 1, 0, -1):
            s -= exps[i]
            _put(buf, f, s)
            f += 1
    for i in range(nvars):
        _put(buf, f, exps[i])
        f += 1
    return _from_bytes(PyBytes_FromStringAndSize(<char *>buf, 4 * nf), "big")


cdef inline void _put(unsigned char *buf, Py_ssize_t f, long long v):
    buf[4 * f] = (v >> 24) & 0xFF
    buf[4 * f + 1] = (v >> 16) & 0xFF
    buf[4 * f + 2] = (v >> 8) & 0xFF
    buf[4 * f + 3] = v & 0xFF


cdef void _decode_c(object key, Py_ssize_t nvars, int kind, int *out) except *:
    cdef Py_ssize_t nf = _nfields(nvars, kind), i, off
    cdef bytes b = key.to_bytes(4 * nf, "big")
    cdef const unsigned char *p = <const unsigned char *>b
    off = 4 * (nf - nvars)
    for i in range(nvars):
        out[i] = (p[off] << 24) | (p[off + 1] << 16) | (p[off + 2] << 8) | p[off + 3]
        off += 4


cpdef tuple decode(object key, Py_ssize_t nvars):
    cdef Py_ssize_t i, sh = W * (nvars - 1)
    cdef list exps = []
    for i in range(nvars):
        exps.append((key >> sh) & _M)
        sh -= W
    return tuple(exps)


cpdef object pack(object exps, Py_ssize_t nvars, int kind):
    cdef Py_ssize_t i
    cdef int *e = <int *>malloc((nvars + 1) * sizeof(int))
    cdef unsigned char *buf = <unsigned char *>malloc(4 * (_nfields(nvars, kind) + 1))
    try:
        for i in range(nvars):
            if exps[i] > _MAXE:
                raise ExponentOverflowError(f"exponent {exps[i]} exceeds {_MAXE}")
            e[i] = exps[i]
        return _pack_c(e, nvars, kind, buf)
    finally:
        free(e)
        free(buf)


cpdef object lcm(object a, object b, Py_ssize_t nvars, int kind):
    cdef Py_ssize_t i
    cdef int *ea = <int *>malloc(2 * (nvars + 1) * sizeof(int))
    cdef int *eb = ea + nvars + 1
    cdef unsigned char *buf = <unsigned char *>malloc(4 * (_nfields(nvars, kind) + 1))
    try:
        _decode_c(a, nvars, kind, ea)
        _decode_c(b, nvars, kind, eb)
        for i in range(nvars):
            if eb[i] > ea[i]:
                ea[i] = eb[i]
        return _pack_c(ea, nvars, kind, buf)
    finally:
        free(ea)
        free(buf)


cpdef tuple add_scaled(list ak, list ac, Py_ssize_t astart, list bk, list bc,
                       Py_ssize_t bstart, object shift, object factor, object guard):
    cdef list out_k = []
    cdef list out_c = []
    cdef Py_ssize_t na = len(ak), nb = len(bk)
    cdef Py_ssize_t i = astart, j = bstart
    cdef bint check = shift != 0
    cdef bint fint = type(factor) is int
    cdef object ka, kb = None, cb, ca, c
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
        if fint and type(cb) is int:
            cb = cb * factor
        else:
            cb = _norm(cb * factor)
        if ka < kb:
            out_k.append(kb)
            out_c.append(cb)
        else:
            c = _cadd(ac[i], cb)
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
        out_c.append(_cmul(bc[j], factor))
        j += 1
    return out_k, out_c


cpdef tuple scale_shift(list keys, list coefs, object shift, object factor, object guard):
    cdef list out_k
    cdef object k
    if shift:
        out_k = []
        for k in keys:
            k = k + shift
            if k & guard:
                _overflow(k)
            out_k.append(k)
    else:
        out_k = list(keys)
    if factor == 1:
        return out_k, list(coefs)
    return out_k, [_cmul(c, factor) for c in coefs]


cpdef tuple mul(list ak, list ac, list bk, list bc, object guard):
    if len(ak) > len(bk):
        ak, ac, bk, bc = bk, bc, ak, ac
    cdef dict acc = {}
    cdef Py_ssize_t i, j, na = len(ak), nb = len(bk)
    cdef object ka, ca, k, prev, prod
    for i in range(na):
        ka = ak[i]
        ca = ac[i]
        for j in range(nb):
            k = ka + bk[j]
            if k & guard:
                _overflow(k)
            prod = _cmul(ca, bc[j])
            prev = acc.get(k)
            if prev is None:
                acc[k] = prod
            else:
                acc[k] = _cadd(prev, prod)
    cdef list out_k = sorted([k for k, c in acc.items() if c], reverse=True)
    return out_k, [acc[k] for k in out_k]


cpdef tuple spoly(list ak, list ac, list bk, list bc, object lcm, object guard):
    fa = coef_div(1, ac[0])
    fb = coef_div(-1, bc[0])
    sk, sc = scale_shift(ak[1:], ac[1:], lcm - ak[0], fa, guard)
    return add_scaled(sk, sc, 0, bk, bc, 1, lcm - bk[0], fb, guard)


def reduce(list keys, list coefs, list basis, object guard, bint want_quotients=False):
    cdef Py_ssize_t nb = len(basis), j, pos = 0
    cdef list lms = [g[0][0] for g in basis]
    cdef list lcs = [g[1][0] for g in basis]
    cdef list qs = [([], []) for _ in range(nb)] if want_quotients else None
    cdef list rk = [], rc = []
    cdef list pk = keys, pc = coefs
    cdef object lead, d, c
    cdef bint found
    while pos < len(pk):
        lead = pk[pos]
        found = False
        for j in range(nb):
            d = lead - lms[j]
            if not (d & guard):
                found = True
                break
        if not found:
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


cdef class _Run:
    """State of one completion run: basis, leading exponents, pair queue."""

    cdef Py_ssize_t nvars, n, cap
    cdef int kind, strategy
    cdef bint coprime
    cdef int *E
    cdef int *tmp
    cdef char *P
    cdef unsigned char *buf
    cdef list basis, lms, heap
    cdef object guard
    cdef long long counter
    cdef public long long n_proc, n_cop, n_chain, n_zero

    def __cinit__(self, Py_ssize_t nvars, int kind, object guard, int strategy, bint coprime):
        self.nvars = nvars
        self.kind = kind
        self.guard = guard
        self.strategy = strategy
        self.coprime = coprime
        self.n = 0
        self.cap = 16
        self.E = <int *>malloc(self.cap * (nvars + 1) * sizeof(int))
        self.tmp = <int *>malloc(2 * (nvars + 1) * sizeof(int))
        self.P = <char *>calloc(self.cap * self.cap, 1)
        self.buf = <unsigned char *>malloc(4 * (_nfields(nvars, kind) + 1))
        if not self.E or not self.tmp or not self.P or not self.buf:
            raise MemoryError()
        self.basis = []
        self.lms = []
        self.heap = []

    def __dealloc__(self):
        free(self.E)
        free(self.tmp)
        free(self.P)
        free(self.buf)

    cdef void _grow(self) except *:
        cdef Py_ssize_t newcap = 2 * self.cap, r
        cdef int *E = <int *>realloc(self.E, newcap * (self.nvars + 1) * sizeof(int))
        if not E:
            raise MemoryError()
        self.E = E
        cdef char *P = <char *>calloc(newcap * newcap, 1)
        if not P:
            raise MemoryError()
        for r in range(self.cap):
            memcpy(P + r * newcap, self.P + r * self.cap, self.cap)
        free(self.P)
        self.P = P
        self.cap = newcap

    cdef inline int *row(self, Py_ssize_t i):
        return self.E + i * (self.nvars + 1)

    cdef void _lcm_into(self, Py_ssize_t i, Py_ssize_t j, int *out):
        cdef int *a = self.row(i)
        cdef int *b = self.row(j)
        cdef Py_ssize_t v
        for v in range(self.nvars):
            out[v] = a[v] if a[v] > b[v] else b[v]

    cdef void insert(self, list keys, list coefs) except *:
        cdef object lc = coefs[0], inv, key, prio
        cdef Py_ssize_t i, j, v
        cdef int *e
        cdef int *ei
        cdef bint disjoint
        cdef long long deg
        if lc != 1:
            inv = coef_div(1, lc)
            coefs = [_cmul(c, inv) for c in coefs]
        if self.n == self.cap:
            self._grow()
        j = self.n
        e = self.row(j)
        _decode_c(keys[0], self.nvars, self.kind, e)
        for i in range(j):
            ei = self.row(i)
            if self.coprime:
                disjoint = True
                for v in range(self.nvars):
                    if ei[v] and e[v]:
                        disjoint = False
                        break
                if disjoint:
                    self.n_cop += 1
                    continue
            self._lcm_into(i, j, self.tmp)
            key = _pack_c(self.tmp, self.nvars, self.kind, self.buf)
            if self.strategy == 0:
                prio = key
            elif self.strategy == 1:
                prio = self.counter
            else:
                deg = 0
                for v in range(self.nvars):
                    deg += self.tmp[v]
                prio = deg
            self.counter += 1
            heappush(self.heap, (prio, i, j, key))
            self.P[i * self.cap + j] = 1
        self.basis.append((keys, coefs))
        self.lms.append(keys[0])
        self.n += 1

    cdef bint chain_hit(self, Py_ssize_t i, Py_ssize_t j):
        cdef Py_ssize_t l, v, a, b
        cdef int *L = self.tmp
        cdef int *el
        cdef bint divides
        self._lcm_into(i, j, L)
        for l in range(self.n):
            if l == i or l == j:
                continue
            el = self.row(l)
            divides = True
            for v in range(self.nvars):
                if el[v] > L[v]:
                    divides = False
                    break
            if not divides:
                continue
            a, b = (i, l) if i < l else (l, i)
            if self.P[a * self.cap + b]:
                continue
            a, b = (j, l) if j < l else (l, j)
            if self.P[a * self.cap + b]:
                continue
            return True
        return False

    cdef tuple reduce(self, list keys, list coefs):
        """Full reduction by the current basis using the C exponent rows."""
        cdef Py_ssize_t nb = self.n, j, v, pos = 0
        cdef list rk = [], rc = []
        cdef list pk = keys, pc = coefs
        cdef object lead, c
        cdef int *lead_e = self.tmp + self.nvars + 1
        cdef int *ej
        cdef bint found
        while pos < len(pk):
            lead = pk[pos]
            _decode_c(lead, self.nvars, self.kind, lead_e)
            found = False
            for j in range(nb):
                ej = self.row(j)
                found = True
                for v in range(self.nvars):
                    if ej[v] > lead_e[v]:
                        found = False
                        break
                if found:
                    break
            if not found:
                rk.append(lead)
                rc.append(pc[pos])
                pos += 1
                continue
            gk, gc = self.basis[j]
            c = pc[pos]
            pk, pc = add_scaled(pk, pc, pos + 1, gk, gc, 1, lead - self.lms[j], -c, self.guard)
            pos = 0
        return rk, rc


def buchberger(list gens, Py_ssize_t nvars, int kind, object guard, object one_key,
               int strategy, bint coprime, bint chain, long long budget):
    cdef _Run run = _Run(nvars, kind, guard, strategy, coprime)
    cdef Py_ssize_t i, j
    cdef object key
    cdef list sk, sc, rk, rc
    for keys, coefs in gens:
        run.insert(keys, coefs)
        if keys[0] == one_key:
            return run.basis, (run.n_proc, run.n_cop, run.n_chain, run.n_zero), False
    while run.heap:
        _, i, j, key = heappop(run.heap)
        run.P[i * run.cap + j] = 0
        if chain and run.chain_hit(i, j):
            run.n_chain += 1
            continue
        if budget >= 0 and run.n_proc >= budget:
            return run.basis, (run.n_proc, run.n_cop, run.n_chain, run.n_zero), True
        run.n_proc += 1
        fk, fc = run.basis[i]
        gk, gc = run.basis[j]
        sk, sc = spoly(fk, fc, gk, gc, key, guard)
        rk, rc = run.reduce(sk, sc)
        if not rk:
            run.n_zero += 1
            continue
        run.insert(rk, rc)
        if rk[0] == one_key:
            break
    return run.basis, (run.n_proc, run.n_cop, run.n_chain, run.n_zero), False
