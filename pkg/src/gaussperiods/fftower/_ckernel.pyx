# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled arithmetic kernel for F_q[x]/Phi_r(x).

Same layout and signatures as ``_pykernel``; see that module for the element
encoding.  Coefficients live in int64 buffers, so p must stay below 2**31.
"""
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

BACKEND = "cython"


cdef struct Ctx:
    int r
    int k
    int64_t p
    int lazy
    int64_t mod[64]


cdef int _init_ctx(Ctx* c, int r, int k, int64_t p, mod) except -1:
    if k > 64:
        raise ValueError("extension degree above 64 not supported by the compiled kernel")
    if p >= (<int64_t>1 << 31):
        raise ValueError("characteristic must be below 2**31")
    c.r = r
    c.k = k
    c.p = p
    cdef uint64_t terms = <uint64_t>(2 * (r - 1) * k + 1)
    cdef uint64_t pm = <uint64_t>(p - 1)
    c.lazy = pm == 0 or pm * pm <= (<uint64_t>1 << 62) / terms
    cdef int j
    for j in range(k):
        c.mod[j] = (<int64_t>mod[j]) % p if k > 1 else 0
    return 0


cdef void _mul(const Ctx* c, const int64_t* a, const int64_t* b,
               int64_t* out, int64_t* acc) noexcept nogil:
    cdef int r = c.r, k = c.k, n = c.r - 1
    cdef int w = 2 * k - 1
    cdef int64_t p = c.p
    cdef int i, i2, j, j2, idx, base, d, lo, top
    cdef int64_t av, bv, cc
    memset(acc, 0, r * w * sizeof(int64_t))
    for i in range(n):
        for j in range(k):
            av = a[i * k + j]
            if av == 0:
                continue
            for i2 in range(n):
                idx = i + i2
                if idx >= r:
                    idx -= r
                base = idx * w + j
                for j2 in range(k):
                    bv = b[i2 * k + j2]
                    if bv != 0:
                        if c.lazy:
                            acc[base + j2] += av * bv
                        else:
                            acc[base + j2] = (acc[base + j2] + (av * bv) % p) % p
    for i in range(r * w):
        acc[i] %= p
    if k > 1:
        for idx in range(r):
            base = idx * w
            for d in range(w - 1, k - 1, -1):
                cc = acc[base + d]
                if cc != 0:
                    lo = base + d - k
                    for j in range(k):
                        acc[lo + j] = (acc[lo + j] + cc * (p - c.mod[j])) % p
    top = (r - 1) * w
    for i in range(n):
        base = i * w
        for j in range(k):
            cc = acc[base + j] - acc[top + j]
            if cc < 0:
                cc += p
            out[i * k + j] = cc


cdef int64_t* _load(seq, Py_ssize_t size) except NULL:
    cdef int64_t* buf = <int64_t*>malloc(size * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        buf[i] = seq[i]
    return buf


cdef list _dump(const int64_t* buf, Py_ssize_t size):
    return [buf[i] for i in range(size)]


def mul(a, b, int r, int k, int64_t p, mod):
    cdef Ctx c
    _init_ctx(&c, r, k, p, mod)
    cdef Py_ssize_t size = (r - 1) * k
    cdef int64_t* pa = _load(a, size)
    cdef int64_t* pb = NULL
    cdef int64_t* out = NULL
    cdef int64_t* acc = NULL
    try:
        pb = _load(b, size)
        out = <int64_t*>malloc(size * sizeof(int64_t))
        acc = <int64_t*>malloc(r * (2 * k - 1) * sizeof(int64_t))
        if out == NULL or acc == NULL:
            raise MemoryError()
        with nogil:
            _mul(&c, pa, pb, out, acc)
        return _dump(out, size)
    finally:
        free(pa)
        free(pb)
        free(out)
        free(acc)


def power(a, e, int r, int k, int64_t p, mod):
    cdef Ctx c
    _init_ctx(&c, r, k, p, mod)
    cdef Py_ssize_t size = (r - 1) * k
    if e < 0:
        raise ValueError("negative exponent")
    if e == 0:
        one = [0] * size
        one[0] = 1
        return one
    cdef bytes ebytes = int(e).to_bytes((int(e).bit_length() + 7) // 8, "big")
    cdef const unsigned char* eb = ebytes
    cdef Py_ssize_t nbytes = len(ebytes)
    cdef int64_t* base = _load(a, size)
    cdef int64_t* res = NULL
    cdef int64_t* tmp = NULL
    cdef int64_t* acc = NULL
    cdef int64_t* swap
    cdef Py_ssize_t bi
    cdef int bit, started = 0
    try:
        res = <int64_t*>malloc(size * sizeof(int64_t))
        tmp = <int64_t*>malloc(size * sizeof(int64_t))
        acc = <int64_t*>malloc(r * (2 * k - 1) * sizeof(int64_t))
        if res == NULL or tmp == NULL or acc == NULL:
            raise MemoryError()
        with nogil:
            for bi in range(nbytes):
                for bit in range(7, -1, -1):
                    if started:
                        _mul(&c, res, res, tmp, acc)
                        swap = res; res = tmp; tmp = swap
                        if (eb[bi] >> bit) & 1:
                            _mul(&c, res, base, tmp, acc)
                            swap = res; res = tmp; tmp = swap
                    elif (eb[bi] >> bit) & 1:
                        memcpy(res, base, size * sizeof(int64_t))
                        started = 1
        return _dump(res, size)
    finally:
        free(base)
        free(res)
        free(tmp)
        free(acc)
