"""Pure-Python arithmetic kernel for F_q[x]/Phi_r(x).

Elements are flat sequences of ``(r - 1) * k`` integers in ``[0, p)``:
index ``i * k + j`` holds the F_p coefficient of ``x**i * y**j``, where
``y`` generates F_q = F_p[y]/(m(y)).  ``mod`` lists the low coefficients
``m_0 .. m_{k-1}`` of the monic modulus ``m``; it is ignored when ``k == 1``.

The compiled kernel exposes the same functions with the same signatures.
"""

BACKEND = "python"


def _reduce(acc, r, k, p, mod):
    # acc holds r slots of width w = 2k - 1 (x-degree folded below r already)
    w = 2 * k - 1
    if k > 1:
        for base in range(0, r * w, w):
            for d in range(w - 1, k - 1, -1):
                c = acc[base + d] % p
                if c:
                    lo = base + d - k
                    for j in range(k):
                        acc[lo + j] -= c * mod[j]
    top = r - 1
    last = [acc[top * w + j] for j in range(k)]
    out = [0] * (top * k)
    for i in range(top):
        base = i * w
        for j in range(k):
            out[i * k + j] = (acc[base + j] - last[j]) % p
    return out


def _mul_prime(a, b, r, p):
    n = r - 1
    acc = [0] * (2 * n - 1)
    nz_b = [(j, bv) for j, bv in enumerate(b) if bv]
    for i, av in enumerate(a):
        if av:
            for j, bv in nz_b:
                acc[i + j] += av * bv
    # x^r = 1 folds degrees r .. 2r-4 back onto 0 .. r-4
    folded = acc[:r] if len(acc) >= r else acc + [0] * (r - len(acc))
    for d in range(r, len(acc)):
        folded[d - r] += acc[d]
    c = folded[n]
    return [(v - c) % p for v in folded[:n]]


def mul(a, b, r, k, p, mod):
    if k == 1:
        return _mul_prime(a, b, r, p)
    n = r - 1
    w = 2 * k - 1
    acc = [0] * (r * w)
    rows_b = []
    for i2 in range(n):
        row = [(j2, bv) for j2, bv in enumerate(b[i2 * k:(i2 + 1) * k]) if bv]
        if row:
            rows_b.append((i2, row))
    for i in range(n):
        row_a = [(j, av) for j, av in enumerate(a[i * k:(i + 1) * k]) if av]
        if not row_a:
            continue
        for i2, row in rows_b:
            idx = i + i2
            if idx >= r:
                idx -= r
            base = idx * w
            for j, av in row_a:
                for j2, bv in row:
                    acc[base + j + j2] += av * bv
    return _reduce(acc, r, k, p, mod)


def power(a, e, r, k, p, mod):
    one = [0] * ((r - 1) * k)
    one[0] = 1
    if e == 0:
        return one
    result = list(a)
    for bit in bin(e)[3:]:
        result = mul(result, result, r, k, p, mod)
        if bit == "1":
            result = mul(result, a, r, k, p, mod)
    return result
