"""Dense integer polynomials with coefficients mod M.

Polynomials are little-endian lists of Python ints.  These helpers back the
basic-primitive search, Hensel lifting, and residue-field arithmetic; they
never see a ring element, only integers.
"""


def trim(a):
    """Drop trailing zero coefficients ([] is the zero polynomial)."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a, m):
    return trim(c % m for c in a)


def padd(a, b, m):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim((x + y) % m for x, y in zip(a, b))


def psub(a, b, m):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim((x - y) % m for x, y in zip(a, b))


def pmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(c % m for c in out)


def pscale(a, c, m):
    return trim((x * c) % m for x in a)


def pdivmod_monic(a, b, m):
    """Divide a by monic b; exact long division over Z/m."""
    b = trim(b)
    if not b or b[-1] % m != 1:
        raise ValueError("divisor must be monic")
    a = [c % m for c in a]
    db = len(b) - 1
    if db == 0:
        return pmod(a, m), []
    q = [0] * max(len(a) - db, 0)
    r = list(a)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % m
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % m
    return trim(q), trim(r)


def ppowmod(base, e, modpoly, m):
    """base**e reduced mod (modpoly, m) by square and multiply."""
    result = [1]
    acc = pdivmod_monic(base, modpoly, m)[1]
    while e:
        if e & 1:
            result = pdivmod_monic(pmul(result, acc, m), modpoly, m)[1]
        acc = pdivmod_monic(pmul(acc, acc, m), modpoly, m)[1]
        e >>= 1
    return result


def peval(a, x, m):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % m
    return acc


def fp_make_monic(a, p):
    a = pmod(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return pscale(a, inv, p)


def fp_gcd(a, b, p):
    """Monic gcd over the field Z/p."""
    a, b = pmod(a, p), pmod(b, p)
    while b:
        a, b = b, pdivmod_monic(a, fp_make_monic(b, p), p)[1]
        # keep reducing against the monic associate of b
    return fp_make_monic(a, p)


def fp_ext_gcd(a, b, p):
    """Return (g, s, t) monic with s*a + t*b = g over Z/p."""
    r0, r1 = pmod(a, p), pmod(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        lead_inv = pow(r1[-1], -1, p)
        q, r = pdivmod_monic(r0, pscale(r1, lead_inv, p), p)
        q = pscale(q, lead_inv, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return pscale(r0, inv, p), pscale(s0, inv, p), pscale(t0, inv, p)


def fp_is_irreducible(f, p):
    """Irreducibility of monic f over Z/p via the x^(p^i) - x gcd criterion."""
    f = pmod(f, p)
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    if ppowmod(x, p**d, f, p) != pdivmod_monic(x, f, p)[1]:
        return False
    for q in factorize(d):
        if fp_gcd(psub(ppowmod(x, p ** (d // q), f, p), x, p), f, p) != [1]:
            return False
    return True


def fp_is_primitive(f, p):
    """Primitivity of monic f over Z/p: its root generates the unit group."""
    f = pmod(f, p)
    d = len(f) - 1
    if d < 1 or f[0] == 0 or not fp_is_irreducible(f, p):
        return False
    order = p**d - 1
    x = [0, 1]
    for q in factorize(order):
        if ppowmod(x, order // q, f, p) == [1]:
            return False
    return True


def factorize(n):
    """Prime factorization by trial division, as a dict prime -> exponent."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True
