"""Primitive idempotents of S[X]/<X^N - 1> and R[X]/<X^N - 1>.

For each p-coset there is one idempotent eps_i with coefficients in S; each
splitting coset additionally carries r idempotents eps_{i,h} over R.  They cut
the cyclic ambient into the components K_i (over S) and L_i, K_{i,h} (over R)
that every additive cyclic code decomposes along.  All defining identities are
asserted at construction time rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import polyops
from .errors import UnknownComponentError
from .polyfactory import build_extension, classify_cosets, minimal_polynomial


@dataclass
class IdempotentSystem:
    """The eps_i / eps_{i,h} family for one (ring, N) pair."""

    ring: object
    N: int
    cls: object
    ext: object
    eps: tuple
    eps_split: dict
    m_polys: dict
    mu_perm: tuple
    theta: tuple = field(default=None)

    def eps_poly(self, i, h=None):
        if h is None:
            if 0 <= i <= self.cls.v:
                return list(self.eps[i])
            raise UnknownComponentError(f"no component {i}")
        if (i, h) in self.eps_split:
            return list(self.eps_split[(i, h)])
        raise UnknownComponentError(f"no split component ({i}, {h})")


_SYSTEM_CACHE = {}


def idempotent_system(ring, N):
    key = (ring.key, N)
    if key not in _SYSTEM_CACHE:
        cls = classify_cosets(N, ring.p, ring.r)
        ext = build_extension(ring, N)
        _SYSTEM_CACHE[key] = primitive_idempotents(ext, cls)
    return _SYSTEM_CACHE[key]


def primitive_idempotents(ext, cls):
    """Compute all eps_i and eps_{i,h} and assert the orthogonality laws."""
    ring = ext.base_ring
    big = ext.big_ring
    N = cls.N
    n_inv = pow(N, -1, ring.pn)

    def formula(coset, target):
        coeffs = []
        for j in range(N):
            acc = big.zero
            for l in coset:
                acc = acc + ext.eta_pow(-j * l)
            coeffs.append(ext.down(acc * n_inv, target))
        return tuple(coeffs)

    eps = tuple(formula(cls.cosets_p[i], "base") for i in range(cls.v + 1))
    eps_split = {
        (i, h): formula(cls.split_cosets[(i, h)], "full")
        for i in range(cls.u + 1, cls.v + 1)
        for h in range(ring.r)
    }

    m_polys = {
        "m": tuple(
            tuple(minimal_polynomial(cls.cosets_p[i], ext, "base")) for i in range(cls.v + 1)
        ),
        "m_split": {
            key: tuple(minimal_polynomial(cls.split_cosets[key], ext, "full"))
            for key in eps_split
        },
    }

    mu_perm = tuple(cls.coset_index_of(-cls.leaders[i]) for i in range(cls.v + 1))

    sys = IdempotentSystem(
        ring=ring,
        N=N,
        cls=cls,
        ext=ext,
        eps=eps,
        eps_split=eps_split,
        m_polys=m_polys,
        mu_perm=mu_perm,
    )
    sys.theta = tuple(trace_dual_basis(ring))
    _assert_identities(sys)
    return sys


def _assert_identities(sys):
    ring, N = sys.ring, sys.N
    mul = lambda a, b: polyops.pmul_mod_xn1(ring, a, b, N)
    one = polyops.pad(ring, [ring.one], N)
    zero = [ring.zero] * N

    total = [ring.zero] * N
    for i, ei in enumerate(sys.eps):
        total = polyops.padd(ring, total, ei)
        for j, ej in enumerate(sys.eps):
            prod = mul(ei, ej)
            want = list(ei) if i == j else zero
            assert prod == polyops.pad(ring, want, N), f"eps_{i} eps_{j} identity failed"
    assert total == one, "sum of eps_i is not 1"

    split_by_i = {}
    for (i, h), poly in sys.eps_split.items():
        split_by_i.setdefault(i, {})[h] = poly
    for i, group in split_by_i.items():
        subtotal = [ring.zero] * N
        for h, poly in group.items():
            subtotal = polyops.padd(ring, subtotal, poly)
            for h2, poly2 in group.items():
                prod = mul(poly, poly2)
                want = list(poly) if h == h2 else zero
                assert prod == polyops.pad(ring, want, N), f"eps_({i},{h}) eps_({i},{h2}) failed"
        assert subtotal == polyops.pad(ring, list(sys.eps[i]), N), f"sum_h eps_({i},h) != eps_{i}"
        for j, ej in enumerate(sys.eps):
            if j != i:
                for poly in group.values():
                    assert mul(ej, poly) == zero, f"eps_{j} eps_({i},h) != 0"

    # mu respects the two leader blocks and permutes the idempotents
    perm = sys.mu_perm
    assert perm[0] == 0
    assert all(1 <= perm[i] <= sys.cls.u for i in range(1, sys.cls.u + 1))
    assert all(sys.cls.u + 1 <= perm[i] <= sys.cls.v for i in range(sys.cls.u + 1, sys.cls.v + 1))
    for i, ei in enumerate(sys.eps):
        assert mu_involution(ring, ei, N) == list(sys.eps[perm[i]]), "mu(eps_i) != eps_mu(i)"


def mu_involution(ring, poly, N):
    """a(X) -> X^N a(X^{-1}) mod X^N - 1 (coefficient reversal)."""
    return polyops.mu_reverse(ring, poly, N)


def mu_perm(sys, i):
    return sys.mu_perm[i]


def trace_dual_basis(ring):
    """theta_j with Tr(w^i theta_j) = delta_{ij}, from gamma(X)/(X - w)."""
    gamma = [ring.from_int(c) for c in ring.f]
    quotient, rem = polyops.pdivmod_monic(ring, gamma, [-ring.omega, ring.one])
    assert not rem, "omega is not a root of its defining polynomial"
    denom = polyops.peval(ring, quotient, ring.omega).invert()
    theta = [c * denom for c in quotient]
    pows = [ring.one]
    for _ in range(ring.r - 1):
        pows.append(pows[-1] * ring.omega)
    for i in range(ring.r):
        for j in range(ring.r):
            want = ring.one if i == j else ring.zero
            assert ring.trace_to_base(pows[i] * theta[j]) == want, "trace dual basis failed"
    return theta


def component_basis(sys, kind, i, h=None):
    """Generators of K_i, L_i, or K_{i,h} as length-N coefficient vectors.

    K_i carries its S-basis {eps_i X^l : l < kappa_i}; K_{i,h} (= L_{i,h}) is
    spanned over S by {eps_{i,h} X^l : l < kappa_i}; L_i adds the omega powers.
    """
    ring, N, cls = sys.ring, sys.N, sys.cls
    if not 0 <= i <= cls.v:
        raise UnknownComponentError(f"no component index {i}")
    kappa = cls.kappa[i]
    if kind == "K" and h is None:
        base = sys.eps[i]
        return [polyops.shift_mod_xn1(ring, base, l, N) for l in range(kappa)]
    if kind == "K":
        if (i, h) not in sys.eps_split:
            raise UnknownComponentError(f"no split component ({i}, {h})")
        base = sys.eps_split[(i, h)]
        return [polyops.shift_mod_xn1(ring, base, l, N) for l in range(kappa)]
    if kind == "L" and h is None:
        out = []
        w = ring.one
        for _ in range(ring.r):
            scaled = polyops.pscale(sys.eps[i], w)
            out.extend(polyops.shift_mod_xn1(ring, scaled, l, N) for l in range(kappa))
            w = w * ring.omega
        return out
    raise UnknownComponentError(f"unknown component kind {kind!r}")
