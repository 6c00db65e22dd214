#!/usr/bin/env python3
"""A tour of exact chain-ring arithmetic.

Builds the 8-element ring Z_4[x]/<x^2+2, 2x> and its rank-2 extension by a
root of X^2+X+1, then walks through the structure every other capability
rests on: the ideal chain, units, Teichmuller digits, Frobenius, and trace.
"""

from chaincodes import ChainRing

# ---------------------------------------------------------------------------
# 1. The smallest interesting chain ring: Z_4[x]/<x^2+2, 2x>.
#    x generates the maximal ideal, x^2 = -2 = 2, and 2x = 0, so the additive
#    group is Z_4 + Z_2 and there are 8 elements in total.
# ---------------------------------------------------------------------------
S = ChainRing(p=2, n=2, r=1, k=2, t=1, g_tail=[1, 0])
print("S =", S, "with", S.card, "elements, nilpotency index m =", S.m)

x = S.x
print("x * x      =", x * x)            # 2
print("(x + 1)^2  =", (x + 1) ** 2)      # 3
print("2 * x      =", 2 * x)             # 0: the defining relation

# The ideal chain S > <x> > <x^2> > 0 in sizes:
for v in range(S.m + 1):
    size = 2 ** (S.r * (S.m - v))
    print(f"|<x^{v}>| = {size}")

# ---------------------------------------------------------------------------
# 2. Units and inversion.  An element is a unit exactly when its constant
#    x-coefficient is odd; inversion runs a Newton iteration that doubles the
#    x-adic precision each step.
# ---------------------------------------------------------------------------
u = S.from_int(3) + x
print("u =", u, "is a unit:", u.is_unit(), " u^-1 =", u.invert())
print("x is a unit:", x.is_unit())

# ---------------------------------------------------------------------------
# 3. Teichmuller digits: every element is uniquely sum d_i x^i with each
#    digit satisfying d^(p^r) = d.  For 3 = 1 + 2 = 1 + x^2 the digits are
#    [1, 0, 1].
# ---------------------------------------------------------------------------
three = S.from_int(3)
print("digits of 3:", S.x_adic_digits(three))
print("x-valuation of 2:", S.from_int(2).x_valuation(), "(2 = x^2 * unit)")

# ---------------------------------------------------------------------------
# 4. The rank-2 extension R = S[w], w^2 + w + 1 = 0.  Now |R| = 2^6 and the
#    Teichmuller set {0, 1, w, w^2} has p^r = 4 elements.
# ---------------------------------------------------------------------------
R = ChainRing(p=2, n=2, r=2, k=2, t=1, g_tail=[1, 0], f=[1, 1, 1])
w = R.omega
print("\nR =", R, "with 2^%d elements" % R.log_p_card)
print("w^2          =", w * w)  # 3w + 3
print("Teichmuller  =", R.teichmuller_set())

# ---------------------------------------------------------------------------
# 5. Frobenius and trace.  frobenius() sends w to w^p and fixes S pointwise;
#    applying it r times is the identity, and the trace sums the orbit, always
#    landing in S.  {1, w} and the trace-dual pair {w+3, 2w+1} satisfy
#    Tr(w^i theta_j) = delta_ij.
# ---------------------------------------------------------------------------
print("frobenius(w)   =", R.frobenius(w))
print("frobenius^2(w) =", R.frobenius(R.frobenius(w)))
print("Tr(w)          =", R.trace_to_base(w))

from chaincodes import trace_dual_basis

theta = trace_dual_basis(R)
print("trace-dual basis:", theta)
for i in range(2):
    for j in range(2):
        print(f"  Tr(w^{i} * theta_{j}) =", R.trace_to_base(w**i * theta[j]))
