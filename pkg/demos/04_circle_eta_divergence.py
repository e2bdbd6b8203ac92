#!/usr/bin/env python3
"""Heat-kernel eta terms on the line covering of the circle.

Each deck translation by n contributes i/(pi n); summing over a subset X of
the naturals reduces convergence of the delocalized series to convergence
of sum 1/n over X.  Finite and geometric index sets converge (closed
forms), arithmetic progressions and the primes diverge, and divergence is
always decided by a symbolic certificate, never by staring at partial sums.
"""

import math

from etarho import (QuadratureConfig, SubsetFamily, classify_convergence,
                    eta_partial, eta_term, kernel_value, product_with_ahat)

print("== the kernel and single terms ==")
print("  k(x, x) =", kernel_value(0.3, 0.3, 0.1), " (odd prefactor)")
print("  k antisymmetric:", kernel_value(1.5, 0.5, 0.25),
      "=-", kernel_value(0.5, 1.5, 0.25))
for n in (1, 2, 10):
    value = eta_term(n)
    print(f"  eta_term({n:2d}) = {value:.12f}   closed form i/(pi n) = "
          f"{1.0 / (math.pi * n):.12f} i")

print()
print("== audit mode: full double quadrature, both integration orders ==")
cfg = QuadratureConfig()
a = eta_term(3, cfg, audit=True, order="t_then_x")
b = eta_term(3, cfg, audit=True, order="x_then_t")
print(f"  t outer: {a}\n  x outer: {b}\n  difference: {abs(a - b):.2e}")

print()
print("== verdicts by family ==")
families = [
    SubsetFamily.finite([1, 2, 3]),
    SubsetFamily.geometric(2),
    SubsetFamily.arithmetic(1, 1),
    SubsetFamily.primes(),
    SubsetFamily.custom(lambda: (k * k for k in range(1, 10 ** 6))),
]
for family in families:
    verdict = classify_convergence(family)
    extra = f" = {verdict.exact}" if verdict.exact else ""
    print(f"  {family.describe():16s} -> {verdict.kind}{extra}")
    if verdict.certificate:
        print(f"    certificate: {verdict.certificate}")

print()
print("== partial sums over the naturals witness the divergence rate ==")
report = eta_partial(SubsetFamily.arithmetic(1, 1), 10_000)
sums = dict(report.partial_sums)
for m in (100, 1000, 10_000):
    print(f"  {m:6d} terms: imag part {sums[m].imag:.4f}"
          f"   vs (1/pi) ln m = {math.log(m) / math.pi:.4f}")

print()
print("== products with a 4k-dimensional factor scale by its A-hat number ==")
exact = eta_partial(SubsetFamily.finite([1, 2, 3]), 10).exact
print("  base value      :", exact)
print("  A-hat = 2       :", product_with_ahat(exact, 2))
print("  A-hat = 0 kills a divergent family:",
      product_with_ahat(classify_convergence(SubsetFamily.primes()), 0).kind)
