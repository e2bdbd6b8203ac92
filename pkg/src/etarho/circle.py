"""Heat-kernel eta terms on the line covering of the circle.

The operator is D = -i d/dx on R; its kernel D exp(-t D^2) is

    k_t(x, y) = i (x-y) / (2 t sqrt(4 pi t)) * exp(-(x-y)^2 / (4t)),

obtained by differentiating the Gaussian heat kernel (the decaying
exponential is forced; with a growing one no eta term would exist).  The
deck pairing is oriented so that the term of the translation by n > 0 is
+i/(pi n); summing 1/n over a subset of the naturals is then the whole
convergence story, and divergence verdicts are decided by symbolic family
rules, never by the size of floating partial sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

import mpmath
import sympy


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    t_split: float = 1.0
    max_subdivisions: int = 4
    precision_bits: int = 80

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.t_split <= 0:
            raise ValueError("t_split must be positive")


DEFAULT_CONFIG = QuadratureConfig()


class QuadratureError(RuntimeError):
    """Quadrature failed to meet tolerances; carries the partial value."""

    def __init__(self, message: str, partial, error_estimate):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


def kernel_value(x: float, y: float, t: float) -> complex:
    """Integral kernel of D exp(-t D^2) on the line at (x, y)."""
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    d = x - y
    arg = -(d * d) / (4.0 * t)
    if arg < -745.0:  # exp underflows float64
        return 0j
    return 1j * d / (2.0 * t * math.sqrt(4.0 * math.pi * t)) * math.exp(arg)


def _kernel_mp(x, y, t):
    d = x - y
    return (1j * d / (2 * t * mpmath.sqrt(4 * mpmath.pi * t))
            * mpmath.exp(-(d * d) / (4 * t)))


def _quad_with_tolerance(f, interval, cfg: QuadratureConfig, what: str):
    """mpmath adaptive quadrature, retried at increasing depth until tolerances hold."""
    last_val, last_err = None, None
    for extra in range(cfg.max_subdivisions + 1):
        val, err = mpmath.quad(f, interval, error=True, maxdegree=6 + extra)
        last_val, last_err = val, err
        bound = max(cfg.abs_tol, cfg.rel_tol * abs(val))
        if err <= bound:
            return val, float(err)
    raise QuadratureError(
        f"{what}: error estimate {mpmath.nstr(last_err, 5)} above tolerance "
        f"after {cfg.max_subdivisions} retries", last_val, last_err)


def eta_term(n: int, cfg: QuadratureConfig = DEFAULT_CONFIG, audit: bool = False,
             order: str = "t_then_x") -> complex:
    """Numerical value of the single deck-translation term; approx i/(pi n).

    The t-integral is computed after the substitution s = n^2/(4t), which
    turns the delicate t->0 endpoint into plain exponential decay.  The unit
    x-integral has a constant integrand; by default it is evaluated by a
    midpoint rule (exact here), in audit mode by full quadrature, and
    ``order`` picks which integral is the outer one (Fubini check).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if order not in ("t_then_x", "x_then_t"):
        raise ValueError("order must be 't_then_x' or 'x_then_t'")
    with mpmath.workprec(cfg.precision_bits):
        nn = mpmath.mpf(n)
        inv_sqrt_pi = 1 / mpmath.sqrt(mpmath.pi)

        def t_integrand_at(x, t):
            return inv_sqrt_pi * _kernel_mp(x + nn, x, t) / mpmath.sqrt(t)

        def t_of_s(s):
            return nn * nn / (4 * s)

        def jacobian(s):
            return nn * nn / (4 * s * s)

        # t in (0, t_split) maps to s above this breakpoint; splitting the
        # interval there keeps the two t-regimes in separate panels
        s_split = nn * nn / (4 * mpmath.mpf(cfg.t_split))
        interval = [0, s_split, mpmath.inf]

        if order == "t_then_x":
            if audit:
                def outer(s):
                    t = t_of_s(s)
                    inner, _ = mpmath.quad(lambda x: t_integrand_at(x, t), [0, 1],
                                           error=True)
                    return inner * jacobian(s)
            else:
                def outer(s):
                    t = t_of_s(s)
                    return t_integrand_at(mpmath.mpf("0.5"), t) * jacobian(s)
            val, err = _quad_with_tolerance(outer, interval, cfg,
                                            f"eta_term(n={n})")
        else:
            def t_integral(x):
                f = lambda s: t_integrand_at(x, t_of_s(s)) * jacobian(s)
                v, _ = mpmath.quad(f, interval, error=True)
                return v
            val, err = _quad_with_tolerance(t_integral, [0, 1], cfg,
                                            f"eta_term(n={n}, x outer)")
        return complex(val)


@dataclass(frozen=True)
class CircleExact:
    """Exact circle value coeff * pi^pi_power * i^i_power."""

    coeff: Fraction
    pi_power: int = -1
    i_power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def to_complex(self) -> complex:
        return (complex(self.coeff) * math.pi ** self.pi_power
                * (1j ** (self.i_power % 4)))

    def scale(self, c) -> "CircleExact":
        return CircleExact(self.coeff * Fraction(c), self.pi_power, self.i_power)

    def __add__(self, other: "CircleExact") -> "CircleExact":
        if (self.pi_power, self.i_power) != (other.pi_power, other.i_power):
            raise ValueError("cannot add circle values with different symbolic parts")
        return CircleExact(self.coeff + other.coeff, self.pi_power, self.i_power)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def to_json(self) -> dict:
        return {"rational_coeff": str(self.coeff),
                "pi_power": self.pi_power, "i_power": self.i_power}

    def __str__(self):
        pi_part = {1: "*pi", 0: "", -1: "/pi"}.get(self.pi_power, f"*pi^{self.pi_power}")
        i_part = {0: "", 1: "*I", 2: "*(-1)", 3: "*(-I)"}[self.i_power % 4]
        return f"{self.coeff}{i_part}{pi_part}"


def closed_form_term(n: int) -> CircleExact:
    """The analytically integrated term: i/(pi n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return CircleExact(Fraction(1, n))


class SubsetFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class SubsetFamily:
    """A subset of the positive naturals with a symbolic description.

    ``variant`` is one of finite / arithmetic / geometric / primes / custom.
    Iteration always yields validated, strictly increasing integers >= 1.
    """

    variant: str
    params: tuple = ()
    generator: Optional[Callable[[], Iterator[int]]] = None
    certificate: Optional[str] = None
    certificate_kind: Optional[str] = None  # convergent | divergent | None
    exact_limit: Optional[CircleExact] = None

    @classmethod
    def finite(cls, elements: Iterable[int]) -> "SubsetFamily":
        elems = sorted(set(int(x) for x in elements))
        if any(x < 1 for x in elems):
            raise SubsetFamilyError("finite subset elements must be >= 1")
        return cls("finite", tuple(elems))

    @classmethod
    def arithmetic(cls, a: int, d: int) -> "SubsetFamily":
        if a < 1 or d < 1:
            raise SubsetFamilyError("arithmetic progression needs a >= 1, d >= 1")
        return cls("arithmetic", (int(a), int(d)))

    @classmethod
    def geometric(cls, base: int) -> "SubsetFamily":
        if base < 2:
            raise SubsetFamilyError("geometric index base must be >= 2")
        return cls("geometric", (int(base),))

    @classmethod
    def primes(cls) -> "SubsetFamily":
        return cls("primes")

    @classmethod
    def custom(cls, generator: Callable[[], Iterator[int]],
               certificate: Optional[str] = None,
               certificate_kind: Optional[str] = None,
               exact_limit: Optional[CircleExact] = None) -> "SubsetFamily":
        if certificate_kind not in (None, "convergent", "divergent"):
            raise SubsetFamilyError("certificate_kind must be convergent/divergent/None")
        if (certificate is None) != (certificate_kind is None):
            raise SubsetFamilyError("certificate text and kind go together")
        return cls("custom", (), generator, certificate, certificate_kind, exact_limit)

    def is_finite(self) -> bool:
        return self.variant == "finite"

    def iter_elements(self) -> Iterator[int]:
        if self.variant == "finite":
            yield from self.params
            return
        if self.variant == "arithmetic":
            a, d = self.params
            k = a
            while True:
                yield k
                k += d
        elif self.variant == "geometric":
            base = self.params[0]
            k = 1
            while True:
                yield k
                k *= base
        elif self.variant == "primes":
            p = 2
            while True:
                yield p
                p = int(sympy.nextprime(p))
        else:
            prev = 0
            for x in self.generator():
                x = int(x)
                if x < 1 or x <= prev:
                    raise SubsetFamilyError(
                        f"custom generator must yield strictly increasing integers >= 1, got {x}")
                prev = x
                yield x

    def describe(self) -> str:
        if self.variant == "finite":
            return "finite:{" + ",".join(str(x) for x in self.params) + "}"
        if self.variant == "arithmetic":
            return f"ap:{self.params[0]},{self.params[1]}"
        if self.variant == "geometric":
            return f"geo:{self.params[0]}"
        return self.variant


@dataclass(frozen=True)
class Verdict:
    kind: str  # convergent | divergent | unknown
    exact: Optional[CircleExact] = None
    certificate: Optional[str] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.exact is not None:
            out["exact"] = self.exact.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def classify_convergence(family: SubsetFamily) -> Verdict:
    """Symbolic verdict for sum over X of i/(pi n)."""
    if family.variant == "finite":
        total = sum((Fraction(1, x) for x in family.params), Fraction(0))
        return Verdict("convergent", CircleExact(total),
                       "finite sum, evaluated in closed form")
    if family.variant == "arithmetic":
        a, d = family.params
        return Verdict("divergent", None,
                       f"harmonic comparison: sum 1/(a+kd) >= (1/{d}) * tail of the "
                       f"harmonic series (a={a}, d={d})")
    if family.variant == "geometric":
        base = family.params[0]
        return Verdict("convergent", CircleExact(Fraction(base, base - 1)),
                       f"ratio test (ratio 1/{base}); geometric series summed exactly")
    if family.variant == "primes":
        return Verdict("divergent", None,
                       "Euler/Mertens: the sum of reciprocals of the primes diverges")
    if family.certificate_kind == "convergent":
        return Verdict("convergent", family.exact_limit, family.certificate)
    if family.certificate_kind == "divergent":
        return Verdict("divergent", None, family.certificate)
    return Verdict("unknown", None,
                   "no certificate attached; partial sums reported only")


@dataclass(frozen=True)
class EtaReport:
    family: SubsetFamily
    verdict: Verdict
    partial_sums: tuple  # of (terms_used, complex value)
    per_term_errors: tuple
    exact: Optional[CircleExact]
    terms_used: int
    fast_path: bool

    def final_value(self) -> complex:
        return self.partial_sums[-1][1] if self.partial_sums else 0j

    def to_json(self, sample_every: int = 1) -> dict:
        sums = [(m, {"re": v.real, "im": v.imag})
                for m, v in self.partial_sums
                if m % sample_every == 0 or m == self.terms_used]
        out = {
            "family": self.family.describe(),
            "verdict": self.verdict.to_json(),
            "terms_used": self.terms_used,
            "fast_path": self.fast_path,
            "partial_sums": sums,
            "per_term_errors": list(self.per_term_errors),
        }
        if self.exact is not None:
            out["exact"] = self.exact.to_json()
        return out


def eta_partial(family: SubsetFamily, max_terms: int,
                cfg: QuadratureConfig = DEFAULT_CONFIG, audit: bool = False,
                exact_cap: int = 512, jobs: int = 1) -> EtaReport:
    """Partial sums of eta terms over the first max_terms elements of X.

    Finite families may exhaust before max_terms (not an error).  The fast
    path uses the closed form i/(pi n) per term and accumulates an exact
    coefficient up to ``exact_cap`` terms; audit mode runs full quadrature
    per term (``jobs`` caps the worker pool; results are merged in index
    order) and reports the per-term error estimates.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    elements = []
    for n in family.iter_elements():
        if len(elements) >= max_terms:
            break
        elements.append(n)
    if audit:
        if jobs > 1:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                terms = list(pool.map(lambda n: eta_term(n, cfg, audit=True),
                                      elements))
        else:
            terms = [eta_term(n, cfg, audit=True) for n in elements]
        errors = [abs(t - closed_form_term(n).to_complex())
                  for n, t in zip(elements, terms)]
    else:
        terms = [closed_form_term(n).to_complex() for n in elements]
        errors = [0.0] * len(elements)
    partial = []
    acc = 0j
    for count, term in enumerate(terms, start=1):
        acc += term
        partial.append((count, acc))
    count = len(elements)
    exact = None
    if not audit and count <= exact_cap:
        exact = CircleExact(sum((Fraction(1, n) for n in elements), Fraction(0)))
    if count == 0:
        exact = CircleExact(Fraction(0))
    return EtaReport(family, classify_convergence(family), tuple(partial),
                     tuple(errors), exact, count, not audit)


def product_with_ahat(value, ahat):
    """Scale an eta value/verdict/report by the A-hat multiplier of a 4k-factor."""
    ahat = Fraction(ahat)
    if isinstance(value, EtaReport):
        scaled_sums = tuple((m, v * complex(ahat)) for m, v in value.partial_sums)
        return EtaReport(value.family, product_with_ahat(value.verdict, ahat),
                         scaled_sums, value.per_term_errors,
                         value.exact.scale(ahat) if value.exact is not None else None,
                         value.terms_used, value.fast_path)
    if isinstance(value, Verdict):
        if ahat == 0:
            return Verdict("convergent", CircleExact(Fraction(0)),
                           "zero A-hat multiplier kills every term")
        return Verdict(value.kind,
                       value.exact.scale(ahat) if value.exact is not None else None,
                       value.certificate)
    if isinstance(value, CircleExact):
        return value.scale(ahat)
    return complex(value) * complex(ahat)
