"""Lens-space rho data over cyclic groups: explicit nonvanishing witnesses.

The delocalized table of L(n; a_1..a_k) is computed exactly in Q(zeta_n):

    rho_{g^j} = scale * (1/n) * prod_l 1/(w^(j a_l) - w^(-j a_l)),
    w = zeta_n^((n+1)/2)  (the canonical square root of zeta_n, n odd).

The overall normalization against published eta tables is deliberately a
configuration knob (``defect_scale``); everything this package asserts about
the tables (parity under inversion, reality, rationality of twists, span
ranks) is independent of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd

from .chars import (ClassFunction, FiniteGroup, RhoVector, VirtualRep,
                    class_space_basis, fourier_eta, pair_phi)
from .cyclotomic import CyclotomicValue
from .exactlinalg import exact_rank


@dataclass(frozen=True)
class LensSpace:
    """L(n; a_1..a_k): n odd >= 3, weights coprime to n; dim = 2k - 1."""

    n: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"n must be odd and >= 3, got {self.n}")
        if not self.weights:
            raise ValueError("at least one weight is required")
        for a in self.weights:
            if gcd(a, self.n) != 1:
                raise ValueError(f"weight {a} is not coprime to {self.n}")

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def dim(self) -> int:
        return 2 * self.k - 1

    def __str__(self):
        return f"L({self.n};{','.join(str(a) for a in self.weights)})"


@lru_cache(maxsize=4096)
def _lens_table(n: int, weights: tuple[int, ...], scale: Fraction) -> RhoVector:
    group = FiniteGroup.cyclic(n)
    half = (n + 1) // 2  # w = zeta^half squares to zeta
    values = [CyclotomicValue.zero(n)]
    for j in range(1, n):
        prod = CyclotomicValue.from_rational(Fraction(scale, n), n)
        for a in weights:
            denom = (CyclotomicValue.root_of_unity(n, (half * j * a) % n)
                     - CyclotomicValue.root_of_unity(n, (-half * j * a) % n))
            prod = prod * denom.inverse()
        values.append(prod)
    return RhoVector(group, tuple(values))


def lens_delocalized_rho(space: LensSpace, defect_scale=Fraction(1)) -> RhoVector:
    """Exact delocalized rho table of a lens space over cyclic:n."""
    return _lens_table(space.n, space.weights, Fraction(defect_scale))


def lens_twisted_rho(space: LensSpace, rep: VirtualRep, defect_scale=Fraction(1)):
    """Representation-twisted rho: the Fourier pairing against the lens table."""
    if len(rep.group) != space.n:
        raise ValueError(f"virtual rep lives on order {len(rep.group)}, lens space on {space.n}")
    return fourier_eta(rep, lens_delocalized_rho(space, defect_scale))


def _canonical_weights(n: int, weights: tuple[int, ...]) -> tuple[int, ...]:
    """Orbit representative under permutations and global unit scaling."""
    best = None
    for u in range(1, n):
        if gcd(u, n) != 1:
            continue
        cand = tuple(sorted((u * a) % n for a in weights))
        if best is None or cand < best:
            best = cand
    return best


def weight_family(n: int, k: int, limit: int | None = None):
    """Sorted k-tuples of units mod n, deduplicated by symmetry, lex order."""
    units = [a for a in range(1, n) if gcd(a, n) == 1]
    seen = set()
    out = []
    for tup in combinations_with_replacement(units, k):
        canon = _canonical_weights(n, tup)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(canon)
        if limit is not None and len(out) >= limit:
            break
    return out


@dataclass(frozen=True)
class NotFound:
    """Search exhausted its budget without a nonvanishing witness (a report)."""

    n: int
    parity: str
    candidates_tried: int

    def __bool__(self):
        return False


def _check_parity_k(parity: str, k: int) -> bool:
    # plus needs dim = 3 mod 4 (k even); minus needs dim = 1 mod 4 (k odd)
    return (k % 2 == 0) if parity == "plus" else (k % 2 == 1)


def search_nonvanishing(n: int, parity: str, f: ClassFunction, k_range,
                        weight_budget: int, defect_scale=Fraction(1)):
    """First lens space (lex order over deduplicated weights) with Phi(f) != 0.

    Returns (LensSpace, value) on success, NotFound otherwise.
    """
    if parity not in ("plus", "minus"):
        raise ValueError("parity must be 'plus' or 'minus'")
    if f.is_zero():
        raise ValueError("f must be a nonzero class function")
    if len(f.group) != n:
        raise ValueError("class function group does not match n")
    ok = f.in_class_plus0() if parity == "plus" else f.in_class_minus0()
    if not ok:
        raise ValueError(f"f is not in Class{'+' if parity == 'plus' else '-'}_0")
    tried = 0
    for k in k_range:
        if not _check_parity_k(parity, k):
            continue
        for weights in weight_family(n, k):
            if tried >= weight_budget:
                return NotFound(n, parity, tried)
            tried += 1
            space = LensSpace(n, weights)
            value = pair_phi(f, lens_delocalized_rho(space, defect_scale))
            if not value.is_zero():
                return space, value
    return NotFound(n, parity, tried)


def span_rank(n: int, parity: str, k: int, weights_list=None,
              defect_scale=Fraction(1)) -> int:
    """Exact rank of the lens tables paired against the Class+-_0 basis.

    Rows are lens spaces from ``weights_list`` (defaults to the full
    deduplicated family), columns the deterministic basis functions.
    """
    if parity not in ("plus", "minus"):
        raise ValueError("parity must be 'plus' or 'minus'")
    if not _check_parity_k(parity, k):
        raise ValueError(f"k={k} has the wrong parity for '{parity}'")
    if weights_list is None:
        weights_list = weight_family(n, k)
    basis = class_space_basis(FiniteGroup.cyclic(n), parity)
    rows = []
    for weights in weights_list:
        rho = lens_delocalized_rho(LensSpace(n, weights), defect_scale)
        rows.append([pair_phi(f, rho) for f in basis])
    if not rows:
        return 0
    return exact_rank(rows)
