"""Normal forms, conjugacy balls and growth for the example groups.

Variants
--------
- ``Cyclic(n)``: integers mod n.
- ``Product(A, B)``: direct product, componentwise normal forms.
- ``Lamplighter(n)``: (+_k Z/n) x| Z, elements (lamps, shift) with finitely
  many lamps on; conjugation by the shift translates lamp patterns.
- ``QSemidirect``: Q x| (+_i Z), where the generator of the i-th summand acts
  on Q by multiplication with the |i|-th prime, 0-based: p(0)=2, p(+-1)=3, ...
  Elements are (q, lam) with (q, lam)(q', lam') = (q + m(lam) q', lam + lam'),
  m(lam) = prod p(|i|)^lam_i.
- ``HnnShift``: the HNN extension of QSemidirect along the index shift of the
  subgroup A = +_i Z.  Elements are Britton-reduced words
  g_0 t^e1 g_1 ... t^em g_m; the canonical form keeps g_0..g_{m-1} in the
  rational-kernel transversal {(q, 0)} of A, which makes it unique.

Word metrics use the canonical generating sets below; for QSemidirect the
relevant metric is the one of the ambient 3-generator HNN group (the base
group itself is not finitely generated), so its conjugacy balls are computed
in the ambient group and restricted to base-group values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np
import sympy


class ZooError(ValueError):
    pass


class CapExceededError(ZooError):
    """A BFS radius or node budget above the configured desk-scale cap."""


DESK_RADIUS_CAP = 12
DEFAULT_NODE_BUDGET = 2_000_000


# --------------------------------------------------------------------------
# QSemidirect element algebra (shared with the HNN extension)
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _prime_at(i: int) -> int:
    """p(0)=2, p(+-1)=3, p(+-2)=5, ...: 0-based over |i|."""
    return int(sympy.prime(abs(i) + 1))


def _lam_add(a: tuple, b: tuple) -> tuple:
    acc = dict(a)
    for i, e in b:
        v = acc.get(i, 0) + e
        if v:
            acc[i] = v
        else:
            acc.pop(i, None)
    return tuple(sorted(acc.items()))


def _lam_neg(a: tuple) -> tuple:
    return tuple((i, -e) for i, e in a)


def _lam_shift(a: tuple, k: int) -> tuple:
    return tuple(sorted((i + k, e) for i, e in a))


@lru_cache(maxsize=None)
def _multiplier(lam: tuple) -> Fraction:
    m = Fraction(1)
    for i, e in lam:
        m *= Fraction(_prime_at(i)) ** e
    return m


Q_IDENTITY = (Fraction(0), ())


def q_mul(a: tuple, b: tuple) -> tuple:
    return (a[0] + _multiplier(a[1]) * b[0], _lam_add(a[1], b[1]))


def q_inv(a: tuple) -> tuple:
    return (-a[0] / _multiplier(a[1]), _lam_neg(a[1]))


def q_in_A(a: tuple) -> bool:
    return a[0] == 0


def q_in_kernel(a: tuple) -> bool:
    return not a[1]


def q_alpha(a: tuple, k: int = 1) -> tuple:
    """The shift automorphism of A = +_i Z, extended index map i -> i+k."""
    if not q_in_A(a):
        raise ZooError("alpha is only defined on the subgroup A")
    return (Fraction(0), _lam_shift(a[1], k))


# --------------------------------------------------------------------------
# Reachable conjugation multipliers for rational-kernel elements.
#
# Conjugating a kernel element (q0, 0) by a base-group element (q, lam)
# gives (m(lam) q0, 0), and Britton reduction shows that a conjugator whose
# normal form contains any t letter produces a value with t letters, i.e.
# outside the base group (the inner conjugate (m q0, 0) is never in A, so
# nothing pinches).  Hence the rational-valued conjugates within conjugator
# radius r are exactly {m(lam) q0} with lam ranging over the lambda-parts of
# base-group elements of ambient length <= r.
#
# Killing Q maps the ambient group onto Z wr Z = <lamps e_i, shift s> (the
# generators go to 1, e_0, s); the lambda-parts reachable at radius r are
# exactly the zero-shift lamp configurations of the radius-r ball there:
# projection gives <=, and a {e_0, s}-word lifts to an {e0, t}-word whose
# value is (0, lam) itself, giving >=.  That ball is small enough to
# enumerate exactly at desk scale.
# --------------------------------------------------------------------------

def _wreath_mul(a: tuple, b: tuple) -> tuple:
    lamps = dict(a[0])
    for pos, val in b[0]:
        p = pos + a[1]
        v = lamps.get(p, 0) + val
        if v:
            lamps[p] = v
        else:
            lamps.pop(p, None)
    return (tuple(sorted(lamps.items())), a[1] + b[1])


@lru_cache(maxsize=8)
def _lambda_levels(radius: int) -> tuple:
    """levels[r] = lambda-configs whose minimal Z-wr-Z word length is r."""
    identity = ((), 0)
    gens = ((((0, 1),), 0), (((0, -1),), 0), ((), 1), ((), -1))
    seen = {identity}
    levels = [{()}]
    config_seen = {()}
    frontier = [identity]
    for _ in range(1, radius + 1):
        new = []
        level = set()
        for el in frontier:
            for g in gens:
                cand = _wreath_mul(el, g)
                if cand not in seen:
                    seen.add(cand)
                    new.append(cand)
                    if cand[1] == 0 and cand[0] not in config_seen:
                        config_seen.add(cand[0])
                        level.add(cand[0])
        levels.append(level)
        frontier = new
    return tuple(frozenset(lv) for lv in levels)


def multiplier_levels(radius: int) -> list[set]:
    """Distinct kernel-conjugation multipliers, bucketed by first-reach radius."""
    seen: set = set()
    out = []
    for level in _lambda_levels(radius):
        fresh = {_multiplier(lam) for lam in level} - seen
        seen |= fresh
        out.append(fresh)
    return out


# --------------------------------------------------------------------------
# group variants
# --------------------------------------------------------------------------

class Cyclic:
    """Z/n with generator 1; elements are integers 0..n-1."""

    def __init__(self, n: int):
        if n < 1:
            raise ZooError("cyclic order must be >= 1")
        self.n = n
        self.name = f"cyclic:{n}"
        self.identity = 0

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def inv(self, a: int) -> int:
        return (-a) % self.n

    def generators(self):
        gens = [("g", 1 % self.n)]
        if self.n > 2:
            gens.append(("g^-1", self.n - 1))
        return gens

    def class_key(self, a: int):
        return ("cyclic", a)

    def parse_letter(self, token: str):
        base, power = _split_power(token)
        if base == "g":
            return (power) % self.n
        if base.startswith("g:"):
            return (int(base[2:]) * power) % self.n
        raise ZooError(f"unknown cyclic letter {token!r}")

    def format_element(self, a: int) -> str:
        return f"g^{a}"


class Product:
    """Direct product of two zoo groups; elements are pairs."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.name = f"product({left.name},{right.name})"
        self.identity = (left.identity, right.identity)

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def generators(self):
        gens = [(f"l.{lbl}", (g, self.right.identity)) for lbl, g in self.left.generators()]
        gens += [(f"r.{lbl}", (self.left.identity, g)) for lbl, g in self.right.generators()]
        return gens

    def class_key(self, a):
        return ("product", self.left.class_key(a[0]), self.right.class_key(a[1]))

    def format_element(self, a) -> str:
        return f"({self.left.format_element(a[0])}, {self.right.format_element(a[1])})"


class Lamplighter:
    """(+_k Z/n) x| Z.  Elements ((pos, val), ...) sorted by pos, and a shift."""

    def __init__(self, n: int):
        if n < 2:
            raise ZooError("lamplighter needs n >= 2")
        self.n = n
        self.name = f"lamplighter:{n}"
        self.identity = ((), 0)

    def _merge(self, lamps_a: tuple, lamps_b: tuple, offset: int) -> tuple:
        acc = dict(lamps_a)
        for pos, val in lamps_b:
            p = pos + offset
            v = (acc.get(p, 0) + val) % self.n
            if v:
                acc[p] = v
            else:
                acc.pop(p, None)
        return tuple(sorted(acc.items()))

    def mul(self, a, b):
        return (self._merge(a[0], b[0], a[1]), a[1] + b[1])

    def inv(self, a):
        lamps = tuple(sorted((pos - a[1], (-val) % self.n) for pos, val in a[0]))
        return (lamps, -a[1])

    def lamp(self, pos: int = 0, val: int = 1):
        val %= self.n
        return (((pos, val),) if val else (), 0)

    def shift(self, k: int = 1):
        return ((), k)

    def generators(self):
        gens = [("lamp", self.lamp(0, 1))]
        if self.n > 2:
            gens.append(("lamp^-1", self.lamp(0, self.n - 1)))
        gens += [("shift", self.shift(1)), ("shift^-1", self.shift(-1))]
        return gens

    def class_key(self, a):
        """Canonical key for torsion elements: translate-normalized lamp pattern."""
        if a[1] != 0:
            raise ZooError("conjugacy keys are implemented for kernel elements only")
        if not a[0]:
            return ("lamplighter", "e")
        base = a[0][0][0]
        pattern = tuple((pos - base, val) for pos, val in a[0])
        return ("lamplighter", pattern)

    def parse_letter(self, token: str):
        base, power = _split_power(token)
        if base == "shift" or base == "t":
            return self.shift(power)
        if base.startswith("lamp"):
            parts = base.split(":")
            pos = int(parts[1]) if len(parts) > 1 else 0
            val = int(parts[2]) if len(parts) > 2 else 1
            return self.lamp(pos, (val * power) % self.n)
        raise ZooError(f"unknown lamplighter letter {token!r}")

    def format_element(self, a) -> str:
        lamps = ",".join(f"{pos}:{val}" for pos, val in a[0]) or "-"
        return f"(lamps {lamps} | shift {a[1]})"


class QSemidirect:
    """The base group Q x| (+_i Z); see the module docstring for conventions."""

    def __init__(self):
        self.name = "qsemidirect"
        self.identity = Q_IDENTITY

    def mul(self, a, b):
        return q_mul(a, b)

    def inv(self, a):
        return q_inv(a)

    def rational(self, q):
        return (Fraction(q), ())

    def summand_generator(self, i: int, power: int = 1):
        return (Fraction(0), ((i, power),) if power else ())

    def generators(self):
        # canonical alphabet of the ambient 3-generator group, minus t
        return [("q1", self.rational(1)), ("q1^-1", self.rational(-1)),
                ("e0", self.summand_generator(0, 1)), ("e0^-1", self.summand_generator(0, -1))]

    def class_key(self, a):
        if not q_in_kernel(a):
            raise ZooError("conjugacy keys are implemented for kernel elements only")
        q = a[0]
        if q == 0:
            return ("qsemidirect", "e")
        return ("qsemidirect", "q+" if q > 0 else "q-")

    def parse_letter(self, token: str):
        base, power = _split_power(token)
        if base.startswith("q:"):
            return self.rational(Fraction(base[2:]) * power)
        if base.startswith("e:"):
            return self.summand_generator(int(base[2:]), power)
        if base == "e":
            return self.summand_generator(0, power)
        raise ZooError(f"unknown qsemidirect letter {token!r}")

    def format_element(self, a) -> str:
        lam = " ".join(f"e[{i}]^{e}" for i, e in a[1]) or "-"
        return f"(q={a[0]} | {lam})"

    def ambient(self) -> "HnnShift":
        return HnnShift()


class HnnShift:
    """HNN extension of QSemidirect by the index shift on A = +_i Z.

    Element = (g0, ((e1, g1), ..., (em, gm))) meaning g0 t^e1 g1 ... t^em gm,
    Britton-reduced, with g0..g_{m-1} in the kernel transversal {(q, 0)}.
    """

    def __init__(self):
        self.base = QSemidirect()
        self.name = "hnn"
        self.identity = (Q_IDENTITY, ())

    # -- canonical form ------------------------------------------------

    @staticmethod
    def _normalize(head: tuple, tail: list) -> tuple:
        """Britton pinch reduction, then push A-parts right for uniqueness."""
        syll = [head] + [g for _, g in tail]
        eps = [e for e, _ in tail]
        changed = True
        while changed:
            changed = False
            # pinch scan: t^e a t^-e -> alpha^e(a)
            i = 0
            while i < len(eps) - 1:
                if eps[i + 1] == -eps[i] and q_in_A(syll[i + 1]):
                    merged = q_alpha(syll[i + 1], eps[i])
                    syll[i] = q_mul(q_mul(syll[i], merged), syll[i + 2])
                    del syll[i + 1:i + 3]
                    del eps[i:i + 2]
                    changed = True
                    i = max(i - 1, 0)
                else:
                    i += 1
            # push the A-component of every non-final syllable to the right
            for i in range(len(eps)):
                q, lam = syll[i]
                if lam:
                    syll[i] = (q, ())
                    carried = q_alpha((Fraction(0), lam), -eps[i])
                    syll[i + 1] = q_mul(carried, syll[i + 1])
            # pushing can expose identity pinches t^e 1 t^-e
            for i in range(len(eps) - 1):
                if eps[i + 1] == -eps[i] and syll[i + 1] == Q_IDENTITY:
                    changed = True
                    break
        return (syll[0], tuple(zip(eps, syll[1:])))

    def from_base(self, g) -> tuple:
        return (g, ())

    def t(self, power: int = 1) -> tuple:
        if power == 0:
            return self.identity
        sign = 1 if power > 0 else -1
        return (Q_IDENTITY, tuple((sign, Q_IDENTITY) for _ in range(abs(power))))

    def mul(self, u: tuple, v: tuple) -> tuple:
        head_u, tail_u = u
        head_v, tail_v = v
        if not tail_u:
            return self._normalize(q_mul(head_u, head_v), list(tail_v))
        glue = q_mul(tail_u[-1][1], head_v)
        tail = list(tail_u[:-1]) + [(tail_u[-1][0], glue)] + list(tail_v)
        return self._normalize(head_u, tail)

    def inv(self, u: tuple) -> tuple:
        head, tail = u
        if not tail:
            return (q_inv(head), ())
        new_head = q_inv(tail[-1][1])
        gammas = [head] + [g for _, g in tail]
        eps = [e for e, _ in tail]
        new_tail = []
        for i in range(len(eps) - 1, -1, -1):
            new_tail.append((-eps[i], q_inv(gammas[i])))
        return self._normalize(new_head, new_tail)

    def generators(self):
        return [("q1", self.from_base((Fraction(1), ()))),
                ("q1^-1", self.from_base((Fraction(-1), ()))),
                ("e0", self.from_base((Fraction(0), ((0, 1),)))),
                ("e0^-1", self.from_base((Fraction(0), ((0, -1),)))),
                ("t", self.t(1)), ("t^-1", self.t(-1))]

    def in_base(self, u: tuple) -> bool:
        return not u[1]

    def kernel_rational(self, u: tuple) -> Optional[Fraction]:
        """The rational q if u = (q, 0) with no t letters, else None."""
        if u[1] or u[0][1]:
            return None
        return u[0][0]

    def class_key(self, u):
        if u == self.identity:
            return ("hnn", "e")
        raise ZooError("only the identity has a torsion conjugacy key here")

    def parse_letter(self, token: str):
        base, power = _split_power(token)
        if base == "t":
            return self.t(power)
        return self.from_base(self.base.parse_letter(token))

    def format_element(self, u) -> str:
        head, tail = u
        parts = []
        if head != Q_IDENTITY or not tail:
            parts.append(self.base.format_element(head))
        for e, g in tail:
            parts.append("t" if e == 1 else "t^-1")
            if g != Q_IDENTITY:
                parts.append(self.base.format_element(g))
        return " ".join(parts)

    def t_exponent_sum(self, u) -> int:
        return sum(e for e, _ in u[1])


def _split_power(token: str):
    if "^" in token:
        base, _, p = token.rpartition("^")
        return base, int(p)
    return token, 1


def normalize(group, word) -> object:
    """Multiply out a word; ``word`` is an iterable of letters or a string.

    String words are whitespace- or ``*``-separated letter tokens in the
    variant's compact syntax (``q:5/6``, ``e:3^-2``, ``lamp:0``, ``t^-1``...).
    """
    if isinstance(word, str):
        tokens = [tok for tok in word.replace("*", " ").split() if tok]
        letters = [group.parse_letter(tok) for tok in tokens]
    else:
        letters = list(word)
    acc = group.identity
    for letter in letters:
        acc = group.mul(acc, letter)
    return acc


def conjugate_of_one_test(element) -> Optional[bool]:
    """Membership of a QSemidirect kernel element in the class of 1 in Q.

    True iff q > 0; None when the element lies outside the rational kernel
    (the test does not apply there); the identity is its own class (False).
    """
    q, lam = element
    if lam:
        return None
    return q > 0


@dataclass(frozen=True)
class WordBall:
    group_name: str
    generating_set: tuple
    radius: int
    elements: dict  # element -> word length

    def __len__(self):
        return len(self.elements)

    def sizes_by_radius(self) -> list[int]:
        out = [0] * (self.radius + 1)
        for _, length in self.elements.items():
            out[length] += 1
        return list(np.cumsum(out))


def word_ball(group, radius: int, node_budget: int = DEFAULT_NODE_BUDGET) -> WordBall:
    """Breadth-first ball of the group itself under its canonical generators."""
    if radius < 0:
        raise ZooError("radius must be >= 0")
    gens = group.generators()
    lengths = {group.identity: 0}
    frontier = [group.identity]
    for r in range(1, radius + 1):
        new = []
        for el in frontier:
            for _, g in gens:
                cand = group.mul(el, g)
                if cand not in lengths:
                    lengths[cand] = r
                    new.append(cand)
                    if len(lengths) > node_budget:
                        raise CapExceededError(
                            f"word ball exceeded node budget {node_budget} at radius {r}")
        frontier = new
    return WordBall(group.name, tuple(lbl for lbl, _ in gens), radius, lengths)


def _conjugate_levels(group, h, radius: int, node_budget: int):
    """Levels of the conjugate-value BFS: level r holds the values first
    reached by conjugators of word length exactly r."""
    gens = group.generators()
    pairs = [(g, group.inv(g)) for _, g in gens]
    seen = {h}
    levels = [{h}]
    frontier = [h]
    for r in range(1, radius + 1):
        new = []
        for c in frontier:
            for g, g_inv in pairs:
                cand = group.mul(g, group.mul(c, g_inv))
                if cand not in seen:
                    seen.add(cand)
                    new.append(cand)
                    if len(seen) > node_budget:
                        raise CapExceededError(
                            f"conjugacy ball exceeded node budget {node_budget} at radius {r}")
        levels.append(set(new))
        frontier = new
    return levels


def class_ball(group, h, radius: int, radius_cap: int = DESK_RADIUS_CAP,
               node_budget: int = DEFAULT_NODE_BUDGET) -> set:
    """{w h w^-1 : |w| <= radius} as a set of normal forms.

    For QSemidirect the word metric is the one of the ambient 3-generator
    HNN group; for its rational-kernel elements the conjugate set is
    computed exactly through the reachable-multiplier reduction above
    (non-kernel base elements fall back to the ambient BFS, restricted to
    values in the base group).
    """
    if radius > radius_cap:
        raise CapExceededError(f"radius {radius} above desk-scale cap {radius_cap}")
    if radius < 0:
        raise ZooError("radius must be >= 0")
    if isinstance(group, Cyclic):
        return {h}
    if isinstance(group, QSemidirect):
        if q_in_kernel(h):
            q0 = h[0]
            return {(m * q0, ()) for m in set().union(*multiplier_levels(radius))}
        ambient = group.ambient()
        levels = _conjugate_levels(ambient, ambient.from_base(h), radius, node_budget)
        return {u[0] for level in levels for u in level if ambient.in_base(u)}
    levels = _conjugate_levels(group, h, radius, node_budget)
    return set().union(*levels)


def class_ball_rationals(group, q0, radius: int,
                         radius_cap: int = DESK_RADIUS_CAP) -> set:
    """The rational-valued part of the conjugacy ball of (q0, 0), exactly.

    Valid for QSemidirect and HnnShift alike: by the Britton argument above,
    every conjugate of a kernel element that lands back in Q comes from a
    base-group conjugator, so both groups give {m * q0} over the reachable
    multipliers.
    """
    if radius > radius_cap:
        raise CapExceededError(f"radius {radius} above desk-scale cap {radius_cap}")
    if not isinstance(group, (QSemidirect, HnnShift)):
        raise ZooError("class_ball_rationals applies to qsemidirect/hnn only")
    q0 = Fraction(q0)
    return {m * q0 for m in set().union(*multiplier_levels(radius))}


def class_ball_counts(group, h, max_radius: int, radius_cap: int = DESK_RADIUS_CAP,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> list[int]:
    """Cumulative conjugate counts by radius (one BFS, all radii at once)."""
    if max_radius > radius_cap:
        raise CapExceededError(f"radius {max_radius} above desk-scale cap {radius_cap}")
    if isinstance(group, Cyclic):
        return [1] * (max_radius + 1)
    if isinstance(group, QSemidirect) and q_in_kernel(h):
        counts = []
        total = 0
        for level in multiplier_levels(max_radius):
            total += len(level)
            counts.append(total)
        return counts
    if isinstance(group, QSemidirect):
        ambient = group.ambient()
        levels = _conjugate_levels(ambient, ambient.from_base(h), max_radius, node_budget)
        counts = []
        total = 0
        for level in levels:
            total += sum(1 for u in level if ambient.in_base(u))
            counts.append(total)
        return counts
    levels = _conjugate_levels(group, h, max_radius, node_budget)
    counts = []
    total = 0
    for level in levels:
        total += len(level)
        counts.append(total)
    return counts


def class_intersect_integers(group, radius: int,
                             radius_cap: int = DESK_RADIUS_CAP) -> list[int]:
    """Integers found in the conjugacy class of 1 in Q, sorted ascending."""
    rationals = class_ball_rationals(group, Fraction(1), radius, radius_cap)
    return sorted(int(q) for q in rationals if q.denominator == 1)


@dataclass(frozen=True)
class GrowthReport:
    kind: str  # polynomial | exponential | inconclusive
    degree_estimate: Optional[float]
    counts: tuple
    window: tuple
    ratios: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "degree_estimate": self.degree_estimate,
                "counts": list(self.counts),
                "window": list(self.window),
                "ratios": [round(r, 6) for r in self.ratios]}


def growth_classify(group, h, max_radius: int, radius_cap: int = DESK_RADIUS_CAP,
                    node_budget: int = DEFAULT_NODE_BUDGET,
                    exp_ratio: float = 1.5, slope_tolerance: float = 0.25) -> GrowthReport:
    """Desk-scale growth estimate for the conjugacy class of h.

    Fits both a power law (log count vs log r) and an exponential (count
    ratios) on the outer half of the radii; the verdict is an estimate from
    finite data and is labelled as such, with raw counts always reported.
    """
    counts = class_ball_counts(group, h, max_radius, radius_cap, node_budget)
    lo = max(max_radius // 2, 1)
    window = list(range(lo, max_radius + 1))
    ratios = tuple(counts[r] / counts[r - 1] for r in range(lo, max_radius + 1)
                   if counts[r - 1] > 0)
    log_counts = [np.log(counts[r]) for r in window]
    # exponential: near-convex log-counts with per-step ratio >= exp_ratio
    # (boundary effects make desk-scale log-counts dip slightly below convex)
    diffs = np.diff(log_counts)
    convex = bool(len(diffs) < 2 or np.all(np.diff(diffs) >= -0.05))
    if ratios and convex and all(r >= exp_ratio for r in ratios):
        return GrowthReport("exponential", None, tuple(counts),
                            (lo, max_radius), ratios)
    # polynomial: log-log slope stable across the two half-windows
    log_r = [np.log(r) for r in window]
    if len(window) >= 4:
        half = len(window) // 2
        s1 = np.polyfit(log_r[:half + 1], log_counts[:half + 1], 1)[0]
        s2 = np.polyfit(log_r[half:], log_counts[half:], 1)[0]
        s_all = np.polyfit(log_r, log_counts, 1)[0]
        if abs(s1 - s2) <= slope_tolerance:
            return GrowthReport("polynomial", float(s_all), tuple(counts),
                                (lo, max_radius), ratios)
    elif len(set(counts)) == 1:
        return GrowthReport("polynomial", 0.0, tuple(counts), (lo, max_radius), ratios)
    return GrowthReport("inconclusive", None, tuple(counts), (lo, max_radius), ratios)
