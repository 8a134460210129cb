"""Trace recurrences for Weil numbers and generator powers; the three
subtracted-trace families and their certified prime supports."""

from dataclasses import dataclass, replace
from math import isqrt

from .arith import FactorBudget, FactoredInteger, factor
from .quadfield import FieldContext, QuadInt, ideal_pow, shortest_generator
from .classgroup import SplitPrime


def trace_power(t: int, n: int, e: int) -> int:
    """s_e = gamma^e + conj(gamma)^e for gamma + conj = t, gamma*conj = n.

    Linear recurrence s_0 = 2, s_1 = t, s_j = t*s_{j-1} - n*s_{j-2}.
    """
    if e == 0:
        return 2
    prev, cur = 2, t
    for _ in range(e - 1):
        prev, cur = cur, t * cur - n * prev
    return cur


@dataclass(frozen=True)
class TraceSet:
    """Candidate Frobenius traces at the 24h-th power level: for each m with
    m^2 <= 4l, the trace of the 24h-th power of a root of X^2 + m*X + l."""

    l: int
    h: int
    entries: dict[int, int]

    @property
    def weil_cap(self) -> int:
        return 2 * self.l ** (12 * self.h)


def trace_set(l: int, h: int) -> TraceSet:
    m_max = isqrt(4 * l)
    e = 24 * h
    entries = {m: trace_power(-m, l, e) for m in range(-m_max, m_max + 1)}
    return TraceSet(l=l, h=h, entries=entries)


def beta_for(ctx: FieldContext, q: SplitPrime) -> QuadInt:
    """Canonical generator of q^h, h the class-group exponent."""
    if q.principal:
        raise ValueError("beta_for: prime must be non-principal")
    qh = ideal_pow(ctx, q.ideal, ctx.h)
    beta = shortest_generator(ctx, qh)
    if beta is None:
        raise AssertionError("q^h must be principal when h is the group exponent")
    assert beta.norm == q.l**ctx.h
    return beta


@dataclass(frozen=True)
class ASet:
    """One subtracted-trace family: raw elements, factorizations of the
    nonzero ones, and the certified prime support."""

    family: str  # "A1" | "A2" | "A3"
    q_list: tuple[int, ...]
    shifts: tuple[int, ...]
    elements: tuple[int, ...]
    factorizations: tuple[FactoredInteger | None, ...] = ()
    support: frozenset[int] = frozenset()
    certified: bool = False


def family_A1(ctx: FieldContext, q: SplitPrime) -> ASet:
    beta = beta_for(ctx, q)
    shift = trace_power(beta.trace, q.l**ctx.h, 24)
    ts = trace_set(q.l, ctx.h)
    elements = tuple(sorted({a - shift for a in ts.entries.values()}))
    return ASet(family="A1", q_list=(q.l,), shifts=(shift,), elements=elements)


def family_A2(ctx: FieldContext, q: SplitPrime) -> ASet:
    beta = beta_for(ctx, q)
    shift = q.l ** (8 * ctx.h) * trace_power(beta.trace, q.l**ctx.h, 8)
    ts = trace_set(q.l, ctx.h)
    elements = tuple(sorted({a - shift for a in ts.entries.values()}))
    return ASet(family="A2", q_list=(q.l,), shifts=(shift,), elements=elements)


def family_A3(ctx: FieldContext, S: list[SplitPrime]) -> ASet:
    if not S:
        raise ValueError("family_A3: S must be nonempty")
    elements: set[int] = set()
    shifts = []
    for q in S:
        shift = 2 * q.l ** (12 * ctx.h)
        shifts.append(shift)
        ts = trace_set(q.l, ctx.h)
        elements.update(a - shift for a in ts.entries.values())
    return ASet(
        family="A3",
        q_list=tuple(q.l for q in S),
        shifts=tuple(shifts),
        elements=tuple(sorted(elements)),
    )


def factor_cached(
    v: int, budget: FactorBudget, cache: dict[int, FactoredInteger] | None
) -> FactoredInteger:
    """factor() through an optional memo table; incomplete cached entries
    are re-attempted so a grown budget can still finish them."""
    if cache is not None:
        hit = cache.get(v)
        if hit is not None and hit.complete:
            return hit
    f = factor(v, budget)
    if cache is not None:
        cache[v] = f
    return f


def prime_support(
    aset: ASet,
    budget: FactorBudget = FactorBudget(),
    cache: dict[int, FactoredInteger] | None = None,
) -> ASet:
    """Factor each nonzero element; support is the union of found primes,
    certified iff every factorization completed within budget."""
    facs: list[FactoredInteger | None] = []
    support: set[int] = set()
    certified = True
    for v in aset.elements:
        if v == 0:
            facs.append(None)
            continue
        f = factor_cached(v, budget, cache)
        facs.append(f)
        support.update(f.primes)
        if not f.complete:
            certified = False
    return replace(
        aset,
        factorizations=tuple(facs),
        support=frozenset(support),
        certified=certified,
    )


def _family(ctx: FieldContext, family: str, q: SplitPrime) -> ASet:
    if family == "A1":
        return family_A1(ctx, q)
    if family == "A2":
        return family_A2(ctx, q)
    raise ValueError(f"unknown family {family!r}")


def intersect_supports(
    ctx: FieldContext,
    family: str,
    s0_truncation: list[SplitPrime],
    budget: FactorBudget = FactorBudget(),
    cache: dict[int, FactoredInteger] | None = None,
) -> tuple[frozenset[int], bool]:
    """Intersection of the family's prime supports over the truncation.

    Only the first member's elements are factored; survivors are then
    filtered by direct divisibility into every later member's elements.
    Any truncation yields a superset of the full (infinite) intersection.
    """
    if not s0_truncation:
        raise ValueError("intersect_supports: truncation must be nonempty")
    first = prime_support(_family(ctx, family, s0_truncation[0]), budget, cache)
    primes = set(first.support)
    for q in s0_truncation[1:]:
        if not primes:
            break
        elems = [v for v in _family(ctx, family, q).elements if v != 0]
        primes = {p for p in primes if any(v % p == 0 for v in elems)}
    return frozenset(primes), first.certified
