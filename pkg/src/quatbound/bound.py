"""Assembly of the finite prime superset for discriminants of quaternion
algebras whose Shimura curve can have a point over k, with per-prime
evidence checking and candidate-discriminant enumeration."""

from dataclasses import dataclass, field
from itertools import combinations
from math import prod

from .arith import FactorBudget, primes_up_to
from .quadfield import FieldContext, splitting_type
from .classgroup import (
    SplitPrime,
    choose_S,
    enumerate_S0,
    fill_class_data,
)
from .weilsets import family_A3, intersect_supports, prime_support
from .mazur import is_in_mazur, mazur_prime_set

SMALL_PRIME_CAP = 23


@dataclass(frozen=True)
class BoundParams:
    s0_count: int = 4
    mazur_bound: int = 10**6
    factor_budget: FactorBudget = FactorBudget()
    S_override: tuple[int, ...] | None = None
    cache: dict | None = None


@dataclass
class BoundReport:
    field: FieldContext
    S: list[SplitPrime]
    s0_truncation: list[SplitPrime]
    components: dict[str, frozenset[int]]
    union: frozenset[int]
    certified: bool
    caveats: list[str] = field(default_factory=list)
    cofactors: list[int] = field(default_factory=list)
    a3_set: object = None


def assemble_bound(ctx: FieldContext, params: BoundParams = BoundParams()) -> BoundReport:
    """Compute every component of the containment and union them."""
    if ctx.class_number is None:
        fill_class_data(ctx)
    if ctx.class_number == 1:
        raise ValueError("theorem inapplicable: class number is 1")

    s0 = enumerate_S0(ctx, max(params.s0_count, 1))
    if params.S_override is not None:
        S = _validated_override(ctx, params.S_override)
    else:
        S = choose_S(ctx)

    caveats: list[str] = []
    cofactors: list[int] = []

    a1, a1_cert = intersect_supports(ctx, "A1", s0, params.factor_budget, params.cache)
    a2, a2_cert = intersect_supports(ctx, "A2", s0, params.factor_budget, params.cache)
    a3_raw = family_A3(ctx, S)
    a3 = prime_support(a3_raw, params.factor_budget, params.cache)
    for f in a3.factorizations:
        if f is not None and not f.complete:
            cofactors.append(f.cofactor)

    mz = mazur_prime_set(ctx, params.mazur_bound)
    caveats.append(f"mazur set truncated at bound {params.mazur_bound}")

    certified = a1_cert and a2_cert and a3.certified
    if not certified:
        caveats.append("factor budget exhausted; unfactored cofactors listed")

    components = {
        "ram": frozenset(ctx.ram_primes),
        "small": frozenset(primes_up_to(SMALL_PRIME_CAP)),
        "a1_intersection": a1,
        "a2_intersection": a2,
        "a3_support": frozenset(a3.support),
        "mazur_primes": frozenset(mz.members),
        "l_of_S": frozenset(q.l for q in S),
    }
    union = frozenset().union(*components.values())
    return BoundReport(
        field=ctx,
        S=S,
        s0_truncation=s0,
        components=components,
        union=union,
        certified=certified,
        caveats=caveats,
        cofactors=cofactors,
        a3_set=a3,
    )


def _validated_override(ctx: FieldContext, ls: tuple[int, ...]) -> list[SplitPrime]:
    from .classgroup import (
        form_order,
        generates,
        ideal_class_of,
        reduce_form,
        _pf,
    )
    from .quadfield import prime_ideal_above

    ident = reduce_form(*_pf(ctx.D))
    out = []
    for l in ls:
        if splitting_type(ctx, l) != "split":
            raise ValueError(f"S override: {l} does not split in k")
        I = prime_ideal_above(ctx, l)
        f = ideal_class_of(ctx, I)
        if f == ident:
            raise ValueError(f"S override: prime above {l} is principal")
        out.append(
            SplitPrime(l=l, ideal=I, form=f, principal=False,
                       class_order=form_order(ctx.D, f))
        )
    if not generates(ctx.D, {q.form for q in out}):
        raise ValueError("S override does not generate the class group")
    return out


@dataclass(frozen=True)
class Evidence:
    p: int
    claims: tuple[str, ...]  # component names claiming p, re-derived


def verify_prime_membership(ctx: FieldContext, p: int, report: BoundReport) -> Evidence:
    """Re-derive, from scratch, every component's claim about p and check
    it against the report.  Raises on any disagreement."""
    from .weilsets import _family

    claims = []
    if ctx.D % p == 0:
        claims.append("ram")
    if p <= SMALL_PRIME_CAP:
        claims.append("small")
    s0 = report.s0_truncation
    for name, fam in (("a1_intersection", "A1"), ("a2_intersection", "A2")):
        if all(
            any(v % p == 0 for v in _family(ctx, fam, q).elements if v != 0)
            for q in s0
        ):
            claims.append(name)
    a3 = family_A3(ctx, report.S)
    if any(v % p == 0 for v in a3.elements if v != 0):
        claims.append("a3_support")
    if p % 4 == 1 and p <= _mazur_bound_of(report) and is_in_mazur(ctx, p):
        claims.append("mazur_primes")
    if p in report.components["l_of_S"]:
        claims.append("l_of_S")

    for name, comp in report.components.items():
        claimed = name in claims
        if name in ("a1_intersection", "a2_intersection", "a3_support"):
            # factorization may be uncertified: report membership must still
            # agree with direct divisibility when certified
            if report.certified and claimed != (p in comp):
                raise RuntimeError(
                    f"evidence mismatch for p={p} in {name}: "
                    f"re-derived {claimed}, report {p in comp}"
                )
        elif claimed != (p in comp):
            raise RuntimeError(
                f"evidence mismatch for p={p} in {name}: "
                f"re-derived {claimed}, report {p in comp}"
            )
    return Evidence(p=p, claims=tuple(claims))


def _mazur_bound_of(report: BoundReport) -> int:
    for c in report.caveats:
        if c.startswith("mazur set truncated at bound "):
            return int(c.rsplit(" ", 1)[1])
    raise AssertionError("report missing mazur truncation caveat")


def candidate_discriminants(
    ctx: FieldContext, report: BoundReport, max_factors: int = 4
) -> list[int]:
    """Squarefree products of an even number of union primes such that every
    split factor is 1 mod 4 (membership in the restricted family) and at
    least one factor splits in k (so k does not split the algebra)."""
    if max_factors < 2 or max_factors % 2 != 0:
        raise ValueError("max_factors must be an even integer >= 2")
    usable = []
    for p in sorted(report.union):
        sp = splitting_type(ctx, p) == "split"
        if sp and p % 4 != 1:
            continue  # would violate the congruence condition outright
        usable.append((p, sp))
    out = []
    for r in range(2, max_factors + 1, 2):
        for combo in combinations(usable, r):
            if not any(sp for _, sp in combo):
                continue
            out.append(prod(p for p, _ in combo))
    return sorted(out)
