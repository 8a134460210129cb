"""Search for fundamental discriminants N such that no odd prime below
|N|/4 splitting in k splits in Q(sqrt(N)); finite by Mazur-type results,
searched here up to a configurable bound."""

from dataclasses import dataclass

from .arith import kronecker, primes_up_to
from .quadfield import FieldContext, is_fundamental, splitting_type


@dataclass(frozen=True)
class MazurResult:
    bound: int
    members: tuple[int, ...]
    k_discriminant: int
    largest_gap_tail: int


def is_in_mazur(ctx: FieldContext, N: int) -> bool:
    """Membership test: every split-in-k prime l with 2 < l < |N|/4 must
    have kronecker(N, l) != 1.  Vacuously true when the range is empty."""
    if not is_fundamental(N):
        raise ValueError(f"{N} is not a fundamental discriminant")
    limit = abs(N)  # l < |N|/4  <=>  4l < |N|
    for l in _odd_primes_below(limit):
        if splitting_type(ctx, l) == "split" and kronecker(N, l) == 1:
            return False
    return True


def _odd_primes_below(four_times_limit: int):
    """Odd primes l with 4*l < four_times_limit."""
    cap = (four_times_limit - 1) // 4
    if cap < 3:
        return []
    return [l for l in primes_up_to(cap) if l > 2]


def mazur_prime_set(ctx: FieldContext, bound: int) -> MazurResult:
    """Primes p <= bound with p = 1 mod 4 passing the membership test.

    Only these can enter the final union through the discriminant set: a
    prime equal to a fundamental discriminant is 1 mod 4.
    """
    if bound < 5:
        raise ValueError("mazur_prime_set: bound must be >= 5")
    members = []
    split_cache: dict[int, bool] = {}
    candidates = [p for p in primes_up_to(bound) if p % 4 == 1]
    small_primes = primes_up_to(max(5, bound // 4 + 1))
    for p in candidates:
        ok = True
        for l in small_primes:
            if 4 * l >= p:
                break
            if l == 2:
                continue
            if l not in split_cache:
                split_cache[l] = splitting_type(ctx, l) == "split"
            if split_cache[l] and kronecker(p, l) == 1:
                ok = False
                break
        if ok:
            members.append(p)
    tail = bound - members[-1] if members else bound
    return MazurResult(
        bound=bound,
        members=tuple(members),
        k_discriminant=ctx.D,
        largest_gap_tail=tail,
    )


def mazur_discriminants(ctx: FieldContext, bound: int) -> MazurResult:
    """All fundamental discriminants N with |N| <= bound passing the test."""
    if bound < 1:
        raise ValueError("mazur_discriminants: bound must be >= 1")
    members = []
    for N in range(-bound, bound + 1):
        if N in (0, 1) or not is_fundamental(N):
            continue
        if is_in_mazur(ctx, N):
            members.append(N)
    tail = bound - max((abs(N) for N in members), default=0)
    return MazurResult(
        bound=bound,
        members=tuple(members),
        k_discriminant=ctx.D,
        largest_gap_tail=tail,
    )
