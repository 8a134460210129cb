"""Exact big-integer primitives: Kronecker symbol, primality, bounded factoring."""

from dataclasses import dataclass
from math import gcd, isqrt
import time

# Deterministic Miller-Rabin witness threshold (Sorenson-Webster): the 13
# bases below decide primality for every n under this.
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), fully multiplicative in both arguments."""
    if n == 0:
        raise ValueError("kronecker: n must be nonzero")
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    # strip factors of 2 from n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t and a % 2 == 0:
        return 0
    # (a|2)^t
    result = 1
    if t % 2 == 1 and a % 8 in (3, 5):
        result = -1
    # now n odd positive: Jacobi symbol by quadratic reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _miller_rabin_composite(n: int, a: int) -> bool:
    """True if base a proves n composite (n odd > 2)."""
    a %= n
    if a == 0:
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _lucas_strong_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge parameters (n odd, not a square)."""
    d = 5
    while True:
        s = kronecker(d, n)
        if s == -1:
            break
        if s == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    # factor n + 1 = k * 2^r
    k = n + 1
    r = 0
    while k % 2 == 0:
        k //= 2
        r += 1
    # compute U_k, V_k by binary ladder
    u, v, qk = 1, p, q % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * ((n + 1) // 2) % n, (d * u + p * v) * ((n + 1) // 2) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(r - 1):
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic below ~3.3e24, BPSW-strength beyond."""
    return prime_status(n) != "composite"


def prime_status(n: int) -> str:
    """Return "prime", "composite", or "probable" (BPSW pass above the
    deterministic witness threshold)."""
    if n < 2:
        return "composite"
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return "prime" if n == p else "composite"
    if n < _MR_DETERMINISTIC_LIMIT:
        for a in _MR_BASES:
            if _miller_rabin_composite(n, a):
                return "composite"
        return "prime"
    if _miller_rabin_composite(n, 2):
        return "composite"
    r = isqrt(n)
    if r * r == n:
        return "composite"
    return "probable" if _lucas_strong_probable_prime(n) else "composite"


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound by sieve of Eratosthenes."""
    if bound < 2:
        raise ValueError("primes_up_to: bound must be >= 2")
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, fl in enumerate(sieve) if fl]


@dataclass(frozen=True)
class FactorBudget:
    """Effort limits for factor(); exhaustion yields a cofactor, not an error."""

    trial_bound: int = 10**6
    rho_iterations: int = 10**7
    time_per_int_ms: int = 10_000


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    sign: int
    prime_powers: tuple[tuple[int, int], ...]
    cofactor: int | None = None

    def reconstruct(self) -> int:
        out = self.sign
        for p, e in self.prime_powers:
            out *= p**e
        if self.cofactor is not None:
            out *= self.cofactor
        return out

    @property
    def complete(self) -> bool:
        return self.cofactor is None

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.prime_powers]


_TRIAL_PRIMES: dict[int, list[int]] = {}


def _trial_primes(bound: int) -> list[int]:
    if bound not in _TRIAL_PRIMES:
        if len(_TRIAL_PRIMES) > 8:
            _TRIAL_PRIMES.clear()
        _TRIAL_PRIMES[bound] = primes_up_to(max(2, bound))
    return _TRIAL_PRIMES[bound]


def _brent_rho(n: int, max_iters: int, deadline: float | None) -> int | None:
    """Brent-cycle rho; returns a nontrivial factor of composite odd n, or
    None when the iteration budget (fixed seed schedule) runs out."""
    spent = 0
    for c in range(1, 100):  # polynomial offset schedule x^2 + c
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
            spent += r
            if spent > max_iters or (deadline is not None and time.monotonic() > deadline):
                return None
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle degenerated for this c; try the next offset
    return None


def factor(n: int, budget: FactorBudget = FactorBudget()) -> FactoredInteger:
    """Factor n under an effort budget: trial division then Brent rho.

    Deterministic for a given (n, budget) up to the wall-clock cap; any
    remaining composite part is reported as the cofactor.
    """
    if n == 0:
        raise ValueError("factor: n must be nonzero")
    sign = -1 if n < 0 else 1
    m = abs(n)
    powers: dict[int, int] = {}
    for p in _trial_primes(budget.trial_bound):
        if p * p > m:
            break
        while m % p == 0:
            powers[p] = powers.get(p, 0) + 1
            m //= p
    deadline = None
    if budget.time_per_int_ms > 0:
        deadline = time.monotonic() + budget.time_per_int_ms / 1000.0
    stack = [m] if m > 1 else []
    cofactors: list[int] = []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m <= budget.trial_bound * budget.trial_bound or is_prime(m):
            # below trial_bound^2 any remaining part is prime
            powers[m] = powers.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        f = _brent_rho(m, budget.rho_iterations, deadline)
        if f is None:
            cofactors.append(m)
        else:
            stack.extend((f, m // f))
    cofactor = None
    if cofactors:
        cofactor = 1
        for c in cofactors:
            cofactor *= c
    return FactoredInteger(
        value=n,
        sign=sign,
        prime_powers=tuple(sorted(powers.items())),
        cofactor=cofactor,
    )
