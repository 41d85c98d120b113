"""Small integer helpers: prime factors and pi-parts."""
from functools import lru_cache


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct primes dividing ``n``, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == (n,)


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def pi_part(n: int, primes) -> int:
    """Largest divisor of ``n`` whose prime factors all lie in ``primes``."""
    out = 1
    for p in prime_factors(n):
        if p in primes:
            while n % p == 0:
                out *= p
                n //= p
    return out


def p_part(n: int, p: int) -> int:
    return pi_part(n, {p})
