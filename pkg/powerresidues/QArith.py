"""
Exact integer and rational arithmetic: q-adic valuations, inverses modulo q,
primality, power residue symbols and the special prime form
p = m^(q-1) + m^(q-2) n + ... + n^(q-1).
"""
from fractions import Fraction
import logging

from sympy import isprime
from sympy.functions.combinatorial.numbers import legendre_symbol

# v_q(0), and also the point at infinity of Z/q^2 Z in the T_q sets
INFINITY = float('inf')
# sympy primality is a deterministic Miller-Rabin below this bound, BPSW above
DETERMINISTIC_PRIME_LIMIT = 2**64


class NotPrimeError(ValueError):
    """Raised when a prime modulus or a prime q was expected and not given"""


class NotCoprimeError(ValueError):
    """Raised when an argument must be a unit modulo a prime and it is not"""


class CongruenceConditionError(ValueError):
    """Raised when p is not congruent to 1 modulo q"""


def is_prime(n):
    """
    Returns True if n is a prime number. The answer is deterministic for
    |n| < 2^64; above that it is a Baillie-PSW probable prime test (see
    is_probable_only).
    """
    return n >= 2 and isprime(n)


def is_probable_only(n):
    """True if a positive primality answer for n is only BPSW-probable"""
    return abs(n) >= DETERMINISTIC_PRIME_LIMIT


def check_prime(q, odd=False):
    """Raise NotPrimeError unless q is a prime (an odd one, if requested)"""
    if not is_prime(q) or (odd and q == 2):
        raise NotPrimeError(f'{q} is not an {"odd " if odd else ""}prime')


def qth_residue_symbol(a, p, q):
    """
    Returns the q-th power residue symbol (a/p)_q as +1 or -1, using Euler's
    criterion a^((p-1)/q) = 1 mod p.
    """
    check_prime(q)
    if not is_prime(p):
        raise NotPrimeError(f'{p} is not a prime')
    if p % q != 1:
        raise CongruenceConditionError(f'{p} is not 1 modulo {q}')
    if a % p == 0:
        raise NotCoprimeError(f'{p} divides {a}')
    return 1 if pow(a, (p - 1) // q, p) == 1 else -1


def mod_inverse_star(a, q):
    """Returns a*, the inverse of a modulo q normalized to [1, q - 1]"""
    if a % q == 0:
        raise NotCoprimeError(f'{q} divides {a}')
    return pow(a, -1, q)


def q_valuation(r, q):
    """
    q-adic valuation of an integer or rational r, with v_q(q) = 1 and
    v_q(0) = INFINITY.
    """
    r = Fraction(r)
    if r == 0:
        return INFINITY
    valuation = 0
    numerator, denominator = r.numerator, r.denominator
    while numerator % q == 0:
        numerator //= q
        valuation += 1
    while denominator % q == 0:
        denominator //= q
        valuation -= 1
    return valuation


def reduce_mod_q2(r, q):
    """
    Returns the residue in [0, q^2) of an element of Z_(q) (an integer or a
    rational with denominator prime to q).
    """
    r = Fraction(r)
    modulus = q * q
    if r.denominator % q == 0:
        raise NotCoprimeError(f'{r} is not in Z_({q})')
    return r.numerator * pow(r.denominator, -1, modulus) % modulus


def eval_phi_form(m, n, q):
    """
    Evaluates sum_{i=0}^{q-1} m^i n^(q-1-i) by Horner's scheme. It is equal to
    Phi_q(n/m) m^(q-1) when m != 0 and it is still defined for m = 0.
    """
    value = 0
    n_power = 1
    for _ in range(q):
        value = value * m + n_power
        n_power *= n
    return value


def c_q(q):
    """Returns the integer c_q = sum_{j=1}^{q-1} j j*"""
    return sum(j * mod_inverse_star(j, q) for j in range(1, q))


def legendre(a, q):
    """Legendre symbol (a/q)_2 for an odd prime q"""
    return legendre_symbol(a % q, q)


def quadratic_euler_report(a, q):
    """
    Returns the pair (a^((q-1)q/2) mod q^2, (a/q)_2 mod q^2), the two values
    compared by quadratic_euler_check.
    """
    if a % q == 0:
        raise NotCoprimeError(f'{q} divides {a}')
    modulus = q * q
    return pow(a, (q - 1) * q // 2, modulus), legendre(a, q) % modulus


def quadratic_euler_check(a, q):
    """True iff a^((q-1)q/2) = (a/q)_2 mod q^2"""
    power, symbol = quadratic_euler_report(a, q)
    return power == symbol


def second_supplement_check(p):
    """
    For an odd prime p, checks the second supplementary law of quadratic
    reciprocity: (2/p)_2 = 1 iff p = +-1 mod 8.
    """
    logger = logging.getLogger('powerresidues')
    symbol = qth_residue_symbol(2, p, 2)
    expected = 1 if p % 8 in (1, 7) else -1
    if symbol != expected:
        logger.error('(2/%s)_2 = %s but p mod 8 = %s', p, symbol, p % 8)
    return symbol == expected
