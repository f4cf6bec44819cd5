"""
Exact arithmetic in the cyclotomic field Q(zeta_q), reduction of its integers
modulo powers of pi = 1 - zeta_q, the element mu^(i) and its truncated
logarithm.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
import math

from sympy import Poly, QQ, Rational, cyclotomic_poly

from powerresidues.PolyCore import PolyExact, x
from powerresidues.QArith import INFINITY, NotCoprimeError, check_prime, mod_inverse_star, q_valuation
from powerresidues.Util import format_polynomial

ZETA = 'ZETA'
PI = 'PI'


class FieldMismatchError(ValueError):
    """Raised when combining elements of Q(zeta_q) for different q"""


class ZeroValuationError(ValueError):
    """Raised when asking for the valuation of zero"""


class NonIntegralError(ValueError):
    """Raised when an element of Z[zeta_q] was expected"""


def _normalize(value):
    """keep integral values as int, so integer arithmetic stays fast"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _reduce(q, coefficients):
    """Folds a polynomial in zeta into degree <= q - 2 using zeta^q = 1 and Phi_q(zeta) = 0"""
    folded = [0] * q
    for exponent, coefficient in enumerate(coefficients):
        folded[exponent % q] += coefficient
    top = folded[q - 1]
    return tuple(_normalize(c - top) for c in folded[:q - 1])


@dataclass(frozen=True, eq=False)
class CycloNum:
    """
    An element of Q(zeta_q) as q - 1 rational coefficients, either over the
    powers zeta^0..zeta^(q-2) (basis ZETA) or over pi^0..pi^(q-2) with
    pi = 1 - zeta (basis PI). Arithmetic always returns ZETA elements.
    Equality and hashing compare values, whatever the basis.
    """
    q: int
    coeffs: tuple
    basis: str = ZETA

    def as_zeta(self):
        """The same element over the powers of zeta"""
        return self if self.basis == ZETA else from_pi_basis(self.q, self.coeffs)

    def __eq__(self, other):
        """Equal when both are the same element of the same field"""
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.q == other.q and self.as_zeta().coeffs == other.as_zeta().coeffs

    def __hash__(self):
        """Hash of the ZETA coefficients, consistent with __eq__"""
        return hash((self.q, self.as_zeta().coeffs))

    def is_zero(self):
        """True for the zero element"""
        return not any(self.coeffs)

    def is_integral(self):
        """True if every coefficient is an integer, i.e. the element is in Z[zeta_q]"""
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def __add__(self, other):
        return cyclo_add(self, other)

    def __sub__(self, other):
        return cyclo_sub(self, other)

    def __mul__(self, other):
        return cyclo_mul(self, other)

    def __neg__(self):
        return cyclo_scale(self, -1)

    def __pow__(self, exponent):
        return cyclo_pow(self, exponent)

    def __str__(self):
        return format_polynomial(self.coeffs, variable='z' if self.basis == ZETA else 'pi')


def cyclo_from_coefficients(q, coefficients):
    """Element sum c_k zeta^k, for any number of coefficients"""
    return CycloNum(q, _reduce(q, coefficients))


def cyclo_from_int(q, value):
    """The rational number value as an element of Q(zeta_q)"""
    return cyclo_from_coefficients(q, [value])


def zeta_power(q, exponent):
    """zeta_q^exponent, for any integer exponent"""
    coefficients = [0] * q
    coefficients[exponent % q] = 1
    return cyclo_from_coefficients(q, coefficients)


def one_minus_zeta(q):
    """The uniformizer pi = 1 - zeta_q"""
    return cyclo_from_coefficients(q, [1, -1])


def _check_same_field(a, b):
    """Raises FieldMismatchError unless a and b share q"""
    if a.q != b.q:
        raise FieldMismatchError(f'Cannot combine elements of Q(zeta_{a.q}) and Q(zeta_{b.q})')


def cyclo_add(a, b):
    """Sum of two elements of the same field"""
    _check_same_field(a, b)
    a, b = a.as_zeta(), b.as_zeta()
    return CycloNum(a.q, tuple(_normalize(c + d) for c, d in zip(a.coeffs, b.coeffs)))


def cyclo_sub(a, b):
    """Difference of two elements of the same field"""
    return cyclo_add(a, cyclo_scale(b, -1))


def cyclo_scale(a, factor):
    """Multiplication by a rational number"""
    a = a.as_zeta()
    return CycloNum(a.q, tuple(_normalize(c * factor) for c in a.coeffs))


def cyclo_mul(a, b):
    """Product of two elements, reduced modulo Phi_q"""
    _check_same_field(a, b)
    a, b = a.as_zeta(), b.as_zeta()
    product_coefficients = [0] * (2 * a.q - 3)
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        for j, d in enumerate(b.coeffs):
            product_coefficients[i + j] += c * d
    return cyclo_from_coefficients(a.q, product_coefficients)


def cyclo_pow(a, exponent):
    """a^exponent for a non-negative integer exponent, by repeated squaring"""
    if exponent < 0:
        raise ValueError('Only non-negative exponents are supported')
    result = cyclo_from_int(a.q, 1)
    base = a.as_zeta()
    while exponent:
        if exponent & 1:
            result = cyclo_mul(result, base)
        exponent >>= 1
        if exponent:
            base = cyclo_mul(base, base)
    return result


@lru_cache(maxsize=None)
def _binomial_table(q):
    """Binomial coefficients C(i, k) for 0 <= i, k < q - 1"""
    return tuple(tuple(math.comb(k, i) for i in range(q - 1)) for k in range(q - 1))


def to_pi_basis(a):
    """
    Coefficients over the powers of pi = 1 - zeta: substituting zeta = 1 - pi,
    b_i = (-1)^i sum_k a_k C(k, i). No reduction is needed since the degree
    stays below q - 1.
    """
    if a.basis == PI:
        return a
    table = _binomial_table(a.q)
    size = a.q - 1
    coefficients = tuple(
        _normalize((-1) ** i * sum(a.coeffs[k] * table[k][i] for k in range(i, size))) for i in range(size))
    return CycloNum(a.q, coefficients, PI)


def from_pi_basis(q, coefficients):
    """Inverse of to_pi_basis: a_k = (-1)^k sum_i b_i C(i, k)"""
    table = _binomial_table(q)
    size = q - 1
    coefficients = tuple(coefficients) + (0, ) * (size - len(coefficients))
    return CycloNum(q, tuple(
        _normalize((-1) ** k * sum(coefficients[i] * table[i][k] for i in range(k, size))) for k in range(size)))


@lru_cache(maxsize=None)
def _cyclotomic(q):
    """Phi_q as a sympy polynomial over QQ"""
    return Poly(cyclotomic_poly(q, x), x, domain=QQ)


def norm(a):
    """Norm from Q(zeta_q) to Q, as the resultant of Phi_q with the representing polynomial"""
    a = a.as_zeta()
    polynomial = PolyExact.from_coefficients(a.coeffs)
    if polynomial.degree() < 0:
        return Fraction(0)
    if polynomial.degree() == 0:
        return polynomial.coeffs[0] ** (a.q - 1)
    value = Rational(_cyclotomic(a.q).resultant(polynomial.to_sympy()))
    return Fraction(int(value.p), int(value.q))


def pi_valuation(a):
    """
    The (1 - zeta_q)-adic valuation, normalized so that v(1 - zeta_q) = 1 and
    v(q) = q - 1. Since q is totally ramified it equals v_q of the norm.
    """
    if a.is_zero():
        raise ZeroValuationError('The valuation of 0 is not an integer')
    return q_valuation(norm(a), a.q)


def pi_valuation_by_digits(a):
    """
    min_k (k + (q - 1) v_q(b_k)) over the pi basis coefficients b_k. The
    terms have distinct valuations, so this is the valuation of the sum.
    """
    pi_coefficients = to_pi_basis(a).coeffs
    return min((k + (a.q - 1) * q_valuation(c, a.q) for k, c in enumerate(pi_coefficients) if c != 0),
               default=INFINITY)


def pi_valuation_at_least(a, e):
    """v_pi(a) >= e, also defined (and true) for a = 0"""
    return pi_valuation_by_digits(a) >= e


@dataclass(frozen=True)
class PiAdicClass:
    """
    Canonical representative a0 + a1 pi + ... + a_(q-2) pi^(q-2) of a class of
    Z[zeta_q] modulo pi^e, with a0 in [0, q^2), a1 in [0, q^2) when e = q + 1
    (else [0, q)) and the rest in [0, q).
    """
    q: int
    e: int
    a0: int
    a1: int
    rest: tuple = ()

    def coefficients(self):
        """The digits (a0, a1, a2, ...) as a tuple"""
        return (self.a0, self.a1) + tuple(self.rest)

    def is_zero(self):
        """True for the class of zero"""
        return not any(self.coefficients())

    def __str__(self):
        return ' '.join(str(c) for c in self.coefficients())


def _check_exponent(q, e):
    """Raises ValueError unless e is q or q + 1"""
    if e not in (q, q + 1):
        raise ValueError(f'Only the exponents {q} and {q + 1} are supported, got {e}')


def _a1_modulus(q, e):
    """Modulus of the digit a1: q modulo pi^q, q^2 modulo pi^(q+1)"""
    return q * q if e == q + 1 else q


def reduce_mod_pi_power(a, e):
    """Class of an element of Z[zeta_q] modulo pi^e, e in {q, q + 1}"""
    q = a.q
    _check_exponent(q, e)
    coefficients = to_pi_basis(a).coeffs
    if not all(Fraction(c).denominator == 1 for c in coefficients):
        raise NonIntegralError(f'{a} is not in Z[zeta_{q}]')
    return PiAdicClass(q, e, coefficients[0] % (q * q), coefficients[1] % _a1_modulus(q, e),
                       tuple(c % q for c in coefficients[2:]))


def class_to_cyclo(c):
    """The representative of a class as an element of Z[zeta_q]"""
    return from_pi_basis(c.q, c.coefficients())


def class_representatives(q, e):
    """Every canonical representative modulo pi^e (q^e of them)"""
    _check_exponent(q, e)
    ranges = [range(q * q), range(_a1_modulus(q, e))] + [range(q)] * (q - 3)
    for digits in product(*ranges):
        yield PiAdicClass(q, e, digits[0], digits[1], tuple(digits[2:]))


@lru_cache(maxsize=None)
def _qth_powers_mod_q2(q):
    """The q-th powers b^q modulo q^2, 0 excluded"""
    return frozenset(pow(b, q, q * q) for b in range(q * q))


def is_qth_power_class(c):
    """True if the class contains the q-th power of an element of Z[zeta_q]"""
    if any(c.rest):
        return False
    powers = _qth_powers_mod_q2(c.q)
    if c.e == c.q:
        return c.a1 == 0 and c.a0 in powers
    if c.a0 == 0:
        return c.a1 % c.q == 0
    return c.a0 % c.q != 0 and c.a0 in powers and c.a1 == 0


def mu_element(q, m, n, i):
    """mu^(i) = zeta^i prod_{j=1}^{q-1} (m - n zeta^j)^(j*)"""
    check_prime(q, odd=True)
    result = zeta_power(q, i)
    for j in range(1, q):
        factor = [0] * (j + 1)
        factor[0] += m
        factor[j] -= n
        result = cyclo_mul(result, cyclo_pow(cyclo_from_coefficients(q, factor), mod_inverse_star(j, q)))
    return result


def canonical_i(q, m, n):
    """The representative in [0, q - 1] of -n / (m - n) modulo q"""
    if (m - n) % q == 0:
        raise NotCoprimeError(f'{q} divides m - n = {m - n}')
    return -n * mod_inverse_star(m - n, q) % q


def truncated_log_mu(q, m, n, i=None):
    """
    sum_{j=1}^{q-1} sum_{t=1}^{q} -j* (alpha (1 - zeta^j))^t / t with
    alpha = -n / (m - n), the truncation of the q-adic logarithm of
    mu^(i) / (m - n)^((q-1)q/2) for i the canonical index.
    """
    expected = canonical_i(q, m, n)
    if i is not None and i != expected:
        raise ValueError(f'The truncated logarithm needs i = {expected}, got {i}')
    alpha = Fraction(-n, m - n)
    result = cyclo_from_int(q, 0)
    for j in range(1, q):
        base = cyclo_from_coefficients(q, [1] + [0] * (j - 1) + [-1])
        power = cyclo_from_int(q, 1)
        for t in range(1, q + 1):
            power = cyclo_mul(power, base)
            result = cyclo_add(result, cyclo_scale(power, -mod_inverse_star(j, q) * alpha ** t / t))
    return result
