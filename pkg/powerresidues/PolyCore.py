"""
Exact polynomial and rational function layer: the negative index
polylogarithms Li_{-s}(x), the surjection polynomials F_s(x), the polynomial
f_q(x) with its residue sets S_q and T_q, and the congruences relating them.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import logging
import math

from sympy import Poly, QQ, Symbol

from powerresidues.QArith import INFINITY, c_q, check_prime, q_valuation, reduce_mod_q2, NotCoprimeError
from powerresidues.Util import format_polynomial, format_residues

x = Symbol('x')


class PoleError(ValueError):
    """Raised when a rational function is evaluated at its pole x = 1"""


class NotLocalError(ValueError):
    """Raised when an argument is expected in Z_(q) and has q in its denominator"""


class NonLocalCoefficientError(AssertionError):
    """Raised if a coefficient of f_q turns out not to be in Z_(q)"""


class CrossCheckError(AssertionError):
    """Raised when two independent constructions of the same object disagree"""


def _trim(coefficients):
    """Drops the trailing zero coefficients"""
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@dataclass(frozen=True)
class PolyQ2:
    """Polynomial with coefficients in Z/q^2 Z, indexed by degree"""
    q: int
    coeffs: tuple

    @staticmethod
    def from_coefficients(q, coefficients):
        """Reduces (exact, Z_(q)) coefficients modulo q^2"""
        return PolyQ2(q, _trim(reduce_mod_q2(c, q) for c in coefficients))

    def __call__(self, value):
        """Value at an integer or an element of Z_(q), modulo q^2"""
        modulus = self.q * self.q
        result = 0
        for coefficient in reversed(self.coeffs):
            result = (result * value + coefficient) % modulus
        return result

    def is_zero(self):
        """True if every coefficient is 0 modulo q^2"""
        return not self.coeffs

    def __str__(self):
        return format_polynomial(self.coeffs)


@dataclass(frozen=True)
class PolyExact:
    """Polynomial with exact rational coefficients, indexed by degree"""
    coeffs: tuple

    @staticmethod
    def from_coefficients(coefficients):
        """Builds a polynomial from coefficients in increasing degree"""
        return PolyExact(_trim(Fraction(c) for c in coefficients))

    @staticmethod
    def from_sympy(poly):
        """Converts a sympy Poly in x"""
        return PolyExact.from_coefficients(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))

    def to_sympy(self):
        """Converts to a sympy Poly in x over QQ"""
        if not self.coeffs:
            return Poly(0, x, domain=QQ)
        return Poly([QQ(c.numerator, c.denominator) for c in reversed(self.coeffs)], x, domain=QQ)

    def degree(self):
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_integral(self):
        """True if every coefficient is an integer"""
        return all(c.denominator == 1 for c in self.coeffs)

    def is_local(self, q):
        """True if every coefficient lies in Z_(q)"""
        return all(c.denominator % q != 0 for c in self.coeffs)

    def __call__(self, value):
        """Exact evaluation at an integer or rational value"""
        value = Fraction(value)
        if self.is_integral():
            # homogeneous Horner on integers: sum c_k a^k b^(d-k) / b^d
            a, b = value.numerator, value.denominator
            result = 0
            b_power = 1
            for coefficient in reversed(self.coeffs):
                result = result * a + coefficient.numerator * b_power
                b_power *= b
            return Fraction(result, b_power // b if self.coeffs else 1)
        result = Fraction(0)
        for coefficient in reversed(self.coeffs):
            result = result * value + coefficient
        return result

    def reduce(self, q):
        """Reduction modulo q^2 of a polynomial with coefficients in Z_(q)"""
        return PolyQ2.from_coefficients(q, self.coeffs)

    def __str__(self):
        return format_polynomial(self.coeffs)


@dataclass(frozen=True)
class RatFunc:
    """The rational function numerator(x) / (1 - x)^d"""
    numerator: PolyExact
    d: int

    def __call__(self, value):
        """Value at a rational number, PoleError at 1"""
        value = Fraction(value)
        if value == 1:
            raise PoleError(f'{self} has a pole at x = 1')
        return self.numerator(value) / (1 - value) ** self.d

    def __str__(self):
        return f'({self.numerator})/(1-x)^{self.d}'


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z/q^2 Z, possibly together with the point at infinity"""
    q: int
    members: frozenset

    def __contains__(self, residue):
        """Membership of a residue modulo q^2 or of INFINITY"""
        return residue in self.members

    def __len__(self):
        return len(self.members)

    def sorted(self):
        """Members in increasing order, INFINITY last"""
        return sorted(self.members)

    def __str__(self):
        return format_residues(self.members)


@lru_cache(maxsize=None)
def polylog_neg(s):
    """
    Li_{-s}(x) = (x d/dx)^s x/(1-x), computed as numerator / (1-x)^(s+1) with
    the numerator recurrence N_{s+1} = x(1-x) N_s' + (s+1) x N_s.
    """
    if s < 0:
        raise ValueError('Only non-negative s are supported')
    generator = Poly(x, x, domain=QQ)
    numerator = generator
    for step in range(s):
        numerator = generator * (1 - generator) * numerator.diff(x) + (step + 1) * generator * numerator
    return RatFunc(PolyExact.from_sympy(numerator), s + 1)


def polylog_neg_mod(s, q):
    """Numerator of Li_{-s}(x) reduced modulo q^2"""
    return polylog_neg(s).numerator.reduce(q)


def eval_polylog_neg(s, value):
    """Exact value of Li_{-s} at a rational point other than 1"""
    return polylog_neg(s)(value)


def li_valuation(q, value):
    """v_q(Li_{1-q}(value))"""
    return q_valuation(eval_polylog_neg(q - 1, value), q)


def is_palindromic_numerator(s):
    """True if x^(s+1) N_s(1/x) = N_s(x), N_s the numerator of Li_{-s}"""
    coefficients = list(polylog_neg(s).numerator.coeffs)
    coefficients += [0] * (s + 2 - len(coefficients))
    return coefficients == coefficients[::-1]


@lru_cache(maxsize=None)
def f_q_exact(q):
    """
    The polynomial f_q(x) of degree q: the coefficient of x^t is
    1/t sum_{1<=j,k,l<=q-1, k=jl mod q} (-1)^k C(t,k) j l.
    """
    check_prime(q, odd=True)
    # (k, jl) for every pair (j, l); k = jl mod q never vanishes
    pairs = [(j * l % q, j * l) for j in range(1, q) for l in range(1, q)]
    coefficients = [Fraction(0)]
    for t in range(1, q + 1):
        total = sum((-1) ** k * math.comb(t, k) * jl for k, jl in pairs if k <= t)
        coefficient = Fraction(total, t)
        if coefficient.denominator % q == 0:
            raise NonLocalCoefficientError(f'Coefficient {coefficient} of x^{t} in f_{q} is not in Z_({q})')
        coefficients.append(coefficient)
    return PolyExact.from_coefficients(coefficients)


@lru_cache(maxsize=None)
def f_q_mod(q):
    """f_q(x) mod q^2"""
    return f_q_exact(q).reduce(q)


def eval_fq(q, value):
    """Exact value of f_q at an element of Z_(q)"""
    if q_valuation(value, q) < 0:
        raise NotLocalError(f'{value} is not in Z_({q})')
    return f_q_exact(q)(value)


@lru_cache(maxsize=None)
def compute_Sq(q):
    """
    S_q = {a - f_q(a) mod q^2 : a = 0..q-1}, cross-checked against the zero set
    of f_q modulo q^2.
    """
    f = f_q_exact(q)
    members = frozenset(reduce_mod_q2(a - f(a), q) for a in range(q))
    f_bar = f_q_mod(q)
    zeros = frozenset(b for b in range(q * q) if f_bar(b) == 0)
    if members != zeros or len(members) != q:
        raise CrossCheckError(f'S_{q} = {format_residues(members)} but the zeros of f_{q} mod {q * q} '
                              f'are {format_residues(zeros)}')
    return ResidueSet(q, members)


@lru_cache(maxsize=None)
def compute_Tq(q):
    """
    T_q = {n/m mod q^2 : v_q(Li_{1-q}(n/m)) >= 2}, with infinity standing for
    the ratios with m/n in q^2 Z_(q). Ratios with v_q(n/m) = -1 never qualify
    (see verify_tq_pole_exclusion). Cross-checked against the image
    {a/(a-1)} of S_q.
    """
    logger = logging.getLogger('powerresidues')
    check_prime(q, odd=True)
    modulus = q * q
    li = polylog_neg(q - 1)
    members = set()
    for residue in range(modulus):
        if residue % q != 1 and q_valuation(li(residue), q) >= 2:
            members.add(residue)
    # reciprocal test at m/n = q^2
    if q_valuation(li(Fraction(1, modulus)), q) >= 2:
        members.add(INFINITY)

    image = set()
    for a in compute_Sq(q).members:
        if a % q != 1:
            image.add(a * pow(a - 1, -1, modulus) % modulus)
        elif a == 1:
            image.add(INFINITY)
    if image != members:
        raise CrossCheckError(f'T_{q} = {format_residues(members)} but the image of S_{q} '
                              f'is {format_residues(image)}')
    logger.debug('T_%s = %s', q, format_residues(members))
    return ResidueSet(q, frozenset(members))


def residue_of_ratio(n, m, q):
    """
    n/m mod q^2 when n/m is in Z_(q), INFINITY when m/n is in q^2 Z_(q), and
    None for the remaining ratios (v_q(n/m) = -1), which no residue stands for.
    """
    if m == 0:
        return INFINITY
    ratio = Fraction(n, m)
    if q_valuation(ratio, q) >= 0:
        return reduce_mod_q2(ratio, q)
    if q_valuation(1 / ratio, q) >= 2:
        return INFINITY
    return None


def F_s_poly(s):
    """
    F_s(x) = sum_t (sum_{k=0}^t (-1)^(t-k) C(t,k) k^s) x^t, the coefficient of
    x^t counting the surjections of an s-set onto a t-set.
    """
    return PolyExact.from_coefficients(
        sum((-1) ** (t - k) * math.comb(t, k) * k ** s for k in range(t + 1)) for t in range(s + 1))


def F_s_poly_bruteforce(s):
    """F_s(x) from its definition as a sum of multinomials over compositions of s"""
    coefficients = [0] * (s + 1)
    if s == 0:
        coefficients[0] = 1
    for t in range(1, s + 1):
        for cuts in combinations(range(1, s), t - 1):
            bounds = (0, ) + cuts + (s, )
            multinomial = math.factorial(s)
            for start, end in zip(bounds, bounds[1:]):
                multinomial //= math.factorial(end - start)
            coefficients[t] += multinomial
    return PolyExact.from_coefficients(coefficients)


def verify_FLi_identity(s):
    """
    (x+1) F_s(x) = Li_{-s}(x/(1+x)) as polynomials, the right hand side being
    N(x/(1+x)) (1+x)^(s+1) for the numerator N of Li_{-s}.
    """
    if s < 1:
        raise ValueError('The identity holds for s >= 1 only')
    numerator = polylog_neg(s).numerator.to_sympy()
    one_plus_x = Poly(1 + x, x, domain=QQ)
    # transform gives (1+x)^deg(N) N(x/(1+x))
    substituted = numerator.transform(Poly(x, x, domain=QQ), one_plus_x)
    substituted = substituted * one_plus_x ** (s + 1 - numerator.degree())
    return one_plus_x * F_s_poly(s).to_sympy() == substituted


def li_at_minus_x_over_one_minus_x(q):
    """The polynomial Li_{1-q}(-x/(1-x)) = N(-x/(1-x)) (1-x)^q"""
    numerator = polylog_neg(q - 1).numerator.to_sympy()
    one_minus_x = Poly(1 - x, x, domain=QQ)
    substituted = numerator.transform(Poly(-x, x, domain=QQ), one_minus_x)
    return PolyExact.from_sympy(substituted * one_minus_x ** (q - numerator.degree()))


def verify_fq_li_congruence(q):
    """f_q(x) = c_q Li_{1-q}(-x/(1-x)) mod q^2, coefficientwise"""
    scaled = PolyExact.from_coefficients(c_q(q) * c for c in li_at_minus_x_over_one_minus_x(q).coeffs)
    return scaled.reduce(q) == f_q_mod(q)


def verify_fq_symmetry(q):
    """f_q(1-x) + f_q(x) = 0 mod q^2 as a polynomial identity"""
    f = f_q_exact(q).to_sympy()
    reflected = f.compose(Poly(1 - x, x, domain=QQ))
    return PolyExact.from_sympy(reflected + f).reduce(q).is_zero()


def verify_fq_mod_q(q):
    """f_q(x) = x - x^q mod q, coefficientwise"""
    expected = [0] * (q + 1)
    expected[1] = 1
    expected[q] = -1
    coefficients = list(f_q_exact(q).coeffs) + [Fraction(0)] * (q + 1)
    return all(reduce_mod_q2(coefficients[t] - expected[t], q) % q == 0 for t in range(q + 1))


def verify_li_reciprocal(q):
    """
    Li_{1-q}(1/x) = -Li_{1-q}(x): the numerator is palindromic over
    (1-x)^q, and both sides agree at the points x = 2, ..., q+3.
    """
    li = polylog_neg(q - 1)
    if li.d != q or not is_palindromic_numerator(q - 1):
        return False
    return all(li(Fraction(1, point)) == -li(point) for point in range(2, q + 4))


def verify_li_reciprocal_membership(q, value):
    """v_q(Li_{1-q}(b)) >= 2 iff v_q(Li_{1-q}(1/b)) >= 2, for b != 0, 1"""
    value = Fraction(value)
    return (li_valuation(q, value) >= 2) == (li_valuation(q, 1 / value) >= 2)


def verify_fq_integral_identity(q):
    """f_q(-x) = c_q int_0^x F_q(t) dt/t mod q^2, coefficientwise"""
    f = f_q_exact(q)
    integral = [Fraction(0)] + [c / t for t, c in enumerate(F_s_poly(q).coeffs) if t > 0]
    reflected = [(-1) ** t * c for t, c in enumerate(f.coeffs)]
    return (PolyExact.from_coefficients(reflected).reduce(q) ==
            PolyExact.from_coefficients(c_q(q) * c for c in integral).reduce(q))


def verify_binomial_congruence(q, value):
    """sum_{1<=t<=q, 1<=k<=q-1} (-1)^k C(t-1,k-1) a^t = 0 mod q, for a in Z_(q)"""
    value = Fraction(value)
    if q_valuation(value, q) < 0:
        raise NotLocalError(f'{value} is not in Z_({q})')
    total = sum((-1) ** k * math.comb(t - 1, k - 1) * value ** t for t in range(1, q + 1) for k in range(1, q))
    return q_valuation(total, q) >= 1


def verify_sq_symmetry(q):
    """b in S_q iff 1 - b in S_q"""
    sq = compute_Sq(q)
    return all((1 - b) % (q * q) in sq for b in sq.members)


def verify_sq_tq_special_members(q):
    """0, 1, 1/2 mod q^2 are in S_q and 0, -1 mod q^2, infinity are in T_q"""
    modulus = q * q
    sq, tq = compute_Sq(q), compute_Tq(q)
    return (all(b in sq for b in (0, 1, pow(2, -1, modulus))) and
            all(b in tq for b in (0, modulus - 1, INFINITY)))


def verify_tq_pole_exclusion(q):
    """Every ratio u/q (1 <= u < q) has v_q(Li_{1-q}(u/q)) = 1"""
    return all(li_valuation(q, Fraction(u, q)) == 1 for u in range(1, q))


def lerch_check(q, k):
    """Lerch's congruence (k^q - k)/q = sum_{j=1}^{q-1} j^-1 [jk/q] mod q"""
    if k % q == 0:
        raise NotCoprimeError(f'{q} divides {k}')
    fermat_quotient = (k ** q - k) // q
    total = sum(pow(j, -1, q) * (j * k // q) for j in range(1, q))
    return (fermat_quotient - total) % q == 0


def jl_sum_check(q, k):
    """sum_{1<=j,l<=q-1, jl=k mod q} jl = k^q c_q mod q^2"""
    modulus = q * q
    total = sum(j * l for j in range(1, q) for l in range(1, q) if (j * l - k) % q == 0)
    return (total - pow(k, q, modulus) * c_q(q)) % modulus == 0
