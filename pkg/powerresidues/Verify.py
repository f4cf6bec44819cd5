"""
Verification harness: search for primes p = m^(q-1) + m^(q-2) n + ... + n^(q-1),
check on each of them that the q-th power residue symbol (q/p)_q agrees with
the polylogarithm, f_q, S_q, T_q and mu^(i) criteria, and run the brute force
oracles and classical cross-checks.
"""
from dataclasses import asdict, dataclass
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from itertools import combinations
import logging
import math
import multiprocessing

from sympy import integer_nthroot, primerange

from powerresidues.Cyclo import (canonical_i, class_representatives, class_to_cyclo, cyclo_from_int, cyclo_scale,
                                 cyclo_sub, is_qth_power_class, mu_element, one_minus_zeta, pi_valuation,
                                 pi_valuation_at_least, reduce_mod_pi_power, to_pi_basis, truncated_log_mu,
                                 zeta_power)
from powerresidues.PolyCore import (CrossCheckError, F_s_poly, F_s_poly_bruteforce, compute_Sq, compute_Tq,
                                    eval_fq, is_palindromic_numerator, jl_sum_check, lerch_check, li_valuation,
                                    residue_of_ratio, verify_binomial_congruence, verify_FLi_identity,
                                    verify_fq_integral_identity, verify_fq_li_congruence, verify_fq_mod_q,
                                    verify_fq_symmetry, verify_li_reciprocal, verify_li_reciprocal_membership,
                                    verify_sq_symmetry, verify_sq_tq_special_members, verify_tq_pole_exclusion)
from powerresidues.QArith import (CongruenceConditionError, c_q, check_prime, eval_phi_form, is_prime,
                                  is_probable_only, mod_inverse_star, q_valuation, qth_residue_symbol,
                                  quadratic_euler_check, reduce_mod_q2, second_supplement_check)

DEFAULT_THREADS = 1
DEFAULT_CHUNK_SIZE = 64
DEFAULT_PQ_ENUMERATION_LIMIT = 5


class NotFormPrimeError(ValueError):
    """Raised when eval_phi_form(m, n, q) is not a prime other than q"""


class RepresentationNotFoundError(AssertionError):
    """Raised when a prime has no representation by a form that must represent it"""


class EnumerationTooLargeError(ValueError):
    """Raised when a brute force enumeration is requested for a too large q"""


@dataclass(frozen=True)
class FormPrime:
    """A prime p = eval_phi_form(m, n, q) together with every (m, n) giving it"""
    q: int
    p: int
    witnesses: tuple
    probable: bool = False

    def symbol(self):
        """(q/p)_q"""
        return qth_residue_symbol(self.q, self.p, self.q)


@dataclass(frozen=True)
class EquivalenceRecord:
    """Every criterion for (q/p)_q = +1 evaluated on a single witness (m, n) of p"""
    q: int
    p: int
    m: int
    n: int
    i: int
    symbol: int
    vq_li: object
    vq_fq: object
    sq_member: bool
    tq_member: bool
    a1_mod_q2_zero: bool
    a0_ok: bool
    quadratic_ok: bool
    all_consistent: bool

    def properties(self):
        """Record as a dictionary"""
        return asdict(self)


@dataclass(frozen=True)
class LogRecord:
    """The truncated logarithm of mu^(i) checked on a single witness"""
    q: int
    p: int
    m: int
    n: int
    i: int
    log_valuation_ok: bool
    log_fq_ok: bool
    mu_class_ok: bool
    all_consistent: bool

    def properties(self):
        """Record as a dictionary"""
        return asdict(self)


@dataclass(frozen=True)
class SweepResult:
    """Records of a sweep, sorted by (p, m, n), and the ones that failed"""
    q: int
    bound: int
    records: tuple
    counterexamples: tuple
    witness_disagreements: tuple = ()

    def ok(self):
        """True when there are no counterexamples and no disagreeing witnesses"""
        return not self.counterexamples and not self.witness_disagreements


@dataclass(frozen=True)
class CheckResult:
    """One named check and whether it passed for its argument"""
    name: str
    argument: object
    passed: bool


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of a list of independent checks"""
    name: str
    checks: tuple

    def failures(self):
        """The checks that did not pass"""
        return tuple(check for check in self.checks if not check.passed)

    def ok(self):
        """True when every check passed"""
        return not self.failures()


def _make_executor(threads):
    """Process pool using fork, so the per-q caches are inherited"""
    return ProcessPoolExecutor(max_workers=threads, mp_context=multiprocessing.get_context('fork'))


def _chunks(items, size):
    """Splits items into lists of at most size elements"""
    items = list(items)
    return [items[start:start + size] for start in range(0, len(items), size)]


def _map_chunks(function, chunks, threads):
    """Applies function to every chunk, in a process pool if threads > 1; results keep the chunk order"""
    if threads <= 1 or len(chunks) <= 1:
        return [function(chunk) for chunk in chunks]
    with _make_executor(threads) as executor:
        return list(executor.map(function, chunks))


def search_radius(q, bound):
    """
    Smallest R such that every (m, n) with eval_phi_form(m, n, q) <= bound has
    max(|m|, |n|) <= R: the form is at least max(|m|, |n|)^(q-1) / 2.
    """
    root, exact = integer_nthroot(2 * bound, q - 1)
    return root + (0 if exact else 1) + 1


def _search_rows(q, bound, radius, rows):
    """The (p, m, n) found in the given rows of the search box"""
    found = []
    for m in rows:
        for n in range(-radius, radius + 1):
            if m == 0 and n <= 0:
                continue
            if math.gcd(m, n) != 1:
                continue
            p = eval_phi_form(m, n, q)
            if p <= bound and p != q and is_prime(p):
                found.append((p, m, n))
    return found


def search_form_primes(q, bound, symbol_filter=None, threads=DEFAULT_THREADS, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    Every prime p <= bound, p != q, of the form eval_phi_form(m, n, q), sorted
    ascending. Only one of (m, n) and (-m, -n) is listed as a witness since
    both give the same value. If symbol_filter is +1 or -1, only the primes
    with that value of (q/p)_q are kept.
    """
    logger = logging.getLogger('powerresidues')
    check_prime(q, odd=True)
    if bound < 2:
        raise ValueError(f'The search bound must be at least 2, got {bound}')
    if symbol_filter not in (None, 1, -1):
        raise ValueError(f'The symbol filter must be +1 or -1, got {symbol_filter}')
    radius = search_radius(q, bound)
    worker = partial(_search_rows, q, bound, radius)
    found = {}
    for rows in _map_chunks(worker, _chunks(range(radius + 1), chunk_size), threads):
        for p, m, n in rows:
            found.setdefault(p, []).append((m, n))
    primes = []
    for p in sorted(found):
        probable = is_probable_only(p)
        if probable:
            logger.warning('%s is only a probable prime', p)
        prime = FormPrime(q, p, tuple(sorted(found[p])), probable)
        if symbol_filter is None or prime.symbol() == symbol_filter:
            primes.append(prime)
    logger.info('Found %s primes of the form for q = %s up to %s (radius %s)', len(primes), q, bound, radius)
    return primes


def _check_form_prime(q, m, n):
    """p = eval_phi_form(m, n, q), NotFormPrimeError unless it is a prime other than q"""
    p = eval_phi_form(m, n, q)
    if p == q or not is_prime(p):
        raise NotFormPrimeError(f'eval_phi_form({m}, {n}, {q}) = {p} is not a prime other than {q}')
    return p


def _pi_coefficients_ok(q, m, n, pi_coefficients):
    """a0 = (m - n)^((q-1)q/2) mod q^2 and a_k = 0 mod q for k >= 1"""
    modulus = q * q
    return ((pi_coefficients[0] - pow(m - n, (q - 1) * q // 2, modulus)) % modulus == 0 and
            all(c % q == 0 for c in pi_coefficients[1:]))


def check_equivalence(q, m, n):
    """
    Evaluates on the witness (m, n) of p every criterion for (q/p)_q = +1:
    v_q(Li_{1-q}(n/m)) >= 2, v_q(f_q(-n/(m-n))) >= 2, -n/(m-n) mod q^2 in S_q,
    n/m mod q^2 in T_q and a_1 = 0 mod q^2 for the expansion of mu^(i) in
    powers of 1 - zeta.
    """
    logger = logging.getLogger('powerresidues')
    p = _check_form_prime(q, m, n)
    modulus = q * q
    i = canonical_i(q, m, n)
    symbol = qth_residue_symbol(q, p, q)
    vq_li = li_valuation(q, Fraction(n, m))
    alpha = Fraction(-n, m - n)
    vq_fq = q_valuation(eval_fq(q, alpha), q)
    sq_member = reduce_mod_q2(alpha, q) in compute_Sq(q)
    ratio = residue_of_ratio(n, m, q)
    tq_member = ratio is not None and ratio in compute_Tq(q)
    pi_coefficients = to_pi_basis(mu_element(q, m, n, i)).coeffs
    a1_mod_q2_zero = pi_coefficients[1] % modulus == 0
    a0_ok = _pi_coefficients_ok(q, m, n, pi_coefficients)
    quadratic_ok = quadratic_euler_check(m - n, q)
    criteria = {symbol == 1, vq_li >= 2, vq_fq >= 2, sq_member, tq_member, a1_mod_q2_zero}
    record = EquivalenceRecord(q, p, m, n, i, symbol, vq_li, vq_fq, sq_member, tq_member, a1_mod_q2_zero,
                               a0_ok, quadratic_ok, len(criteria) == 1 and a0_ok and quadratic_ok)
    logger.debug('Checked %s', record)
    return record


def _witnesses(q, bound, threads, chunk_size):
    """Every (m, n) witness of every prime up to bound"""
    return [(m, n) for prime in search_form_primes(q, bound, threads=threads, chunk_size=chunk_size)
            for m, n in prime.witnesses]


def _check_chunk(function, q, witnesses):
    """Runs function on a chunk of witnesses"""
    return [function(q, m, n) for m, n in witnesses]


def _sweep(function, q, bound, threads, chunk_size):
    """Runs function on every witness up to bound, sorted by (p, m, n)"""
    worker = partial(_check_chunk, function, q)
    records = []
    for chunk in _map_chunks(worker, _chunks(_witnesses(q, bound, threads, chunk_size), chunk_size), threads):
        records.extend(chunk)
    records.sort(key=lambda record: (record.p, record.m, record.n))
    return records


def sweep_equivalences(q, bound, threads=DEFAULT_THREADS, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    check_equivalence on every witness of every prime up to bound. Any
    inconsistent record, or any prime whose witnesses disagree, is a defect
    and is logged as an error.
    """
    logger = logging.getLogger('powerresidues')
    records = _sweep(check_equivalence, q, bound, threads, chunk_size)
    counterexamples = tuple(record for record in records if not record.all_consistent)
    for record in counterexamples:
        logger.error('Inconsistent criteria for q = %s, p = %s at (m, n) = (%s, %s): %s',
                     q, record.p, record.m, record.n, record.properties())
    verdicts = {}
    for record in records:
        verdicts.setdefault(record.p, set()).add((record.symbol, record.sq_member))
    disagreements = tuple(p for p in sorted(verdicts) if len(verdicts[p]) > 1)
    for p in disagreements:
        logger.error('The witnesses of p = %s do not agree for q = %s', p, q)
    logger.info('Checked %s witnesses for q = %s up to %s: %s counterexamples',
                len(records), q, bound, len(counterexamples))
    return SweepResult(q, bound, tuple(records), counterexamples, disagreements)


def brute_force_qth_powers(q, e, limit=DEFAULT_PQ_ENUMERATION_LIMIT):
    """The classes modulo pi^e of the q-th powers of every representative"""
    if q > limit:
        raise EnumerationTooLargeError(f'Enumerating the classes modulo pi^{e} for q = {q} is above the limit {limit}')
    return frozenset(reduce_mod_pi_power(class_to_cyclo(c) ** q, e) for c in class_representatives(q, e))


def qth_power_classes_match(q, e, limit=DEFAULT_PQ_ENUMERATION_LIMIT):
    """The brute force q-th power classes are exactly those accepted by is_qth_power_class"""
    accepted = frozenset(c for c in class_representatives(q, e) if is_qth_power_class(c))
    return brute_force_qth_powers(q, e, limit) == accepted


def representatives_distinct(q, e, limit=DEFAULT_PQ_ENUMERATION_LIMIT):
    """No two representatives modulo pi^e are congruent, using the norm based valuation"""
    if q > limit:
        raise EnumerationTooLargeError(f'Enumerating the classes modulo pi^{e} for q = {q} is above the limit {limit}')
    elements = [class_to_cyclo(c) for c in class_representatives(q, e)]
    return all(pi_valuation(a - b) < e for a, b in combinations(elements, 2))


def cubic_representations(p):
    """Every (L, M) with L, M >= 0 and 4p = L^2 + 27 M^2"""
    representations = []
    for big_m in range(math.isqrt(4 * p // 27) + 1):
        remainder = 4 * p - 27 * big_m * big_m
        big_l = math.isqrt(remainder)
        if big_l * big_l == remainder:
            representations.append((big_l, big_m))
    if not representations:
        raise RepresentationNotFoundError(f'4 * {p} is not of the form L^2 + 27 M^2')
    return representations


def cubic_correspondence(m, n):
    """The (L, M) with 4p = L^2 + 27 M^2 given by a witness (m, n) of p = m^2 + mn + n^2"""
    if m % 3 == 0:
        return m + 2 * n, m // 3
    if n % 3 == 0:
        return 2 * m + n, n // 3
    return m - n, (m + n) // 3


def euler_cubic_crosscheck(p, witnesses=()):
    """
    (3/p)_3 = +1 iff 3 divides M in 4p = L^2 + 27 M^2, for a prime p = 1 mod 3.
    For each given witness (m, n) of p, also checks that its (L, M) is a
    representation and that 3 | M iff -n/(m-n) mod 9 is in S_3.
    """
    logger = logging.getLogger('powerresidues')
    if p % 3 != 1:
        raise CongruenceConditionError(f'{p} is not 1 modulo 3')
    symbol = qth_residue_symbol(3, p, 3)
    try:
        representations = cubic_representations(p)
    except RepresentationNotFoundError as e:
        logger.error(str(e))
        return False
    passed = all((big_m % 3 == 0) == (symbol == 1) for _, big_m in representations)
    sq = compute_Sq(3)
    for m, n in witnesses:
        big_l, big_m = cubic_correspondence(m, n)
        if (abs(big_l), abs(big_m)) not in representations:
            logger.error('(m, n) = (%s, %s) gives (L, M) = (%s, %s), not a representation of 4 * %s',
                         m, n, big_l, big_m, p)
            passed = False
        elif (big_m % 3 == 0) != (reduce_mod_q2(Fraction(-n, m - n), 3) in sq):
            logger.error('M = %s and the S_3 membership of (m, n) = (%s, %s) disagree', big_m, m, n)
            passed = False
    if not passed:
        logger.error('Cubic cross-check failed for p = %s: (3/p)_3 = %s, representations %s',
                     p, symbol, representations)
    return passed


def quintic_representations(p, exhaustive=False):
    """
    Solutions (x, u, v, w) of 16p = x^2 + 50u^2 + 50v^2 + 125w^2 with
    xw = v^2 - 4uv - u^2 and x = 1 mod 5. For each (u, v) the equations give
    125 w^4 - (16p - 50u^2 - 50v^2) w^2 + (v^2 - 4uv - u^2)^2 = 0, solved
    exactly for w^2. Stops at the first solution unless exhaustive.
    """
    solutions = []
    uv_bound = math.isqrt(16 * p // 50)
    for u in range(-uv_bound, uv_bound + 1):
        for v in range(-uv_bound, uv_bound + 1):
            product = v * v - 4 * u * v - u * u
            linear = 16 * p - 50 * (u * u + v * v)
            if product == 0 or linear <= 0:
                continue
            discriminant = linear * linear - 500 * product * product
            if discriminant < 0:
                continue
            root = math.isqrt(discriminant)
            if root * root != discriminant:
                continue
            for numerator in {linear + root, linear - root}:
                if numerator <= 0 or numerator % 250:
                    continue
                w_abs = math.isqrt(numerator // 250)
                if w_abs * w_abs != numerator // 250 or product % w_abs:
                    continue
                for w in (w_abs, -w_abs):
                    x = product // w
                    if x % 5 == 1 and x * x + 50 * u * u + 50 * v * v + 125 * w * w == 16 * p:
                        solutions.append((x, u, v, w))
                        if not exhaustive:
                            return solutions
    if not solutions:
        raise RepresentationNotFoundError(f'16 * {p} has no representation x^2 + 50u^2 + 50v^2 + 125w^2')
    return sorted(solutions)


def quintic_crosscheck(p, exhaustive=False):
    """(5/p)_5 = +1 iff u = 2v mod 5, for a prime p = 1 mod 5"""
    logger = logging.getLogger('powerresidues')
    if p % 5 != 1:
        raise CongruenceConditionError(f'{p} is not 1 modulo 5')
    symbol = qth_residue_symbol(5, p, 5)
    try:
        solutions = quintic_representations(p, exhaustive)
    except RepresentationNotFoundError as e:
        logger.error(str(e))
        return False
    passed = all(((u - 2 * v) % 5 == 0) == (symbol == 1) for _, u, v, _ in solutions)
    if not passed:
        logger.error('Quintic cross-check failed for p = %s: (5/p)_5 = %s, solutions %s', p, symbol, solutions)
    return passed


def phi_form_congruence_check(q, m, n):
    """
    eval_phi_form(m, n, q) = (m - n)^(q-1) mod q; when the value is a prime
    other than q, also q does not divide m - n and p = 1 mod q.
    """
    p = eval_phi_form(m, n, q)
    passed = (p - pow(m - n, q - 1, q)) % q == 0
    if passed and p != q and is_prime(p):
        passed = (m - n) % q != 0 and p % q == 1
    return passed


def check_mu_mod_pi_squared(q, m, n):
    """
    For every i in [0, q - 1], mu^(i) = (m - n)^((q-1)q/2) zeta^(i + n(m-n)*)
    mod pi^2, and mu^(i) = (m - n)^((q-1)q/2) mod pi^2 only for the canonical i.
    """
    expected_i = canonical_i(q, m, n)
    power = cyclo_from_int(q, (m - n) ** ((q - 1) * q // 2))
    shift = n * mod_inverse_star(m - n, q)
    for i in range(q):
        mu = mu_element(q, m, n, i)
        if not pi_valuation_at_least(mu - power * zeta_power(q, i + shift), 2):
            return False
        if pi_valuation_at_least(mu - power, 2) != (i == expected_i):
            return False
    return True


def check_log_criterion(q, m, n):
    """
    For the truncated logarithm L of mu^(i): v_pi(L) >= q,
    v_pi(L - (1 - zeta) f_q(alpha)) >= q + 1, and for e in {q, q + 1},
    v_pi(L) >= e iff mu^(i) = (m - n)^((q-1)q/2) mod pi^e.
    """
    p = _check_form_prime(q, m, n)
    i = canonical_i(q, m, n)
    log = truncated_log_mu(q, m, n, i)
    alpha = Fraction(-n, m - n)
    log_valuation_ok = pi_valuation_at_least(log, q)
    log_fq_ok = pi_valuation_at_least(log - cyclo_scale(one_minus_zeta(q), eval_fq(q, alpha)), q + 1)
    difference = cyclo_sub(mu_element(q, m, n, i), cyclo_from_int(q, (m - n) ** ((q - 1) * q // 2)))
    mu_class_ok = all(pi_valuation_at_least(log, e) == reduce_mod_pi_power(difference, e).is_zero()
                      for e in (q, q + 1))
    return LogRecord(q, p, m, n, i, log_valuation_ok, log_fq_ok, mu_class_ok,
                     log_valuation_ok and log_fq_ok and mu_class_ok)


def sweep_log_criterion(q, bound, threads=DEFAULT_THREADS, chunk_size=DEFAULT_CHUNK_SIZE):
    """The truncated logarithm criterion on every witness of every prime up to bound"""
    logger = logging.getLogger('powerresidues')
    records = _sweep(check_log_criterion, q, bound, threads, chunk_size)
    counterexamples = tuple(record for record in records if not record.all_consistent)
    for record in counterexamples:
        logger.error('Truncated logarithm check failed for q = %s at (m, n) = (%s, %s): %s',
                     q, record.m, record.n, record.properties())
    logger.info('Checked the truncated logarithm on %s witnesses for q = %s up to %s', len(records), q, bound)
    return SweepResult(q, bound, tuple(records), counterexamples)


def _safe(check, *args):
    """Runs a check, turning a failed internal cross-check into a failure"""
    logger = logging.getLogger('powerresidues')
    try:
        return bool(check(*args))
    except CrossCheckError as e:
        logger.error(str(e))
        return False


def _sq_is_zero_set(q):
    """S_q is the set of roots of f_q modulo q^2"""
    return len(compute_Sq(q)) == q


def _tq_is_image(q):
    """T_q is the image of S_q by x -> -x/(1-x), with 1 sent to INFINITY"""
    return len(compute_Tq(q)) == q


def _sq_distinct_mod_q(q):
    """The members of S_q are distinct modulo q"""
    return len({b % q for b in compute_Sq(q).members}) == q


def _c_q_mod_q(q):
    """c_q = -1 mod q"""
    return c_q(q) % q == q - 1


def _surjection_formula(s):
    """F_s from the recursion against the composition count, for one s"""
    return F_s_poly(s) == F_s_poly_bruteforce(s)


def run_identity_suites(primes, s_max=10, surjection_s_max=8):
    """
    Every polynomial and congruence identity for each odd prime q given, plus
    the identities of Li_{-s} and F_s for s up to s_max.
    """
    logger = logging.getLogger('powerresidues')
    checks = []
    for q in primes:
        check_prime(q, odd=True)
        for name, check in (('fq_mod_q', verify_fq_mod_q), ('sq_zero_set', _sq_is_zero_set),
                            ('sq_distinct_mod_q', _sq_distinct_mod_q), ('fq_symmetry', verify_fq_symmetry),
                            ('fq_li_congruence', verify_fq_li_congruence), ('li_reciprocal', verify_li_reciprocal),
                            ('fq_integral_identity', verify_fq_integral_identity),
                            ('sq_symmetry', verify_sq_symmetry), ('tq_image', _tq_is_image),
                            ('special_members', verify_sq_tq_special_members),
                            ('tq_pole_exclusion', verify_tq_pole_exclusion), ('c_q_mod_q', _c_q_mod_q)):
            checks.append(CheckResult(name, q, _safe(check, q)))
        for k in range(1, q):
            checks.append(CheckResult('lerch', (q, k), lerch_check(q, k)))
        for k in range(q):
            checks.append(CheckResult('jl_sum', (q, k), jl_sum_check(q, k)))
        for value in list(range(q)) + [Fraction(1, 2)]:
            checks.append(CheckResult('binomial_congruence', (q, str(value)), verify_binomial_congruence(q, value)))
        for value in (2, Fraction(1, 2), -3, Fraction(q + 1, q)):
            checks.append(CheckResult('li_reciprocal_membership', (q, str(value)),
                                      verify_li_reciprocal_membership(q, value)))
        checks.append(CheckResult('quadratic_euler', q,
                                  all(quadratic_euler_check(a, q) for a in range(1, q * q) if a % q)))
    for s in range(1, s_max + 1):
        checks.append(CheckResult('FLi_identity', s, verify_FLi_identity(s)))
        checks.append(CheckResult('palindromic_numerator', s, is_palindromic_numerator(s)))
    for s in range(surjection_s_max + 1):
        checks.append(CheckResult('surjection_formula', s, _surjection_formula(s)))
    result = SuiteResult('identities', tuple(checks))
    for check in result.failures():
        logger.error('Identity %s failed for %s', check.name, check.argument)
    logger.info('Ran %s identity checks, %s failed', len(checks), len(result.failures()))
    return result


def _run_over_primes(name, check, primes):
    """Runs check on every prime and logs a summary"""
    logger = logging.getLogger('powerresidues')
    result = SuiteResult(name, tuple(CheckResult(name, p, check(p)) for p in primes))
    logger.info('Ran the %s cross-check on %s primes, %s failed', name, len(result.checks), len(result.failures()))
    return result


def _cubic_check_with_witnesses(witnesses, p):
    """The cubic cross-check of p with its witnesses, a failure if there are none"""
    if p not in witnesses:
        logging.getLogger('powerresidues').error('No witness (m, n) found for %s', p)
        return False
    return euler_cubic_crosscheck(p, witnesses[p])


def sweep_cubic_crosscheck(bound, threads=DEFAULT_THREADS, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    The cubic law for every prime 7 <= p < bound with p = 1 mod 3. Each such p
    is m^2 + mn + n^2, and every witness found by the search is checked
    against its (L, M).
    """
    primes = [p for p in primerange(7, bound) if p % 3 == 1]
    witnesses = {}
    if primes:
        witnesses = {prime.p: prime.witnesses
                     for prime in search_form_primes(3, primes[-1], threads=threads, chunk_size=chunk_size)}
    return _run_over_primes('cubic', partial(_cubic_check_with_witnesses, witnesses), primes)


def sweep_quintic_crosscheck(bound, exhaustive=False):
    """The quintic law for every prime 11 <= p < bound with p = 1 mod 5"""
    return _run_over_primes('quintic', partial(quintic_crosscheck, exhaustive=exhaustive),
                            (p for p in primerange(11, bound) if p % 5 == 1))


def sweep_quadratic_crosscheck(bound):
    """The second supplementary law for every odd prime p < bound"""
    return _run_over_primes('quadratic', second_supplement_check, primerange(3, bound))


class Harness:
    """Runs the searches and sweeps with the parallelism settings of a configuration"""

    def __init__(self, config):
        """Constructor"""
        self.threads = int(config.get('threads', DEFAULT_THREADS))
        self.chunk_size = int(config.get('chunk_size', DEFAULT_CHUNK_SIZE))
        self.enumeration_limit = int(config.get('pq_enumeration_limit', DEFAULT_PQ_ENUMERATION_LIMIT))

    def search(self, q, bound, symbol_filter=None):
        """See search_form_primes"""
        return search_form_primes(q, bound, symbol_filter, self.threads, self.chunk_size)

    def sweep_equivalences(self, q, bound):
        """See sweep_equivalences"""
        return sweep_equivalences(q, bound, self.threads, self.chunk_size)

    def sweep_log_criterion(self, q, bound):
        """See sweep_log_criterion"""
        return sweep_log_criterion(q, bound, self.threads, self.chunk_size)

    def qth_power_classes_match(self, q, e):
        """See qth_power_classes_match"""
        return qth_power_classes_match(q, e, self.enumeration_limit)

    def sweep_cubic_crosscheck(self, bound):
        """See sweep_cubic_crosscheck"""
        return sweep_cubic_crosscheck(bound, self.threads, self.chunk_size)
