"""
Tests the Verify.py classes and methods
"""
from testfixtures import log_capture
import unittest
from unittest.mock import patch

from powerresidues.QArith import CongruenceConditionError, NotPrimeError
from powerresidues.Verify import (EnumerationTooLargeError, Harness, NotFormPrimeError, RepresentationNotFoundError,
                                  brute_force_qth_powers, check_equivalence, check_log_criterion,
                                  check_mu_mod_pi_squared, cubic_correspondence, cubic_representations,
                                  euler_cubic_crosscheck, phi_form_congruence_check, qth_power_classes_match,
                                  quintic_crosscheck, quintic_representations, representatives_distinct,
                                  run_identity_suites, search_form_primes, search_radius, sweep_cubic_crosscheck,
                                  sweep_equivalences, sweep_log_criterion, sweep_quadratic_crosscheck,
                                  sweep_quintic_crosscheck)

CUBIC_RESIDUE_PRIMES_650 = [61, 67, 73, 103, 151, 193, 271, 307, 367, 439, 499, 523, 547, 577, 613, 619, 643]
CUBIC_PRIMES_200 = [7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 127, 139, 151, 157, 163, 181, 193, 199]


class Test_Verify(unittest.TestCase):
    """test module implementing the verification harness"""

    def test_search_radius(self):
        """every witness fits in the search box"""
        self.assertEqual(search_radius(3, 10), 6)
        self.assertEqual(search_radius(3, 8), 5)
        for q, bound in ((3, 650), (5, 5000), (7, 10 ** 6)):
            radius = search_radius(q, bound)
            self.assertGreater(radius ** (q - 1), 2 * bound)

    def test_search_form_primes(self):
        """primes of the special form"""
        primes = search_form_primes(3, 10)
        self.assertEqual([prime.p for prime in primes], [7])
        self.assertEqual(primes[0].witnesses, ((1, -3), (1, 2), (2, -3), (2, 1), (3, -2), (3, -1)))
        self.assertFalse(primes[0].probable)
        primes = search_form_primes(3, 650, 1)
        self.assertEqual([prime.p for prime in primes], CUBIC_RESIDUE_PRIMES_650)
        for prime in search_form_primes(5, 2000):
            self.assertEqual(prime.p % 5, 1)
            self.assertGreater(len(prime.witnesses), 0)
        self.assertEqual(search_form_primes(5, 40, 1)[0].p, 31)
        self.assertRaises(ValueError, search_form_primes, 3, 1)
        self.assertRaises(ValueError, search_form_primes, 3, 100, 2)
        self.assertRaises(NotPrimeError, search_form_primes, 9, 100)

    def test_search_chunking(self):
        """the chunk size does not change the result"""
        self.assertEqual(search_form_primes(3, 3000, chunk_size=1), search_form_primes(3, 3000, chunk_size=1000))

    def test_check_equivalence(self):
        """every criterion on single witnesses"""
        record = check_equivalence(3, 5, 4)
        self.assertEqual((record.p, record.i, record.symbol), (61, 2, 1))
        self.assertTrue(record.sq_member and record.tq_member and record.a1_mod_q2_zero)
        self.assertGreaterEqual(record.vq_li, 2)
        self.assertGreaterEqual(record.vq_fq, 2)
        self.assertTrue(record.a0_ok and record.quadratic_ok and record.all_consistent)

        record = check_equivalence(3, 2, 1)
        self.assertEqual((record.p, record.symbol), (7, -1))
        self.assertEqual((record.vq_li, record.vq_fq), (1, 1))
        self.assertFalse(record.sq_member or record.tq_member or record.a1_mod_q2_zero)
        self.assertTrue(record.all_consistent)

        record = check_equivalence(5, 2, 1)
        self.assertEqual((record.p, record.symbol), (31, 1))
        self.assertTrue(record.sq_member and record.all_consistent)
        self.assertEqual(record.properties()['p'], 31)

        self.assertRaises(NotFormPrimeError, check_equivalence, 3, 1, 1)
        self.assertRaises(NotFormPrimeError, check_equivalence, 3, 2, 2)

    def test_swapped_witnesses(self):
        """(m, n) and (n, m) agree"""
        for q, m, n in ((3, 5, 4), (3, 2, 1), (3, 7, -3), (3, 1, -3), (5, 2, 1), (5, 1, -3), (5, 1, -2), (5, 3, 2)):
            record, swapped = check_equivalence(q, m, n), check_equivalence(q, n, m)
            self.assertEqual(record.p, swapped.p)
            self.assertEqual(record.sq_member, swapped.sq_member)
            self.assertEqual(record.symbol, swapped.symbol)
            self.assertTrue(swapped.all_consistent)

    def test_sweep_equivalences(self):
        """no counterexamples on small sweeps"""
        for q, bound in ((3, 3000), (5, 5000), (7, 50000)):
            result = sweep_equivalences(q, bound)
            self.assertTrue(result.ok())
            self.assertGreater(len(result.records), 0)
            self.assertEqual(result.counterexamples, ())
            keys = [(record.p, record.m, record.n) for record in result.records]
            self.assertEqual(keys, sorted(keys))

    @log_capture()
    def test_sweep_equivalences_counterexample(self, log):
        """inconsistent records are reported"""
        result = sweep_equivalences(3, 10)
        broken = result.records[0].__class__(**dict(result.records[0].properties(), all_consistent=False))
        with patch('powerresidues.Verify.check_equivalence', return_value=broken):
            result = sweep_equivalences(3, 10)
        self.assertFalse(result.ok())
        self.assertEqual(len(result.counterexamples), 6)
        self.assertIn(('powerresidues', 'ERROR'), [(r.name, r.levelname) for r in log.records])

    def test_brute_force_qth_powers(self):
        """the q-th power classes against their description"""
        for e in (3, 4):
            self.assertTrue(qth_power_classes_match(3, e))
        classes = brute_force_qth_powers(3, 3)
        self.assertEqual(len(classes), 3)
        self.assertTrue(qth_power_classes_match(5, 5))
        self.assertTrue(representatives_distinct(3, 3))
        self.assertRaises(EnumerationTooLargeError, brute_force_qth_powers, 7, 7)
        self.assertRaises(EnumerationTooLargeError, representatives_distinct, 7, 7)
        self.assertRaises(EnumerationTooLargeError, brute_force_qth_powers, 5, 5, 3)

    def test_cubic_representations(self):
        """4p = L^2 + 27M^2"""
        self.assertEqual(cubic_representations(61), [(1, 3)])
        self.assertEqual(cubic_representations(7), [(1, 1)])
        self.assertEqual(cubic_representations(13), [(5, 1)])
        self.assertRaises(RepresentationNotFoundError, cubic_representations, 5)
        self.assertEqual(cubic_correspondence(5, 4), (1, 3))
        self.assertEqual(cubic_correspondence(3, -1), (1, 1))
        self.assertEqual(cubic_correspondence(2, -3), (1, -1))

    def test_euler_cubic_crosscheck(self):
        """3 | M iff (3/p)_3 = 1"""
        self.assertTrue(euler_cubic_crosscheck(61))
        self.assertTrue(euler_cubic_crosscheck(7))
        self.assertTrue(euler_cubic_crosscheck(13))
        self.assertTrue(euler_cubic_crosscheck(61, [(5, 4), (4, 5), (9, -4)]))
        self.assertTrue(euler_cubic_crosscheck(7, [(2, 1), (1, -3), (3, -2)]))
        self.assertRaises(CongruenceConditionError, euler_cubic_crosscheck, 11)

    @log_capture()
    def test_euler_cubic_crosscheck_failure(self, log):
        """a missing representation is a logged failure"""
        with patch('powerresidues.Verify.cubic_representations',
                   side_effect=RepresentationNotFoundError('no representation')):
            self.assertFalse(euler_cubic_crosscheck(61))
        log.check(('powerresidues', 'ERROR', 'no representation'))

    @log_capture()
    def test_sweep_cubic_crosscheck_witnesses(self, log):
        """the sweep checks the (L, M) of every witness of every prime"""
        with patch('powerresidues.Verify.cubic_correspondence', wraps=cubic_correspondence) as correspondence:
            self.assertTrue(sweep_cubic_crosscheck(200).ok())
        # six witnesses per prime p = 1 mod 3 below 200
        self.assertEqual(correspondence.call_count, 6 * len(CUBIC_PRIMES_200))
        with patch('powerresidues.Verify.cubic_correspondence', return_value=(999, 999)):
            result = sweep_cubic_crosscheck(200)
        self.assertFalse(result.ok())
        self.assertEqual([check.argument for check in result.failures()], CUBIC_PRIMES_200)
        with patch('powerresidues.Verify.search_form_primes', return_value=[]):
            self.assertEqual(len(sweep_cubic_crosscheck(200).failures()), len(CUBIC_PRIMES_200))
        self.assertIn(('powerresidues', 'ERROR', 'No witness (m, n) found for 7'),
                      [(r.name, r.levelname, r.getMessage()) for r in log.records])
        self.assertEqual(sweep_cubic_crosscheck(5).checks, ())

    def test_quintic_crosscheck(self):
        """u = 2v mod 5 iff (5/p)_5 = 1"""
        self.assertEqual(quintic_representations(11, exhaustive=True),
                         [(1, -1, 0, -1), (1, 0, -1, 1), (1, 0, 1, 1), (1, 1, 0, -1)])
        self.assertEqual(len(quintic_representations(11)), 1)
        for p in (11, 31, 41, 61, 71):
            self.assertTrue(quintic_crosscheck(p))
            self.assertTrue(quintic_crosscheck(p, exhaustive=True))
        for x, u, v, w in quintic_representations(31, exhaustive=True):
            self.assertEqual((u - 2 * v) % 5, 0)
            self.assertEqual(x * w, v * v - 4 * u * v - u * u)
        self.assertRaises(CongruenceConditionError, quintic_crosscheck, 13)

    def test_phi_form_congruence_check(self):
        """the form is (m - n)^(q-1) mod q"""
        self.assertTrue(phi_form_congruence_check(3, 5, 4))
        self.assertTrue(phi_form_congruence_check(5, 2, 1))
        for q in (3, 5, 7):
            self.assertTrue(phi_form_congruence_check(q, 1, 1))
            for m in range(-5, 6):
                for n in range(-5, 6):
                    self.assertTrue(phi_form_congruence_check(q, m, n))

    def test_check_mu_mod_pi_squared(self):
        """mu^(i) modulo pi^2 for every i"""
        self.assertTrue(check_mu_mod_pi_squared(3, 5, 4))
        self.assertTrue(check_mu_mod_pi_squared(3, 2, 1))
        self.assertTrue(check_mu_mod_pi_squared(5, 2, 1))
        self.assertTrue(check_mu_mod_pi_squared(7, 2, 1))

    def test_check_log_criterion(self):
        """truncated logarithm on single witnesses"""
        for q, m, n in ((3, 5, 4), (3, 2, 1), (5, 2, 1), (7, 2, 1)):
            record = check_log_criterion(q, m, n)
            self.assertTrue(record.log_valuation_ok)
            self.assertTrue(record.log_fq_ok)
            self.assertTrue(record.mu_class_ok)
            self.assertTrue(record.all_consistent)
        self.assertRaises(NotFormPrimeError, check_log_criterion, 3, 1, 1)
        result = sweep_log_criterion(5, 2000)
        self.assertTrue(result.ok())
        self.assertGreater(len(result.records), 0)

    def test_run_identity_suites(self):
        """every identity holds for small q"""
        result = run_identity_suites([3, 5, 7], s_max=6, surjection_s_max=6)
        self.assertTrue(result.ok())
        self.assertEqual(result.failures(), ())
        names = {check.name for check in result.checks}
        self.assertIn('fq_li_congruence', names)
        self.assertIn('surjection_formula', names)
        self.assertRaises(NotPrimeError, run_identity_suites, [9])

    def test_crosscheck_sweeps(self):
        """the classical laws on small ranges"""
        self.assertTrue(sweep_cubic_crosscheck(3000).ok())
        self.assertTrue(sweep_quintic_crosscheck(600).ok())
        self.assertTrue(sweep_quadratic_crosscheck(2000).ok())
        self.assertEqual([check.argument for check in sweep_quintic_crosscheck(100).checks], [11, 31, 41, 61, 71])

    def test_harness(self):
        """configuration defaults and overrides"""
        harness = Harness({})
        self.assertEqual((harness.threads, harness.chunk_size, harness.enumeration_limit), (1, 64, 5))
        harness = Harness({'threads': 4, 'chunk_size': 8, 'pq_enumeration_limit': 3})
        self.assertEqual((harness.threads, harness.chunk_size, harness.enumeration_limit), (4, 8, 3))
        self.assertRaises(EnumerationTooLargeError, harness.qth_power_classes_match, 5, 5)
        self.assertEqual([prime.p for prime in Harness({}).search(3, 100)], [7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97])
