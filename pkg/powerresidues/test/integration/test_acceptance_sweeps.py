"""
Equivalence sweeps, identity suites and cross-checks at full scale
"""
import os
import unittest

from sympy import primerange

from powerresidues.PolyCore import jl_sum_check, lerch_check
from powerresidues.Verify import (check_mu_mod_pi_squared, run_identity_suites, sweep_cubic_crosscheck,
                                  sweep_equivalences, sweep_log_criterion, sweep_quadratic_crosscheck,
                                  sweep_quintic_crosscheck)

THREADS = os.cpu_count() or 1
QUINTIC_RESIDUE_PRIMES = {31, 19141, 30941, 48871, 114641, 125591, 141961, 170101, 225241, 246931}


class Test_acceptance_sweeps(unittest.TestCase):
    """every criterion on every witness"""

    def test_sweep_q3(self):
        result = sweep_equivalences(3, 10 ** 6, threads=THREADS)
        self.assertEqual(result.counterexamples, ())
        self.assertEqual(result.witness_disagreements, ())
        self.assertGreater(len(result.records), 0)

    def test_sweep_q5(self):
        result = sweep_equivalences(5, 250000, threads=THREADS)
        self.assertTrue(result.ok())
        self.assertEqual({record.p for record in result.records if record.symbol == 1}, QUINTIC_RESIDUE_PRIMES)

    def test_sweep_q7(self):
        result = sweep_equivalences(7, 150000000, threads=THREADS)
        self.assertTrue(result.ok())
        residues = sorted({record.p for record in result.records if record.symbol == 1})
        self.assertEqual(residues[:3], [43, 10501, 3692053])

    def test_log_criterion(self):
        """truncated logarithm on every witness up to 10^4"""
        for q in (3, 5, 7):
            result = sweep_log_criterion(q, 10 ** 4, threads=THREADS)
            self.assertTrue(result.ok())
        for q, m, n in ((3, 5, 4), (5, 1, -3), (7, 2, 1)):
            self.assertTrue(check_mu_mod_pi_squared(q, m, n))

    def test_identity_suites(self):
        """every identity for the odd primes up to 50"""
        result = run_identity_suites(list(primerange(3, 50)), s_max=10, surjection_s_max=8)
        self.assertEqual(result.failures(), ())
        for q in primerange(3, 100):
            for k in range(1, q):
                self.assertTrue(lerch_check(q, k))
            for k in range(q):
                self.assertTrue(jl_sum_check(q, k))

    def test_crosschecks(self):
        self.assertTrue(sweep_cubic_crosscheck(10 ** 5, threads=THREADS).ok())
        self.assertTrue(sweep_quintic_crosscheck(10 ** 4).ok())
        self.assertTrue(sweep_quadratic_crosscheck(10 ** 4).ok())
