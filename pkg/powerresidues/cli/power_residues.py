#!/usr/bin/python3

"""
Command line utility that computes the polynomials f_q and sets S_q, T_q,
the negative index polylogarithms, q-th power residue symbols and mu^(i), and
searches and verifies primes of the form m^(q-1) + m^(q-2) n + ... + n^(q-1).
Results are printed as tab separated values; --json PATH also writes them
as a JSON report.
"""

import argparse
from fractions import Fraction
import logging
import os
import sys
import time

from powerresidues.Cyclo import canonical_i, mu_element, reduce_mod_pi_power, to_pi_basis
from powerresidues.PolyCore import compute_Sq, compute_Tq, f_q_mod, polylog_neg, polylog_neg_mod
from powerresidues.QArith import check_prime, qth_residue_symbol
from powerresidues.Report import Command, Report
from powerresidues.Util import read_yaml_config
from powerresidues.Verify import (DEFAULT_CHUNK_SIZE, DEFAULT_PQ_ENUMERATION_LIMIT, DEFAULT_THREADS, Harness,
                                  run_identity_suites, sweep_quadratic_crosscheck, sweep_quintic_crosscheck)

DEFAULT_CONFIG_FILE = '.powerresidues.yaml'
DEFAULT_LOG_LEVEL = 'INFO'
LOG_FORMAT = '[%(asctime)s] %(levelname)s:%(name)s %(message)s'

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser():
    """Returns the argument parser with one subparser per command"""
    parser = argparse.ArgumentParser(prog='power-residues',
                                     description='Power residue symbols of primes of the form Phi_q(n/m) m^(q-1)')
    parser.add_argument('--config', help=f'YAML configuration file (default: ~/{DEFAULT_CONFIG_FILE} if present)')
    parser.add_argument('--log-file', help='also write the log to this file')
    parser.add_argument('--verbose', action='store_true', help='log at debug level')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', metavar='PATH', help='write a JSON report to PATH')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for name, description in (('fq', 'print f_q mod q^2'), ('sq', 'print S_q'), ('tq', 'print T_q')):
        subparser = subparsers.add_parser(name, parents=[common], help=description)
        subparser.add_argument('--q', type=int, required=True)

    li = subparsers.add_parser('li', parents=[common], help='print Li_{-s}, its value or its reduction')
    li.add_argument('--s', type=int, required=True)
    li_mode = li.add_mutually_exclusive_group()
    li_mode.add_argument('--at', type=Fraction, metavar='N/D', help='evaluate at this rational number')
    li_mode.add_argument('--mod', type=int, metavar='Q', help='reduce the numerator modulo Q^2')

    symbol = subparsers.add_parser('symbol', parents=[common], help='print the power residue symbol (a/p)_q')
    symbol.add_argument('--q', type=int, required=True)
    symbol.add_argument('--p', type=int, required=True)
    symbol.add_argument('--a', type=int, help='defaults to q')

    mu = subparsers.add_parser('mu', parents=[common], help='print mu^(i), its pi-adic digits and class')
    mu.add_argument('--q', type=int, required=True)
    mu.add_argument('--m', type=int, required=True)
    mu.add_argument('--n', type=int, required=True)
    mu.add_argument('--i', type=int, help='defaults to -n/(m-n) mod q')

    search = subparsers.add_parser('search', parents=[common], help='list the primes of the form up to a bound')
    search.add_argument('--q', type=int, required=True)
    search.add_argument('--max-p', type=int, required=True)
    search.add_argument('--filter', type=int, choices=[1, -1], help='keep only primes with this symbol')
    search.add_argument('--threads', type=int)

    verify = subparsers.add_parser('verify', parents=[common], help='check every criterion up to a bound')
    verify.add_argument('--q', type=int, required=True)
    verify.add_argument('--max-p', type=int, required=True)
    verify.add_argument('--threads', type=int)
    verify.add_argument('--log-criterion', action='store_true', help='also check the truncated logarithm')

    crosscheck = subparsers.add_parser('crosscheck', parents=[common], help='run the classical cross-checks')
    kind = crosscheck.add_mutually_exclusive_group(required=True)
    kind.add_argument('--cubic', action='store_true', help='4p = L^2 + 27M^2')
    kind.add_argument('--quintic', action='store_true', help='16p = x^2 + 50u^2 + 50v^2 + 125w^2')
    kind.add_argument('--quadratic', action='store_true', help='(2/p)_2 and p mod 8')
    crosscheck.add_argument('--max-p', type=int, required=True)
    crosscheck.add_argument('--exhaustive', action='store_true', help='check every quintic representation')
    return parser


def read_config(path):
    """The explicit configuration file, else the default one if it exists, else {}"""
    if path is not None:
        return read_yaml_config(path)
    if os.path.exists(os.path.join(os.path.expanduser('~'), DEFAULT_CONFIG_FILE)):
        return read_yaml_config(DEFAULT_CONFIG_FILE)
    return {}


def validate_config(config):
    """
    Returns a copy of the configuration with its numeric values as int and
    its log level in upper case. Raises ValueError on an invalid value.
    """
    validated = dict(config)
    for key, default in (('threads', DEFAULT_THREADS), ('chunk_size', DEFAULT_CHUNK_SIZE),
                         ('pq_enumeration_limit', DEFAULT_PQ_ENUMERATION_LIMIT)):
        value = validated.get(key, default)
        try:
            validated[key] = int(value)
        except (TypeError, ValueError):
            raise ValueError(f'{key} must be an integer, got {value!r}') from None
        if validated[key] < 1:
            raise ValueError(f'{key} must be positive, got {value!r}')
    level = str(validated.get('log_level', DEFAULT_LOG_LEVEL)).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f'Unknown log level: {validated["log_level"]!r}')
    validated['log_level'] = level
    return validated


def setup_logging(config, log_file, verbose):
    """Logs to stderr and, if configured, to a file"""
    logging.basicConfig(format=LOG_FORMAT, level=logging.INFO)
    logger = logging.getLogger('powerresidues')
    logger.setLevel(logging.DEBUG if verbose else config.get('log_level', DEFAULT_LOG_LEVEL))
    log_file = log_file or config.get('log_file')
    if log_file:
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)


def do_fq(args, harness, report):
    """Prints f_q modulo q^2"""
    polynomial = f_q_mod(args.q)
    print(polynomial)
    report.q = args.q
    report.results = [{'polynomial': str(polynomial), 'coefficients': polynomial.coeffs}]
    return EXIT_SUCCESS


def _print_residue_set(residues, report):
    """Prints a residue set and adds it to the report"""
    print(residues)
    report.q = residues.q
    report.results = [{'members': residues.members}]
    return EXIT_SUCCESS


def do_sq(args, harness, report):
    """Prints S_q"""
    return _print_residue_set(compute_Sq(args.q), report)


def do_tq(args, harness, report):
    """Prints T_q"""
    return _print_residue_set(compute_Tq(args.q), report)


def do_li(args, harness, report):
    """Prints Li_{-s}, its value at a rational number or its numerator modulo q^2"""
    if args.at is not None:
        value = polylog_neg(args.s)(args.at)
        print(value)
        report.results = [{'s': args.s, 'at': args.at, 'value': value}]
    elif args.mod is not None:
        check_prime(args.mod, odd=True)
        reduced = polylog_neg_mod(args.s, args.mod)
        print(reduced)
        report.q = args.mod
        report.results = [{'s': args.s, 'numerator': str(reduced), 'coefficients': reduced.coeffs}]
    else:
        function = polylog_neg(args.s)
        print(function)
        report.results = [{'s': args.s, 'function': str(function), 'coefficients': function.numerator.coeffs}]
    return EXIT_SUCCESS


def do_symbol(args, harness, report):
    """Prints (a/p)_q"""
    a = args.q if args.a is None else args.a
    value = qth_residue_symbol(a, args.p, args.q)
    print(f'{value:+d}')
    report.q = args.q
    report.results = [{'a': a, 'p': args.p, 'symbol': value}]
    return EXIT_SUCCESS


def do_mu(args, harness, report):
    """Prints mu^(i), its digits in powers of pi and its class modulo pi^(q+1)"""
    i = canonical_i(args.q, args.m, args.n) if args.i is None else args.i
    mu = mu_element(args.q, args.m, args.n, i)
    digits = to_pi_basis(mu).coeffs
    residue_class = reduce_mod_pi_power(mu, args.q + 1)
    print(f'i\t{i}')
    print(f'mu\t{mu}')
    print('a_k\t' + ' '.join(str(c) for c in digits))
    print(f'class\t{residue_class}')
    report.q = args.q
    report.results = [{'i': i, 'mu': mu.coeffs, 'a_k': digits, 'class': residue_class.coefficients()}]
    return EXIT_SUCCESS


def do_search(args, harness, report):
    """Prints p, (q/p)_q and the witnesses of every prime of the form up to a bound"""
    primes = harness.search(args.q, args.max_p, args.filter)
    for prime in primes:
        witnesses = ' '.join(f'{m},{n}' for m, n in prime.witnesses)
        print(f'{prime.p}\t{prime.symbol():+d}\t{witnesses}')
    report.q, report.bound = args.q, args.max_p
    report.results = [{'p': prime.p, 'symbol': prime.symbol(), 'witnesses': prime.witnesses,
                       'probable': prime.probable} for prime in primes]
    return EXIT_SUCCESS


def do_verify(args, harness, report):
    """Checks every criterion on every witness, exit 1 on any counterexample"""
    sweep = harness.sweep_equivalences(args.q, args.max_p)
    identities = run_identity_suites([args.q])
    print(f'records\t{len(sweep.records)}')
    print(f'counterexamples\t{len(sweep.counterexamples)}')
    print(f'witness_disagreements\t{len(sweep.witness_disagreements)}')
    print(f'identities\t{len(identities.checks) - len(identities.failures())}/{len(identities.checks)}')
    report.q, report.bound = args.q, args.max_p
    report.results = [record.properties() for record in sweep.records]
    report.counterexamples = ([record.properties() for record in sweep.counterexamples] +
                              [{'witness_disagreement': p} for p in sweep.witness_disagreements] +
                              list(identities.failures()))
    passed = sweep.ok() and identities.ok()
    if args.log_criterion:
        log_sweep = harness.sweep_log_criterion(args.q, args.max_p)
        print(f'log_counterexamples\t{len(log_sweep.counterexamples)}')
        report.counterexamples += [record.properties() for record in log_sweep.counterexamples]
        passed = passed and log_sweep.ok()
    return EXIT_SUCCESS if passed else EXIT_FAILURE


def do_crosscheck(args, harness, report):
    """Runs one of the classical cross-checks, exit 1 on any failure"""
    if args.cubic:
        result = harness.sweep_cubic_crosscheck(args.max_p)
    elif args.quintic:
        result = sweep_quintic_crosscheck(args.max_p, args.exhaustive)
    else:
        result = sweep_quadratic_crosscheck(args.max_p)
    failures = result.failures()
    print(f'checked\t{len(result.checks)}')
    print('failures\t' + ' '.join(str(check.argument) for check in failures))
    report.bound = args.max_p
    report.results = [{'name': result.name, 'checked': len(result.checks)}]
    report.counterexamples = list(failures)
    return EXIT_SUCCESS if result.ok() else EXIT_FAILURE


HANDLERS = {'fq': do_fq, 'sq': do_sq, 'tq': do_tq, 'li': do_li, 'symbol': do_symbol, 'mu': do_mu,
            'search': do_search, 'verify': do_verify, 'crosscheck': do_crosscheck}


def run(argv):
    """Parses argv, runs the command and returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    config = read_config(args.config)
    if not isinstance(config, dict):
        config = {}
    logger = logging.getLogger('powerresidues')
    if getattr(args, 'threads', None) is not None:
        config = dict(config, threads=args.threads)
    try:
        config = validate_config(config)
        setup_logging(config, args.log_file, args.verbose)
    except (ValueError, OSError) as e:
        logging.basicConfig(format=LOG_FORMAT)
        logger.error('Invalid configuration: %s', e)
        return EXIT_USAGE
    harness = Harness(config)
    options = {k: v for k, v in vars(args).items() if k not in ('command', 'config', 'log_file', 'verbose', 'json')}
    report = Report(Command(args.command, options))
    start = time.monotonic()
    try:
        code = HANDLERS[args.command](args, harness, report)
    except AssertionError as e:
        logger.error('Internal check failed: %s', e)
        return EXIT_FAILURE
    except ValueError as e:
        logger.error('%s', e)
        return EXIT_USAGE
    report.elapsed_ms = int((time.monotonic() - start) * 1000)
    if args.json is not None and not report.write(args.json):
        return EXIT_FAILURE
    return code


def main():
    """Run the command line given to the process"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
