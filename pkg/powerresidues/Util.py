"""utility functions for power residue computations: configuration and formatting"""

import os
import logging

import yaml

INFINITY_LABEL = 'inf'


def read_yaml_config(file_name):
    """Given a filename, open and read it (assuming yaml format)
       relative to the user's home dir (or as is, if absolute) and return
       a dictionary with its contents"""
    logger = logging.getLogger('powerresidues')
    config_file_path = os.path.join(os.path.expanduser('~'), os.path.expanduser(file_name))
    try:
        with open(config_file_path, 'r', encoding='utf-8') as f:
            try:
                return yaml.safe_load(f) or {}
            except yaml.YAMLError:
                logger.error('Yaml configuration "%s" could not be loaded', file_name)
                return {}
    except FileNotFoundError:
        logger.error("File %s was not found", config_file_path)
        return {}
    except PermissionError:
        logger.error("Got a permission error while trying to read: %s", config_file_path)
        return {}
    except IOError:
        logger.error("An error happened while trying to open file: %s", config_file_path)
        return {}


def format_number(value):
    """Renders integers, rationals and the point at infinity"""
    if value == float('inf'):
        return INFINITY_LABEL
    return str(value)


def format_residues(values):
    """
    Space separated list in ascending numeric order, with the point at
    infinity (if any) last, e.g. '0 8 inf'.
    """
    return ' '.join(format_number(v) for v in sorted(values))


def format_polynomial(coefficients, variable='x'):
    """
    Given the coefficients of a polynomial, indexed by degree, return it as
    a string in descending degree, e.g. '8x^3 + 6x^2 + 4x'
    """
    terms = []
    for degree in range(len(coefficients) - 1, -1, -1):
        coefficient = coefficients[degree]
        if coefficient == 0:
            continue
        sign = '-' if coefficient < 0 else '+'
        magnitude = abs(coefficient)
        if getattr(magnitude, 'denominator', 1) != 1:
            magnitude = f'({magnitude})'
        if degree == 0:
            body = str(magnitude)
        else:
            power = variable if degree == 1 else f'{variable}^{degree}'
            body = power if magnitude == 1 else f'{magnitude}{power}'
        terms.append((sign, body))
    if not terms:
        return '0'
    first_sign, first_body = terms[0]
    text = ('-' if first_sign == '-' else '') + first_body
    for sign, body in terms[1:]:
        text += f' {sign} {body}'
    return text
