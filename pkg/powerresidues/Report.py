"""Machine readable results of a command line invocation"""
from dataclasses import dataclass, field, is_dataclass, asdict
from fractions import Fraction
import json
import logging

from powerresidues import __version__
from powerresidues.Util import INFINITY_LABEL

COMMANDS = ('fq', 'sq', 'tq', 'li', 'symbol', 'mu', 'search', 'verify', 'crosscheck')


class UnknownCommandError(ValueError):
    """Raised when building a Command for a name that is not a subcommand"""


def to_jsonable(value):
    """
    Converts results into plain JSON values: infinity becomes "inf",
    rationals their "n/d" string and sets sorted lists.
    """
    if isinstance(value, float) and value == float('inf'):
        return INFINITY_LABEL
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(asdict(value))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        finite = sorted(v for v in value if v != float('inf'))
        return [to_jsonable(v) for v in finite] + ([INFINITY_LABEL] if float('inf') in value else [])
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class Command:
    """A subcommand name with its parsed options"""
    name: str
    options: dict

    def __post_init__(self):
        """Only known subcommands can be reported"""
        if self.name not in COMMANDS:
            raise UnknownCommandError(f'Unknown command {self.name}')

    def echo(self):
        """The command as a dictionary"""
        return {'name': self.name, 'options': to_jsonable(self.options)}


@dataclass
class Report:
    """Outcome of a command: what ran, its results and the counterexamples found"""
    command: Command
    q: int = None
    bound: int = None
    results: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    elapsed_ms: int = 0
    version: str = __version__

    def to_dict(self):
        """Report as a dictionary of JSON values"""
        return {'version': self.version,
                'command': self.command.echo(),
                'q': self.q,
                'bound': self.bound,
                'results': to_jsonable(self.results),
                'counterexamples': to_jsonable(self.counterexamples),
                'elapsed_ms': self.elapsed_ms}

    def to_json(self):
        """Deterministic JSON text of the report"""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def write(self, path):
        """Writes the report as JSON, logging (and ignoring) write failures"""
        logger = logging.getLogger('powerresidues')
        try:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(self.to_json() + '\n')
        except PermissionError:
            logger.error('Got a permission error while trying to write the report: %s', path)
            return False
        except IOError:
            logger.error('An error happened while trying to write the report: %s', path)
            return False
        return True
