import argparse
from typing import Sequence, TextIO

import config as cfg
from data import DiscrepancyStore
from gems.errors import (Disconnected, EdgeNotInGrayGraph, FixedPoint, GemError, GemSyntaxError,
                         InvalidDiagram, MismatchedGray, NotAMatching, SemanticError)

from .commands import COMMANDS, EXIT_INPUT, EXIT_PROPERTY, CommandContext, InputError
from .messages import MessageService

INPUT_ERRORS = (GemSyntaxError, SemanticError, InvalidDiagram, NotAMatching, FixedPoint, Disconnected,
                EdgeNotInGrayGraph, MismatchedGray)


class UsageError(InputError):
    code = 'usage'


class GemkitParser(argparse.ArgumentParser):
    """Reports bad arguments as an input error instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = GemkitParser(prog='gemkit', description='3-gems, twistors, gray graphs and J2-gems')
    parser.add_argument('--verbose', action='store_true', help='print search progress on stderr')
    parser.add_argument('--discrepancies', metavar='FILE', default=cfg.DISCREPANCY_FILE,
                        help='JSON file collecting theory discrepancies')
    parser.add_argument('-o', '--output', metavar='FILE', help='write the result here instead of stdout')
    sub = parser.add_subparsers(dest='command', required=True)

    def command(name: str, help_text: str, axis: bool = False, files: bool = True,
                modes: tuple[str, ...] = ()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if modes:
            p.add_argument('mode', choices=modes)
        if files:
            p.add_argument('files', nargs='*', help='input files (default: stdin)')
        if axis:
            p.add_argument('--axis', type=int, choices=(1, 2, 3), default=cfg.DEFAULT_AXIS)
        p.add_argument('-o', '--output', metavar='FILE', default=argparse.SUPPRESS)
        return p

    command('check', 'gem condition for every gem in the input').add_argument('--json', action='store_true')
    command('info', 'full report of one gem')
    command('twistors', 'list twistors and antipoles', axis=True)
    command('gray', 'print the gray graph', axis=True)
    resolve = command('resolve', 'search for a resolution', axis=True)
    resolve.add_argument('--budget', type=int, default=cfg.DEFAULT_BUDGET)
    twist = command('twist-all', 'twist a gem along a resolution')
    twist.add_argument('--keep-blobs', action='store_true')
    twist.add_argument('--trace', action='store_true', help='append the move trace from the input gem')
    command('j2', 'recognize or construct a J2-gem', axis=True, modes=('recognize', 'construct'))
    command('sequence', 'thickening sequence of a J2-gem', axis=True)
    dot = command('dot', 'DOT export, optionally with the gray graph', axis=True)
    dot.add_argument('--gray', action='store_true')
    command('replay', 'replay a move trace on a gem')

    gen = command('gen', 'generate a gem', axis=True, files=False)
    gen.add_argument('family', choices=('bloboid', 'j2', 'random-walk'))
    gen.add_argument('--n', type=int, default=2)
    gen.add_argument('--steps', type=int, default=10)
    gen.add_argument('--seed', type=int, default=None)
    gen.add_argument('--non-orientable', action='store_true')
    gen.add_argument('--crystallize', action='store_true', help='cancel 1-dipoles of the random walk')
    return parser


def cli(argv: Sequence[str] | None = None, stdin_text: str | None = None,
        out: TextIO | None = None, err: TextIO | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        MessageService(out, err).send_error(e.code, str(e))
        return EXIT_INPUT

    cfg.VERBOSE = cfg.VERBOSE or args.verbose
    store = DiscrepancyStore(args.discrepancies)
    store.register()

    handle = None
    messages = MessageService(out, err)
    try:
        if args.output:
            handle = open(args.output, 'w')
            messages = MessageService(handle, err)
        return COMMANDS[args.command](args, CommandContext(messages, stdin_text))
    except (InputError, OSError) as e:
        messages.send_error(getattr(e, 'code', 'io_error'), str(e))
        return EXIT_INPUT
    except INPUT_ERRORS as e:
        messages.send_error(e.code, e.message)
        return EXIT_INPUT
    except GemError as e:
        messages.send_error(e.code, e.message)
        return EXIT_PROPERTY
    finally:
        store.unregister()
        if handle:
            handle.close()
