import json
import sys
from dataclasses import dataclass, field

import config as cfg
from data import (Document, export_dot, parse_chords, parse_gem, parse_resolution, parse_trace,
                  serialize_chords, serialize_gem, serialize_resolution, serialize_sequence,
                  serialize_trace, split_documents)
from gems.errors import GemError
from gems.graph import ColoredGraph, state_hash
from gems.report import check_complementary, gem_report, generator_count
from gray import build_gray_graph, enumerate_antipoles, enumerate_twistors, find_resolution
from jordan import (j2_from_chords, make_bloboid, random_chord_diagram, recognize_j2_reason,
                    thickening_sequence, twist_all)
from moves.dipoles import crystallize
from moves.trace import Move, MoveTrace, replay
from moves.walks import random_dipole_walk

from .messages import MessageService

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PROPERTY = 2
EXIT_SEARCH = 3


class InputError(Exception):
    code = 'input_error'


@dataclass
class CommandContext:
    messages: MessageService
    stdin_text: str | None = None
    _docs: list[Document] | None = field(default=None, repr=False)

    def documents(self, files: list[str]) -> list[Document]:
        if self._docs is None:
            texts = []
            for name in files or ['-']:
                if name == '-':
                    texts.append(self.stdin_text if self.stdin_text is not None else sys.stdin.read())
                else:
                    with open(name, 'r') as f:
                        texts.append(f.read())
            self._docs = split_documents('\n'.join(texts))
        return self._docs

    def first(self, files: list[str], kind: str) -> Document:
        doc = next((d for d in self.documents(files) if d.kind == kind), None)
        if doc is None:
            raise InputError(f'no {kind} document in the input')
        return doc

    def gem(self, files: list[str]) -> ColoredGraph:
        doc = self.first(files, 'gem')
        return parse_gem(doc.text, doc.start)


def cmd_check(args, ctx: CommandContext) -> int:
    status = EXIT_OK
    for doc in (d for d in ctx.documents(args.files) if d.kind == 'gem'):
        graph = parse_gem(doc.text, doc.start)
        report = gem_report(graph)
        if args.json:
            row = {'name': graph.name, 'v': report.v, 't': report.t, 'b': report.b, 'gem': report.is_gem,
                   'bipartite': report.is_bipartite, 'crystallization': report.is_crystallization}
            ctx.messages.emit(json.dumps(row))
        else:
            ctx.messages.emit(report.summary())
        if not report.is_gem:
            status = EXIT_PROPERTY
    return status


def cmd_info(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    report = gem_report(graph)
    lines = [f'name {graph.name or "unnamed"}', report.summary(), f'hash {state_hash(graph)}']
    lines.append('bigons ' + ' '.join(f'b{i}{j}={count}' for (i, j), count in report.bigons.items()))
    lines.append('triballs ' + ' '.join(f'{"".join(map(str, t))}={count}'
                                        for t, count in report.residue_counts.items()))
    lines.append(f'bipartite {"yes" if report.is_bipartite else "no"}')
    lines.append(f'crystallization {"yes" if report.is_crystallization else "no"}')
    if report.is_crystallization:
        lines.append(f'complementary {"yes" if check_complementary(graph) else "no"}')
    if report.is_gem:
        lines.append('generators ' + ' '.join(f'axis{i}={generator_count(graph, i)}' for i in (1, 2, 3)))
    lines.append(f'triballs_planar {"yes" if report.triballs_planar else "no"}')
    ctx.messages.emit('\n'.join(lines))
    return EXIT_OK if report.is_gem else EXIT_PROPERTY


def cmd_twistors(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    lines = [f'twistor {tw.label}' for tw in enumerate_twistors(graph, args.axis)]
    lines += [f'antipole {a.label}' for a in enumerate_antipoles(graph, args.axis)]
    ctx.messages.emit('\n'.join(lines) if lines else '# none')
    return EXIT_OK


def cmd_gray(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    gray = build_gray_graph(graph, args.axis)
    lines = [f'gray axis={gray.axis} nodes={len(gray.nodes)} edges={len(gray.edges)}']
    lines += [f'node g{idx}: {" ".join(map(str, gon.vertices))}' for idx, gon in enumerate(gray.nodes)]
    for e in gray.edges:
        (a, b), (c, d) = e.e_pair
        lines.append(f'edge {e.label} g{e.source}-g{e.target} {e.origin} e={a}-{b},{c}-{d}')
    ctx.messages.emit('\n'.join(lines))
    return EXIT_OK


def cmd_resolve(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    result = find_resolution(graph, args.axis, args.budget)
    if not result.found:
        ctx.messages.send_error(result.reason.code, f'no {args.axis}-resolution after {result.expansions} expansions')
        return EXIT_SEARCH
    ctx.messages.emit(serialize_gem(graph) + serialize_resolution(result.resolution))
    return EXIT_OK


def cmd_twist_all(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    doc = ctx.first(args.files, 'resolution')
    trace = MoveTrace.starting_at(graph)
    twisted = twist_all(graph, parse_resolution(doc.text, doc.start), trace)
    if not args.keep_blobs:
        twisted = trace.run(twisted, Move.blob_cancel_all())
    text = serialize_gem(twisted.renamed(f'{graph.name or "gem"}-twisted'))
    ctx.messages.emit(text + serialize_trace(trace) if args.trace else text)
    return EXIT_OK


def cmd_j2(args, ctx: CommandContext) -> int:
    if args.mode == 'construct':
        doc = ctx.first(args.files, 'jordan')
        ctx.messages.emit(serialize_gem(j2_from_chords(parse_chords(doc.text, doc.start), args.axis)))
        return EXIT_OK
    diagram, reason = recognize_j2_reason(ctx.gem(args.files), args.axis)
    if diagram is None:
        ctx.messages.send_error('not_j2', reason)
        return EXIT_PROPERTY
    ctx.messages.emit(serialize_chords(diagram))
    return EXIT_OK


def cmd_sequence(args, ctx: CommandContext) -> int:
    sequence = thickening_sequence(ctx.gem(args.files), args.axis)
    ctx.messages.emit(serialize_sequence(sequence) + serialize_trace(sequence.as_trace()))
    return EXIT_OK


def cmd_gen(args, ctx: CommandContext) -> int:
    seed = cfg.DEFAULT_SEED if args.seed is None else args.seed
    if args.family == 'bloboid':
        graph = make_bloboid(args.n)
    elif args.family == 'j2':
        diagram = random_chord_diagram(args.n, seed)
        graph = j2_from_chords(diagram, args.axis).renamed(f'j2-{args.n}-{seed}')
    else:
        graph = random_dipole_walk(args.steps, seed, orientable=not args.non_orientable)
        if args.crystallize:
            graph = crystallize(graph)
    ctx.messages.emit(serialize_gem(graph))
    return EXIT_OK


def cmd_dot(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    gray = build_gray_graph(graph, args.axis) if args.gray else None
    highlight = None
    if gray is not None and any(d.kind == 'resolution' for d in ctx.documents(args.files)):
        doc = ctx.first(args.files, 'resolution')
        highlight = parse_resolution(doc.text, doc.start)
    ctx.messages.emit(export_dot(graph, gray, highlight))
    return EXIT_OK


def cmd_replay(args, ctx: CommandContext) -> int:
    graph = ctx.gem(args.files)
    doc = ctx.first(args.files, 'trace')
    final = replay(graph, parse_trace(doc.text, doc.start))
    ctx.messages.emit(serialize_gem(final))
    return EXIT_OK


COMMANDS = {
    'check': cmd_check,
    'info': cmd_info,
    'twistors': cmd_twistors,
    'gray': cmd_gray,
    'resolve': cmd_resolve,
    'twist-all': cmd_twist_all,
    'j2': cmd_j2,
    'sequence': cmd_sequence,
    'gen': cmd_gen,
    'dot': cmd_dot,
    'replay': cmd_replay,
}
