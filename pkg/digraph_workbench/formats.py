"""Text formats for digraphs, factorizations, groupoid tables and CDD parameters

All formats are line based. Blank lines and text after '#' are ignored.

  digraph file    "n d", then n lines of d out-neighbours
  factor file     "n d", then d lines, each in cycle notation or "p: <images>"
  groupoid file   "n d e" (e may be "-"), a generator line, then n rows of d entries
  CDD parameters  "a b", "pi=<cycles>", "t=<comma separated offsets>"
"""

import re
from pathlib import Path
from typing import List, Tuple

from .cdd import CddParams
from .digraph import Digraph, Factorization, from_factors
from .errors import FormatError, WorkbenchError
from .groupoid import PartialGroupoid
from .perm import Permutation, parse_cycles, print_cycles

_FACTOR_LINE = re.compile(r'^\s*(\(|p:|e$|id$)')
_DOT_COLOURS = ('black', 'red', 'blue', 'darkgreen', 'orange', 'purple')


def _lines(text) -> List[Tuple[int, str]]:
    """Non-empty lines with comments stripped, paired with 1-based line numbers"""
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            result.append((number, line))
    return result


def _ints(source, number, line, expected=None):
    try:
        values = [int(x) for x in line.replace(',', ' ').split()]
    except ValueError:
        raise FormatError(source, number, f"expected integers, got {line!r}")
    if expected is not None and len(values) != expected:
        raise FormatError(source, number, f"expected {expected} integers, got {len(values)}")
    return values


def _header(source, lines, width):
    if not lines:
        raise FormatError(source, 1, "missing header")
    number, line = lines[0]
    return _ints(source, number, line, width)


def _read(path):
    path = Path(path)
    try:
        return path.read_text()
    except OSError as e:
        raise FormatError(str(path), 0, f"cannot read file: {e.strerror}")


# Digraphs

def parse_digraph(text, source='<string>'):
    lines = _lines(text)
    n, d = _header(source, lines, 2)
    body = lines[1:]
    if len(body) != n:
        raise FormatError(source, body[-1][0] if body else lines[0][0], f"expected {n} vertex lines, got {len(body)}")
    rows = [_ints(source, number, line, d) for number, line in body]
    try:
        return Digraph(tuple(tuple(r) for r in rows))
    except WorkbenchError as e:
        raise FormatError(source, lines[0][0], str(e))


def format_digraph(G):
    out = [f"{G.n} {G.d}"]
    out += [' '.join(str(w) for w in row) for row in G.ports]
    return '\n'.join(out) + '\n'


def parse_permutation_line(text, n, source='<string>', number=1):
    """Cycle notation or "p: <images>" for one permutation of size n"""
    try:
        if text.startswith('p:'):
            return Permutation(tuple(_ints(source, number, text[2:], n)))
        return parse_cycles(text, n)
    except WorkbenchError as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(source, number, str(e))


def parse_factors(text, source='<string>'):
    lines = _lines(text)
    n, d = _header(source, lines, 2)
    body = lines[1:]
    if len(body) != d:
        raise FormatError(source, body[-1][0] if body else lines[0][0], f"expected {d} factor lines, got {len(body)}")
    factors = tuple(parse_permutation_line(line, n, source, number) for number, line in body)
    try:
        return Factorization(factors)
    except WorkbenchError as e:
        raise FormatError(source, body[0][0], str(e))


def format_factors(F):
    return '\n'.join([f"{F.n} {F.d}"] + [print_cycles(f) for f in F.factors]) + '\n'


def is_factor_text(text):
    lines = _lines(text)
    return len(lines) > 1 and bool(_FACTOR_LINE.match(lines[1][1]))


def parse_any(text, source='<string>'):
    """Digraph from either a digraph file or a factor file, plus the factorization when given"""
    if is_factor_text(text):
        F = parse_factors(text, source)
        return from_factors(F.factors), F
    return parse_digraph(text, source), None


def read_digraph(path):
    return parse_any(_read(path), str(path))


def write_digraph(G, path):
    Path(path).write_text(format_digraph(G))


def write_factors(F, path):
    Path(path).write_text(format_factors(F))


# Groupoid tables

def parse_groupoid(text, source='<string>'):
    lines = _lines(text)
    if not lines:
        raise FormatError(source, 1, "missing header")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 3:
        raise FormatError(source, number, "header must be 'n d e'")
    n, d = _ints(source, number, ' '.join(parts[:2]), 2)
    identity = None if parts[2] == '-' else _ints(source, number, parts[2], 1)[0]
    if len(lines) < 2:
        raise FormatError(source, number, "missing generator line")
    gens = _ints(source, lines[1][0], lines[1][1], d)
    body = lines[2:]
    if len(body) != n:
        raise FormatError(source, body[-1][0] if body else lines[1][0], f"expected {n} table rows, got {len(body)}")
    rows = [_ints(source, num, line, d) for num, line in body]
    try:
        return PartialGroupoid(tuple(tuple(r) for r in rows), tuple(gens), identity)
    except WorkbenchError as e:
        raise FormatError(source, number, str(e))


def format_groupoid(P):
    out = [f"{P.n} {P.d} {'-' if P.identity is None else P.identity}", ' '.join(str(g) for g in P.gens)]
    out += [' '.join(str(v) for v in row) for row in P.cols]
    return '\n'.join(out) + '\n'


def read_groupoid(path):
    return parse_groupoid(_read(path), str(path))


# CDD parameters

def parse_offsets(text, source='<string>', number=1):
    """Integers separated by commas or spaces"""
    try:
        return tuple(int(x) for x in text.replace(',', ' ').split())
    except ValueError:
        raise FormatError(source, number, f"offsets must be integers, got {text!r}")


def parse_cdd_params(text, source='<string>'):
    lines = _lines(text)
    a, b = _header(source, lines, 2)
    fields = {}
    for number, line in lines[1:]:
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep or key not in ('pi', 't'):
            raise FormatError(source, number, f"expected 'pi=...' or 't=...', got {line!r}")
        fields[key] = (number, value.strip())
    for key in ('pi', 't'):
        if key not in fields:
            raise FormatError(source, lines[-1][0], f"missing '{key}=' line")
    number, value = fields['pi']
    pi = parse_permutation_line(value, a, source, number)
    number, value = fields['t']
    t = parse_offsets(value, source, number)
    try:
        return CddParams(a, b, pi, t)
    except WorkbenchError as e:
        raise FormatError(source, number, str(e))


def format_cdd_params(p):
    return f"{p.a} {p.b}\npi={print_cycles(p.pi)}\nt={','.join(str(x) for x in p.t)}\n"


def read_cdd_params(path):
    return parse_cdd_params(_read(path), str(path))


# DOT export

def to_dot(G, F=None, name='G'):
    """Graphviz source; with a factorization, edges are coloured by factor"""
    out = [f"digraph {name} {{"]
    out += [f"  {v};" for v in range(G.n)]
    if F is not None:
        for s, f in enumerate(F.factors):
            colour = _DOT_COLOURS[s % len(_DOT_COLOURS)]
            out += [f'  {v} -> {f(v)} [color="{colour}"];' for v in range(G.n)]
    else:
        out += [f"  {u} -> {w};" for u, row in enumerate(G.ports) for w in row]
    out.append("}")
    return '\n'.join(out) + '\n'
