"""Graph ingestion: the generator expression language and edge-list files.

Grammar::

    expr  := atom | combinator
    atom  := cycle(INT) | complete(INT) | path(INT) | empty(INT)
           | complete_multipartite(INT, ...) | random(INT, NUM, INT)
    combinator := line(expr) | complement(expr) | join(expr, expr)
           | union(expr, expr) | induced(expr, [INT, ...])

Edge lists start with ``n <count>`` followed by one ``i j`` pair per line
(1-based); blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import graph as gr
from .graph import Graph, GraphError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[(),\[\]]))")


class DSLError(ValueError):
    """Parse or semantic error; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        detail = f" (expected {' or '.join(expected)})" if expected else ""
        super().__init__(f"{message} at offset {position}{detail}")


@dataclass(frozen=True)
class _Tok:
    kind: str  # num | name | punct | eof
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            toks.append(_Tok("eof", "", pos))
            return toks
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise DSLError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()


_ATOMS = {"cycle": gr.cycle, "complete": gr.complete, "path": gr.path, "empty": gr.empty}
_UNARY = {"line": gr.line_graph, "complement": gr.complement}
_BINARY = {"join": gr.join, "union": gr.disjoint_union}
_ALL = sorted([*_ATOMS, *_UNARY, *_BINARY, "complete_multipartite", "random", "induced"])


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def expect(self, text: str) -> _Tok:
        t = self.tok
        if t.kind != "punct" or t.text != text:
            raise DSLError(f"syntax error: got {t.text or 'end of input'!r}", t.pos, (repr(text),))
        self.i += 1
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            raise DSLError(f"syntax error: got {t.text or 'end of input'!r}", t.pos, ("integer",))
        self.i += 1
        return int(t.text)

    def number(self) -> float:
        t = self.tok
        if t.kind != "num":
            raise DSLError(f"syntax error: got {t.text or 'end of input'!r}", t.pos, ("number",))
        self.i += 1
        return float(t.text)

    def parse(self) -> Graph:
        g = self.expr()
        if self.tok.kind != "eof":
            raise DSLError(f"trailing input {self.tok.text!r}", self.tok.pos, ("end of input",))
        return g

    def expr(self) -> Graph:
        t = self.tok
        if t.kind != "name":
            raise DSLError(f"syntax error: got {t.text or 'end of input'!r}", t.pos, ("generator name",))
        if t.text not in _ALL:
            raise DSLError(f"unknown generator {t.text!r}", t.pos, tuple(_ALL))
        self.i += 1
        self.expect("(")
        try:
            g = self._call(t.text)
        except GraphError as exc:
            raise DSLError(f"semantic error in {t.text}: {exc}", t.pos) from exc
        self.expect(")")
        return g

    def _call(self, name: str) -> Graph:
        if name in _ATOMS:
            k = self.integer()
            return _ATOMS[name](k)
        if name == "complete_multipartite":
            parts = [self.integer()]
            while self.tok.text == ",":
                self.i += 1
                parts.append(self.integer())
            return gr.complete_multipartite(*parts)
        if name == "random":
            n = self.integer()
            self.expect(",")
            p = self.number()
            self.expect(",")
            seed = self.integer()
            return gr.random_graph(n, p, seed)
        if name in _UNARY:
            return _UNARY[name](self.expr())
        if name in _BINARY:
            a = self.expr()
            self.expect(",")
            b = self.expr()
            return _BINARY[name](a, b)
        # induced
        g = self.expr()
        self.expect(",")
        self.expect("[")
        vs = [self.integer()]
        while self.tok.text == ",":
            self.i += 1
            vs.append(self.integer())
        self.expect("]")
        return gr.induced(g, vs)


def parse_dsl(expr: str) -> Graph:
    return _Parser(expr).parse()


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected header 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'i j'")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("edge list has no 'n <count>' header")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{i} {j}" for i, j in g.sorted_edges]
    return "\n".join(lines) + "\n"
