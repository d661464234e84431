"""PGSolver text format and solution reports.

PGSolver files are conventionally max-parity; everything inside the package
is min-parity.  :func:`convert_max_to_min` bridges the two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import ParityGame
from .state import WinningRegions

__all__ = [
    "ParseError",
    "GameDocument",
    "parse_pgsolver",
    "serialize_pgsolver",
    "convert_max_to_min",
    "emit_solution",
    "read_game",
]

log = logging.getLogger(__name__)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class GameDocument:
    """A parsed game together with how its colours are to be read.

    ``source_ids`` keeps the identifiers used in the file; node ``i`` of
    ``game`` is ``source_ids[i]`` there.
    """

    game: ParityGame
    declared_semantics: str = "max"
    source_names: tuple = ()
    source_ids: tuple = field(default=())

    def __post_init__(self):
        if self.declared_semantics not in ("min", "max"):
            raise ValueError(f"semantics must be 'min' or 'max', not {self.declared_semantics!r}")
        if not self.source_names:
            self.source_names = self.game.names or (None,) * self.game.n
        if not self.source_ids:
            self.source_ids = tuple(range(self.game.n))

    def min_parity_game(self) -> ParityGame:
        if self.declared_semantics == "max":
            return convert_max_to_min(self.game)
        return self.game


class _Lexer:
    """Splits the text into tokens: integers, quoted names, ``,`` and ``;``."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, k: int = 1) -> None:
        for _ in range(k):
            if self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def tokens(self):
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch.isspace():
                self._advance()
                continue
            line, col = self.line, self.col
            if ch in ",;":
                self._advance()
                yield ch, ch, line, col
            elif ch == '"':
                self._advance()
                buf = []
                while True:
                    if self.pos >= len(text):
                        raise ParseError("unterminated name", line, col)
                    c = text[self.pos]
                    if c == "\\" and self.pos + 1 < len(text):
                        buf.append(text[self.pos + 1])
                        self._advance(2)
                        continue
                    self._advance()
                    if c == '"':
                        break
                    buf.append(c)
                yield "name", "".join(buf), line, col
            elif ch == "-" or ch.isdigit():
                start = self.pos
                self._advance()
                while self.pos < len(text) and text[self.pos].isdigit():
                    self._advance()
                word = text[start:self.pos]
                if word == "-":
                    raise ParseError("dangling '-'", line, col)
                yield "int", int(word), line, col
            elif ch.isalpha():
                start = self.pos
                while self.pos < len(text) and (text[self.pos].isalnum() or text[self.pos] == "_"):
                    self._advance()
                yield "word", text[start:self.pos], line, col
            else:
                raise ParseError(f"unexpected character {ch!r}", line, col)


def parse_pgsolver(text: str, semantics: str = "max") -> GameDocument:
    """Parse ``[parity <max-id>;] (<id> <prio> <owner> <succ>(,<succ>)* ["name"];)*``.

    Node ids may be sparse; they are compacted in ascending order.  A
    ``start <id>;`` statement is accepted and ignored.
    """
    toks = list(_Lexer(text).tokens())
    i = 0
    end = toks[-1][2:] if toks else (1, 1)

    def need(kind):
        nonlocal i
        if i >= len(toks):
            raise ParseError(f"unexpected end of input, expected {kind}", *end)
        tok = toks[i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, got {tok[1]!r}", tok[2], tok[3])
        i += 1
        return tok

    if i < len(toks) and toks[i][0] == "word":
        if toks[i][1] != "parity":
            raise ParseError(f"unknown header {toks[i][1]!r}", toks[i][2], toks[i][3])
        i += 1
        need("int")
        need(";")
    if i < len(toks) and toks[i][0] == "word" and toks[i][1] == "start":
        i += 1
        need("int")
        need(";")

    nodes = {}
    while i < len(toks):
        kind, ident, line, col = need("int")
        if ident < 0:
            raise ParseError(f"negative node id {ident}", line, col)
        if ident in nodes:
            raise ParseError(f"node {ident} defined twice", line, col)
        _, prio, pl, pc = need("int")
        if prio < 0:
            raise ParseError(f"negative priority {prio}", pl, pc)
        _, owner, ol, oc = need("int")
        if owner not in (0, 1):
            raise ParseError(f"owner {owner} invalid (must be 0 or 1)", ol, oc)
        succ = []
        seen = set()
        if i < len(toks) and toks[i][0] != "int":
            raise ParseError(f"node {ident} is a dead-end (no successors)", line, col)
        while True:
            _, w, wl, wc = need("int")
            if w in seen:
                log.warning("line %d: duplicate successor %d of node %d dropped", wl, w, ident)
            else:
                seen.add(w)
                succ.append((w, wl, wc))
            if i < len(toks) and toks[i][0] == ",":
                i += 1
                continue
            break
        name = None
        if i < len(toks) and toks[i][0] == "name":
            name = toks[i][1]
            i += 1
        need(";")
        nodes[ident] = (prio, owner, succ, name)

    ids = sorted(nodes)
    index = {v: k for k, v in enumerate(ids)}
    owner, color, succ, names = [], [], [], []
    for v in ids:
        prio, o, ws, name = nodes[v]
        row = []
        for w, wl, wc in ws:
            if w not in index:
                raise ParseError(f"successor {w} of node {v} is not defined", wl, wc)
            row.append(index[w])
        owner.append(o)
        color.append(prio)
        succ.append(row)
        names.append(name)
    game = ParityGame(owner, color, succ, names if any(n is not None for n in names) else None)
    return GameDocument(game, semantics, tuple(names), tuple(ids))


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def serialize_pgsolver(doc) -> str:
    """Header plus one line per node in ascending id order.  Accepts a
    :class:`GameDocument` or a bare game."""
    g = doc.game if isinstance(doc, GameDocument) else doc
    names = g.names or (None,) * g.n
    lines = [f"parity {max(g.n - 1, 0)};"]
    for v in range(g.n):
        line = f"{v} {g.color[v]} {g.owner[v]} {','.join(str(w) for w in g.succ[v])}"
        if names[v] is not None:
            line += " " + _quote(names[v])
        lines.append(line + ";")
    return "\n".join(lines) + "\n"


def convert_max_to_min(g: ParityGame) -> ParityGame:
    """Recolour a max-parity game into an equivalent min-parity one:
    ``c -> M - c`` with ``M`` the smallest even number ``>= max colour``."""
    if not g.n:
        return g
    top = max(g.color)
    m = top + (top & 1)
    return g.with_colors([m - c for c in g.color])


def emit_solution(regions: WinningRegions, names: Sequence, ids: Optional[Sequence[int]] = None) -> str:
    """One ``<id> <0|1|?>`` line per node, sorted by id; ``?`` marks nodes a
    partial solver left undecided."""
    n = len(names)
    ids = list(range(n)) if ids is None else list(ids)
    rows = []
    for v in range(n):
        w = regions.winner(v)
        rows.append((ids[v], "?" if w is None else str(w)))
    rows.sort()
    return "".join(f"{i} {w}\n" for i, w in rows)


def read_game(path, semantics: Optional[str] = None) -> GameDocument:
    """Load a PGSolver file; ``.gm`` files default to max-parity."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if semantics is None:
        semantics = "max"
    return parse_pgsolver(text, semantics)
