"""Text formats for patterns and words.

Pattern files are ``key = value`` lines::

    alphabet = a b
    relation = len          # eq | rev | len
    pattern  = x1 x2 ab^2 y1 y2
    pairs    = (x1,x2) (y1,y2)

Tokens made only of alphabet symbols (each optionally followed by
``^n``) are terminal runs; any other identifier is a variable.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Optional, Sequence

from .core import KINDS, RelationalPattern, Var
from .errors import ParseError, UnknownSymbolInPairs

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")
_PAIR = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")
EMPTY_WORDS = ("", "ε", "eps")


def _terminal_run(token: str, alphabet: Sequence[str]) -> Optional[str]:
    """Expand ``ab^3`` style tokens; None if the token is not a terminal run."""
    out = []
    k = 0
    while k < len(token):
        c = token[k]
        if c not in alphabet:
            return None
        k += 1
        m = re.match(r"\^(\d+)", token[k:])
        if m:
            out.append(c * int(m.group(1)))
            k += m.end()
        else:
            out.append(c)
    return "".join(out)


def expand_word(text: str, alphabet: Optional[Sequence[str]] = None) -> str:
    """Expand the compact word grammar, e.g. ``a^2aba^9`` -> ``aaabaaaaaaaaa``."""
    text = text.strip()
    if text in EMPTY_WORDS:
        return ""
    out = []
    k = 0
    while k < len(text):
        c = text[k]
        if c == "^" or c.isspace() or (alphabet is not None and c not in alphabet):
            raise ParseError(f"unexpected {c!r} in word {text!r}", column=k + 1)
        k += 1
        m = re.match(r"\^(\d+)", text[k:])
        if m:
            out.append(c * int(m.group(1)))
            k += m.end()
        elif text[k:k + 1] == "^":
            raise ParseError(f"exponent without digits in word {text!r}", column=k + 1)
        else:
            out.append(c)
    return "".join(out)


def compact_word(w: str, min_run: int = 3) -> str:
    """Inverse of :func:`expand_word`, writing long runs with an exponent."""
    if not w:
        return "ε"
    parts = []
    for c, run in itertools.groupby(w):
        n = len(list(run))
        parts.append(f"{c}^{n}" if n >= min_run else c * n)
    return "".join(parts)


def pattern_items(tokens: Iterable[str], alphabet: Sequence[str], line=None, columns=None) -> list:
    items: list = []
    columns = list(columns) if columns is not None else None
    for k, tok in enumerate(tokens):
        run = _terminal_run(tok, alphabet)
        if run is not None:
            items.extend(run)
        elif _IDENT.match(tok):
            items.append(Var(tok))
        else:
            col = columns[k] if columns else None
            raise ParseError(f"bad pattern token {tok!r}", line, col)
    return items


def parse_pairs(text: str, line=None, offset: int = 0) -> list[tuple[str, str]]:
    pairs = []
    pos = 0
    for m in _PAIR.finditer(text):
        if text[pos:m.start()].strip(" ,\t"):
            raise ParseError(f"bad pair list near {text[pos:m.start()].strip()!r}", line, offset + pos + 1)
        pairs.append((m.group(1), m.group(2)))
        pos = m.end()
    if text[pos:].strip(" ,\t"):
        raise ParseError(f"bad pair list near {text[pos:].strip()!r}", line, offset + pos + 1)
    return pairs


def make_pattern(pattern: str, pairs="", kind: str = "len", alphabet="ab") -> RelationalPattern:
    """Build a pattern from whitespace-separated tokens, e.g. ``make_pattern("x1 ab x2", "(x1,x2)")``."""
    alphabet = tuple(_split_alphabet(alphabet) if isinstance(alphabet, str) else alphabet)
    if isinstance(pairs, str):
        pairs = parse_pairs(pairs)
    return RelationalPattern(alphabet, pattern_items(pattern.split(), alphabet), kind, frozenset(pairs))


def _split_alphabet(text: str) -> list[str]:
    parts = [p for p in re.split(r"[\s,]+", text.strip()) if p]
    if len(parts) == 1 and len(parts[0]) > 1:
        return list(parts[0])
    return parts


def parse_pattern_file(text: str) -> RelationalPattern:
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            raise ParseError("expected key = value", lineno, 1)
        key, value = line.split("=", 1)
        key = key.strip().lower()
        if key not in ("alphabet", "relation", "pattern", "pairs"):
            raise ParseError(f"unknown key {key!r}", lineno, raw.index(key) + 1 if key in raw else 1)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        fields[key] = (value, lineno, raw.index("=") + 2)

    for key in ("alphabet", "pattern"):
        if key not in fields:
            raise ParseError(f"missing {key} line")
    alpha_text, alpha_line, _ = fields["alphabet"]
    alphabet = _split_alphabet(alpha_text)
    if not alphabet or any(len(s) != 1 for s in alphabet) or len(set(alphabet)) != len(alphabet):
        raise ParseError(f"alphabet must list distinct single characters, got {alpha_text.strip()!r}", alpha_line)

    kind = "len"
    if "relation" in fields:
        kind_text, kind_line, col = fields["relation"]
        kind = kind_text.strip()
        if kind not in KINDS:
            raise ParseError(f"relation must be one of {', '.join(KINDS)}, got {kind!r}", kind_line, col)

    pat_text, pat_line, pat_col = fields["pattern"]
    tokens, columns = [], []
    for m in re.finditer(r"\S+", pat_text):
        tokens.append(m.group())
        columns.append(pat_col + m.start())
    if not tokens:
        raise ParseError("empty pattern", pat_line, pat_col)
    items = pattern_items(tokens, alphabet, pat_line, columns)

    pairs = []
    if "pairs" in fields:
        pair_text, pair_line, pair_col = fields["pairs"]
        pairs = parse_pairs(pair_text, pair_line, pair_col - 1)
    try:
        return RelationalPattern(tuple(alphabet), tuple(items), kind, frozenset(pairs))
    except UnknownSymbolInPairs as exc:
        line = fields["pairs"][1] if "pairs" in fields else None
        raise UnknownSymbolInPairs(exc.message, line) from None
    except ParseError as exc:
        if exc.line is None:
            raise type(exc)(exc.message, pat_line) from None
        raise


def pattern_text(rp: RelationalPattern) -> str:
    """Pattern tokens with terminal runs compacted."""
    tokens = []
    run = ""
    for item in rp.items:
        if isinstance(item, Var):
            if run:
                tokens.append(compact_word(run))
                run = ""
            tokens.append(item.name)
        else:
            run += item
    if run:
        tokens.append(compact_word(run))
    return " ".join(tokens)


def serialize(rp: RelationalPattern) -> str:
    lines = [
        f"alphabet = {' '.join(rp.alphabet)}",
        f"relation = {rp.kind}",
        f"pattern = {pattern_text(rp)}",
    ]
    if rp.pairs:
        lines.append("pairs = " + " ".join(f"({x},{y})" for x, y in sorted(rp.pairs)))
    return "\n".join(lines) + "\n"
