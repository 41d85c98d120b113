"""Text formats: group files, sigma files and group spec strings.

Group file (line oriented, 0-based points, ``#`` starts a comment line)::

    group S3
    degree 3
    gen (0 1)
    gen (0 1 2)

Sigma file (one line)::

    sigma {2,3} {7} rest

Spec strings name constructions on the command line, e.g. ``cyclic:12``,
``metacyclic:7:6`` or ``symmetric:3*cyclic:2``.
"""
from __future__ import annotations

import re

from ..arith import is_prime
from ..core import Permutation
from ..errors import ConfigurationError, ParseError, StructuralError
from ..sigma import PRESETS, SigmaPartition
from .constructions import GroupSpec


def parse_cycles(text: str, degree: int, line: int | None = None, col: int = 1) -> Permutation:
    """Parse cycle notation such as ``(0 1 2)(3 4)``; ``()`` is the identity."""
    cycles = []
    seen: dict[int, int] = {}
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", line, col + pos)
        pos += 1
        cyc = []
        while True:
            while pos < n and text[pos] in " \t,":
                pos += 1
            if pos >= n:
                raise ParseError("unterminated cycle", line, col + pos)
            if text[pos] == ")":
                pos += 1
                break
            m = re.compile(r"\d+").match(text, pos)
            if not m:
                raise ParseError(f"expected a point or ')' but found {text[pos]!r}", line, col + pos)
            x = int(m.group())
            if x >= degree:
                raise ParseError(f"point {x} outside 0..{degree - 1}", line, col + pos)
            if x in seen:
                raise ParseError(f"point {x} appears twice in one generator", line, col + pos)
            seen[x] = pos
            cyc.append(x)
            pos = m.end()
        if cyc:
            cycles.append(cyc)
    try:
        return Permutation.from_cycles(cycles, degree)
    except StructuralError as exc:
        raise ParseError(str(exc), line, col) from None


def parse_group_file(text: str) -> GroupSpec:
    """Parse a group file into a raw :class:`GroupSpec`."""
    label = None
    degree = None
    gens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = stripped.partition(" ")
        rest_col = indent + len(keyword) + 2 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if keyword == "group":
            if label is not None:
                raise ParseError("duplicate 'group' line", lineno, indent + 1)
            if not rest:
                raise ParseError("'group' needs a label", lineno, indent + 1)
            label = rest
        elif keyword == "degree":
            if degree is not None:
                raise ParseError("duplicate 'degree' line", lineno, indent + 1)
            if not rest.isdigit() or int(rest) < 1:
                raise ParseError(f"degree must be a positive integer, got {rest!r}", lineno, rest_col)
            degree = int(rest)
        elif keyword == "gen":
            if degree is None:
                raise ParseError("'gen' before 'degree'", lineno, indent + 1)
            gens.append(parse_cycles(rest, degree, lineno, rest_col))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, indent + 1)
    if label is None:
        raise ParseError("missing 'group' line")
    if degree is None:
        raise ParseError("missing 'degree' line")
    return GroupSpec.raw(degree, gens, name=label)


def serialize_group_spec(spec: GroupSpec) -> str:
    """Canonical group file text for a raw spec."""
    if spec.kind != "raw":
        raise ConfigurationError("only raw specs have a group-file form; use spec_string()")
    degree, gens = spec.params
    lines = [f"group {spec.name or 'unnamed'}", f"degree {degree}"]
    lines += [f"gen {g}" for g in gens]
    return "\n".join(lines) + "\n"


def parse_sigma_file(text: str) -> SigmaPartition:
    """Parse ``sigma {..} {..} [rest|singletons]``."""
    found = None
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if found is not None:
            raise ParseError("more than one sigma line", lineno, 1)
        found = (lineno, line)
    if found is None:
        raise ParseError("empty sigma file")
    lineno, line = found
    start = len(line) - len(line.lstrip())
    if not line[start:].startswith("sigma") or line[start + 5:start + 6] not in ("", " ", "\t"):
        raise ParseError("sigma line must start with 'sigma'", lineno, start + 1)
    pos = start + 5
    classes = []
    rest = "none"
    n = len(line)
    while pos < n:
        if line[pos].isspace():
            pos += 1
            continue
        if rest != "none":
            raise ParseError(f"'{rest}' must be the last token", lineno, pos + 1)
        if line[pos] == "{":
            close = line.find("}", pos)
            if close < 0:
                raise ParseError("unterminated '{'", lineno, pos + 1)
            body = line[pos + 1:close]
            primes = []
            for m in re.finditer(r"[^,\s]+", body):
                tok = m.group()
                col = pos + 2 + m.start()
                if not tok.isdigit():
                    raise ParseError(f"expected a prime, found {tok!r}", lineno, col)
                if not is_prime(int(tok)):
                    raise ParseError(f"{tok} is not a prime", lineno, col)
                primes.append(int(tok))
            if not primes:
                raise ParseError("empty class", lineno, pos + 1)
            classes.append((pos + 1, primes))
            pos = close + 1
            continue
        m = re.compile(r"\S+").match(line, pos)
        word = m.group()
        if word in ("rest", "singletons"):
            rest = word
            pos = m.end()
            continue
        raise ParseError(f"unexpected token {word!r}", lineno, pos + 1)
    seen: dict[int, int] = {}
    for col, primes in classes:
        for p in primes:
            if p in seen:
                raise ParseError(f"classes not disjoint: {p} occurs more than once", lineno, col)
            seen[p] = col
    try:
        return SigmaPartition(tuple(frozenset(ps) for _, ps in classes), rest=rest)
    except ConfigurationError as exc:
        raise ParseError(str(exc), lineno, start + 1) from None


def serialize_sigma(sigma: SigmaPartition) -> str:
    return sigma.label + "\n"


def resolve_sigma(name_or_text: str) -> SigmaPartition:
    """A preset name, an inline ``sigma ...`` line, or the text of a sigma file."""
    if name_or_text in PRESETS:
        return PRESETS[name_or_text]
    return parse_sigma_file(name_or_text)


_SIMPLE = {"cyclic": 1, "dihedral": 1, "symmetric": 1, "alternating": 1, "metacyclic": 2}
_ALIASES = {"C": "cyclic", "S": "symmetric", "A": "alternating"}


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_spec_string(text: str) -> GroupSpec:
    """Parse ``kind:args`` terms joined by ``*`` (direct product, left to right).

    Shorthands: ``C12``, ``S4``, ``A5`` and ``D8`` (dihedral of order 8).
    Raw groups: ``raw:<degree>:<gen>;<gen>...`` with cycle-notation generators.
    """
    s = text.strip()
    parts = _split_top(s, "*")
    if len(parts) > 1:
        spec = parse_spec_string(parts[0])
        for p in parts[1:]:
            spec = GroupSpec.direct_product(spec, parse_spec_string(p))
        return spec
    if s.startswith("(") and s.endswith(")"):
        return parse_spec_string(s[1:-1])
    m = re.fullmatch(r"([CSAD])(\d+)", s)
    if m:
        letter, n = m.group(1), int(m.group(2))
        if letter == "D":
            if n % 2:
                raise ConfigurationError(f"dihedral group order must be even, got {n}")
            return GroupSpec.dihedral(n // 2)
        return GroupSpec(_ALIASES[letter], (n,))
    kind, _, rest = s.partition(":")
    if kind == "raw":
        deg, _, gens = rest.partition(":")
        if not deg.isdigit():
            raise ConfigurationError(f"bad raw degree in {text!r}")
        degree = int(deg)
        perms = [parse_cycles(g, degree) for g in gens.split(";") if g.strip()]
        return GroupSpec.raw(degree, perms)
    if kind not in _SIMPLE:
        raise ConfigurationError(f"unknown group spec {text!r}")
    args = rest.split(":") if rest else []
    if len(args) != _SIMPLE[kind] or not all(a.isdigit() for a in args):
        raise ConfigurationError(f"{kind} takes {_SIMPLE[kind]} integer argument(s): {text!r}")
    return GroupSpec(kind, tuple(int(a) for a in args))


def spec_string(spec: GroupSpec) -> str:
    """Canonical spec string; inverse of :func:`parse_spec_string`."""
    if spec.kind == "direct_product":
        a, b = spec.params
        right = spec_string(b)
        if b.kind == "direct_product":
            right = f"({right})"
        return f"{spec_string(a)}*{right}"
    if spec.kind == "raw":
        degree, gens = spec.params
        return f"raw:{degree}:" + ";".join(str(g) for g in gens)
    return ":".join([spec.kind] + [str(a) for a in spec.params])
