"""Constructor expressions for polytope lattices and their string syntax.

Syntax: ``simplex(d)``, ``tdm(d,i,m)``, ``pyr(spec,t)``, ``prism(s)``,
``stack(spec)``, ``dual(spec)``, ``nabla(d)``, ``gmin(d,s)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import constructions as C
from .errors import ParseError, SpecInvariantViolated
from .lattice import GradedLattice, dual, pyramid
from .limits import check_lattice_size


class PolytopeSpec:
    """Base class of the expression nodes."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def validate(self) -> None:
        raise NotImplementedError


@dataclass(frozen=True)
class Simplex(PolytopeSpec):
    d: int

    @property
    def dim(self):
        return self.d

    def validate(self):
        if self.d < 0:
            raise SpecInvariantViolated("simplex(d) needs d >= 0")

    def __str__(self):
        return f"simplex({self.d})"


@dataclass(frozen=True)
class Tdm(PolytopeSpec):
    d: int
    i: int
    m: int

    @property
    def dim(self):
        return self.d

    def validate(self):
        if not (2 <= self.i <= self.d and 1 <= self.m <= self.i // 2):
            raise SpecInvariantViolated(
                f"tdm({self.d},{self.i},{self.m}) needs 2 <= i <= d and 1 <= m <= floor(i/2)")

    def __str__(self):
        return f"tdm({self.d},{self.i},{self.m})"


@dataclass(frozen=True)
class Pyr(PolytopeSpec):
    base: PolytopeSpec
    times: int = 1

    @property
    def dim(self):
        return self.base.dim + self.times

    def validate(self):
        if self.times < 0:
            raise SpecInvariantViolated("pyr(spec,t) needs t >= 0")
        self.base.validate()

    def __str__(self):
        return f"pyr({self.base},{self.times})"


@dataclass(frozen=True)
class PrismProduct(PolytopeSpec):
    """``Delta^1 x Delta^{s-1}``."""

    s: int

    @property
    def dim(self):
        return self.s

    def validate(self):
        if self.s < 1:
            raise SpecInvariantViolated("prism(s) needs s >= 1")

    def __str__(self):
        return f"prism({self.s})"


@dataclass(frozen=True)
class Stack(PolytopeSpec):
    base: PolytopeSpec

    @property
    def dim(self):
        return self.base.dim

    def validate(self):
        self.base.validate()

    def __str__(self):
        return f"stack({self.base})"


@dataclass(frozen=True)
class Dual(PolytopeSpec):
    base: PolytopeSpec

    @property
    def dim(self):
        return self.base.dim

    def validate(self):
        self.base.validate()

    def __str__(self):
        return f"dual({self.base})"


@dataclass(frozen=True)
class Nabla(PolytopeSpec):
    d: int

    @property
    def dim(self):
        return self.d

    def validate(self):
        if self.d < 2:
            raise SpecInvariantViolated("nabla(d) needs d >= 2")

    def __str__(self):
        return f"nabla({self.d})"


@dataclass(frozen=True)
class GrunbaumMin(PolytopeSpec):
    d: int
    s: int

    @property
    def dim(self):
        return self.d

    def validate(self):
        if not 2 <= self.s <= self.d:
            raise SpecInvariantViolated(f"gmin({self.d},{self.s}) needs 2 <= s <= d")

    def __str__(self):
        return f"gmin({self.d},{self.s})"


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<ident>[a-z_]+)|(?P<int>-?\d+)|(?P<punct>[(),]))")

# name -> argument kinds ("s" spec, "i" int); trailing "?" marks an optional int
_SIGNATURES = {
    "simplex": ("i",),
    "tdm": ("i", "i", "i"),
    "pyr": ("s", "i?"),
    "prism": ("i",),
    "stack": ("s",),
    "dual": ("s",),
    "nabla": ("i",),
    "gmin": ("i", "i"),
}


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] if tok[0] else "end of input"
            raise ParseError(f"expected {want!r} at offset {tok[2]}, got {got!r}")
        self.pos += 1
        return tok[1]

    def expr(self) -> PolytopeSpec:
        name = self.take("ident")
        if name not in _SIGNATURES:
            raise ParseError(f"unknown constructor {name!r}; expected one of {sorted(_SIGNATURES)}")
        sig = _SIGNATURES[name]
        self.take("punct", "(")
        args = []
        for n, kind in enumerate(sig):
            if kind.endswith("?") and self.peek()[1] == ")":
                break
            if n:
                self.take("punct", ",")
            if kind == "s":
                args.append(self.expr())
            else:
                args.append(int(self.take("int")))
        self.take("punct", ")")
        return _build(name, args)

    def parse(self) -> PolytopeSpec:
        spec = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input at offset {self.peek()[2]}")
        return spec


def _build(name: str, args: list) -> PolytopeSpec:
    if name == "simplex":
        return Simplex(*args)
    if name == "tdm":
        return Tdm(*args)
    if name == "pyr":
        return Pyr(*args)
    if name == "prism":
        return PrismProduct(*args)
    if name == "stack":
        return Stack(*args)
    if name == "dual":
        return Dual(*args)
    if name == "nabla":
        return Nabla(*args)
    return GrunbaumMin(*args)


def parse_spec(text: str) -> PolytopeSpec:
    """Parse a constructor expression; raises :class:`ParseError`."""
    return _Parser(text).parse()


# evaluation

@lru_cache(maxsize=256)
def _realize(spec: PolytopeSpec) -> GradedLattice:
    if isinstance(spec, Simplex):
        return C.boolean_lattice(spec.d + 1)
    if isinstance(spec, Tdm):
        return C.tdm_lattice(spec.d, spec.i, spec.m)
    if isinstance(spec, Pyr):
        return pyramid(_realize(spec.base), spec.times)
    if isinstance(spec, PrismProduct):
        return C.prism(spec.s)
    if isinstance(spec, Stack):
        return C.stack(_realize(spec.base))
    if isinstance(spec, Dual):
        return dual(_realize(spec.base))
    if isinstance(spec, Nabla):
        return C.nabla(spec.d)
    if isinstance(spec, GrunbaumMin):
        return C.grunbaum_minimizer(spec.d, spec.s)
    raise TypeError(f"not a polytope spec: {spec!r}")


def realize(spec: PolytopeSpec | str) -> GradedLattice:
    """Evaluate a spec (or its string form) to a face lattice."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    spec.validate()
    L = _realize(spec)
    # cached results must still respect the current size cap
    check_lattice_size(len(L))
    return L


def zoo(d: int) -> list:
    """A fixed family of ``d``-polytope specs used by the property suites."""
    if d < 2:
        raise ValueError("zoo(d) needs d >= 2")
    specs = [Simplex(d)]
    for i in range(2, d + 1):
        for m in range(1, i // 2 + 1):
            specs.append(Tdm(d, i, m))
            specs.append(Dual(Tdm(d, i, m)))
    for s in range(2, d + 1):
        specs.append(GrunbaumMin(d, s))
        specs.append(Dual(GrunbaumMin(d, s)))
    specs += [
        Nabla(d),
        Dual(Nabla(d)),
        Stack(Simplex(d)),
        Stack(Stack(Simplex(d))),
        Dual(Stack(Stack(Simplex(d)))),
        Stack(Tdm(d, d, d // 2)),
    ]
    if d >= 3:
        specs += [
            Pyr(Nabla(d - 1), 1),
            Pyr(Dual(Tdm(d - 1, d - 1, 1)), 1),
            Pyr(Stack(Simplex(d - 1)), 1),
        ]
    seen = set()
    out = []
    for s in specs:
        if str(s) not in seen:
            seen.add(str(s))
            out.append(s)
    return out
