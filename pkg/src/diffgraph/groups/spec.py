"""Group spec language.

Grammar (whitespace-insensitive)::

    product := factor ( 'x' factor )*
    factor  := 'Z' INT | 'D' INT | 'S' INT | 'A' INT
             | 'sd(' 'Z' INT ',' 'Z' INT ',' INT ')'
             | 'cayley(' PATH ')'
             | '(' product ')'

``D n`` is the dihedral group of order 2n. ``sd(Zn,Zm,g)`` is Z_n x| Z_m with
the generator of Z_m acting by a -> a^g; it requires gcd(g, n) = 1 and
g^m = 1 (mod n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union


class SpecError(ValueError):
    """Syntax or validity error in a group spec, with the 0-based offset."""

    def __init__(self, message: str, position: int | None = None, text: str = ""):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Dihedral:
    n: int

    def __str__(self) -> str:
        return f"D{self.n}"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __str__(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Alternating:
    n: int

    def __str__(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class Semidirect:
    n: int
    m: int
    g: int

    def __str__(self) -> str:
        return f"sd(Z{self.n},Z{self.m},{self.g})"


@dataclass(frozen=True)
class CayleyFile:
    path: str

    def __str__(self) -> str:
        return f"cayley({self.path})"


@dataclass(frozen=True)
class Product:
    factors: tuple["GroupSpec", ...]

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)


GroupSpec = Union[Cyclic, Dihedral, Symmetric, Alternating, Semidirect, CayleyFile, Product]

_LETTERS = {"Z": Cyclic, "D": Dihedral, "S": Symmetric, "A": Alternating}
_TIMES = ("x", "X", "×", "*")


def check_semidirect(n: int, m: int, g: int) -> None:
    if n < 1 or m < 1:
        raise SpecError(f"sd sizes must be >= 1, got Z{n}, Z{m}")
    if gcd(g, n) != 1:
        raise SpecError(f"sd(Z{n},Z{m},{g}): gcd({g},{n}) != 1, not an automorphism")
    if pow(g, m, n) != 1 % n:
        raise SpecError(f"sd(Z{n},Z{m},{g}): {g}^{m} is not 1 mod {n}, not an action")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None) -> SpecError:
        return SpecError(msg, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, s: str) -> None:
        self.skip()
        if not self.text.startswith(s, self.pos):
            raise self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start:self.pos])

    def product(self) -> GroupSpec:
        factors = [self.factor()]
        while self.peek() in _TIMES and self.peek():
            self.pos += 1
            factors.append(self.factor())
        flat: list[GroupSpec] = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Product) else [f])
        return flat[0] if len(flat) == 1 else Product(tuple(flat))

    def factor(self) -> GroupSpec:
        c = self.peek()
        start = self.pos
        if not c:
            raise self.error("unexpected end of spec")
        if self.text.startswith("sd", self.pos):
            self.pos += 2
            self.expect("(")
            self.expect("Z")
            n = self.integer()
            self.expect(",")
            self.expect("Z")
            m = self.integer()
            self.expect(",")
            g = self.integer()
            self.expect(")")
            try:
                check_semidirect(n, m, g)
            except SpecError as exc:
                raise SpecError(str(exc), start, self.text) from None
            return Semidirect(n, m, g % n if n > 1 else 0)
        if self.text.startswith("cayley", self.pos):
            self.pos += len("cayley")
            self.expect("(")
            depth, begin = 1, self.pos
            while self.pos < len(self.text) and depth:
                depth += {"(": 1, ")": -1}.get(self.text[self.pos], 0)
                self.pos += 1
            if depth:
                raise self.error("unterminated cayley(")
            path = self.text[begin:self.pos - 1].strip()
            if not path:
                raise self.error("empty cayley path", begin)
            return CayleyFile(path)
        if c == "(":
            self.pos += 1
            inner = self.product()
            self.expect(")")
            return inner
        if c in _LETTERS:
            self.pos += 1
            n = self.integer()
            if n < 1:
                raise self.error(f"size must be >= 1 in {c}{n}", start)
            return _LETTERS[c](n)
        raise self.error(f"unexpected character {c!r}")


def parse_spec(text: str) -> GroupSpec:
    """Parse a spec string such as ``"Z4 x Z4 x Z6"`` or ``"sd(Z7,Z12,3)"``."""
    if not text or not text.strip():
        raise SpecError("empty spec", 0, text or "")
    p = _Parser(text)
    spec = p.product()
    if p.peek():
        raise p.error(f"trailing input {text[p.pos:]!r}")
    return spec
