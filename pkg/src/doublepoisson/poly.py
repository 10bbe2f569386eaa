"""Exact multivariate polynomials over Q with graded-lex rewriting.

Coefficients are :class:`fractions.Fraction` throughout; a polynomial is a
sparse map from exponent vectors to nonzero coefficients.  Rings are just an
ordered tuple of variable names, fixed at construction so that the graded
lexicographic order (and hence every normal form) is deterministic.

Rewrite systems (:class:`RelationSet`) are deliberately restricted to rules
whose replacement is strictly smaller than the leading monomial in graded-lex;
no completion is attempted, so only rule sets that are confluent by
construction (single-variable powers such as c^2 -> 1 - s^2) belong here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[Fraction, "MultiPoly"]


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    return str(q)


def grlex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key realizing graded lexicographic order (first variable largest)."""
    return (sum(exps), exps)


class PolyRing:
    """An ordered list of variable names; the home of MultiPoly values."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"PolyRing{self.names}"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        if name not in self._index:
            raise ValueError(f"unknown variable {name!r} in ring {self.names}")
        return self._index[name]

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.const(1)

    def const(self, c) -> MultiPoly:
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> MultiPoly:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return MultiPoly(self, {tuple(exps): Fraction(1)})

    def monomial(self, exps: Mapping[str, int], coeff=1) -> MultiPoly:
        vec = [0] * self.nvars
        for name, e in exps.items():
            vec[self.index(name)] = e
        c = Fraction(coeff)
        if c == 0:
            return self.zero()
        return MultiPoly(self, {tuple(vec): c})

    def parse(self, text: str) -> MultiPoly:
        return _parse_poly(self, text)


class MultiPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    Immutable by convention: every operation returns a fresh instance, and the
    term map never stores zero coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[tuple[int, ...], Fraction]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def leading_monomial(self) -> tuple[int, ...]:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def coefficient(self, exps: tuple[int, ...]) -> Fraction:
        return self.terms.get(exps, Fraction(0))

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return MultiPoly(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    # -- calculus and substitution ------------------------------------------

    def partial(self, name: str) -> MultiPoly:
        """Formal partial derivative with respect to one ring variable."""
        i = self.ring.index(name)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            de = list(e)
            de[i] -= 1
            acc[tuple(de)] = c * e[i]
        return MultiPoly(self.ring, acc)

    def substitute(self, mapping: Mapping[str, MultiPoly], target: PolyRing) -> MultiPoly:
        """Ring morphism: replace every variable by its image in ``target``.

        Every variable of this ring must be mapped (to a MultiPoly over
        ``target`` or to a Fraction/int constant).
        """
        images: list[MultiPoly] = []
        for name in self.ring.names:
            if name not in mapping:
                raise ValueError(f"substitute: no image given for variable {name!r}")
            img = mapping[name]
            if not isinstance(img, MultiPoly):
                img = target.const(img)
            elif img.ring != target:
                raise ValueError(f"image of {name!r} lives in {img.ring}, not {target}")
            images.append(img)
        powers: list[dict[int, MultiPoly]] = [dict() for _ in images]
        result = target.zero()
        for e, c in sorted(self.terms.items()):
            term = target.const(c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if k not in powers[i]:
                    powers[i][k] = images[i] ** k
                term = term * powers[i][k]
            result = result + term
        return result

    def eval_rational(self, values: Mapping[str, Fraction]) -> Fraction:
        """Exact evaluation at a rational point (all variables required)."""
        total = Fraction(0)
        point = [Fraction(values[name]) for name in self.ring.names]
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term *= v**k
            total += term
        return total

    def eval_float(self, values: Mapping[str, float]) -> float:
        point = [float(values[name]) for name in self.ring.names]
        total = 0.0
        for e, c in self.terms.items():
            term = float(c)
            for v, k in zip(point, e):
                if k:
                    term *= v**k
            total += term
        return total

    # -- rendering -----------------------------------------------------------

    def _monomial_str(self, exps: tuple[int, ...]) -> str:
        parts = []
        for name, k in zip(self.ring.names, exps):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = self._monomial_str(e)
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


@dataclass(frozen=True)
class RelationSet:
    """A confluent-by-construction rewrite system for polynomial normal forms.

    Each rule maps a leading monomial (exponent vector) to a replacement
    polynomial that is strictly smaller in graded-lex; rewriting therefore
    terminates.  Confluence is the caller's responsibility and holds for the
    rule shapes used here (disjoint single-variable leading powers).
    """

    ring: PolyRing
    rules: tuple[tuple[tuple[int, ...], MultiPoly], ...]

    @staticmethod
    def of(ring: PolyRing, rules: Iterable[tuple[MultiPoly, MultiPoly]]) -> RelationSet:
        """Build from (leading monomial as a 1-term poly, replacement) pairs."""
        packed = []
        for lead_poly, repl in rules:
            if lead_poly.ring != ring or repl.ring != ring:
                raise ValueError("relation rule in a different ring")
            if len(lead_poly.terms) != 1 or next(iter(lead_poly.terms.values())) != 1:
                raise ValueError("rule head must be a single monic monomial")
            lead = next(iter(lead_poly.terms))
            for e in repl.terms:
                if grlex_key(e) >= grlex_key(lead):
                    raise ValueError(
                        f"replacement monomial {e} does not decrease the head {lead}"
                    )
            packed.append((lead, repl))
        return RelationSet(ring, tuple(packed))

    @staticmethod
    def single(ring: PolyRing, head: str, replacement: str) -> RelationSet:
        """Convenience: one rule given as strings, e.g. ("c^2", "1 - s^2")."""
        return RelationSet.of(ring, [(ring.parse(head), ring.parse(replacement))])

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        if p.ring != self.ring:
            raise ValueError(f"ring mismatch: poly in {p.ring}, relations in {self.ring}")
        guard = 0
        while True:
            hit = None
            for e in p.terms:
                for lead, repl in self.rules:
                    if all(a >= b for a, b in zip(e, lead)):
                        hit = (e, lead, repl)
                        break
                if hit:
                    break
            if hit is None:
                return p
            e, lead, repl = hit
            c = p.terms[e]
            quotient = tuple(a - b for a, b in zip(e, lead))
            rest = MultiPoly(self.ring, {m: q for m, q in p.terms.items() if m != e})
            p = rest + MultiPoly(self.ring, {quotient: c}) * repl
            guard += 1
            if guard > 100000:
                raise RuntimeError("rewriting did not terminate (non-admissible rules?)")

    def combined(self, other: RelationSet) -> RelationSet:
        if other.ring != self.ring:
            raise ValueError("cannot combine relation sets over different rings")
        return RelationSet(self.ring, self.rules + other.rules)


def poly_normal_form(p: MultiPoly, rels: RelationSet) -> MultiPoly:
    """Normal form of ``p`` modulo the rewrite rules (idempotent)."""
    return rels.normal_form(p)


# -- parser ------------------------------------------------------------------
#
# Grammar:  expr   := ['+'|'-'] term (('+'|'-') term)*
#           term   := factor ('*' factor)*
#           factor := atom ('^' INT)?
#           atom   := RATIONAL | NAME | '(' expr ')'


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ValueError(f"bad rational at {text[i:]!r}")
                tokens.append(text[i:k])
                i = k
            else:
                tokens.append(text[i:j])
                i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ValueError(f"unexpected character {ch!r} in polynomial {text!r}")
    return tokens


class _Parser:
    def __init__(self, ring: PolyRing, tokens: list[str]):
        self.ring = ring
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        self.pos += 1
        return tok

    def parse_expr(self) -> MultiPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        result = self.parse_term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            sign = 1 if op == "+" else -1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            result = result + self.parse_term() * sign
        return result

    def parse_term(self) -> MultiPoly:
        result = self.parse_factor()
        while self.peek() == "*":
            self.take()
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> MultiPoly:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            exp_tok = self.take()
            if not exp_tok.isdigit():
                raise ValueError(f"exponent must be a nonnegative integer, got {exp_tok!r}")
            base = base ** int(exp_tok)
        return base

    def parse_atom(self) -> MultiPoly:
        tok = self.take()
        if tok == "(":
            inner = self.parse_expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok[0].isdigit():
            return self.ring.const(Fraction(tok))
        if tok[0].isalpha() or tok[0] == "_":
            return self.ring.var(tok)
        raise ValueError(f"unexpected token {tok!r}")


def _parse_poly(ring: PolyRing, text: str) -> MultiPoly:
    parser = _Parser(ring, _tokenize(text))
    result = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input {parser.tokens[parser.pos:]!r}")
    return result


# -- generic scalar helpers (Fraction | MultiPoly) ----------------------------


def scalar_is_zero(x: Scalar) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return x == 0


def scalar_eq(x: Scalar, y: Scalar) -> bool:
    if isinstance(x, MultiPoly) or isinstance(y, MultiPoly):
        diff = x - y if isinstance(x, MultiPoly) else y - x
        return diff.is_zero()
    return x == y


def format_scalar(x: Scalar) -> str:
    if isinstance(x, MultiPoly):
        return str(x)
    return format_rational(x)
