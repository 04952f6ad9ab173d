"""Sparse multivariate Laurent polynomials with half-integer exponents.

Exponents are stored doubled so that ``A^(1/2)`` is the integer 1 and all
exponent arithmetic stays integral.  Coefficients are exact (``int`` or
``fractions.Fraction``).  Instances are immutable and hashable.

Canonical text form::

    >>> str(Poly.var("X") * Poly.var("B") + Poly.var("A") + 3 * Poly.var("B") + 3)
    'A + 3*B + B*X + 3'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

# A monomial is a tuple of (variable name, doubled exponent), sorted by name,
# with no zero exponents.
Monomial = Tuple[Tuple[str, int], ...]
Coeff = Union[int, Fraction]
Scalar = Union[int, Fraction]

EXP_LIMIT = 2**31

ONE_MONOMIAL: Monomial = ()


class EvaluationError(ValueError):
    pass


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficient must be exact rational, got {type(c).__name__}")


def _check_exp(d: int) -> int:
    if not -EXP_LIMIT <= d <= EXP_LIMIT:
        raise OverflowError(f"exponent {Fraction(d, 2)} out of range")
    return d


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, d in m2:
        s = acc.get(v, 0) + d
        if s:
            acc[v] = _check_exp(s)
        else:
            del acc[v]
    return tuple(sorted(acc.items()))


def mono_from_dict(exps: Mapping[str, int]) -> Monomial:
    """Build a monomial from a mapping name -> doubled exponent."""
    return tuple(sorted((v, _check_exp(d)) for v, d in exps.items() if d))


def _doubled(e) -> int:
    f = Fraction(e)
    if (2 * f).denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return int(2 * f)


def format_exponent(d: int) -> str:
    """Text for a doubled exponent ``d`` (empty for exponent 1)."""
    if d == 2:
        return ""
    if d % 2 == 0:
        return f"^{d // 2}"
    return f"^({d}/2)"


def format_monomial(m: Monomial) -> str:
    return "*".join(v + format_exponent(d) for v, d in m)


def _term_key(m: Monomial):
    # constant term printed last
    return (len(m) == 0, m)


class Poly:
    """Immutable sparse Laurent polynomial with half-integer exponents."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                c = _norm(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, name: str, exp=1) -> "Poly":
        return cls({mono_from_dict({name: _doubled(exp)}): 1})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, exps: Optional[Mapping[str, object]] = None) -> "Poly":
        """``coeff * prod(v^e)``; exponents may be halves."""
        exps = exps or {}
        return cls({mono_from_dict({v: _doubled(e) for v, e in exps.items()}): coeff})

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, str):
            return cls.var(x)
        return cls.const(x)

    # -- inspection -------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Monomial, Coeff]]:
        """Terms in canonical order."""
        for m in sorted(self._terms, key=_term_key):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exps: Optional[Mapping[str, object]] = None) -> Coeff:
        m = mono_from_dict({v: _doubled(e) for v, e in (exps or {}).items()})
        return self._terms.get(m, 0)

    def variables(self) -> Tuple[str, ...]:
        names = set()
        for m in self._terms:
            names.update(v for v, _ in m)
        return tuple(sorted(names))

    def degree(self, name: str) -> Fraction:
        """Largest exponent of ``name`` (0 for the zero polynomial)."""
        ds = [dict(m).get(name, 0) for m in self._terms]
        return Fraction(max(ds, default=0), 2)

    def min_degree(self, name: str) -> Fraction:
        ds = [dict(m).get(name, 0) for m in self._terms]
        return Fraction(min(ds, default=0), 2)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._raw({m: _norm(c * other) for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: Dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw({m: _norm(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Poly":
        """Inverse of a monomial (Laurent inverse)."""
        if not self.is_monomial():
            raise ValueError("only monomials are invertible")
        ((m, c),) = self._terms.items()
        return Poly._raw({tuple((v, _check_exp(-d)) for v, d in m): _norm(Fraction(1) / c)})

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Poly):
            return self * other.inverse()
        return NotImplemented

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            neg = c < 0
            a = -c if neg else c
            mono = format_monomial(m)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return _Parser(text).parse()

    # -- evaluation / substitution ---------------------------------------

    def evaluate(self, assignment: Mapping[str, Scalar], roots: Optional[Mapping[str, Scalar]] = None) -> Coeff:
        return evaluate(self, assignment, roots)

    def substitute_monomial(self, rules: Mapping[str, object]) -> "Poly":
        return substitute_monomial(self, rules)


def var(name: str, exp=1) -> Poly:
    return Poly.var(name, exp)


def const(c: Scalar) -> Poly:
    return Poly.const(c)


def poly_sum(polys: Iterable[Poly]) -> Poly:
    acc: Dict[Monomial, Coeff] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return Poly(acc)


def k_var(c) -> str:
    """Name of the arrow-family variable ``K_c`` (c a nonnegative half-integer)."""
    c = Fraction(c)
    if c.denominator == 1:
        return f"K[{c.numerator}]"
    return f"K[{c.numerator}/{c.denominator}]"


# -- exact rational square roots ------------------------------------------

def rational_sqrt(q: Scalar) -> Optional[Fraction]:
    """Exact nonnegative square root of a rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def evaluate(p: Poly, assignment: Mapping[str, Scalar], roots: Optional[Mapping[str, Scalar]] = None) -> Coeff:
    """Evaluate ``p`` exactly.

    A variable carrying an odd doubled exponent needs a square root of its
    value: taken from ``roots`` when supplied (and checked), else computed
    exactly when the value is a rational square.
    """
    roots = roots or {}
    cache: Dict[str, Tuple[Fraction, Optional[Fraction]]] = {}

    def lookup(v: str):
        if v not in cache:
            if v not in assignment:
                raise EvaluationError(f"unassigned variable {v}")
            if isinstance(assignment[v], float):
                raise EvaluationError(f"{v}: floats are not exact, pass a Fraction")
            val = Fraction(assignment[v])
            cache[v] = (val, None)
        return cache[v]

    total = Fraction(0)
    for m, c in p._terms.items():
        term = Fraction(c)
        for v, d in m:
            val, root = lookup(v)
            if d % 2:
                if root is None:
                    if v in roots:
                        root = Fraction(roots[v])
                        if root * root != val:
                            raise EvaluationError(f"supplied root for {v} does not square to {val}")
                    else:
                        root = rational_sqrt(val)
                        if root is None:
                            raise EvaluationError(f"{v}={val} is not the square of a rational")
                    cache[v] = (val, root)
                base, e = root, d
            else:
                base, e = val, d // 2
            if base == 0 and e < 0:
                raise EvaluationError(f"zero value for {v} under negative exponent")
            term *= base**e
        total += term
    return _norm(total)


def substitute_monomial(p: Poly, rules: Mapping[str, object]) -> Poly:
    """Replace variables by monomials (times rational coefficients).

    Each rule value is coerced to a :class:`Poly` that must have a single
    term.  Variables without a rule are left alone.
    """
    compiled: Dict[str, Tuple[Fraction, Monomial]] = {}
    for v, target in rules.items():
        t = Poly.coerce(target)
        if not t.is_monomial():
            raise ValueError(f"rule for {v} is not a monomial: {t}")
        ((m, c),) = t._terms.items()
        compiled[v] = (Fraction(c), m)

    out: Dict[Monomial, Coeff] = {}
    for m, c in p._terms.items():
        coeff = Fraction(c)
        mono: Monomial = ()
        for v, d in m:
            if v not in compiled:
                mono = mono_mul(mono, ((v, d),))
                continue
            tc, tm = compiled[v]
            # (tc * tm)^(d/2)
            if d % 2:
                root = rational_sqrt(tc)
                if root is None:
                    raise ValueError(f"coefficient {tc} of rule {v} has no rational square root")
                if tc == 0 and d < 0:
                    raise ZeroDivisionError(f"rule sends {v} to zero under negative exponent")
                coeff *= root**d
                scaled = []
                for w, e in tm:
                    if (e * d) % 2:
                        raise ValueError(f"substituting {v} produces a quarter exponent")
                    scaled.append((w, (e * d) // 2))
            else:
                if tc == 0 and d < 0:
                    raise ZeroDivisionError(f"rule sends {v} to zero under negative exponent")
                coeff *= tc ** (d // 2)
                scaled = [(w, e * d // 2) for w, e in tm]
            mono = mono_mul(mono, mono_from_dict(dict(scaled)))
        if coeff:
            out[mono] = out.get(mono, 0) + coeff
    return Poly(out)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\[\d+(?:/\d+)?\])?)|(?P<op>[-+*^()/]))"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at column {pos + 1}: {text!r}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"expected {value or 'token'} at column {tok[2] + 1} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        out = self.expr()
        tok = self.peek()
        if tok[0] is not None:
            raise ValueError(f"unexpected {tok[1]!r} at column {tok[2] + 1} in {self.text!r}")
        return out

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            acc = acc + self.term() * sign
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        kind, val, col = self.peek()
        if kind == "num":
            self.take()
            num = Fraction(int(val))
            if self.peek()[1] == "/":
                self.take()
                num /= int(self.take()[1])
            base = Poly.const(num)
        elif kind == "name":
            self.take()
            base = Poly.var(val)
        elif val == "(":
            self.take()
            base = self.expr()
            self.take(")")
        else:
            raise ValueError(f"expected factor at column {col + 1} in {self.text!r}")
        if self.peek()[1] != "^":
            return base
        self.take()
        d = self.exponent()
        if kind == "name":
            return Poly.var(val, Fraction(d, 2))
        if d % 2:
            raise ValueError(f"half-integer power of a non-variable at column {col + 1} in {self.text!r}")
        return base ** (d // 2) if d >= 0 else base.inverse() ** (-d // 2)

    def exponent(self) -> int:
        if self.peek()[1] == "(":
            self.take()
            neg = self.peek()[1] == "-"
            if neg:
                self.take()
            n = Fraction(int(self.take()[1]))
            if self.peek()[1] == "/":
                self.take()
                n /= int(self.take()[1])
            self.take(")")
            return _doubled(-n if neg else n)
        neg = self.peek()[1] == "-"
        if neg:
            self.take()
        n = int(self.take()[1])
        return 2 * (-n if neg else n)
