"""Exact sparse Laurent polynomials and binomial-denominator rational functions.

A :class:`LaurentPoly` in one or two variables stores a mapping from integer
exponent tuples (negative entries allowed) to nonzero rationals. Integral
coefficients are kept as ``int``; everything else is a ``Fraction``.

A :class:`RationalFn` is a LaurentPoly numerator over a product of binomial
atoms ``1 - x^e``. There is no multivariate gcd: cancellation happens only by
trial exact division of the numerator by atoms of the denominator. Every atom
is normalized so its first nonzero exponent is positive, using
``1 - x^(-e) = -x^(-e) (1 - x^e)``; the monomial unit that this produces is
folded into the Laurent numerator.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping

Exponent = tuple[int, ...]

VAR_NAMES = {1: ("v",), 2: ("s", "t")}


class NonExactDivision(ArithmeticError):
    """Raised when a binomial atom fails to divide a numerator exactly."""

    def __init__(self, atom: Exponent, message: str | None = None):
        self.atom = atom
        super().__init__(message or f"1 - x^{atom} does not divide the numerator exactly")


class ZeroDivision(ArithmeticError):
    """Evaluating a negative power of a variable assigned zero."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _check_coeff(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    return _norm(c)


def _add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _grlex_key(e: Exponent):
    return (sum(e), e)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over Q in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, nvars: int = 2):
        if nvars not in (1, 2):
            raise ValueError("only one or two variables are supported")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            c = _check_coeff(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> LaurentPoly:
        # trusted constructor: terms already normalized and zero-free
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, nvars: int = 2) -> LaurentPoly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, e: Iterable[int], c=1) -> LaurentPoly:
        e = tuple(e)
        return cls({e: c}, len(e))

    @classmethod
    def gens(cls, nvars: int = 2) -> tuple[LaurentPoly, ...]:
        return tuple(
            cls.monomial(tuple(int(i == k) for i in range(nvars))) for k in range(nvars)
        )

    @classmethod
    def binomial(cls, atom: Exponent) -> LaurentPoly:
        """The polynomial ``1 - x^atom``."""
        zero = (0,) * len(atom)
        return cls({zero: 1, tuple(atom): -1}, len(atom))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, object]:
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def coefficient(self, e: Exponent):
        return self._terms.get(tuple(e), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """No negative exponents anywhere."""
        return all(x >= 0 for e in self._terms for x in e)

    def min_exponents(self) -> Exponent:
        return tuple(min(e[k] for e in self._terms) for k in range(self.nvars))

    def max_exponents(self) -> Exponent:
        return tuple(max(e[k] for e in self._terms) for k in range(self.nvars))

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) and c > 0 for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = _norm(terms.get(e, 0) + c)
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            c = _norm(Fraction(other)) if not isinstance(other, int) else other
            if not c:
                return LaurentPoly._raw({}, self.nvars)
            return LaurentPoly._raw(
                {e: _norm(v * c) for e, v in self._terms.items()}, self.nvars
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = _add(ea, eb)
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: _norm(c) for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            (e, c), = self._terms.items()
            return LaurentPoly({tuple(x * k for x in e): Fraction(c) ** k}, self.nvars)
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e: Exponent) -> LaurentPoly:
        """Multiply by the monomial ``x^e``."""
        return LaurentPoly._raw({_add(k, e): c for k, c in self._terms.items()}, self.nvars)

    def times_binomial(self, atom: Exponent) -> LaurentPoly:
        """Multiply by ``1 - x^atom``."""
        terms = dict(self._terms)
        for e, c in self._terms.items():
            f = _add(e, atom)
            v = _norm(terms.get(f, 0) - c)
            if v:
                terms[f] = v
            else:
                terms.pop(f, None)
        return LaurentPoly._raw(terms, self.nvars)

    def divide_binomial(self, atom: Exponent) -> LaurentPoly:
        """Exact quotient by ``1 - x^atom``; raises :class:`NonExactDivision`.

        Exponents split into lines ``base + k * atom``; along each line the
        quotient coefficient at ``k`` is the running sum of the numerator
        coefficients up to ``k``, and divisibility means the full sum is zero.
        """
        atom = tuple(atom)
        if not any(atom):
            raise ValueError("the zero atom is not a valid factor")
        lead = next(k for k, x in enumerate(atom) if x)
        step = atom[lead]
        lines: dict[Exponent, list] = {}
        for e, c in self._terms.items():
            k = e[lead] // step
            base = tuple([x - k * a for x, a in zip(e, atom)])
            entry = lines.get(base)
            if entry is None:
                lines[base] = [(k, c)]
            else:
                entry.append((k, c))
        out = {}
        for base, entries in lines.items():
            if len(entries) == 1:
                raise NonExactDivision(atom)
            entries.sort()
            running = 0
            kprev = None
            for k, c in entries:
                if running:
                    for j in range(kprev, k):
                        out[tuple([b + j * a for b, a in zip(base, atom)])] = running
                running += c
                if running.__class__ is Fraction:
                    running = _norm(running)
                kprev = k
            if running:
                raise NonExactDivision(atom)
        return LaurentPoly._raw(out, self.nvars)

    def divides_by_binomial(self, atom: Exponent) -> bool:
        try:
            self.divide_binomial(atom)
        except NonExactDivision:
            return False
        return True

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point) -> Fraction:
        point = [Fraction(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                if k < 0 and x == 0:
                    raise ZeroDivision(f"negative power of a variable set to zero in x^{e}")
                term *= x ** k
            total += term
        return _norm(total)

    def substitute_monomial(self, images) -> LaurentPoly:
        """Replace variable ``k`` by the monomial ``x^images[k]``.

        ``images`` holds one exponent tuple per source variable; the target
        variable count is the length of those tuples.
        """
        images = [tuple(im) for im in images]
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = len(images[0])
        if any(len(im) != nv for im in images):
            raise ValueError("image monomials must share a variable count")
        out: dict = {}
        for e, c in self._terms.items():
            f = tuple(sum(k * im[i] for k, im in zip(e, images)) for i in range(nv))
            out[f] = out.get(f, 0) + c
        return LaurentPoly({f: c for f, c in out.items() if c}, nv)

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self._terms == ({(0,) * self.nvars: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def to_str(self, names=None) -> str:
        names = names or VAR_NAMES[self.nvars]
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LaurentPoly({self.to_str()!r})"


def _normalize_atom(atom: Exponent) -> tuple[Exponent, bool]:
    """Return (positive atom, flipped?)."""
    atom = tuple(atom)
    if not any(atom):
        raise ValueError("binomial atom must be nonzero")
    lead = next(x for x in atom if x)
    if lead > 0:
        return atom, False
    return tuple(-x for x in atom), True


class RationalFn:
    """``numerator / prod(1 - x^atom)`` with exact, gcd-free arithmetic.

    The numerator is stored as ``scale * poly`` with ``poly`` a primitive
    integer Laurent polynomial, so the heavy polynomial work never touches
    ``Fraction``. Equality is decided by cross-multiplication, so instances
    are unhashable.
    """

    __slots__ = ("poly", "scale", "den")

    def __init__(self, num, den: Mapping[Exponent, int] | Iterable[Exponent] = (), nvars: int | None = None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num, nvars or 2)
        atoms: Counter = Counter()
        items = den.items() if isinstance(den, Mapping) else ((a, 1) for a in den)
        for atom, mult in items:
            if len(atom) != num.nvars:
                raise ValueError("atom/variable count mismatch")
            if mult < 0:
                raise ValueError("negative multiplicity")
            pos, flipped = _normalize_atom(atom)
            if flipped and mult:
                # 1/(1 - x^-e) = -x^e / (1 - x^e)
                num = num.shift(tuple(mult * x for x in pos))
                if mult % 2:
                    num = -num
            atoms[pos] += mult
        self.scale, self.poly = _content(num)
        self.den = +atoms
        self._cancel()

    @classmethod
    def _raw(cls, poly: LaurentPoly, scale, den: Counter) -> RationalFn:
        obj = cls.__new__(cls)
        obj.poly = poly
        obj.scale = scale
        obj.den = den
        return obj

    @classmethod
    def _from_int_poly(cls, poly: LaurentPoly, scale, den: Counter) -> RationalFn:
        c, prim = _content(poly)
        return cls._raw(prim, _norm(Fraction(scale) * c), den)

    @classmethod
    def from_atoms(cls, num_atoms: Iterable[Exponent], den_atoms: Iterable[Exponent], nvars: int = 2) -> RationalFn:
        """prod(1 - x^a for a in num_atoms) / prod(1 - x^b for b in den_atoms)."""
        num = LaurentPoly.constant(1, nvars)
        for a in num_atoms:
            num = num.times_binomial(tuple(a))
        return cls(num, list(den_atoms))

    @classmethod
    def inverse_binomial_differences(cls, pairs: Iterable[tuple[Exponent, Exponent]], nvars: int = 2) -> RationalFn:
        """1 / prod(x^a - x^b), via x^a - x^b = x^a (1 - x^(b - a))."""
        shift = (0,) * nvars
        atoms = []
        for a, b in pairs:
            shift = tuple(s - x for s, x in zip(shift, a))
            atoms.append(tuple(y - x for x, y in zip(a, b)))
        return cls(LaurentPoly.monomial(shift), atoms)

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    @property
    def num(self) -> LaurentPoly:
        return self.poly * self.scale

    def _cancel(self) -> None:
        if self.poly.is_zero():
            self.den = Counter()
            return
        for atom in list(self.den):
            while self.den[atom]:
                try:
                    self.poly = self.poly.divide_binomial(atom)
                except NonExactDivision:
                    break
                self.den[atom] -= 1
        self.den = +self.den

    def denominator_poly(self) -> LaurentPoly:
        d = LaurentPoly.constant(1, self.nvars)
        for atom, mult in sorted(self.den.items()):
            for _ in range(mult):
                d = d.times_binomial(atom)
        return d

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> RationalFn:
        if isinstance(other, RationalFn):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return RationalFn._from_int_poly(other, 1, Counter())
        if isinstance(other, Rational) and not isinstance(other, bool):
            return RationalFn._from_int_poly(LaurentPoly.constant(other, self.nvars), 1, Counter())
        return NotImplemented

    @staticmethod
    def _scale_to(poly: LaurentPoly, have: Counter, want: Counter) -> LaurentPoly:
        for atom, mult in want.items():
            for _ in range(mult - have.get(atom, 0)):
                poly = poly.times_binomial(atom)
        return poly

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        common = self.den | other.den
        sa, sb = Fraction(self.scale), Fraction(other.scale)
        poly = (
            self._scale_to(self.poly, self.den, common) * (sa.numerator * sb.denominator)
            + self._scale_to(other.poly, other.den, common) * (sb.numerator * sa.denominator)
        )
        out = RationalFn._from_int_poly(poly, Fraction(1, sa.denominator * sb.denominator), Counter(common))
        out._cancel()
        return out

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(self.poly, -self.scale, Counter(self.den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def _zero(self) -> RationalFn:
        return RationalFn._raw(LaurentPoly._raw({}, self.nvars), 1, Counter())

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            if not other:
                return self._zero()
            return RationalFn._raw(self.poly, _norm(self.scale * Fraction(other)), Counter(self.den))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self._zero()
        out = RationalFn._raw(
            self.poly * other.poly, _norm(Fraction(self.scale) * other.scale), self.den + other.den
        )
        if out.den:
            out._cancel()
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by scalars, monomials, or binomial-atom products."""
        if isinstance(other, Rational) and not isinstance(other, bool):
            return RationalFn._raw(self.poly, _norm(self.scale / Fraction(other)), Counter(self.den))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> RationalFn:
        """Inverse when the numerator is a single term; otherwise ValueError."""
        if not self.poly.is_monomial():
            raise ValueError("only monomial numerators can be inverted without factoring")
        (e, c), = self.poly.items()
        poly = LaurentPoly.monomial(tuple(-x for x in e))
        for atom, mult in self.den.items():
            for _ in range(mult):
                poly = poly.times_binomial(atom)
        return RationalFn._from_int_poly(poly, 1 / (Fraction(c) * self.scale), Counter())

    def substitute_monomial(self, images) -> RationalFn:
        num = self.num.substitute_monomial(images)
        images = [tuple(im) for im in images]
        den = {}
        for atom, mult in self.den.items():
            img = tuple(sum(a * im[i] for a, im in zip(atom, images)) for i in range(len(images[0])))
            if not any(img):
                raise ZeroDivision(f"substitution sends atom {atom} to zero")
            den[img] = den.get(img, 0) + mult
        return RationalFn(num, den)

    def evaluate(self, point) -> Fraction:
        d = self.denominator_poly().evaluate(point)
        if d == 0:
            raise ZeroDivision("denominator vanishes at the point")
        return _norm(Fraction(self.num.evaluate(point)) / d)

    def force_polynomial(self) -> LaurentPoly:
        """Divide out every denominator atom; raises NonExactDivision."""
        poly = self.poly
        for atom, mult in sorted(self.den.items()):
            for _ in range(mult):
                poly = poly.divide_binomial(atom)
        return poly * self.scale

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        sa, sb = Fraction(self.scale), Fraction(other.scale)
        left = self._scale_to(self.poly, Counter(), other.den - self.den)
        right = self._scale_to(other.poly, Counter(), self.den - other.den)
        return left * (sa.numerator * sb.denominator) == right * (sb.numerator * sa.denominator)

    __hash__ = None

    def __str__(self):
        if not self.den:
            return self.num.to_str()
        den = "*".join(
            f"(1 - {LaurentPoly.monomial(a).to_str()})" + (f"^{m}" if m > 1 else "")
            for a, m in sorted(self.den.items())
        )
        return f"({self.num.to_str()}) / ({den})"

    def __repr__(self):
        return f"RationalFn({self})"


def _content(p: LaurentPoly) -> tuple[object, LaurentPoly]:
    """Split p = c * prim with prim integral and primitive."""
    if p.is_zero():
        return 1, p
    coeffs = p._terms.values()
    if all(isinstance(c, int) for c in coeffs):
        g = 0
        for c in coeffs:
            g = gcd(g, c)
            if g == 1:
                return 1, p
        return g, LaurentPoly._raw({e: c // g for e, c in p._terms.items()}, p.nvars)
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in p._terms.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
    return _norm(Fraction(g, den)), LaurentPoly._raw({e: c // g for e, c in ints.items()}, p.nvars)


def rational_sum(terms: Iterable[RationalFn], nvars: int = 2) -> RationalFn:
    """Sum over the union denominator in one pass, then cancel once."""
    terms = list(terms)
    if terms:
        nvars = terms[0].nvars
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return RationalFn(LaurentPoly.constant(0, nvars))
    common: Counter = Counter()
    lcd = 1
    for t in terms:
        common |= t.den
        d = Fraction(t.scale).denominator
        lcd = lcd * d // gcd(lcd, d)
    poly = terms[0].poly * 0
    for t in terms:
        s = Fraction(t.scale)
        poly = poly + RationalFn._scale_to(t.poly, t.den, common) * (s.numerator * (lcd // s.denominator))
    out = RationalFn._from_int_poly(poly, Fraction(1, lcd), Counter(common))
    out._cancel()
    return out


def q_integer(m: int) -> LaurentPoly:
    """1 + v + ... + v^(m-1)."""
    return LaurentPoly({(i,): 1 for i in range(m)}, 1)


def q_factorial(n: int) -> LaurentPoly:
    """[n]_v! as a polynomial in v."""
    if n < 1:
        raise ValueError("n must be positive")
    out = LaurentPoly.constant(1, 1)
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out

