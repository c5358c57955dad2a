"""Exact arithmetic building blocks: polynomials over Q, rational functions,
and truncated power series.

Coefficients are `fractions.Fraction` throughout.  A polynomial coefficient
may also be a `RationalFunction` in some *other* variable, which is how
mixed values (say, polynomials in x whose coefficients live in Q(t)) are
handled without a full multivariate layer.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "VariableMismatchError",
    "binomial",
    "Polynomial",
    "poly_gcd",
    "RationalFunction",
    "PowerSeries",
    "exact_divide",
]


class VariableMismatchError(ValueError):
    """Two symbolic values used different variable names."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside the triangle 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction))


_TERM = re.compile(
    r"\s*([+-])?\s*"
    r"(?:(\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?:([A-Za-z_]\w*)\s*(?:\^\s*(\d+))?)?"
)


class Polynomial:
    """Dense univariate polynomial with exact coefficients.

    Coefficients are stored ascending by exponent with trailing zeros
    trimmed: the zero polynomial has an empty coefficient tuple and degree
    -1.  Constants carry no variable name (``var is None``) and mix freely
    with polynomials in any variable; combining two polynomials in
    different variables raises `VariableMismatchError` unless one operand
    is constant.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=(), var: str | None = None):
        clean = [self._coerce(c, var) for c in coeffs]
        while clean and not clean[-1]:
            clean.pop()
        if len(clean) <= 1:
            var = None
        self.coeffs = tuple(clean)
        self.var = var

    @staticmethod
    def _coerce(c, var):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        if isinstance(c, RationalFunction):
            if c.variable is None:
                return c.as_fraction()
            if var is not None and c.variable == var:
                raise VariableMismatchError(
                    f"coefficient in {var!r} inside a polynomial in {var!r}"
                )
            return c
        raise TypeError(f"bad polynomial coefficient: {c!r}")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def variable_poly(cls, name: str) -> "Polynomial":
        return cls((0, 1), name)

    @classmethod
    def monomial(cls, name: str, exponent: int, coeff=1) -> "Polynomial":
        if exponent < 0:
            raise ValueError("monomial exponent must be >= 0")
        return cls((0,) * exponent + (coeff,), name)

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "Polynomial":
        """Inverse of str(): accepts forms like ``1 + 3*t - 2/5*t^3``."""
        src = text.strip()
        if src in ("", "0"):
            return cls.zero()
        terms: dict[int, Fraction] = {}
        pos = 0
        first = True
        while pos < len(src):
            m = _TERM.match(src, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign, number, name, power = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing +/- in polynomial {text!r} at offset {pos}")
            coeff = Fraction(number) if number else Fraction(1)
            if sign == "-":
                coeff = -coeff
            if name is None:
                exponent = 0
            else:
                if var is None:
                    var = name
                elif name != var:
                    raise VariableMismatchError(
                        f"mixed variables {var!r} and {name!r} in {text!r}"
                    )
                exponent = int(power) if power else 1
            terms[exponent] = terms.get(exponent, Fraction(0)) + coeff
            pos = m.end()
            first = False
        size = max(terms) + 1
        coeffs = [terms.get(i, Fraction(0)) for i in range(size)]
        return cls(coeffs, var)

    # -- structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, exponent: int):
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    @staticmethod
    def _join(a: str | None, b: str | None) -> str | None:
        if a is None:
            return b
        if b is None or a == b:
            return a
        raise VariableMismatchError(f"cannot mix variables {a!r} and {b!r}")

    # -- arithmetic --------------------------------------------------

    def _wrap_other(self, other):
        """Coerce `other` for ring ops; None means 'not ours, reflect'."""
        if _is_scalar(other):
            return Polynomial((other,))
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, RationalFunction):
            if other.variable is None:
                return Polynomial((other.as_fraction(),))
            if self.var is not None and self.var != other.variable:
                # absorb as a scalar-like coefficient from another variable
                return Polynomial((other,))
            return None
        return None

    def __add__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        var = self._join(self.var, rhs.var)
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        var = self._join(self.var, rhs.var)
        if not self.coeffs or not rhs.coeffs:
            return Polynomial((), var)
        out = [Fraction(0)] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(rhs.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power needs an integer exponent >= 0")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None or not rhs:
            raise ZeroDivisionError("polynomial division by zero")
        var = self._join(self.var, rhs.var)
        rem = list(self.coeffs)
        div = rhs.coeffs
        inv_lead = _reciprocal(div[-1])
        quot = [Fraction(0)] * max(len(rem) - len(div) + 1, 0)
        while len(rem) >= len(div):
            if not rem[-1]:
                rem.pop()
                continue
            factor = rem[-1] * inv_lead
            shift = len(rem) - len(div)
            quot[shift] = factor
            for i, c in enumerate(div):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
        return Polynomial(quot, var), Polynomial(rem, var)

    def exact_div(self, other) -> "Polynomial":
        quot, rem = divmod(self, other)
        if rem:
            raise ArithmeticError(
                f"inexact polynomial division: {self} by {other} (internal error)"
            )
        return quot

    def evaluate(self, point):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, other: "Polynomial") -> "Polynomial":
        value = self.evaluate(other)
        if isinstance(value, Polynomial):
            return value
        return Polynomial((value,))

    # -- comparison and display ---------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs and self.var == other.var
        if _is_scalar(other):
            return self.degree <= 0 and self.constant_term == other
        if isinstance(other, RationalFunction):
            return NotImplemented
        return NotImplemented

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.constant_term)
        return hash((self.var, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exponent, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            if isinstance(coeff, RationalFunction):
                negative = False
                magnitude = f"({coeff})"
                bare_one = False
            else:
                negative = coeff < 0
                mag = -coeff if negative else coeff
                magnitude = str(mag)
                bare_one = mag == 1
            if exponent == 0:
                body = magnitude
            else:
                power = self.var if exponent == 1 else f"{self.var}^{exponent}"
                body = power if bare_one else f"{magnitude}*{power}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _reciprocal(value):
    if _is_scalar(value):
        return Fraction(1) / Fraction(value)
    if isinstance(value, RationalFunction):
        return value.reciprocal()
    if isinstance(value, Polynomial):
        return RationalFunction(Polynomial.one(), value)
    raise TypeError(f"no reciprocal for {value!r}")


def _fraction_int_form(coeffs):
    """Scale Fraction coeffs to a primitive integer list (may be empty)."""
    if not coeffs:
        return []
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    content = math.gcd(*ints)
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _int_primitive(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return coeffs
    content = math.gcd(*coeffs)
    if content > 1:
        coeffs = [c // content for c in coeffs]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def _int_pseudo_rem(u, v):
    lead = v[-1]
    r = list(u)
    while len(r) >= len(v):
        if r[-1] == 0:
            r.pop()
            continue
        top = r[-1]
        r = [lead * c for c in r]
        shift = len(r) - len(v)
        for i, c in enumerate(v):
            r[shift + i] -= top * c
        r.pop()
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """GCD of two rational-coefficient polynomials, monic over Q.

    Uses a primitive integer remainder sequence internally so intermediate
    coefficients stay small.
    """
    if not isinstance(a, Polynomial):
        a = Polynomial.constant(a)
    if not isinstance(b, Polynomial):
        b = Polynomial.constant(b)
    var = Polynomial._join(a.var, b.var)
    for c in a.coeffs + b.coeffs:
        if not isinstance(c, Fraction):
            raise TypeError("poly_gcd needs plain rational coefficients")
    u = _fraction_int_form(list(a.coeffs))
    v = _fraction_int_form(list(b.coeffs))
    if len(u) < len(v):
        u, v = v, u
    while v:
        u, v = v, _int_primitive(_int_pseudo_rem(u, v))
    if not u:
        return Polynomial.zero()
    lead = Fraction(u[-1])
    return Polynomial([Fraction(c) / lead for c in u], var)


class RationalFunction:
    """Quotient of two polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = self._as_poly(num)
        den = self._as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        Polynomial._join(num.var, den.var)
        if not num:
            num, den = Polynomial.zero(), Polynomial.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.coeffs[-1]
            if lead != 1:
                num = num / lead
                den = den / lead
        self.num = num
        self.den = den

    @staticmethod
    def _as_poly(value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if _is_scalar(value):
            return Polynomial((value,))
        raise TypeError(f"bad rational function part: {value!r}")

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "RationalFunction":
        def strip_parens(part: str) -> str:
            part = part.strip()
            if part.startswith("(") and part.endswith(")"):
                return part[1:-1]
            return part

        if " / " in text:
            top, bottom = text.split(" / ", 1)
            return cls(
                Polynomial.parse(strip_parens(top), var),
                Polynomial.parse(strip_parens(bottom), var),
            )
        return cls(Polynomial.parse(strip_parens(text), var))

    @property
    def variable(self) -> str | None:
        return self.num.var if self.num.var is not None else self.den.var

    def as_fraction(self) -> Fraction:
        if self.variable is not None:
            raise ValueError(f"{self} is not constant")
        return self.num.constant_term / self.den.constant_term

    def reciprocal(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("reciprocal of zero")
        return RationalFunction(self.den, self.num)

    # -- arithmetic --------------------------------------------------

    def _wrap_other(self, other):
        if _is_scalar(other):
            return RationalFunction(Polynomial((other,)))
        if isinstance(other, Polynomial):
            mine = self.variable
            if other.var is not None and mine is not None and other.var != mine:
                return None  # reflect: the polynomial absorbs us as a coefficient
            return RationalFunction(other)
        if isinstance(other, RationalFunction):
            return other
        return None

    def __add__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return RationalFunction(
            self.num * rhs.den + rhs.num * self.den, self.den * rhs.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return RationalFunction(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        if not rhs.num:
            raise ZeroDivisionError("rational function division by zero")
        return RationalFunction(self.num * rhs.den, self.den * rhs.num)

    def __rtruediv__(self, other):
        rhs = self._wrap_other(other)
        if rhs is None:
            return NotImplemented
        return rhs / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise ValueError("rational function power needs an integer exponent")
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent)

    # -- comparison and display ---------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            if other.var is None and isinstance(
                other.constant_term, RationalFunction
            ):
                return self == other.constant_term
            return self.den == Polynomial.one() and self.num == other
        if _is_scalar(other):
            return self.den == Polynomial.one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den == Polynomial.one():
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == Polynomial.one():
            return str(self.num)

        def wrap(poly: Polynomial) -> str:
            text = str(poly)
            return f"({text})" if " " in text else text

        return f"{wrap(self.num)} / {wrap(self.den)}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


class PowerSeries:
    """Truncated power series: coefficients 0..order are exact.

    Binary operations truncate to the shorter operand, and equality
    compares the shared prefix only.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        clean = []
        for c in coeffs:
            if isinstance(c, int):
                c = Fraction(c)
            elif not isinstance(c, (Fraction, Polynomial, RationalFunction)):
                raise TypeError(f"bad series coefficient: {c!r}")
            clean.append(c)
        if not clean:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = tuple(clean)

    @classmethod
    def constant(cls, value, order: int) -> "PowerSeries":
        return cls([value] + [0] * order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1, order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.constant(0, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} series to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, (Polynomial, RationalFunction)):
            return PowerSeries([c * other for c in self.coeffs])
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series power needs an integer exponent >= 0")
        result = PowerSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> "PowerSeries":
        """Multiplicative inverse; the constant term must be a nonzero scalar."""
        a0 = self.coeffs[0]
        if isinstance(a0, Polynomial):
            if a0.degree > 0:
                raise TypeError("series inverse needs a scalar constant term")
            a0 = a0.constant_term
        if not a0:
            raise ZeroDivisionError("series inverse with zero constant term")
        inv0 = Fraction(1) / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            total = Fraction(0)
            for k in range(1, n + 1):
                total = total + self.coeffs[k] * out[n - k]
            out.append(-inv0 * total)
        return PowerSeries(out)

    def shift_up(self, k: int) -> "PowerSeries":
        if k < 0:
            raise ValueError("shift must be >= 0")
        return PowerSeries((Fraction(0),) * k + self.coeffs)

    def shift_down(self, k: int) -> "PowerSeries":
        if k < 0:
            raise ValueError("shift must be >= 0")
        if k > self.order:
            raise ValueError("shift past series order")
        for c in self.coeffs[:k]:
            if c:
                raise ValueError("shift_down would drop a nonzero coefficient")
        return PowerSeries(self.coeffs[k:])

    def compose_monomial(self, scale, k: int) -> "PowerSeries":
        """Substitute z -> scale * z^k (k >= 1)."""
        if k < 1:
            raise ValueError("monomial substitution needs k >= 1")
        out = [Fraction(0)] * (k * self.order + k)
        power = Fraction(1) if _is_scalar(scale) else scale**0
        for n, c in enumerate(self.coeffs):
            out[k * n] = c * power
            power = power * scale
        return PowerSeries(out)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"PowerSeries([{head}{tail}] order={self.order})"


def exact_divide(value, divisor):
    """Division that must come out exact; the fraction-free elimination
    steps rely on this and a failure indicates an internal bug."""
    if isinstance(divisor, Polynomial) and divisor.degree <= 0:
        divisor = divisor.constant_term
    if isinstance(divisor, int):
        divisor = Fraction(divisor)
    if isinstance(divisor, Fraction):
        if isinstance(value, int):
            value = Fraction(value)
        if isinstance(value, Fraction):
            return value / divisor
        return value * (Fraction(1) / divisor)
    if isinstance(value, Polynomial) and isinstance(divisor, Polynomial):
        return value.exact_div(divisor)
    return value / divisor
