"""Sequence families and the small spec grammar that names them.

A spec string is a family with an optional integer parameter followed by a
pipeline of transforms, for example ``catalan``, ``catconv:r=3`` or
``narayana|shift:1|eval:t=-1``.  Families produce either exact rationals
(`Fraction`) or polynomials in ``t`` (`Polynomial`); the kind is tracked so
transforms that only make sense for one kind are rejected at parse time.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Polynomial, PowerSeries, binomial

__all__ = [
    "SpecError",
    "Transform",
    "SequenceSpec",
    "parse_spec",
    "terms",
    "RATIONAL",
    "POLYNOMIAL",
    "catalan_number",
    "catalan_convolution",
    "u_number",
    "narayana_poly",
    "narayana_b_poly",
    "conv_poly",
    "fibonacci_number",
    "lucas_number",
    "f_number",
    "fibonacci_poly",
    "lucas_poly",
    "q_integer",
    "catalan_series",
    "narayana_series",
]

RATIONAL = "rational"
POLYNOMIAL = "polynomial"


class SpecError(ValueError):
    """A sequence spec string failed to parse or validate."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


# -- closed forms and series ------------------------------------------


def catalan_number(n: int) -> Fraction:
    top = math.comb(2 * n, n)
    assert top % (n + 1) == 0
    return Fraction(top // (n + 1))


def catalan_convolution(n: int, r: int) -> Fraction:
    """r-fold Catalan convolution: (r / (2n+r)) * C(2n+r, n)."""
    value = Fraction(r, 2 * n + r) * binomial(2 * n + r, n)
    assert value.denominator == 1
    return value


def catalan_series(order: int) -> PowerSeries:
    return PowerSeries([catalan_number(n) for n in range(order + 1)])


_U_LOCK = threading.Lock()
_U_CACHE: dict[int, list[Fraction]] = {}


def u_number(n: int, r: int) -> Fraction:
    """Coefficients of 1 / (1 - r z C(z)) with C the Catalan series."""
    with _U_LOCK:
        have = _U_CACHE.get(r, [])
        if n >= len(have):
            cat = catalan_series(n)
            denom = PowerSeries(
                [Fraction(1)] + [-r * cat[k] for k in range(n)]
            )
            have = list(denom.invert().coeffs)
            for value in have:
                assert value.denominator == 1
            _U_CACHE[r] = have
        return have[n]


def narayana_poly(n: int) -> Polynomial:
    if n == 0:
        return Polynomial.one()
    coeffs = [
        Fraction(binomial(n, k) * binomial(n - 1, k), k + 1) for k in range(n)
    ]
    for c in coeffs:
        assert c.denominator == 1
    return Polynomial(coeffs, "t")


def narayana_b_poly(n: int) -> Polynomial:
    return Polynomial([binomial(n, k) ** 2 for k in range(n + 1)], "t")


def narayana_series(order: int) -> PowerSeries:
    """Generating series of the narayana polynomials, built by the
    quadratic recursion its functional equation gives for the coefficients."""
    t = Polynomial.variable_poly("t")
    coeffs: list[Polynomial] = [Polynomial.one()]
    for n in range(1, order + 1):
        square = Polynomial.zero()
        for i in range(n):
            square = square + coeffs[i] * coeffs[n - 1 - i]
        coeffs.append(coeffs[n - 1] - t * coeffs[n - 1] + t * square)
    return PowerSeries(coeffs)


_CONV_LOCK = threading.Lock()
_CONV_CACHE: dict[int, list[Polynomial]] = {}


def conv_poly(n: int, m: int) -> Polynomial:
    """m-fold convolution analogue of the narayana polynomials."""
    with _CONV_LOCK:
        have = _CONV_CACHE.get(m, [])
        if n >= len(have):
            full = narayana_series(n + 1)
            start = (full - PowerSeries.one(n + 1)).shift_down(1)
            series = start ** (m // 2)
            if m % 2:
                series = full.truncate(n) * series.truncate(n)
            have = [
                c if isinstance(c, Polynomial) else Polynomial.constant(c)
                for c in series.coeffs[: n + 1]
            ]
            _CONV_CACHE[m] = have
        return have[n]


def fibonacci_number(n: int) -> Fraction:
    a, b = Fraction(0), Fraction(1)
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas_number(n: int) -> Fraction:
    a, b = Fraction(2), Fraction(1)
    for _ in range(n):
        a, b = b, a + b
    return a


def f_number(n: int, r: int) -> Fraction:
    """Fibonacci-like: f(0) = r, f(1) = 1, then the usual two-term sum."""
    a, b = Fraction(r), Fraction(1)
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_poly(n: int, x, s):
    """F(0) = 0, F(1) = 1, F(n) = x F(n-1) + s F(n-2); any exact ring."""
    zero = x * 0
    a, b = zero, zero + 1
    for _ in range(n):
        a, b = b, x * b + s * a
    return a


def lucas_poly(n: int, x, s):
    """L(0) = 2, L(1) = x, L(n) = x L(n-1) + s L(n-2); any exact ring."""
    zero = x * 0
    a, b = zero + 2, zero + x
    for _ in range(n):
        a, b = b, x * b + s * a
    return a


def q_integer(n: int, q):
    """1 + q + ... + q^(n-1); n must be at least 1."""
    if n < 1:
        raise ValueError("q_integer needs n >= 1")
    total = q * 0
    power = q * 0 + 1
    for _ in range(n):
        total = total + power
        power = power * q
    return total


# -- spec string grammar -----------------------------------------------


@dataclass(frozen=True)
class Transform:
    name: str
    arg: object = None

    @property
    def text(self) -> str:
        if self.name == "eval":
            name, value = self.arg
            return f"eval:{name}={value}"
        if self.arg is None:
            return self.name
        return f"{self.name}:{self.arg}"


@dataclass(frozen=True)
class SequenceSpec:
    family: str
    param: int | None
    transforms: tuple[Transform, ...]

    @property
    def kind(self) -> str:
        kind = _FAMILIES[self.family].kind
        for tr in self.transforms:
            if tr.name == "eval":
                kind = RATIONAL
        return kind

    @property
    def text(self) -> str:
        head = self.family
        if self.param is not None:
            head = f"{head}:{_FAMILIES[self.family].param_key}={self.param}"
        return "|".join([head] + [tr.text for tr in self.transforms])

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class _Family:
    kind: str
    param_key: str | None
    produce: object  # (param, count) -> list of values


def _plain(fn):
    return lambda param, count: [fn(n) for n in range(count)]


def _with_param(fn):
    return lambda param, count: [fn(n, param) for n in range(count)]


_FAMILIES: dict[str, _Family] = {
    "catalan": _Family(RATIONAL, None, _plain(catalan_number)),
    "central-binomial": _Family(
        RATIONAL, None, _plain(lambda n: Fraction(math.comb(2 * n, n)))
    ),
    "catconv": _Family(RATIONAL, "r", _with_param(catalan_convolution)),
    "u": _Family(RATIONAL, "r", _with_param(u_number)),
    "fibonacci": _Family(RATIONAL, None, _plain(fibonacci_number)),
    "lucas": _Family(RATIONAL, None, _plain(lucas_number)),
    "f-number": _Family(RATIONAL, "r", _with_param(f_number)),
    "narayana": _Family(POLYNOMIAL, None, _plain(narayana_poly)),
    "narayana-b": _Family(POLYNOMIAL, None, _plain(narayana_b_poly)),
    "convpoly": _Family(POLYNOMIAL, "m", _with_param(conv_poly)),
}

_NO_ARG_TRANSFORMS = ("double-signed", "aerate", "abs", "consecutive-sum")


def parse_spec(text: str) -> SequenceSpec:
    pieces = text.split("|")
    offsets = []
    pos = 0
    for piece in pieces:
        offsets.append(pos)
        pos += len(piece) + 1

    head = pieces[0].strip()
    if ":" in head:
        family, _, param_text = head.partition(":")
        family = family.strip()
    else:
        family, param_text = head, None

    info = _FAMILIES.get(family)
    if info is None:
        raise SpecError(f"unknown family {family!r}", 0)
    if info.param_key is None:
        if param_text is not None:
            raise SpecError(f"family {family!r} takes no parameter", 0)
        param = None
    else:
        if param_text is None:
            raise SpecError(
                f"family {family!r} needs a parameter {info.param_key}=<int>", 0
            )
        key, eq, value = param_text.partition("=")
        if not eq or key.strip() != info.param_key:
            raise SpecError(
                f"family {family!r} expects {info.param_key}=<int>", 0
            )
        try:
            param = int(value)
        except ValueError:
            raise SpecError(f"bad integer {value!r} in {head!r}", 0) from None
        if param < 1:
            raise SpecError(f"parameter {info.param_key} must be >= 1", 0)

    kind = info.kind
    transforms = []
    for piece, offset in zip(pieces[1:], offsets[1:]):
        token = piece.strip()
        name, colon, arg_text = token.partition(":")
        if name in _NO_ARG_TRANSFORMS:
            if colon:
                raise SpecError(f"transform {name!r} takes no argument", offset)
            if name == "abs" and kind != RATIONAL:
                raise SpecError(
                    "abs only applies to rational sequences", offset
                )
            transforms.append(Transform(name))
        elif name == "shift":
            try:
                amount = int(arg_text) if colon else -1
            except ValueError:
                raise SpecError(f"bad shift {arg_text!r}", offset) from None
            if amount < 0:
                raise SpecError("shift needs an integer argument >= 0", offset)
            transforms.append(Transform("shift", amount))
        elif name == "scale":
            try:
                factor = Fraction(arg_text) if colon else None
            except (ValueError, ZeroDivisionError):
                factor = None
            if factor is None:
                raise SpecError("scale needs a rational argument", offset)
            transforms.append(Transform("scale", factor))
        elif name == "eval":
            if kind != POLYNOMIAL:
                raise SpecError(
                    "eval only applies to polynomial sequences", offset
                )
            var, eq, value_text = arg_text.partition("=")
            var = var.strip()
            try:
                value = Fraction(value_text) if eq and var else None
            except (ValueError, ZeroDivisionError):
                value = None
            if value is None:
                raise SpecError(
                    "eval needs an argument like t=-1", offset
                )
            transforms.append(Transform("eval", (var, value)))
            kind = RATIONAL
        else:
            raise SpecError(f"unknown transform {name!r}", offset)

    return SequenceSpec(family, param, tuple(transforms))


def _required_input(tr: Transform, count: int) -> int:
    if count == 0:
        return 0
    if tr.name == "shift":
        return count + tr.arg
    if tr.name == "double-signed":
        return count // 2 + 1
    if tr.name == "aerate":
        return (count + 1) // 2
    if tr.name == "consecutive-sum":
        return count + 1
    return count


def _apply(tr: Transform, values: list) -> list:
    if tr.name == "shift":
        return values[tr.arg :]
    if tr.name == "double-signed":
        if not values:
            return []
        out = [values[0]]
        for j in range(1, 2 * len(values) - 1):
            m = (j + 1) // 2
            out.append(-values[m] if m % 2 else values[m])
        return out
    if tr.name == "aerate":
        if not values:
            return []
        zero = values[0] * 0
        out = []
        for v in values:
            out.append(v)
            out.append(zero)
        return out
    if tr.name == "consecutive-sum":
        return [values[i] + values[i + 1] for i in range(len(values) - 1)]
    if tr.name == "abs":
        return [abs(v) for v in values]
    if tr.name == "scale":
        return [v * tr.arg for v in values]
    if tr.name == "eval":
        name, point = tr.arg
        out = []
        for v in values:
            if isinstance(v, Polynomial):
                if v.var is not None and v.var != name:
                    raise SpecError(
                        f"eval argument {name!r} does not match variable {v.var!r}"
                    )
                out.append(v.evaluate(point))
            else:
                out.append(v)
        return out
    raise SpecError(f"unknown transform {tr.name!r}")


def terms(spec: SequenceSpec | str, count: int) -> list:
    """First `count` terms of the sequence a spec describes."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if count < 0:
        raise ValueError("count must be >= 0")
    need = count
    for tr in reversed(spec.transforms):
        need = _required_input(tr, need)
    values = _FAMILIES[spec.family].produce(spec.param, need)
    for tr in spec.transforms:
        values = _apply(tr, values)
    assert len(values) >= count
    return values[:count]
