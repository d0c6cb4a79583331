"""Exact scalar fields: the rationals or a prime field GF(p).

Fields are sympy domains (``QQ`` or ``GF(p)``); this module only adds
parsing, formatting and the deterministic scalar samples used as evidence.
"""
from __future__ import annotations

from fractions import Fraction

from sympy import GF, QQ, isprime

RATIONALS = QQ


def prime_field(p: int):
    if not isprime(p):
        raise ValueError(f"GF(p) needs a prime modulus, got {p}")
    return GF(p, symmetric=False)


def field_from_spec(spec: str):
    """Parse ``q`` (rationals) or ``gf:p``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rationals"):
        return RATIONALS
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad field spec {spec!r}") from None
        return prime_field(p)
    raise ValueError(f"unknown field {spec!r}; use q or gf:p")


def field_name(field) -> str:
    return "q" if field == RATIONALS else f"gf:{field.characteristic()}"


def is_rational(field) -> bool:
    return field == RATIONALS


def scalar(field, value):
    """Coerce an int, Fraction, ``"p/q"`` string or field element into ``field``."""
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return field.convert(value.numerator) / field.convert(value.denominator)
    return field.convert(value)


def format_scalar(field, x) -> str:
    if is_rational(field):
        num, den = int(x.numerator), int(x.denominator)
        return str(num) if den == 1 else f"{num}/{den}"
    return str(int(x) % field.characteristic())


def sample_scalars(field) -> list:
    """Nonzero sample scalars: a fixed set over QQ, everything over GF(p)."""
    if is_rational(field):
        return [scalar(field, v) for v in ("1", "-1", "2", "1/2", "3/5")]
    return [field(k) for k in range(1, field.characteristic())]


def random_scalar(field, rng, nonzero: bool = False):
    """Draw a small scalar from ``rng`` (a :class:`random.Random`)."""
    while True:
        if is_rational(field):
            x = scalar(field, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        else:
            x = field(rng.randrange(field.characteristic()))
        if x or not nonzero:
            return x
