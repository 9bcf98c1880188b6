"""Exact coefficient arithmetic.

Everything downstream (linear algebra, Groebner bases, syzygies) is exact.
Over the rationals we use gmpy2.mpq when available and fractions.Fraction
otherwise; over GF(p) elements are plain ints reduced mod p.  A Field object
bundles the operations as plain callables so hot loops can bind them to
locals instead of dispatching through methods.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _ratio


class Field:
    """A coefficient field presented as a bag of operations.

    Elements are opaque to callers: rationals are mpq/Fraction, GF(p)
    elements are ints in [0, p).  `zero` and `one` are constants; `add`,
    `sub`, `mul`, `neg`, `inv` are binary/unary callables; `from_int`
    embeds an integer; `from_ratio` embeds a pair (num, den) of ints with
    den > 0; `to_str` renders an element for output.
    """

    __slots__ = (
        "name", "char", "zero", "one",
        "add", "sub", "mul", "neg", "inv",
        "from_int", "from_ratio", "to_str",
    )

    def __init__(self, name, char, zero, one, add, sub, mul, neg, inv,
                 from_int, from_ratio, to_str):
        self.name = name
        self.char = char
        self.zero = zero
        self.one = one
        self.add = add
        self.sub = sub
        self.mul = mul
        self.neg = neg
        self.inv = inv
        self.from_int = from_int
        self.from_ratio = from_ratio
        self.to_str = to_str

    def __repr__(self):
        return f"Field({self.name})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


def _ratio_str(c) -> str:
    num, den = c.numerator, c.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def rationals() -> Field:
    one = _ratio(1)
    zero = _ratio(0)

    def add(a, b):
        return a + b

    def sub(a, b):
        return a - b

    def mul(a, b):
        return a * b

    def neg(a):
        return -a

    def inv(a):
        return 1 / a

    def from_ratio(num, den):
        return _ratio(num) / den

    return Field("Q", 0, zero, one, add, sub, mul, neg, inv,
                 _ratio, from_ratio, _ratio_str)


def prime_field(p: int) -> Field:
    if p < 2 or any(p % q == 0 for q in range(2, min(p, 1 + int(p ** 0.5) + 1))):
        raise ValueError(f"modulus {p} is not prime")

    def add(a, b):
        return (a + b) % p

    def sub(a, b):
        return (a - b) % p

    def mul(a, b):
        return (a * b) % p

    def neg(a):
        return (-a) % p

    def inv(a):
        return pow(a, p - 2, p)

    def from_int(n):
        return n % p

    def from_ratio(num, den):
        return (num * pow(den, p - 2, p)) % p

    return Field(f"F{p}", p, 0, 1 % p, add, sub, mul, neg, inv,
                 from_int, from_ratio, str)
