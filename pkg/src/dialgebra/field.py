"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The field Q, with elements represented as :class:`fractions.Fraction`."""

    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floating point coefficients are not allowed")
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational scalar {text!r}") from exc

    def format(self, c) -> str:
        return str(c)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def to_json(self) -> dict:
        return {"type": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo a prime ``p``; always stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError("mixing residues of different primes")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} mod {self.p}"

    def __str__(self):
        return str(self.v)


class PrimeField:
    """The prime field F_p."""

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError("residue belongs to a different prime field")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into F_{self.p}")
        return Mod(x, self.p)

    def parse(self, text: str) -> Mod:
        try:
            return self(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {text!r} for F_{self.p}") from exc

    def format(self, c) -> str:
        return str(c.v)

    def zero(self):
        return Mod(0, self.p)

    def one(self):
        return Mod(1, self.p)

    def to_json(self) -> dict:
        return {"type": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(desc) -> RationalField | PrimeField:
    if desc is None:
        return QQ
    if not isinstance(desc, dict) or "type" not in desc:
        raise ValueError(f"bad field descriptor {desc!r}")
    if desc["type"] == "rational":
        return QQ
    if desc["type"] == "prime":
        if "p" not in desc:
            raise ValueError("prime field descriptor needs 'p'")
        return PrimeField(desc["p"])
    raise ValueError(f"unknown field type {desc['type']!r}")
