"""Normal diwords of the free dialgebra D(X) and dipolynomials over them.

A normal diword ``x_{-m} ... x_{-1} x_0 x_1 ... x_n`` with dotted letter
``x_0`` is stored as the word of letter indices together with the index
``m`` of its center.  In text the center letter carries a ``^`` prefix::

    a a ^b c        # word (a, a, b, c), center 2

Diwords are ordered by the weight ``(length, m, letters...)`` compared
lexicographically, letters by their position in the alphabet.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .field import QQ

VDASH = "vdash"
DASHV = "dashv"

_OP_ALIASES = {
    VDASH: VDASH, "|-": VDASH, "⊢": VDASH, "left": VDASH,
    DASHV: DASHV, "-|": DASHV, "⊣": DASHV, "right": DASHV,
}


class Alphabet:
    """Finite well-ordered generating set; the order is list position."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for nm in names:
            if not isinstance(nm, str) or not nm:
                raise ValueError(f"generator names must be nonempty strings, got {nm!r}")
            if nm in ("+", "-", "*") or nm.startswith("^") or any(ch.isspace() for ch in nm):
                raise ValueError(f"illegal generator name {nm!r}")
            if _looks_like_scalar(nm):
                raise ValueError(f"generator name {nm!r} reads as a number")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        self.names = names
        self._index = {nm: i for i, nm in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __getitem__(self, i):
        return self.names[i]

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"undeclared generator {name!r}") from None

    def owns(self, u: "Diword") -> bool:
        n = len(self.names)
        return all(0 <= x < n for x in u.word)

    def compare(self, u: "Diword", v: "Diword") -> int:
        """:func:`compare`, refusing diwords with letters outside this alphabet."""
        if not (self.owns(u) and self.owns(v)):
            raise ValueError("diwords are not over this alphabet")
        return compare(u, v)

    def letter(self, name: str) -> "Diword":
        return Diword((self.index(name),), 0)

    # -- text notation -------------------------------------------------

    def parse_diword(self, text: str) -> "Diword":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty diword")
        centers = [i for i, t in enumerate(tokens) if t.startswith("^")]
        if len(centers) != 1:
            raise ValueError(f"diword {text!r} must mark exactly one center with '^'")
        c = centers[0]
        tokens[c] = tokens[c][1:]
        return Diword(tuple(self.index(t) for t in tokens), c)

    def format_diword(self, u: "Diword") -> str:
        return " ".join(("^" if i == u.center else "") + self.names[x]
                        for i, x in enumerate(u.word))

    def parse_poly(self, text: str, field=QQ) -> "DiPoly":
        """Parse ``"a ^a - ^a a + 2 ^b"``; ``0`` is the zero polynomial.

        Terms are separated by standalone ``+``/``-`` tokens; a term is an
        optional scalar followed by a diword.
        """
        tokens = text.replace("*", " ").split()
        if tokens == ["0"]:
            return DiPoly.zero(field)
        terms: dict[Diword, object] = {}
        sign = 1
        cur: list[str] = []

        def flush():
            if not cur:
                raise ValueError(f"dangling sign in {text!r}")
            coeff = field.one()
            body = cur
            if _looks_like_scalar(cur[0]):
                coeff = field.parse(cur[0])
                body = cur[1:]
            u = self.parse_diword(" ".join(body))
            terms[u] = terms.get(u, field.zero()) + (coeff if sign > 0 else -coeff)

        for tok in tokens:
            if tok in ("+", "-"):
                if cur:
                    flush()
                    cur.clear()
                    sign = 1
                sign = sign * (-1 if tok == "-" else 1)
            else:
                cur.append(tok)
        if not cur:
            raise ValueError(f"cannot parse polynomial {text!r}")
        flush()
        return DiPoly(terms, field)

    def format_poly(self, f: "DiPoly") -> str:
        if not f:
            return "0"
        out = []
        one = f.field.one()
        for u, c in f.items():
            neg = _is_negative(c, f.field)
            mag = -c if neg else c
            word = self.format_diword(u)
            body = word if mag == one else f"{f.field.format(mag)} {word}"
            if not out:
                out.append(("- " if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)


def _looks_like_scalar(tok: str) -> bool:
    t = tok.lstrip("+-")
    if not t:
        return False
    num, _, den = t.partition("/")
    return num.isdigit() and (den == "" or den.isdigit())


def _is_negative(c, field) -> bool:
    if field.characteristic == 0:
        return c < 0
    return False


class Diword:
    """Normal diword: nonempty letter-index word plus center index.

    Instances compare by the weight ``(len, center, word)``; equality and
    hashing are on ``(word, center)``.
    """

    __slots__ = ("word", "center", "key", "_hash")

    def __init__(self, word: Sequence[int], center: int):
        word = tuple(word)
        if not word:
            raise ValueError("diwords are nonempty")
        if not 0 <= center < len(word):
            raise ValueError(f"center {center} out of range for length {len(word)}")
        self.word = word
        self.center = center
        self.key = (len(word), center, word)
        self._hash = hash(self.key)

    def __len__(self):
        return len(self.word)

    @property
    def m(self) -> int:
        return self.center

    @property
    def n(self) -> int:
        return len(self.word) - 1 - self.center

    def is_left_normed(self) -> bool:
        return self.center == len(self.word) - 1

    def is_right_normed(self) -> bool:
        return self.center == 0

    def __eq__(self, other):
        return isinstance(other, Diword) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return "Diword(" + " ".join(("^" if i == self.center else "") + str(x)
                                    for i, x in enumerate(self.word)) + ")"

    def __reduce__(self):
        return (Diword, (self.word, self.center))


def compare(u: Diword, v: Diword) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if u.key < v.key:
        return -1
    if u.key > v.key:
        return 1
    return 0


def vdash(u: Diword, v: Diword) -> Diword:
    return Diword(u.word + v.word, len(u.word) + v.center)


def dashv(u: Diword, v: Diword) -> Diword:
    return Diword(u.word + v.word, u.center)


def product(op: str, u: Diword, v: Diword) -> Diword:
    """Product of normal diwords; ``op`` is ``"vdash"`` or ``"dashv"``."""
    op = _op(op)
    return vdash(u, v) if op == VDASH else dashv(u, v)


def _op(op: str) -> str:
    try:
        return _OP_ALIASES[op]
    except KeyError:
        raise ValueError(f"unknown product {op!r}") from None


class DiPoly:
    """Element of D(X): finite sum of normal diwords with nonzero coefficients.

    Terms are kept sorted by descending diword, so the leading term is the
    first item.  Instances are treated as immutable.
    """

    __slots__ = ("field", "_terms", "_norm")

    def __init__(self, terms: Mapping[Diword, object] | Iterable[tuple[Diword, object]] = (),
                 field=QQ):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Diword, object] = {}
        for u, c in terms:
            c = field(c)
            if u in acc:
                acc[u] = acc[u] + c
            else:
                acc[u] = c
        self.field = field
        self._terms = {u: acc[u] for u in sorted(acc, reverse=True) if acc[u]}
        self._norm = None

    @classmethod
    def _raw(cls, terms: dict, field) -> "DiPoly":
        # terms already nonzero and field-typed
        f = cls.__new__(cls)
        f.field = field
        f._terms = {u: terms[u] for u in sorted(terms, reverse=True)}
        f._norm = None
        return f

    @classmethod
    def zero(cls, field=QQ) -> "DiPoly":
        return cls((), field)

    @classmethod
    def monomial(cls, u: Diword, coeff=1, field=QQ) -> "DiPoly":
        return cls(((u, coeff),), field)

    # -- container protocol ------------------------------------------------

    def items(self):
        return self._terms.items()

    def support(self) -> list[Diword]:
        return list(self._terms)

    def coeff(self, u: Diword):
        return self._terms.get(u, self.field.zero())

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Diword]:
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, DiPoly):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"DiPoly({list(self._terms.items())!r})"

    def __reduce__(self):
        return (DiPoly, (list(self._terms.items()), self.field))

    # -- leading data ----------------------------------------------------

    def leading(self):
        """Return ``(leading diword, coefficient)``."""
        if not self._terms:
            raise ValueError("no leading term: zero polynomial")
        return next(iter(self._terms.items()))

    @property
    def lead(self) -> Diword:
        return self.leading()[0]

    @property
    def degree(self) -> int:
        return len(self.lead)

    def is_monic(self) -> bool:
        return bool(self) and self.leading()[1] == self.field.one()

    def monic(self) -> "DiPoly":
        c = self.leading()[1]
        if c == self.field.one():
            return self
        inv = self.field.one() / c
        return DiPoly._raw({u: a * inv for u, a in self._terms.items()}, self.field)

    def normedness(self) -> str:
        """``"left"``, ``"right"``, ``"both"`` or ``"neither"``."""
        if self._norm is None:
            if not self._terms:
                raise ValueError("normedness of the zero polynomial is undefined")
            left = all(u.center == len(u.word) - 1 for u in self._terms)
            right = all(u.center == 0 for u in self._terms)
            self._norm = ("both" if left and right else "left" if left
                          else "right" if right else "neither")
        return self._norm

    # -- linear structure ------------------------------------------------

    def _check(self, other):
        if not isinstance(other, DiPoly):
            raise TypeError(f"expected DiPoly, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        for u, c in other._terms.items():
            s = acc.get(u)
            s = c if s is None else s + c
            if s:
                acc[u] = s
            else:
                acc.pop(u, None)
        return DiPoly._raw(acc, self.field)

    def __neg__(self):
        return DiPoly._raw({u: -c for u, c in self._terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiPoly":
        c = self.field(c)
        if not c:
            return DiPoly.zero(self.field)
        return DiPoly._raw({u: a * c for u, a in self._terms.items()}, self.field)

    def __mul__(self, c):
        if isinstance(c, DiPoly):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    # -- dialgebra products ----------------------------------------------

    def vdash(self, other: "DiPoly") -> "DiPoly":
        return poly_product(VDASH, self, other)

    def dashv(self, other: "DiPoly") -> "DiPoly":
        return poly_product(DASHV, self, other)

    def map_diwords(self, fn) -> "DiPoly":
        """Apply a diword map termwise, accumulating collisions."""
        acc: dict[Diword, object] = {}
        for u, c in self._terms.items():
            v = fn(u)
            s = acc.get(v)
            acc[v] = c if s is None else s + c
        return DiPoly._raw({u: c for u, c in acc.items() if c}, self.field)


def poly_product(op: str, f: DiPoly, g: DiPoly) -> DiPoly:
    """Bilinear extension of :func:`product` to dipolynomials."""
    f._check(g)
    mul = vdash if _op(op) == VDASH else dashv
    acc: dict[Diword, object] = {}
    for u, a in f.items():
        for v, b in g.items():
            w = mul(u, v)
            s = acc.get(w)
            acc[w] = a * b if s is None else s + a * b
    return DiPoly._raw({u: c for u, c in acc.items() if c}, f.field)


def leibniz_bracket(f: DiPoly, g: DiPoly) -> DiPoly:
    """The Leibniz bracket ``f ⊣ g - g ⊢ f`` of the associated Leibniz algebra."""
    return poly_product(DASHV, f, g) - poly_product(VDASH, g, f)


def letter(x: int, field=QQ) -> DiPoly:
    return DiPoly.monomial(Diword((x,), 0), 1, field)


def leading(f: DiPoly):
    return f.leading()


def normedness(f: DiPoly) -> str:
    return f.normedness()


def chain(factors: Sequence[DiPoly], center: int) -> DiPoly:
    """Evaluate ``f_0 ⊢ ... ⊢ f_c ⊣ ... ⊣ f_k`` with ``c = center``."""
    acc = factors[center]
    for f in factors[center + 1:]:
        acc = poly_product(DASHV, acc, f)
    for f in reversed(factors[:center]):
        acc = poly_product(VDASH, f, acc)
    return acc
