"""Exact arithmetic in a real quadratic field and dense linear algebra over it.

Every geometric coordinate in this package is a :class:`FieldElem`, a pair of
rationals (a, b) standing for the real number a + b*sqrt(D).  D is a
square-free non-negative integer fixed per computation; D = 0 encodes plain Q
(with b forced to zero), so rational inputs run through the same code path as
irrational ones.  Mixing elements of different fields is a hard error.

Signs, comparisons and floors are decided by integer arithmetic only.  No
floating point enters any predicate.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction

_RatLike = Union[int, Fraction]


class FieldMixError(ValueError):
    """Raised when two elements of different quadratic fields are combined."""


def _check_context(d: int) -> int:
    if d < 0:
        raise ValueError(f"negative field discriminant {d}")
    if d == 1:
        raise ValueError("D = 1 is not a valid field context (sqrt(1) is rational)")
    if d > 1:
        k = 2
        while k * k <= d:
            if d % (k * k) == 0:
                raise ValueError(f"D = {d} is not square-free")
            k += 1
    return d


class FieldElem:
    """An element a + b*sqrt(D) of Q(sqrt(D)), with exact rational parts."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: _RatLike, b: _RatLike = 0, d: int = 0) -> None:
        _check_context(d)
        a = Fraction(a)
        b = Fraction(b)
        if d == 0 and b != 0:
            raise ValueError("nonzero sqrt part with D = 0")
        self._a = a
        self._b = b
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    # -- construction helpers -------------------------------------------------

    def lift(self, value: _RatLike | "FieldElem") -> "FieldElem":
        """Coerce an int/Fraction (or compatible element) into this field."""
        if isinstance(value, FieldElem):
            if value._d != self._d:
                raise FieldMixError(f"mixing fields D={value._d} and D={self._d}")
            return value
        return FieldElem(value, 0, self._d)

    def zero(self) -> "FieldElem":
        return FieldElem(0, 0, self._d)

    def one(self) -> "FieldElem":
        return FieldElem(1, 0, self._d)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_rational(self) -> bool:
        return self._b == 0

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(D), via integer comparison only."""
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b|*sqrt(D); equality impossible for square-free D >= 2
        lhs = a * a
        rhs = b * b * self._d
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other: object) -> Optional["FieldElem"]:
        if isinstance(other, FieldElem):
            if other._d != self._d:
                raise FieldMixError(f"mixing fields D={self._d} and D={other._d}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(other, 0, self._d)
        return None

    def __add__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self._a + o._a, self._b + o._b, self._d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self._a - o._a, self._b - o._b, self._d)

    def __rsub__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self._a, -self._b, self._d)

    def __mul__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return FieldElem(a * c + b * e * self._d, a * e + b * c, self._d)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        a, b = self._a, self._b
        norm = a * a - b * b * self._d
        return FieldElem(a / norm, -b / norm, self._d)

    def __truediv__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "FieldElem":
        return FieldElem(self._a, -self._b, self._d)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if isinstance(other, FieldElem):
            return self._a == other._a and self._b == other._b and self._d == other._d
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        return not self.__le__(other)

    def __ge__(self, other: object) -> bool:
        return not self.__lt__(other)

    # -- integer parts ----------------------------------------------------------

    def floor(self) -> int:
        """Exact floor, via isqrt; no floating point."""
        if self._b == 0:
            return self._a.numerator // self._a.denominator
        # write self = (p + q*sqrt(D)) / r with integers p, q and r > 0
        ra, rb = self._a.denominator, self._b.denominator
        r = ra * rb // _gcd(ra, rb)
        p = self._a.numerator * (r // ra)
        q = self._b.numerator * (r // rb)
        s = isqrt(q * q * self._d)
        if q >= 0:
            approx = p + s          # q*sqrt(D) in [s, s+1)
        else:
            approx = p - s - 1      # q*sqrt(D) in (-s-1, -s]
        f = approx // r
        # correct the candidate with exact comparisons
        while (self - (f + 1)).sign() >= 0:
            f += 1
        while (self - f).sign() < 0:
            f -= 1
        return f

    def mod1(self) -> "FieldElem":
        """Canonical representative in [0, 1) of this element mod Z."""
        return self - self.floor()

    def __float__(self) -> float:
        # boundary conversions only (SVG output, informal ratio checks)
        return float(self._a) + float(self._b) * self._d ** 0.5

    # -- text form --------------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldElem({self._a!r}, {self._b!r}, d={self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        b = f"{self._b}" if self._b >= 0 else f"{-self._b}"
        op = "+" if self._b >= 0 else "-"
        if self._a == 0:
            return f"{'-' if self._b < 0 else ''}{b}sqrt{self._d}"
        return f"{self._a}{op}{b}sqrt{self._d}"


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


def fe(a: _RatLike, b: _RatLike = 0, d: int = 0) -> FieldElem:
    """Shorthand constructor."""
    return FieldElem(a, b, d)


def phi() -> FieldElem:
    """The golden ratio (1 + sqrt(5)) / 2 as an element of Q(sqrt(5))."""
    return FieldElem(Fraction(1, 2), Fraction(1, 2), 5)


_FE_RE = re.compile(
    r"""^\s*
        (?P<a>[+-]?\d+(?:/\d+)?)?
        \s*
        (?:
            (?P<sign>[+-])?\s*
            (?P<b>\d+(?:/\d+)?)?\s*
            (?:√|sqrt)\s*(?P<d>\d+)
        )?
        \s*$""",
    re.VERBOSE,
)


def parse_field_elem(text: str, d: int) -> FieldElem:
    """Parse "p/q" or "p/q+r/s sqrtD" (unicode √D also accepted)."""
    m = _FE_RE.match(text)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise ValueError(f"cannot parse field element {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(0)
    if m.group("d") is not None:
        dd = int(m.group("d"))
        if dd != d:
            raise FieldMixError(f"element in Q(sqrt({dd})) used in field D={d}")
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
        if m.group("a") and m.group("sign") is None:
            raise ValueError(f"cannot parse field element {text!r}")
    return FieldElem(a, b, d)


# ---------------------------------------------------------------------------
# Dense vectors and matrices over the field
# ---------------------------------------------------------------------------


class KVector:
    """Immutable dense vector with entries in one quadratic field."""

    __slots__ = ("entries", "d")

    def __init__(self, entries: Iterable[FieldElem], d: Optional[int] = None) -> None:
        items = tuple(entries)
        if not items and d is None:
            raise ValueError("empty vector needs an explicit field context")
        dd = items[0].d if d is None else d
        for x in items:
            if x.d != dd:
                raise FieldMixError("vector entries from different fields")
        self.entries = items
        self.d = dd

    @classmethod
    def from_rationals(cls, values: Sequence[_RatLike], d: int = 0) -> "KVector":
        return cls([FieldElem(v, 0, d) for v in values], d)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> FieldElem:
        return self.entries[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KVector):
            return NotImplemented
        return self.d == other.d and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.d, self.entries))

    def __add__(self, other: "KVector") -> "KVector":
        return KVector([x + y for x, y in zip(self.entries, other.entries, strict=True)], self.d)

    def __sub__(self, other: "KVector") -> "KVector":
        return KVector([x - y for x, y in zip(self.entries, other.entries, strict=True)], self.d)

    def __neg__(self) -> "KVector":
        return KVector([-x for x in self.entries], self.d)

    def scale(self, c: FieldElem | _RatLike) -> "KVector":
        return KVector([x * c for x in self.entries], self.d)

    def dot(self, other: "KVector") -> FieldElem:
        if len(self) != len(other):
            raise ValueError("dimension mismatch in dot product")
        acc = FieldElem(0, 0, self.d)
        for x, y in zip(self.entries, other.entries):
            acc = acc + x * y
        return acc

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def __repr__(self) -> str:
        return "KVector(" + ", ".join(str(x) for x in self.entries) + f"; d={self.d})"


class KMatrix:
    """Immutable dense matrix over one quadratic field.

    Solving and rank use fraction-free-enough Gauss-Jordan elimination with
    exact division; the reduced echelon form (leftmost pivots, pivots = 1) is
    the canonical form used throughout the package.
    """

    __slots__ = ("rows", "nrows", "ncols", "d")

    def __init__(self, rows: Iterable[Iterable[FieldElem]], ncols: Optional[int] = None,
                 d: Optional[int] = None) -> None:
        rr = tuple(tuple(r) for r in rows)
        if rr:
            nc = len(rr[0])
            dd = rr[0][0].d if (nc and d is None) else d
        else:
            nc, dd = ncols, d
        if nc is None or dd is None:
            raise ValueError("empty matrix needs explicit ncols and field context")
        for r in rr:
            if len(r) != nc:
                raise ValueError("ragged matrix rows")
            for x in r:
                if x.d != dd:
                    raise FieldMixError("matrix entries from different fields")
        self.rows = rr
        self.nrows = len(rr)
        self.ncols = nc
        self.d = dd

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_vectors(cls, vecs: Sequence[KVector], ncols: Optional[int] = None,
                     d: Optional[int] = None) -> "KMatrix":
        if vecs:
            return cls([v.entries for v in vecs])
        return cls([], ncols=ncols, d=d)

    @classmethod
    def from_columns(cls, cols: Sequence[KVector]) -> "KMatrix":
        n = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(n)])

    @classmethod
    def identity(cls, n: int, d: int = 0) -> "KMatrix":
        one, zero = FieldElem(1, 0, d), FieldElem(0, 0, d)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def row(self, i: int) -> KVector:
        return KVector(self.rows[i], self.d)

    def column(self, j: int) -> KVector:
        return KVector([r[j] for r in self.rows], self.d)

    def transpose(self) -> "KMatrix":
        return KMatrix([[self.rows[i][j] for i in range(self.nrows)]
                        for j in range(self.ncols)], ncols=self.nrows, d=self.d)

    def matvec(self, v: KVector) -> KVector:
        return KVector([self.row(i).dot(v) for i in range(self.nrows)],
                       self.d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KMatrix):
            return NotImplemented
        return (self.d == other.d and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.d, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.rows)
        return f"KMatrix[{self.nrows}x{self.ncols}; d={self.d}]({body})"

    # -- elimination ----------------------------------------------------------

    def _rref(self) -> tuple[list[list[FieldElem]], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices)."""
        m = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pr = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m, pivots

    def rref(self) -> "KMatrix":
        m, pivots = self._rref()
        return KMatrix(m[: len(pivots)], ncols=self.ncols, d=self.d)

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel_basis(self) -> list[KVector]:
        """Canonical basis of the right kernel, in reduced echelon form."""
        m, pivots = self._rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        zero, one = FieldElem(0, 0, self.d), FieldElem(1, 0, self.d)
        raw = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for i, p in enumerate(pivots):
                v[p] = -m[i][f]
            raw.append(v)
        if not raw:
            return []
        canon = KMatrix(raw, ncols=self.ncols, d=self.d).rref()
        return [canon.row(i) for i in range(canon.nrows)]

    def solve(self, b: KVector) -> Optional[tuple[KVector, list[KVector]]]:
        """Solve A x = b; returns (particular solution, kernel basis) or None.

        The kernel basis is in canonical reduced echelon form, so re-solving
        with it reproduces the same rows.
        """
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        aug = KMatrix([list(r) + [b[i]] for i, r in enumerate(self.rows)],
                      ncols=self.ncols + 1, d=self.d)
        m, pivots = aug._rref()
        if self.ncols in pivots:
            return None
        zero = FieldElem(0, 0, self.d)
        x = [zero] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = m[i][self.ncols]
        return KVector(x, self.d), self.kernel_basis()

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)
