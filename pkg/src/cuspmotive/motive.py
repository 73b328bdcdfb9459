"""Coefficient ring for all series in this package.

A :class:`MotiveClass` is a finite rational linear combination of

* Tate powers ``L^j`` (j >= 0), and
* cusp symbols ``S[k]*L^j`` with k even, k >= 4.

``S[k]`` stands for the weight-k cusp-form summand in the cohomology of a
symmetric power of the universal elliptic curve.  It is treated as an
opaque ring element: products of two cusp symbols never arise in the
computations here and are rejected loudly.  ``S[2]`` is not a basis
element; it rewrites to ``-L - 1`` on construction, which keeps every
identity uniform in small degrees.
"""

from __future__ import annotations

from fractions import Fraction


class UnsupportedCuspOperation(ValueError):
    """Raised for ring operations that would leave the supported span."""


def dim_cusp_forms(k: int) -> int:
    """Dimension of the space of level-one cusp forms of weight k."""
    if k < 0:
        raise ValueError("weight must be nonnegative")
    if k % 2 == 1 or k < 4:
        return 0
    if k % 12 == 2:
        return k // 12 - 1
    return k // 12


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class MotiveClass:
    """Immutable element of the Tate-plus-cusp coefficient ring."""

    __slots__ = ("_tate", "_cusp")

    def __init__(self, tate=None, cusp=None):
        t: dict[int, Fraction] = {}
        cu: dict[tuple[int, int], Fraction] = {}
        for j, c in (tate or {}).items():
            j = int(j)
            if j < 0:
                raise ValueError("negative Tate twists are not supported")
            c = _as_fraction(c)
            if c:
                t[j] = t.get(j, Fraction(0)) + c
        for (k, j), c in (cusp or {}).items():
            k, j = int(k), int(j)
            if k < 2 or k % 2 == 1:
                raise ValueError(f"cusp symbols need even weight >= 2, got {k}")
            if j < 0:
                raise ValueError("negative Tate twists are not supported")
            c = _as_fraction(c)
            if not c:
                continue
            if k == 2:
                # S[2] = -L - 1, so it never survives as a basis element
                t[j + 1] = t.get(j + 1, Fraction(0)) - c
                t[j] = t.get(j, Fraction(0)) - c
            else:
                cu[(k, j)] = cu.get((k, j), Fraction(0)) + c
        object.__setattr__(self, "_tate", {j: c for j, c in t.items() if c})
        object.__setattr__(self, "_cusp", {kj: c for kj, c in cu.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("MotiveClass is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "MotiveClass":
        return cls()

    @classmethod
    def one(cls) -> "MotiveClass":
        return cls(tate={0: 1})

    @classmethod
    def lefschetz(cls, power: int = 1) -> "MotiveClass":
        return cls(tate={power: 1})

    @classmethod
    def cusp(cls, k: int, twist: int = 0) -> "MotiveClass":
        return cls(cusp={(k, twist): 1})

    @classmethod
    def from_rational(cls, c) -> "MotiveClass":
        return cls(tate={0: _as_fraction(c)})

    # -- inspection ---------------------------------------------------

    def tate_items(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple(sorted(self._tate.items()))

    def cusp_items(self) -> tuple[tuple[tuple[int, int], Fraction], ...]:
        return tuple(sorted(self._cusp.items()))

    def tate_coefficient(self, j: int) -> Fraction:
        return self._tate.get(j, Fraction(0))

    def cusp_coefficient(self, k: int, j: int = 0) -> Fraction:
        return self._cusp.get((k, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._tate and not self._cusp

    def is_tate_only(self) -> bool:
        return not self._cusp

    def is_rational(self) -> bool:
        """True when the class is a plain rational multiple of L^0."""
        return not self._cusp and set(self._tate) <= {0}

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational scalar: {self!r}")
        return self._tate.get(0, Fraction(0))

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, MotiveClass):
            return x
        if isinstance(x, (int, Fraction)):
            return MotiveClass(tate={0: x})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._tate)
        for j, c in other._tate.items():
            t[j] = t.get(j, Fraction(0)) + c
        cu = dict(self._cusp)
        for kj, c in other._cusp.items():
            cu[kj] = cu.get(kj, Fraction(0)) + c
        return MotiveClass(tate=t, cusp={(k, j): c for (k, j), c in cu.items()})

    __radd__ = __add__

    def __neg__(self):
        return MotiveClass(
            tate={j: -c for j, c in self._tate.items()},
            cusp={kj: -c for kj, c in self._cusp.items()},
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._cusp and other._cusp:
            raise UnsupportedCuspOperation(
                "product of two cusp symbols is outside the supported ring"
            )
        tate: dict[int, Fraction] = {}
        cusp: dict[tuple[int, int], Fraction] = {}
        for j1, c1 in self._tate.items():
            for j2, c2 in other._tate.items():
                j = j1 + j2
                tate[j] = tate.get(j, Fraction(0)) + c1 * c2
        for (k, j1), c1 in self._cusp.items():
            for j2, c2 in other._tate.items():
                key = (k, j1 + j2)
                cusp[key] = cusp.get(key, Fraction(0)) + c1 * c2
        for (k, j2), c2 in other._cusp.items():
            for j1, c1 in self._tate.items():
                key = (k, j1 + j2)
                cusp[key] = cusp.get(key, Fraction(0)) + c1 * c2
        return MotiveClass(tate=tate, cusp=cusp)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MotiveClass":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = MotiveClass(tate={0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._tate == other._tate and self._cusp == other._cusp

    def __bool__(self):
        return not self.is_zero()

    __hash__ = None

    # -- extra structure ----------------------------------------------

    def adams(self, k: int) -> "MotiveClass":
        """k-th Adams operation: L^j -> L^(j*k).

        Defined on the Tate subring only; a cusp symbol has no canonical
        Adams image in this ring, so its presence is an error.
        """
        if k < 1:
            raise ValueError("Adams operations need k >= 1")
        if self._cusp:
            raise UnsupportedCuspOperation(
                "Adams operations are only defined on Tate-only classes"
            )
        return MotiveClass(tate={j * k: c for j, c in self._tate.items()})

    def dual_in_dimension(self, d: int) -> "MotiveClass":
        """Poincare dual for a class on a smooth proper space of dimension d.

        L^j pairs with L^(d-j); S[k]*L^j pairs with S[k]*L^(d-(k-1)-j).
        """
        tate = {d - j: c for j, c in self._tate.items()}
        cusp = {(k, d - (k - 1) - j): c for (k, j), c in self._cusp.items()}
        return MotiveClass(tate=tate, cusp=cusp)

    def rank(self) -> Fraction:
        """Rank of the associated virtual Galois representation."""
        r = sum(self._tate.values(), Fraction(0))
        for (k, _), c in self._cusp.items():
            r += 2 * dim_cusp_forms(k) * c
        return r

    def hodge_numbers(self) -> dict[tuple[int, int], Fraction]:
        """Virtual Hodge numbers; S[k] realizes in bidegrees (k-1,0),(0,k-1)."""
        hodge: dict[tuple[int, int], Fraction] = {}
        for j, c in self._tate.items():
            key = (j, j)
            hodge[key] = hodge.get(key, Fraction(0)) + c
        for (k, j), c in self._cusp.items():
            d = dim_cusp_forms(k)
            if d == 0:
                continue
            for key in ((k - 1 + j, j), (j, k - 1 + j)):
                hodge[key] = hodge.get(key, Fraction(0)) + d * c
        return {key: c for key, c in hodge.items() if c}

    def realize(self):
        """(rank, sorted list of (p, q, multiplicity)) of the realization."""
        rank = self.rank()
        if rank.denominator == 1:
            rank = int(rank)
        hodge = []
        for (p, q), c in sorted(self.hodge_numbers().items()):
            hodge.append((p, q, int(c) if c.denominator == 1 else c))
        return rank, hodge

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "tate": [[j, f"{c.numerator}/{c.denominator}"] for j, c in self.tate_items()],
            "cusp": [
                [k, j, f"{c.numerator}/{c.denominator}"]
                for (k, j), c in self.cusp_items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MotiveClass":
        tate = {int(j): Fraction(c) for j, c in data.get("tate", [])}
        cusp = {(int(k), int(j)): Fraction(c) for k, j, c in data.get("cusp", [])}
        return cls(tate=tate, cusp=cusp)

    # -- display ------------------------------------------------------

    @staticmethod
    def _fmt_coeff(c: Fraction, leading: bool, symbol: str) -> str:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if symbol and mag == 1:
            body = symbol
        elif symbol:
            body = f"{mag}*{symbol}"
        else:
            body = str(mag)
        if leading:
            return body if c > 0 else f"-{body}"
        return f" {sign} {body}"

    def __repr__(self):
        if self.is_zero():
            return "0"
        chunks = []
        for (k, j), c in sorted(self._cusp.items(), reverse=True):
            sym = f"S[{k}]"
            if j == 1:
                sym += "*L"
            elif j > 1:
                sym += f"*L^{j}"
            chunks.append(self._fmt_coeff(c, not chunks, sym))
        for j, c in sorted(self._tate.items(), reverse=True):
            sym = "" if j == 0 else ("L" if j == 1 else f"L^{j}")
            chunks.append(self._fmt_coeff(c, not chunks, sym))
        return "".join(chunks)


L = MotiveClass.lefschetz()
ONE = MotiveClass.one()
ZERO = MotiveClass.zero()
