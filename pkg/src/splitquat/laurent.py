"""Exact Laurent polynomials in the matrix entries z11, z12, z21, z22.

Coefficients are Gaussian rationals (Fraction real and imaginary parts),
so every identity between discrete-series matrix coefficients can be
checked with zero tolerance.  Negative exponents are allowed on z11 and
z22 only; z12, z21 stay polynomial, matching the spans where the
discrete-series coefficients live.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Biquaternion
from .errors import NotInvertibleSpan

__all__ = ["QQi", "LaurentPoly"]


class QQi:
    """A Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, value) -> "QQi":
        if isinstance(value, QQi):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    def __add__(self, other):
        o = QQi.of(other)
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = QQi.of(other)
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return QQi.of(other) - self

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __mul__(self, other):
        o = QQi.of(other)
        return QQi(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = QQi.of(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero QQi")
        return QQi((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __eq__(self, other):
        o = QQi.of(other)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


_VARS = ("z11", "z12", "z21", "z22")


class LaurentPoly:
    """Finitely supported map from exponent 4-tuples to QQi coefficients.

    Exponent tuple order is (z11, z12, z21, z22); z12 and z21 exponents
    must be nonnegative.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int, int, int], QQi] | None = None):
        clean: dict[tuple[int, int, int, int], QQi] = {}
        for expo, coeff in (terms or {}).items():
            c = QQi.of(coeff)
            if not c:
                continue
            a, b, cc, d = expo
            if b < 0 or cc < 0:
                raise ValueError("negative exponents on z12/z21 are not allowed")
            clean[(a, b, cc, d)] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def constant(c) -> "LaurentPoly":
        return LaurentPoly({(0, 0, 0, 0): QQi.of(c)})

    @staticmethod
    def monomial(expo: tuple[int, int, int, int], coeff=1) -> "LaurentPoly":
        return LaurentPoly({expo: QQi.of(coeff)})

    @staticmethod
    def variable(name: str) -> "LaurentPoly":
        i = _VARS.index(name)
        expo = [0, 0, 0, 0]
        expo[i] = 1
        return LaurentPoly({tuple(expo): QQi(1)})

    @staticmethod
    def det() -> "LaurentPoly":
        """N(Z) = z11 z22 - z12 z21."""
        return LaurentPoly({(1, 0, 0, 1): QQi(1), (0, 1, 1, 0): QQi(-1)})

    # -- ring operations --------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for expo, c in other.terms.items():
            s = out.get(expo, QQi()) + c
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out: dict[tuple[int, int, int, int], QQi] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                    s = out.get(e, QQi()) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return LaurentPoly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        cc = QQi.of(c)
        if not cc:
            return LaurentPoly.zero()
        return LaurentPoly({e: cc * v for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus ----------------------------------------------------------
    def partial(self, var: str) -> "LaurentPoly":
        i = _VARS.index(var)
        out: dict[tuple[int, int, int, int], QQi] = {}
        for expo, c in self.terms.items():
            k = expo[i]
            if k == 0:
                continue
            e = list(expo)
            e[i] = k - 1
            key = tuple(e)
            s = out.get(key, QQi()) + c * k
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(out)

    def wave_apply(self) -> "LaurentPoly":
        """The ultrahyperbolic operator d2/dz11 dz22 - d2/dz12 dz21."""
        return self.partial("z11").partial("z22") - self.partial("z12").partial("z21")

    def dphi(self, mat: list[list["LaurentPoly"]]) -> "LaurentPoly":
        """Directional derivative sum_ij M_ij d(self)/dz_ij for a matrix M
        of LaurentPoly entries (indexing M[0][0] ~ z11 slot, etc.)."""
        names = (("z11", "z12"), ("z21", "z22"))
        out = LaurentPoly.zero()
        for i in range(2):
            for j in range(2):
                out = out + mat[i][j] * self.partial(names[i][j])
        return out

    def degree_homogeneous_parts(self) -> dict[int, "LaurentPoly"]:
        parts: dict[int, dict] = {}
        for expo, c in self.terms.items():
            d = sum(expo)
            parts.setdefault(d, {})[expo] = c
        return {d: LaurentPoly(t) for d, t in parts.items()}

    def euler_degree_apply(self) -> "LaurentPoly":
        """deg phi = phi + sum z_ij d(phi)/dz_ij (the shifted degree operator)."""
        out: dict[tuple[int, int, int, int], QQi] = {}
        for expo, c in self.terms.items():
            out[expo] = c * (1 + sum(expo))
        return LaurentPoly(out)

    def inversion_map(self) -> "LaurentPoly":
        """phi(Z) -> N(Z)^{-1} phi(Z / N(Z)), on the closed span only.

        A monomial of total degree d maps to N^{-1-d} times itself; this
        stays Laurent only when d <= -1 on every homogeneous component.
        """
        n = LaurentPoly.det()
        out = LaurentPoly.zero()
        for d, part in self.degree_homogeneous_parts().items():
            power = -1 - d
            if power < 0:
                raise NotInvertibleSpan(
                    f"homogeneous component of degree {d} leaves the Laurent span"
                )
            npow = LaurentPoly.constant(1)
            for _ in range(power):
                npow = npow * n
            out = out + npow * part
        return out

    # -- evaluation -----------------------------------------------------------
    def evaluate(self, Z: Biquaternion) -> complex:
        vals = (Z.z11, Z.z12, Z.z21, Z.z22)
        total = 0j
        for expo, c in self.terms.items():
            term = complex(c)
            for v, k in zip(vals, expo):
                if k:
                    term *= v**k
            total += term
        return total

    def evaluate_exact(self, z11: QQi, z12: QQi, z21: QQi, z22: QQi) -> QQi:
        vals = (z11, z12, z21, z22)
        total = QQi()
        for expo, c in self.terms.items():
            term = c
            for v, k in zip(vals, expo):
                if k > 0:
                    for _ in range(k):
                        term = term * v
                elif k < 0:
                    for _ in range(-k):
                        term = term / v
            total = total + term
        return total

    # -- serialization ----------------------------------------------------------
    def canonical_text(self) -> str:
        """Sorted, exact text form: `coeff * z11^a z12^b z21^c z22^d` per term."""
        if not self.terms:
            return "0"
        pieces = []
        for expo in sorted(self.terms):
            c = self.terms[expo]
            mono = " ".join(f"{v}^{k}" for v, k in zip(_VARS, expo) if k != 0)
            pieces.append(f"{c} * {mono}" if mono else f"{c} * 1")
        return " + ".join(pieces)

    @staticmethod
    def from_canonical_text(text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return LaurentPoly.zero()
        terms: dict[tuple[int, int, int, int], QQi] = {}
        for piece in text.split(" + "):
            coeff_str, _, mono = piece.partition(" * ")
            coeff = _parse_qqi(coeff_str)
            expo = [0, 0, 0, 0]
            if mono.strip() != "1":
                for factor in mono.split():
                    name, _, power = factor.partition("^")
                    expo[_VARS.index(name)] = int(power)
            terms[tuple(expo)] = coeff
        return LaurentPoly(terms)

    def __repr__(self):
        return f"LaurentPoly({self.canonical_text()})"


def _parse_qqi(s: str) -> QQi:
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        body = s[1:-1]
        # split at the sign of the imaginary part: ...±...i
        for k in range(1, len(body)):
            if body[k] in "+-" and body[k - 1] not in "/+-(":
                re_part = body[:k]
                im_part = body[k:-1] if body.endswith("i") else body[k:]
                return QQi(Fraction(re_part), Fraction(im_part.replace("+", "", 1)))
        raise ValueError(f"cannot parse complex coefficient {s!r}")
    if s.endswith("i"):
        return QQi(0, Fraction(s[:-1]))
    return QQi(Fraction(s))
