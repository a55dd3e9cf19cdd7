from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, Union

from pitypical.errors import NonzeroConstant, NotDivisible, NotUnit, SpecMismatch
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement, Residue, ResidueField

Coefficient = Union[OElement, LaurentScalar]


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """
    Series truncated at degree D (``coeffs`` has length D+1).

    Coefficients are OElements, or LaurentScalars when ``laurent`` is set.
    Binary operations return the smaller truncation of their operands.
    """

    spec: LocalFieldSpec
    coeffs: Tuple[Coefficient, ...]
    var: str = "T"
    laurent: bool = False

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")
        if self.laurent:
            coeffs = tuple(LaurentScalar.lift(c, self.spec) for c in self.coeffs)
            object.__setattr__(self, "coeffs", coeffs)
        elif any(isinstance(c, LaurentScalar) for c in self.coeffs):
            raise TypeError("LaurentScalar coefficients need laurent=True")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spec: LocalFieldSpec, D: int, var: str = "T", laurent: bool = False) -> "PowerSeries":
        return cls(spec, (_zero(spec, laurent),) * (D + 1), var, laurent)

    @classmethod
    def one(cls, spec: LocalFieldSpec, D: int, var: str = "T") -> "PowerSeries":
        return cls.from_coeffs(spec, [OElement.one(spec)], D, var)

    @classmethod
    def variable(cls, spec: LocalFieldSpec, D: int, var: str = "T") -> "PowerSeries":
        return cls.from_coeffs(spec, [0, 1], D, var)

    @classmethod
    def monomial(cls, spec: LocalFieldSpec, degree: int, D: int, var: str = "T") -> "PowerSeries":
        return cls.from_coeffs(spec, [0] * degree + [1], D, var)

    @classmethod
    def from_coeffs(
        cls,
        spec: LocalFieldSpec,
        coeffs: Sequence[Union[Coefficient, int]],
        D: int,
        var: str = "T",
        laurent: bool = False,
    ) -> "PowerSeries":
        """Pad with exact zeros (or truncate) to length D+1."""
        laurent = laurent or any(isinstance(c, LaurentScalar) for c in coeffs)
        items: List[Coefficient] = []
        for c in list(coeffs)[: D + 1]:
            items.append(OElement.from_int(spec, c) if isinstance(c, int) else c)
        items.extend([_zero(spec, laurent)] * (D + 1 - len(items)))
        return cls(spec, tuple(items), var, laurent)

    # -- views --------------------------------------------------------------

    @property
    def D(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> Coefficient:
        return self.coeffs[index]

    def degree(self) -> int:
        """Index of the last coefficient that is not an exact zero (-1 for the zero series)."""
        for index in range(self.D, -1, -1):
            if not self.coeffs[index].is_exact_zero():
                return index
        return -1

    def t_valuation(self) -> int:
        """First index with a nonzero coefficient at precision; D+1 if none."""
        for index, c in enumerate(self.coeffs):
            if not c.is_zero():
                return index
        return self.D + 1

    def is_integral(self) -> bool:
        if not self.laurent:
            return True
        return all(c.is_integral() is not False for c in self.coeffs)

    # -- conversions --------------------------------------------------------

    def to_laurent(self) -> "PowerSeries":
        if self.laurent:
            return self
        return PowerSeries(self.spec, self.coeffs, self.var, True)

    def to_integral(self) -> "PowerSeries":
        if not self.laurent:
            return self
        return PowerSeries(self.spec, tuple(c.to_integral() for c in self.coeffs), self.var, False)

    def truncate(self, D: int) -> "PowerSeries":
        if D > self.D:
            raise ValueError(f"cannot extend a series truncated at {self.D} to {D}")
        return PowerSeries(self.spec, self.coeffs[: D + 1], self.var, self.laurent)

    def with_spec(self, spec: LocalFieldSpec, exact: bool = False) -> "PowerSeries":
        return PowerSeries(
            spec, tuple(c.with_spec(spec, exact=exact) for c in self.coeffs), self.var, self.laurent
        )

    def map(self, fn: Callable[[Coefficient], Coefficient]) -> "PowerSeries":
        return PowerSeries.from_coeffs(self.spec, [fn(c) for c in self.coeffs], self.D, self.var)

    # -- arithmetic ---------------------------------------------------------

    def _align(self, other: "PowerSeries") -> Tuple["PowerSeries", "PowerSeries", int]:
        if not isinstance(other, PowerSeries):
            raise TypeError(f"expected PowerSeries, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch("series over different field specs")
        if other.var != self.var:
            raise SpecMismatch(f"series in different variables {self.var} and {other.var}")
        a, b = self, other
        if a.laurent != b.laurent:
            a, b = a.to_laurent(), b.to_laurent()
        return a, b, min(a.D, b.D)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        a, b, D = self._align(other)
        return PowerSeries(
            self.spec, tuple(x + y for x, y in zip(a.coeffs[: D + 1], b.coeffs)), self.var, a.laurent
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        a, b, D = self._align(other)
        return PowerSeries(
            self.spec, tuple(x - y for x, y in zip(a.coeffs[: D + 1], b.coeffs)), self.var, a.laurent
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.spec, tuple(-c for c in self.coeffs), self.var, self.laurent)

    def scale(self, scalar: Union[Coefficient, int]) -> "PowerSeries":
        laurent = self.laurent or isinstance(scalar, LaurentScalar)
        base = self.to_laurent() if laurent else self
        return PowerSeries(self.spec, tuple(c * scalar for c in base.coeffs), self.var, laurent)

    def __mul__(self, other: Union["PowerSeries", Coefficient, int]) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        a, b, D = self._align(other)
        zero = _zero(self.spec, a.laurent)
        out: List[Coefficient] = [zero] * (D + 1)
        right = [(j, c) for j, c in enumerate(b.coeffs[: D + 1]) if not c.is_exact_zero()]
        for i, x in enumerate(a.coeffs[: D + 1]):
            if x.is_exact_zero():
                continue
            for j, y in right:
                if i + j > D:
                    break
                out[i + j] = out[i + j] + x * y
        return PowerSeries(self.spec, tuple(out), self.var, a.laurent)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PowerSeries":
        if exponent < 0:
            raise ValueError("negative powers need invert_unit")
        result = PowerSeries.one(self.spec, self.D, self.var)
        if self.laurent:
            result = result.to_laurent()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        a, b, D = self._align(other)
        return all(x == y for x, y in zip(a.coeffs[: D + 1], b.coeffs[: D + 1]))

    def __hash__(self) -> int:
        return hash((self.spec, self.var))

    def __repr__(self) -> str:
        terms = [f"{c!r}*{self.var}^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"PowerSeries(D={self.D}, {' + '.join(terms) or '0'})"

    # -- structure ----------------------------------------------------------

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        return compose(self, inner)

    def __call__(self, inner: "PowerSeries") -> "PowerSeries":
        return compose(self, inner)

    def shift_down(self, k: int) -> "PowerSeries":
        """Divide by T^k; the low coefficients must vanish. Truncation drops by k."""
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise NotDivisible(f"series is not divisible by {self.var}^{k}")
        if k > self.D:
            raise NotDivisible(f"nothing left after dividing by {self.var}^{k}")
        return PowerSeries(self.spec, self.coeffs[k:], self.var, self.laurent)

    def div_pi(self, k: int = 1) -> "PowerSeries":
        """Coefficientwise exact division by π^k."""
        if self.laurent:
            return PowerSeries(self.spec, tuple(c.div_pi(k) for c in self.coeffs), self.var, True)
        return PowerSeries(self.spec, tuple(c.div_pi_exact(k) for c in self.coeffs), self.var)

    def evaluate(self, point: Union[Coefficient, int]) -> Coefficient:
        """Horner evaluation; meaningful for polynomials (everything above the degree is zero)."""
        if isinstance(point, int):
            point = OElement.from_int(self.spec, point)
        if self.laurent and isinstance(point, OElement):
            point = LaurentScalar(point)
        top = self.degree()
        if top < 0:
            return _zero(self.spec, self.laurent)
        acc = self.coeffs[top]
        for index in range(top - 1, -1, -1):
            acc = acc * point + self.coeffs[index]
        return acc

    def invert_unit(self) -> "PowerSeries":
        return invert_unit(self)

    def exact_divide(self, other: "PowerSeries") -> "PowerSeries":
        return exact_divide(self, other)


def _zero(spec: LocalFieldSpec, laurent: bool) -> Coefficient:
    return LaurentScalar.zero(spec) if laurent else OElement.zero(spec)


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer∘inner by Horner's scheme; needs inner(0) = 0 and keeps min(D)."""
    if not inner.coeffs[0].is_zero():
        raise NonzeroConstant("inner series has a nonzero constant term")
    if outer.spec != inner.spec:
        raise SpecMismatch("series over different field specs")
    D = min(outer.D, inner.D)
    inner = PowerSeries(inner.spec, inner.coeffs[: D + 1], outer.var, inner.laurent)
    laurent = outer.laurent or inner.laurent
    # outer terms above D only reach degrees above D
    top = min(outer.degree(), D)
    if top < 0:
        return PowerSeries.zero(outer.spec, D, outer.var, laurent)
    result = PowerSeries.from_coeffs(outer.spec, [outer.coeffs[top]], D, outer.var, laurent)
    for index in range(top - 1, -1, -1):
        result = result * inner
        constant = result.coeffs[0] + outer.coeffs[index]
        result = PowerSeries(outer.spec, (constant,) + result.coeffs[1:], outer.var, result.laurent)
    return result


def invert_unit(series: PowerSeries) -> PowerSeries:
    """h with series·h = 1 mod T^{D+1}; the constant term must be a unit of o_L."""
    head = series.coeffs[0]
    if isinstance(head, LaurentScalar):
        if head.denom_exp != 0:
            raise NotUnit("constant term has a π-denominator")
        head = head.num
    if head.val_pi() != 0:
        raise NotUnit("constant term is not a unit of o_L")
    h0 = head.inverse()
    if series.laurent:
        h0 = LaurentScalar(h0)
    out: List[Coefficient] = [h0]
    for n in range(1, series.D + 1):
        acc = _zero(series.spec, series.laurent)
        for i in range(1, n + 1):
            c = series.coeffs[i]
            if not c.is_exact_zero():
                acc = acc + c * out[n - i]
        out.append(-(h0 * acc))
    return PowerSeries(series.spec, tuple(out), series.var, series.laurent)


def exact_divide(numerator: PowerSeries, denominator: PowerSeries) -> PowerSeries:
    """
    numerator / denominator where denominator = T^k·u with u a unit series.

    The numerator must vanish below degree k; truncation drops by k.
    """
    k = denominator.t_valuation()
    if k > denominator.D:
        raise NotDivisible("division by a series that vanishes at precision")
    lead = denominator.coeffs[k]
    lead_num = lead.num if isinstance(lead, LaurentScalar) and lead.denom_exp == 0 else lead
    if not isinstance(lead_num, OElement) or lead_num.val_pi() != 0:
        raise NotDivisible(
            f"denominator is not {denominator.var}^{k} times a unit series"
        )
    shifted_num = numerator.shift_down(k)
    shifted_den = denominator.shift_down(k)
    return shifted_num * invert_unit(shifted_den)


@dataclass(frozen=True)
class ResidueSeries:
    """Series over k_L, the coefficientwise reduction mod π."""

    spec: LocalFieldSpec
    coeffs: Tuple[Residue, ...]

    @property
    def D(self) -> int:
        return len(self.coeffs) - 1

    def t_valuation(self) -> int:
        for index, c in enumerate(self.coeffs):
            if any(c):
                return index
        return self.D + 1

    def __add__(self, other: "ResidueSeries") -> "ResidueSeries":
        field = ResidueField(self.spec)
        D = min(self.D, other.D)
        return ResidueSeries(self.spec, tuple(field.add(a, b) for a, b in zip(self.coeffs[: D + 1], other.coeffs)))

    def __mul__(self, other: "ResidueSeries") -> "ResidueSeries":
        field = ResidueField(self.spec)
        D = min(self.D, other.D)
        out = [field.zero] * (D + 1)
        for i, a in enumerate(self.coeffs[: D + 1]):
            if not any(a):
                continue
            for j in range(D + 1 - i):
                b = other.coeffs[j]
                if any(b):
                    out[i + j] = field.add(out[i + j], field.mul(a, b))
        return ResidueSeries(self.spec, tuple(out))

    def as_lists(self) -> List[List[int]]:
        return [list(c) for c in self.coeffs]


@dataclass(frozen=True)
class Reductions:
    """
    Residue series and T-adic valuation of a series.

    ``caveat`` is set when a coefficient below the valuation is zero only at
    its precision, so the true valuation may be smaller.
    """

    residues: ResidueSeries
    t_valuation: int
    caveat: bool


def reductions(series: PowerSeries) -> Reductions:
    """Coefficientwise reduction mod π together with the T-adic valuation of ``series``."""
    integral = series.to_integral() if series.laurent else series
    residues = tuple(c.residue() for c in integral.coeffs)
    valuation = series.t_valuation()
    caveat = any(not c.is_exact_zero() for c in series.coeffs[:valuation])
    return Reductions(ResidueSeries(series.spec, residues), valuation, caveat)
