from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from pitypical.errors import NonzeroConstant, SpecMismatch
from pitypical.services.field import LocalFieldSpec, OElement, Residue

from .power import PowerSeries

Rows = Tuple[Tuple[OElement, ...], ...]


@dataclass(frozen=True, eq=False)
class BivariateSeries:
    """
    Series in X, Y truncated at total degree D.

    ``rows[i][j]`` is the coefficient of X^i Y^j for i + j <= D, so row i has
    D - i + 1 entries.
    """

    spec: LocalFieldSpec
    rows: Rows

    def __post_init__(self) -> None:
        D = len(self.rows) - 1
        for i, row in enumerate(self.rows):
            if len(row) != D - i + 1:
                raise ValueError(f"row {i} must hold {D - i + 1} coefficients, got {len(row)}")

    @classmethod
    def zero(cls, spec: LocalFieldSpec, D: int) -> "BivariateSeries":
        z = OElement.zero(spec)
        return cls(spec, tuple((z,) * (D - i + 1) for i in range(D + 1)))

    @classmethod
    def from_terms(cls, spec: LocalFieldSpec, D: int, terms: Dict[Tuple[int, int], object]) -> "BivariateSeries":
        z = OElement.zero(spec)
        grid = [[z] * (D - i + 1) for i in range(D + 1)]
        for (i, j), value in terms.items():
            if i + j <= D:
                grid[i][j] = OElement.from_int(spec, value) if isinstance(value, int) else value
        return cls(spec, tuple(tuple(row) for row in grid))

    @classmethod
    def from_homogeneous(
        cls, spec: LocalFieldSpec, D: int, components: Sequence[Sequence[OElement]]
    ) -> "BivariateSeries":
        """Build from homogeneous parts; component d lists the X^i Y^{d-i} coefficients, i = 0..d."""
        z = OElement.zero(spec)
        grid = [[z] * (D - i + 1) for i in range(D + 1)]
        for d, component in enumerate(components[: D + 1]):
            for i, value in enumerate(component):
                grid[i][d - i] = value
        return cls(spec, tuple(tuple(row) for row in grid))

    @classmethod
    def from_univariate(cls, series: PowerSeries, var: str, D: int) -> "BivariateSeries":
        """Embed s(T) as s(X) or s(Y)."""
        if var not in ("X", "Y"):
            raise ValueError("var must be X or Y")
        D = min(D, series.D)
        terms = {((k, 0) if var == "X" else (0, k)): c for k, c in enumerate(series.coeffs[: D + 1])}
        return cls.from_terms(series.spec, D, terms)

    @property
    def D(self) -> int:
        return len(self.rows) - 1

    def coefficient(self, i: int, j: int) -> OElement:
        return self.rows[i][j]

    def homogeneous(self, d: int) -> List[OElement]:
        return [self.rows[i][d - i] for i in range(d + 1)]

    def terms(self) -> List[Tuple[int, int, OElement]]:
        """Nonzero monomials, ordered by total degree."""
        out = []
        for d in range(self.D + 1):
            for i in range(d + 1):
                c = self.rows[i][d - i]
                if not c.is_exact_zero():
                    out.append((i, d - i, c))
        return out

    def truncate(self, D: int) -> "BivariateSeries":
        if D > self.D:
            raise ValueError(f"cannot extend a series truncated at {self.D} to {D}")
        return BivariateSeries(self.spec, tuple(row[: D - i + 1] for i, row in enumerate(self.rows[: D + 1])))

    def with_spec(self, spec: LocalFieldSpec, exact: bool = False) -> "BivariateSeries":
        return BivariateSeries(
            spec, tuple(tuple(c.with_spec(spec, exact=exact) for c in row) for row in self.rows)
        )

    def _check(self, other: "BivariateSeries") -> int:
        if other.spec != self.spec:
            raise SpecMismatch("series over different field specs")
        return min(self.D, other.D)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        D = self._check(other)
        return BivariateSeries(
            self.spec,
            tuple(
                tuple(a + b for a, b in zip(self.rows[i][: D - i + 1], other.rows[i]))
                for i in range(D + 1)
            ),
        )

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(self.spec, tuple(tuple(-c for c in row) for row in self.rows))

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def scale(self, scalar: OElement) -> "BivariateSeries":
        return BivariateSeries(self.spec, tuple(tuple(c * scalar for c in row) for row in self.rows))

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return self.scale(other)
        D = self._check(other)
        z = OElement.zero(self.spec)
        grid = [[z] * (D - i + 1) for i in range(D + 1)]
        right = [t for t in other.terms() if t[0] + t[1] <= D]
        for i1, j1, a in self.terms():
            budget = D - i1 - j1
            if budget < 0:
                break
            for i2, j2, b in right:
                if i2 + j2 > budget:
                    break
                grid[i1 + i2][j1 + j2] = grid[i1 + i2][j1 + j2] + a * b
        return BivariateSeries(self.spec, tuple(tuple(row) for row in grid))

    def swap(self) -> "BivariateSeries":
        """F(Y, X)."""
        D = self.D
        return BivariateSeries(
            self.spec, tuple(tuple(self.rows[j][i] for j in range(D - i + 1)) for i in range(D + 1))
        )

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def restrict_x(self) -> PowerSeries:
        """F(X, 0) as a series in X."""
        return PowerSeries(self.spec, tuple(row[0] for row in self.rows), "X")

    def restrict_y(self) -> PowerSeries:
        """F(0, Y) as a series in Y."""
        return PowerSeries(self.spec, self.rows[0], "Y")

    def constant_term(self) -> OElement:
        return self.rows[0][0]

    def substitute(self, first: "BivariateSeries", second: "BivariateSeries") -> "BivariateSeries":
        """F(G(X,Y), H(X,Y)); G and H must vanish at the origin."""
        if not first.constant_term().is_zero() or not second.constant_term().is_zero():
            raise NonzeroConstant("substituted series must vanish at the origin")
        D = min(self.D, first.D, second.D)
        first, second = first.truncate(D), second.truncate(D)
        one = BivariateSeries.from_terms(self.spec, D, {(0, 0): 1})
        second_powers = _powers(second, D, one)

        result = BivariateSeries.zero(self.spec, D)
        # Horner in the first argument: Σ_i G^i · (Σ_j c_ij H^j)
        for i in range(D, -1, -1):
            inner = BivariateSeries.zero(self.spec, D)
            for j in range(D - i + 1):
                c = self.rows[i][j]
                if not c.is_exact_zero():
                    inner = inner + second_powers[j].scale(c)
            result = result * first + inner if i < D else inner
        return result

    def specialize(self, first: PowerSeries, second: PowerSeries) -> PowerSeries:
        """F(s(T), t(T)) for univariate s, t vanishing at 0."""
        if not first.coeffs[0].is_zero() or not second.coeffs[0].is_zero():
            raise NonzeroConstant("substituted series must vanish at the origin")
        D = min(self.D, first.D, second.D)
        first, second = first.truncate(D), second.truncate(D)
        second_powers = [PowerSeries.one(self.spec, D, second.var)]
        for _ in range(D):
            second_powers.append(second_powers[-1] * second)

        result = PowerSeries.zero(self.spec, D, first.var)
        for i in range(D, -1, -1):
            inner = PowerSeries.zero(self.spec, D, first.var)
            for j in range(D - i + 1):
                c = self.rows[i][j]
                if not c.is_exact_zero():
                    inner = inner + PowerSeries(self.spec, second_powers[j].coeffs, first.var).scale(c)
            result = result * first + inner if i < D else inner
        return result

    def reduce_mod_pi(self) -> Tuple[Tuple[Residue, ...], ...]:
        return tuple(tuple(c.residue() for c in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        D = self._check(other)
        return all(
            a == b
            for i in range(D + 1)
            for a, b in zip(self.rows[i][: D - i + 1], other.rows[i][: D - i + 1])
        )

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        terms = [f"{c!r}*X^{i}*Y^{j}" for i, j, c in self.terms() if not c.is_zero()]
        return f"BivariateSeries(D={self.D}, {' + '.join(terms) or '0'})"


def _powers(series: BivariateSeries, D: int, one: BivariateSeries) -> List[BivariateSeries]:
    powers = [one]
    for _ in range(D):
        powers.append(powers[-1] * series)
    return powers
