"""
Self-test suites, one per family of invariants. Each suite registers itself
with the SuiteRegistry on import.
"""
from __future__ import annotations

import logging
import random
from typing import Dict, List, Tuple

from pitypical.config import DefaultConfig
from pitypical.services.checks import CheckResult
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement, div_pi_exact
from pitypical.services.lubin_tate import (
    associativity_check,
    build_group_law,
    commutativity_check,
    default_frobenius,
    endomorphism_checks,
    equivariance_check,
    f_model,
    genus_cp,
    height,
    honda_model,
    unit_check,
)
from pitypical.services.presets import BUILTIN_PRESETS, load_preset
from pitypical.services.prism import (
    compute_qn,
    cyclotomic_frobenius,
    cyclotomic_qn,
    ideal_power_check,
    verify_prism_condition,
)
from pitypical.services.series import BivariateSeries, PowerSeries, compose, exact_divide, invert_unit
from pitypical.services.theta import (
    frobenius_identity_check,
    leading_coefficient_check,
    recursion_identity_check,
    theta_eval_check,
    theta_value,
)
from pitypical.services.witt import (
    CARRIER_OFIELD,
    CARRIER_SERIES,
    CARRIER_ZMOD,
    WittPair,
    canonical_delta,
    delta_of_one_check,
    delta_of_variable_check,
    derived_rules_check,
    identity_delta,
    lift_reconstruction_check,
    make_carrier,
    ring_axiom_report,
    section_check,
    witt_mul,
    witt_mul_literal,
)

from .registry import SuiteRegistry

logger = logging.getLogger(__name__)

Options = Dict[str, object]


def _specs() -> List[Tuple[str, LocalFieldSpec]]:
    return [(name, load_preset(name)) for name in sorted(BUILTIN_PRESETS)]


def _tagged(label: str, results: List[CheckResult]) -> List[CheckResult]:
    for result in results:
        result.name = f"{label}:{result.name}"
    return results


def _merged(runs: List[List[CheckResult]]) -> List[CheckResult]:
    """One result per check name over repeated runs; details list the failing run indices."""
    merged = []
    for position, first in enumerate(runs[0]):
        failures = [index for index, run in enumerate(runs) if not run[position].passed]
        details = {**first.details, "runs": len(runs), "failures": failures}
        merged.append(CheckResult(first.name, not failures, details))
    return merged


def _random_series(spec: LocalFieldSpec, rng: random.Random, D: int, constant: bool = True) -> PowerSeries:
    coeffs = [OElement.random(spec, rng) for _ in range(D + 1)]
    if not constant:
        coeffs[0] = OElement.zero(spec)
    return PowerSeries.from_coeffs(spec, coeffs, D)


class FieldSuite:
    name = "field-core"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        results = []
        for label, spec in _specs():
            samples = [OElement.random(spec, rng) for _ in range(200)]
            pi = OElement.pi(spec)
            results.append(
                CheckResult(
                    f"{label}:frobenius-congruence",
                    all((a ** spec.q - a).val_pi() >= 1 for a in samples),
                    {"samples": len(samples)},
                )
            )
            results.append(
                CheckResult(
                    f"{label}:div-pi-roundtrip",
                    all(
                        div_pi_exact(a * pi ** k, k) == a
                        for a in samples[:50]
                        for k in range(1, 2 * spec.e + 1)
                    ),
                    {"samples": 50},
                )
            )
            triples = list(zip(samples[0::3], samples[1::3], samples[2::3]))
            results.append(
                CheckResult(
                    f"{label}:ring-axioms",
                    all(
                        (a + b) + c == a + (b + c)
                        and (a * b) * c == a * (b * c)
                        and a * b == b * a
                        and a * (b + c) == a * b + a * c
                        for a, b, c in triples
                    ),
                    {"triples": len(triples)},
                )
            )
            valuation_ok = True
            for a, b in zip(samples[0::2], samples[1::2]):
                va, vb = a.val_pi(), b.val_pi()
                if va + vb < spec.e * spec.M:
                    valuation_ok = valuation_ok and (a * b).val_pi() == va + vb
            results.append(CheckResult(f"{label}:valuation-additive", valuation_ok, {"pairs": 100}))
        return results


class SeriesSuite:
    name = "series-core"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        results = []
        D = 12
        for label, spec in _specs():
            pi = OElement.pi(spec)
            unit = _random_series(spec, rng, D)
            unit = PowerSeries(spec, (1 + pi * unit[0],) + unit.coeffs[1:])
            one = PowerSeries.one(spec, D)
            results.append(CheckResult(f"{label}:invert-unit", unit * invert_unit(unit) == one, {"D": D}))

            h = _random_series(spec, rng, D)
            t_squared = PowerSeries.monomial(spec, 2, D)
            quotient = exact_divide(t_squared * unit * h, t_squared * unit)
            results.append(CheckResult(f"{label}:exact-divide", quotient == h.truncate(D - 2), {"D": D}))

            a = _random_series(spec, rng, D)
            b = _random_series(spec, rng, D, constant=False)
            c = _random_series(spec, rng, D, constant=False)
            results.append(
                CheckResult(
                    f"{label}:compose-associative",
                    compose(compose(a, b), c) == compose(a, compose(b, c)),
                    {"D": D},
                )
            )
        return results


class GroupLawSuite:
    name = "lt-group-law"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        D = int(options.get("degree", DefaultConfig.SELFTEST_DEGREE))
        results = []
        for label, spec in _specs():
            frobenius = default_frobenius(spec, D)
            law = build_group_law(frobenius, D)
            half = max(D // 2, 1)
            terms = {
                (i, d - i): OElement.random(spec, rng) for d in range(1, half + 1) for i in range(d + 1)
            }
            third = BivariateSeries.from_terms(spec, half, terms)
            checks = [
                unit_check(law),
                commutativity_check(law),
                equivariance_check(law, frobenius),
                associativity_check(law, third),
            ]
            if label == "q2":
                multiplicative = BivariateSeries.from_terms(spec, D, {(1, 0): 1, (0, 1): 1, (1, 1): 1})
                checks.append(CheckResult("multiplicative-oracle", law == multiplicative, {"D": D}))
            results.extend(_tagged(label, checks))
        return results


class EndomorphismSuite:
    name = "lt-endomorphisms"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        D = int(options.get("degree", DefaultConfig.SELFTEST_DEGREE))
        results = []
        for label, spec in _specs():
            frobenius = default_frobenius(spec, D)
            model = f_model(frobenius, D)
            pairs = [(OElement.random(spec, rng), OElement.random(spec, rng)) for _ in range(20)]
            checks = _merged([endomorphism_checks(model, a, b, D) for a, b in pairs])
            checks.append(
                CheckResult("pi-is-f", model.endomorphism(OElement.pi(spec)) == frobenius.series, {"D": D})
            )
            checks.append(
                CheckResult("one-is-identity", model.endomorphism(1) == PowerSeries.variable(spec, D), {"D": D})
            )
            valuation, found = height(frobenius, D)
            checks.append(
                CheckResult(
                    "height",
                    valuation == spec.p ** spec.n and found == spec.n,
                    {"valuation": valuation, "expected": spec.p ** spec.n},
                )
            )
            results.extend(_tagged(label, checks))
        return results


class GenusSuite:
    name = "lt-genus"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        results = []
        D = 41
        for label in ("q2", "q2-ramified", "q3"):
            spec = load_preset(label)
            model = honda_model(spec, D, law_degree=4)
            pi = OElement.pi(spec)
            special = {spec.q ** k - 1: k for k in range(4) if spec.q ** k - 1 <= D - 1}
            failures = []
            for m in range(1, D):
                value = genus_cp(model, m)
                if m in special:
                    k = special[m]
                    expected = LaurentScalar(OElement.from_int(spec, spec.q ** k), k)
                else:
                    expected = LaurentScalar.zero(spec)
                if value != expected:
                    failures.append(m)
            results.append(
                CheckResult(
                    f"{label}:honda-genus",
                    not failures,
                    {"checked": D - 1, "failures": failures, "special": sorted(special)},
                )
            )
            results.append(
                CheckResult(
                    f"{label}:honda-pi-linear-term",
                    model.frobenius.series[1] == pi,
                    {"law_degree": model.law.D},
                )
            )

        spec = load_preset("q2")
        model = f_model(default_frobenius(spec, 21), 21, law_degree=2)
        todd = all(genus_cp(model, m) == (-1) ** m for m in range(1, 21))
        results.append(CheckResult("q2:f-model-todd-signs", todd, {"checked": 20}))
        return results


class WittSuite:
    name = "witt-axioms"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        mul = witt_mul_literal if options.get("literal_witt") else witt_mul
        results = []
        runs = [
            ("q2", CARRIER_ZMOD, 200),
            ("q3", CARRIER_ZMOD, 200),
            ("q2-ramified", CARRIER_OFIELD, 200),
            ("q4-unramified", CARRIER_OFIELD, 50),
            ("q2", CARRIER_SERIES, 10),
        ]
        for label, carrier_name, trials in runs:
            carrier = make_carrier(carrier_name, load_preset(label), D=6)
            report = ring_axiom_report(carrier, trials, rng.randrange(2 ** 32), mul=mul)
            results.extend(_tagged(f"{label}:{carrier_name}", report))

        carrier = make_carrier(CARRIER_ZMOD, load_preset("q2"))
        one_one = WittPair.of(carrier, 1, 1)
        results.append(
            CheckResult(
                "q2:zmod:examples",
                one_one + one_one == WittPair.of(carrier, 2, 1)
                and mul(one_one, one_one) == WittPair.of(carrier, 1, 4)
                and mul(WittPair.of(carrier, 2, 0), WittPair.of(carrier, 0, 1)) == WittPair.of(carrier, 0, 4),
                {},
            )
        )
        return results


class LiteralWittRegressionSuite:
    """The uncrossed multiplication must be caught by the ghost test."""

    name = "witt-literal-regression"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        carrier = make_carrier(CARRIER_ZMOD, load_preset("q2"))
        report = ring_axiom_report(carrier, 20, rng.randrange(2 ** 32), mul=witt_mul_literal)
        ghost = next(result for result in report if result.name == "ghost-multiplicative")
        return [
            CheckResult(
                "q2:literal-rule-detected",
                not ghost.passed,
                {"ghost_multiplicative": ghost.to_dict()},
            )
        ]


class DeltaSuite:
    name = "delta"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        results = []
        D = 8
        for label, spec in _specs():
            frobenius = default_frobenius(spec, D)
            delta = canonical_delta(frobenius, D)
            pairs = [(delta.carrier.random(rng), delta.carrier.random(rng)) for _ in range(100)]
            checks = [
                delta_of_one_check(delta),
                delta_of_variable_check(delta, frobenius, D),
                section_check(delta, pairs),
                derived_rules_check(delta, pairs),
                lift_reconstruction_check(delta, [a for a, _ in pairs]),
            ]
            constant_carrier = make_carrier(CARRIER_OFIELD, spec)
            constants = identity_delta(constant_carrier)
            constant_pairs = [(OElement.random(spec, rng), OElement.random(spec, rng)) for _ in range(100)]
            checks.append(section_check(constants, constant_pairs))
            results.extend(_tagged(label, checks))
        return results


class ThetaSuite:
    name = "theta"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        results = []
        for label, spec in _specs():
            points = [OElement.random(spec, rng) for _ in range(100)]
            checks = [theta_eval_check(spec, k, points) for k in range(1, 5)]
            for check in checks:
                check.details.pop("values", None)
            checks.append(frobenius_identity_check(spec, points[:20]))
            checks.extend(recursion_identity_check(spec, k) for k in range(1, 4))
            checks.extend(leading_coefficient_check(spec, k) for k in range(1, 4))
            if label == "q2":
                checks.append(CheckResult("theta-2-at-3", theta_value(spec, 2, 3) == -24, {}))
            results.extend(_tagged(label, checks))
        return results


class PrismSuite:
    name = "prism"

    def run(self, rng: random.Random, options: Options) -> List[CheckResult]:
        D = int(options.get("prism_degree", DefaultConfig.DEFAULT_DEGREE))
        results = []
        for label, spec in _specs():
            frobenius = default_frobenius(spec, D + 2)
            for n in range(1, 5):
                results.extend(_tagged(f"{label}:n={n}", verify_prism_condition(frobenius, n, D)))
            for n in range(1, 3):
                for k in range(1, 5):
                    results.extend(_tagged(f"{label}:n={n}", [ideal_power_check(frobenius, n, k, k)]))
            if (spec.e, spec.f) == (1, 1):
                cyclotomic = cyclotomic_frobenius(spec, D + 2)
                for n in range(1, 4):
                    results.append(
                        CheckResult(
                            f"{label}:n={n}:cyclotomic",
                            compute_qn(cyclotomic, n, D) == cyclotomic_qn(spec, n, D),
                            {"D": D},
                        )
                    )
        return results


def _register() -> None:
    suites = (
        FieldSuite(),
        SeriesSuite(),
        GroupLawSuite(),
        EndomorphismSuite(),
        GenusSuite(),
        WittSuite(),
        LiteralWittRegressionSuite(),
        DeltaSuite(),
        ThetaSuite(),
        PrismSuite(),
    )
    for suite in suites:
        SuiteRegistry.register(suite)
    logger.debug("Registered %s self-test suites", len(suites))


_register()
