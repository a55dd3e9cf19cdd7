from __future__ import annotations

import logging
import random
from typing import Callable, Dict, List, Tuple

from pitypical.errors import NotDivisible, PrecisionExhausted
from pitypical.services.checks import CheckResult

from .carriers import Carrier
from .vectors import WittPair, WittProduct, ghost_map, projection, witt_add, witt_mul, witt_neg

logger = logging.getLogger(__name__)

Triple = Tuple[WittPair, WittPair, WittPair]
Law = Callable[[WittPair, WittPair, WittPair, WittProduct], bool]


def random_pair(carrier: Carrier, rng: random.Random) -> WittPair:
    return WittPair(carrier, carrier.random(rng), carrier.random(rng))


def _ghost_add(a: WittPair, b: WittPair, c: WittPair, mul: WittProduct) -> bool:
    left = ghost_map(witt_add(a, b))
    g_a, g_b = ghost_map(a), ghost_map(b)
    return left[0] == g_a[0] + g_b[0] and left[1] == g_a[1] + g_b[1]


def _ghost_mul(a: WittPair, b: WittPair, c: WittPair, mul: WittProduct) -> bool:
    left = ghost_map(mul(a, b))
    g_a, g_b = ghost_map(a), ghost_map(b)
    return left[0] == g_a[0] * g_b[0] and left[1] == g_a[1] * g_b[1]


def _kernel_product(a: WittPair, b: WittPair, c: WittPair, mul: WittProduct) -> bool:
    """(0, x)·(0, y) = (0, π x y)."""
    carrier = a.carrier
    x = WittPair(carrier, carrier.zero(), a.a1)
    y = WittPair(carrier, carrier.zero(), b.a1)
    return mul(x, y) == WittPair(carrier, carrier.zero(), carrier.pi_times(a.a1 * b.a1))


LAWS: Dict[str, Law] = {
    "add-associative": lambda a, b, c, mul: witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)),
    "add-commutative": lambda a, b, c, mul: witt_add(a, b) == witt_add(b, a),
    "add-neutral": lambda a, b, c, mul: witt_add(a, WittPair.zero(a.carrier)) == a,
    "add-inverse": lambda a, b, c, mul: witt_add(a, witt_neg(a)) == WittPair.zero(a.carrier),
    "mul-associative": lambda a, b, c, mul: mul(mul(a, b), c) == mul(a, mul(b, c)),
    "mul-commutative": lambda a, b, c, mul: mul(a, b) == mul(b, a),
    "mul-neutral": lambda a, b, c, mul: mul(a, WittPair.one(a.carrier)) == a,
    "distributive": lambda a, b, c, mul: mul(a, witt_add(b, c)) == witt_add(mul(a, b), mul(a, c)),
    "ghost-additive": _ghost_add,
    "ghost-multiplicative": _ghost_mul,
    "projection-additive": lambda a, b, c, mul: projection(witt_add(a, b)) == projection(a) + projection(b),
    "projection-multiplicative": lambda a, b, c, mul: projection(mul(a, b)) == projection(a) * projection(b),
    "kernel-product": _kernel_product,
}


def ring_axiom_report(
    carrier: Carrier,
    trials: int,
    seed: int,
    mul: WittProduct = witt_mul,
) -> List[CheckResult]:
    """
    Check every law on ``trials`` random triples; a failing law records its
    first counterexample verbatim.
    """
    rng = random.Random(seed)
    triples: List[Triple] = [
        (random_pair(carrier, rng), random_pair(carrier, rng), random_pair(carrier, rng))
        for _ in range(trials)
    ]
    results = []
    for name, law in LAWS.items():
        results.append(_run_law(name, law, triples, mul))
    failed = [result.name for result in results if not result.passed]
    if failed:
        logger.info("Witt laws failing over %s: %s", carrier.name, ", ".join(failed))
    return results


def _run_law(name: str, law: Law, triples: List[Triple], mul: WittProduct) -> CheckResult:
    for index, (a, b, c) in enumerate(triples):
        try:
            holds = law(a, b, c, mul)
        except (NotDivisible, PrecisionExhausted) as exc:
            return CheckResult(name, False, {"trial": index, "error": str(exc), **_dump(a, b, c)})
        if not holds:
            return CheckResult(name, False, {"trial": index, **_dump(a, b, c)})
    return CheckResult(name, True, {"trials": len(triples)})


def _dump(a: WittPair, b: WittPair, c: WittPair) -> dict:
    return {"counterexample": {"a": a.to_json(), "b": b.to_json(), "c": c.to_json()}}
