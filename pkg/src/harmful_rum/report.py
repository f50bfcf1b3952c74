"""JSON-ready reports with deterministic rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .data import StochasticChoice, format_probability, parse_probability, support_set
from .degree import DegreeReport, degree_of_self_punishment
from .detection import CompositionWitness, composition_witness
from .exceptions import SizeGuardExceeded
from .identification import IdentificationClass, Justification, all_justifications, classify
from .probes import DEFAULT_MAX_N, correlation_index, is_rum, single_peaked_support


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _p(x: Fraction, decimals: int | None) -> str:
    return format_probability(x, decimals)


def mode(tolerance: Fraction) -> str:
    return "exact" if not tolerance else f"tolerance {tolerance}"


def witness_dict(w: CompositionWitness, decimals: int | None = None, failures_only: bool = False) -> dict:
    checks = w.failures if failures_only else w.checks
    return {
        "order": str(w.order),
        "composes": w.composes,
        "checks": [
            {"menu": c.menu, "item": c.item, "lhs": _p(c.lhs, decimals),
             "rhs": _p(c.rhs, decimals), "ok": c.ok}
            for c in checks
        ],
    }


def justification_dict(j: Justification, decimals: int | None = None) -> dict:
    return {"order": str(j.order), "weights": [_p(x, decimals) for x in j.weights]}


def identification_dict(c: IdentificationClass) -> dict:
    d: dict[str, Any] = {"class": c.kind, "label": str(c), "count": c.count}
    if c.rank is not None:
        d["j"] = c.rank
    if c.pair is not None:
        d["pair"] = [str(o) for o in c.pair]
    return d


def degree_dict(d: DegreeReport) -> dict:
    return {"degree": d.degree, "witness_order": str(d.witness_order),
            "method_agreement": d.method_agreement}


def probes_dict(rho: StochasticChoice, justifications: list[Justification],
                max_n: int = DEFAULT_MAX_N, decimals: int | None = None) -> dict:
    out: dict[str, Any] = {"harmful": bool(justifications)}
    try:
        rum = is_rum(rho, max_n)
        out["rum"] = rum.feasible
        if rum.witness is not None:
            out["rum_witness"] = {str(o): _p(p, decimals)
                                  for o, p in sorted(rum.witness.items(), key=lambda kv: kv[0].ranking)}
    except SizeGuardExceeded as exc:
        out["rum"] = None
        out["rum_skipped"] = str(exc)
    if rho.n >= 3:
        index = correlation_index(rho)
        out["correlation_max"] = _p(index.maximum, decimals)
        out["correlation_argmax"] = str(index.argmax)
    else:
        out["correlation_max"] = None
    out["single_peaked"] = (
        all(single_peaked_support(j) for j in justifications) if justifications else None
    )
    return out


@dataclass
class AnalysisReport:
    rho: StochasticChoice
    tolerance: Fraction = Fraction(0)
    max_n: int = DEFAULT_MAX_N
    justifications: list[Justification] = field(init=False)
    identification: IdentificationClass = field(init=False)
    degree: DegreeReport | None = field(init=False)

    def __post_init__(self):
        self.tolerance = parse_probability(self.tolerance)
        self.justifications = all_justifications(self.rho, self.tolerance)
        self.identification = classify(self.rho, self.tolerance, self.justifications)
        self.degree = (degree_of_self_punishment(self.rho, self.tolerance)
                       if self.justifications else None)

    @property
    def harmful(self) -> bool:
        return bool(self.justifications)

    def to_dict(self, decimals: int | None = None) -> dict:
        rho = self.rho
        return {
            "dataset": {"digest": rho.digest(), "items": list(rho.ground.items),
                        "support": sorted(support_set(rho, self.tolerance))},
            "mode": mode(self.tolerance),
            "harmful": self.harmful,
            "composing_orders": [str(j.order) for j in self.justifications],
            "justifications": [justification_dict(j, decimals) for j in self.justifications],
            "identification": identification_dict(self.identification),
            "degree": degree_dict(self.degree) if self.degree else None,
            "probes": probes_dict(rho, self.justifications, self.max_n, decimals),
        }

    def render(self, decimals: int | None = None) -> str:
        return dumps(self.to_dict(decimals))


def detect_dict(rho: StochasticChoice, orders, tolerance: Fraction,
                decimals: int | None = None) -> dict:
    return {
        "mode": mode(tolerance),
        "harmful": bool(orders),
        "composing_orders": [str(o) for o in orders],
        "witnesses": [witness_dict(composition_witness(rho, o, tolerance), decimals) for o in orders],
    }
