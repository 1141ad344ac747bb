"""Closed-form lower bounds, prior literature bounds, and bound reports.

All bounds are kept as exact rationals alongside their integer ceilings so
that dominance comparisons never hide behind rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, is_tree, max_degree, min_degree
from .params import ParamTriple


def delta_star(g: Graph, p: ParamTriple) -> int | None:
    """Minimum degree among vertices of degree >= kp + kpp; None if no
    vertex qualifies."""
    threshold = p.kp + p.kpp
    qualifying = [d for d in g.degree if d >= threshold]
    return min(qualifying) if qualifying else None


def lower_bound_general_raw(g: Graph, p: ParamTriple) -> tuple[Fraction | None, bool]:
    """Exact rational value of the general lower bound, plus a flag marking
    the degenerate branch where no vertex can lie outside S.

    Returns (None, False) when the bound does not apply: minimum degree
    below k, or nonpositive denominator.
    """
    if g.n == 0 or min_degree(g) < p.k:
        return None, False
    ds = delta_star(g, p)
    if ds is None:
        # Any vertex outside S would need kp + kpp neighbors, but no vertex
        # has that many; every dominating set must be all of V.
        return Fraction(g.n), True
    denom = ds + p.kp - p.k
    if denom <= 0:
        return None, False
    return Fraction((p.kp + ds) * g.n - 2 * g.m, denom), False


def lower_bound_general(g: Graph, p: ParamTriple) -> int | None:
    raw, _ = lower_bound_general_raw(g, p)
    if raw is None:
        return None
    return max(0, math.ceil(raw))


def lower_bound_kp_zero_raw(g: Graph, p: ParamTriple) -> Fraction | None:
    """Exact rational value of the kpp = 0 ratio bound kp*n/(Delta+kp-k)."""
    if p.kpp != 0 or g.n == 0 or min_degree(g) < p.k:
        return None
    if p.kp == 0:
        return Fraction(0)
    denom = max_degree(g) + p.kp - p.k
    if denom <= 0:
        return None
    return Fraction(p.kp * g.n, denom)


def lower_bound_kp_zero(g: Graph, p: ParamTriple) -> int | None:
    raw = lower_bound_kp_zero_raw(g, p)
    if raw is None:
        return None
    return max(0, math.ceil(raw))


# Prior bounds compared against the general lower bound, and the three ratio
# bounds compared against the kpp = 0 bound.
PRIOR_GENERAL = (
    "eq3",
    "eq4",
    "eq5_tree",
    "eq6_tree",
    "eq7",
    "eq8",
    "hh_tuple",
    "zwx_tuple_total",
    "fj2_kdom",
)
PRIOR_RATIO = ("hk_zwx_ratio", "hh_ratio", "fj1_ratio")
PRIOR_NAMES = PRIOR_GENERAL + PRIOR_RATIO


def prior_bounds(g: Graph, p: ParamTriple) -> dict[str, Fraction]:
    """Literature lower bounds applicable to this (graph, triple) pair.

    Each bound is emitted only when the triple matches its specialization
    and the graph satisfies its stated hypothesis.
    """
    if g.n == 0:
        return {}
    n, m = g.n, g.m
    delta = min_degree(g)
    big_delta = max_degree(g)
    tree = is_tree(g)
    out: dict[str, Fraction] = {}

    if p == ParamTriple(1, 1, 1):
        if delta >= 1:
            out["eq3"] = Fraction(3 * n, 2) - m
        if tree and n >= 2:
            # Raw rational kept pre-ceiling; the reported bound is its ceiling.
            out["eq5_tree"] = Fraction(n + 2, 2)
    if p == ParamTriple(0, 1, 1):
        out["eq4"] = n - Fraction(2 * m, 3)
        if tree:
            out["eq6_tree"] = Fraction(n + 2, 3)
    if p.k == p.kp == p.kpp and p.k >= 1 and delta >= p.k:
        out["eq7"] = Fraction(3 * n, 2) - Fraction(m, p.k)
    if p == ParamTriple(1, 2, 1) and delta >= 1:
        out["eq8"] = Fraction(5 * n - 2 * m, 4)

    if p.kpp == 0 and p.kp >= 1:
        kk = p.kp
        if p.k == kk - 1 and delta >= kk - 1:
            out["hh_tuple"] = Fraction(2 * kk * n - 2 * m, kk + 1)
            out["hh_ratio"] = Fraction(kk * n, big_delta + 1)
        if p.k == kk and delta >= kk:
            out["zwx_tuple_total"] = 2 * (n - Fraction(m, kk))
            out["hk_zwx_ratio"] = Fraction(kk * n, big_delta)
        if p.k == 0:
            out["fj2_kdom"] = n - Fraction(m, kk)
            out["fj1_ratio"] = Fraction(kk * n, big_delta + kk)
    return out


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds for one (graph, triple) pair."""

    lb_general: int | None
    lb_general_raw: Fraction | None
    delta_star: int | None
    delta_star_absent_rule: bool
    lb_kp_zero: int | None
    lb_kp_zero_raw: Fraction | None
    prior: dict[str, int] = field(default_factory=dict)
    prior_raw: dict[str, Fraction] = field(default_factory=dict)
    ub_construct: int | None = None
    applicability: dict[str, bool] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "lb_general": self.lb_general,
            "lb_general_raw": _frac_str(self.lb_general_raw),
            "delta_star": self.delta_star,
            "delta_star_absent_rule": self.delta_star_absent_rule,
            "lb_kp_zero": self.lb_kp_zero,
            "lb_kp_zero_raw": _frac_str(self.lb_kp_zero_raw),
            "prior": dict(self.prior),
            "ub_construct": self.ub_construct,
            "applicability": dict(self.applicability),
        }


def _frac_str(f: Fraction | None) -> str | None:
    return None if f is None else f"{f.numerator}/{f.denominator}"


def bound_report(g: Graph, p: ParamTriple, include_construct: bool = True) -> BoundReport:
    """Aggregate every bound this library knows for (g, p)."""
    lb_raw, absent_rule = lower_bound_general_raw(g, p)
    lb = None if lb_raw is None else max(0, math.ceil(lb_raw))
    kp0_raw = lower_bound_kp_zero_raw(g, p)
    kp0 = None if kp0_raw is None else max(0, math.ceil(kp0_raw))
    priors_raw = prior_bounds(g, p)
    priors = {name: math.ceil(v) for name, v in priors_raw.items()}
    ub = None
    if include_construct:
        from .construction import upper_bound

        ub = upper_bound(g, p)
    applicability = {"lb_general": lb is not None, "lb_kp_zero": kp0 is not None,
                     "ub_construct": ub is not None}
    applicability.update({name: name in priors_raw for name in PRIOR_NAMES})
    return BoundReport(
        lb_general=lb,
        lb_general_raw=lb_raw,
        delta_star=delta_star(g, p),
        delta_star_absent_rule=absent_rule,
        lb_kp_zero=kp0,
        lb_kp_zero_raw=kp0_raw,
        prior=priors,
        prior_raw=priors_raw,
        ub_construct=ub,
        applicability=applicability,
    )


def dominance_failures(report: BoundReport) -> list[str]:
    """Names of prior bounds that the new bounds fail to dominate.

    Comparisons use exact rationals. An empty list means every applicable
    improvement claim holds on this instance.
    """
    failures = []
    for name in PRIOR_GENERAL:
        if name in report.prior_raw:
            if report.lb_general_raw is None or report.lb_general_raw < report.prior_raw[name]:
                failures.append(name)
    for name in PRIOR_RATIO:
        if name in report.prior_raw:
            if report.lb_kp_zero_raw is None or report.lb_kp_zero_raw < report.prior_raw[name]:
                failures.append(name)
    return failures
