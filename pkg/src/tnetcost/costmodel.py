"""Analytic encoding costs (in bits) of a temporal network per representation.

All costs depend only on a handful of counts:

* ``n`` nodes, ``m`` distinct edges, ``e`` events, ``t`` occupied times,
* ``i`` intervals and ``t_prime`` distinct interval endpoints.

Node dictionaries are a constant shared by every representation and are not
charged.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import LinkStream
from .transform import build_intervals, infer_step


class Repr(str, enum.Enum):
    LS = "ls"
    SN_M = "sn_m"
    SN_E = "sn_e"
    IG = "ig"


#: Order used to break ties between equal costs.
TIE_BREAK = (Repr.LS, Repr.IG, Repr.SN_E, Repr.SN_M)

SNM_VARIANTS = ("prose", "printed")


@dataclass(frozen=True)
class CostParams:
    n: int = 0
    m: int = 0
    e: int = 0
    t: int = 0
    i: int = 0
    t_prime: int = 0


def log2_symbols(k: float) -> float:
    """Bits per symbol for an alphabet of size ``k``; 0 when ``k <= 1``."""
    return math.log2(k) if k > 1 else 0.0


def unit_costs(p: CostParams) -> tuple[float, float, float]:
    """Return ``(time_bits, pair_bits, endpoint_bits)``."""
    return log2_symbols(p.t), 2 * log2_symbols(p.n), log2_symbols(p.t_prime)


def cost_link_stream(p: CostParams) -> float:
    # pair + its time list + one stop per list
    it, im, _ = unit_costs(p)
    return p.m * im + p.e * it + p.m * it


def cost_snapshot_matrix(p: CostParams, variant: str = "prose") -> float:
    """Edge directory, time directory, and one bit per (edge, time) cell.

    ``variant="printed"`` charges ``t*e`` matrix bits instead of ``t*m``.
    """
    it, im, _ = unit_costs(p)
    if variant == "prose":
        cells = p.t * p.m
    elif variant == "printed":
        cells = p.t * p.e
    else:
        raise ValueError(f"unknown SN_M variant {variant!r}")
    return p.m * im + p.t * it + cells


def cost_snapshot_edgelist(p: CostParams) -> float:
    it, im, _ = unit_costs(p)
    return p.e * im + p.t * it + p.t * im


def cost_interval_graph(p: CostParams) -> float:
    _, im, itp = unit_costs(p)
    return p.m * im + 2 * p.i * itp + p.m * itp


def static_costs(n: int, m: int) -> tuple[float, float]:
    """Bits for a static graph as an adjacency matrix and as an edge list."""
    return float(n * n), 2 * m * log2_symbols(n)


def analytic_cost(p: CostParams, rep: Repr | str, snm_variant: str = "prose") -> float:
    rep = Repr(rep)
    if rep is Repr.LS:
        return cost_link_stream(p)
    if rep is Repr.SN_M:
        return cost_snapshot_matrix(p, snm_variant)
    if rep is Repr.SN_E:
        return cost_snapshot_edgelist(p)
    return cost_interval_graph(p)


def argmin_repr(costs: dict) -> Repr:
    best = TIE_BREAK[0]
    for rep in TIE_BREAK[1:]:
        if costs[rep] < costs[best]:
            best = rep
    return best


@dataclass(frozen=True)
class CostReport:
    params: CostParams
    unit_time_bits: float
    unit_pair_bits: float
    unit_endpoint_bits: float
    cost_ls: float
    cost_sn_m: float
    cost_sn_e: float
    cost_ig: float
    best: Repr
    snm_variant: str = "prose"
    step: int = 1

    @property
    def costs(self) -> dict[Repr, float]:
        return {
            Repr.LS: self.cost_ls,
            Repr.SN_M: self.cost_sn_m,
            Repr.SN_E: self.cost_sn_e,
            Repr.IG: self.cost_ig,
        }


def params_for(ls: LinkStream, step: int | None = None, n: int | None = None) -> CostParams:
    """Collect cost parameters of ``ls``; intervals are built at ``step``.

    ``step`` defaults to the inferred grid step (1 when fewer than two times).
    ``n`` overrides the observed node count.
    """
    if step is None:
        step = infer_step(ls) if ls.t >= 2 else 1
    ig = build_intervals(ls, step)
    if n is None:
        n = ls.n
    elif n < ls.n:
        raise ValueError(f"node count override {n} is below the {ls.n} observed nodes")
    return CostParams(n=n, m=ls.m, e=ls.e, t=ls.t, i=ig.i, t_prime=ig.t_prime)


def report_from_params(p: CostParams, snm_variant: str = "prose", step: int = 1) -> CostReport:
    if snm_variant not in SNM_VARIANTS:
        raise ValueError(f"unknown SN_M variant {snm_variant!r}")
    it, im, itp = unit_costs(p)
    costs = {
        Repr.LS: cost_link_stream(p),
        Repr.SN_M: cost_snapshot_matrix(p, snm_variant),
        Repr.SN_E: cost_snapshot_edgelist(p),
        Repr.IG: cost_interval_graph(p),
    }
    return CostReport(
        params=p,
        unit_time_bits=it,
        unit_pair_bits=im,
        unit_endpoint_bits=itp,
        cost_ls=costs[Repr.LS],
        cost_sn_m=costs[Repr.SN_M],
        cost_sn_e=costs[Repr.SN_E],
        cost_ig=costs[Repr.IG],
        best=argmin_repr(costs),
        snm_variant=snm_variant,
        step=step,
    )


def report(
    ls: LinkStream,
    step: int | None = None,
    snm_variant: str = "prose",
    n: int | None = None,
) -> CostReport:
    """Compute all four costs of ``ls`` and pick the cheapest representation.

    Ties resolve in the order LS, IG, SN_E, SN_M.
    """
    if step is None:
        step = infer_step(ls) if ls.t >= 2 else 1
    return report_from_params(params_for(ls, step, n), snm_variant, step)
