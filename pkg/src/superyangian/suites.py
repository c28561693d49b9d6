"""Named verification suites, reports, and the batch runner.

Every suite is keyed to exactly one identity (recorded as its `anchor`
string in the report), takes a flat parameter dictionary, and produces a
deterministic Report.  Guard violations produce `skipped` reports rather
than crashes; genuine counterexamples are serialised in the element or
operator grammar so they can be re-parsed and re-evaluated.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

from .checkresult import CheckResult

MAX_REPORTED_FAILURES = 5


@dataclass
class SuiteSpec:
    name: str
    params: dict = field(default_factory=dict)


@dataclass
class Report:
    suite: str
    params: dict
    status: str  # pass | fail | skipped
    anchor: str
    verified: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    skip_reason: str | None = None
    wall_time_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "anchor": self.anchor,
            "verified": self.verified,
            "counterexamples": self.counterexamples,
            "skip_reason": self.skip_reason,
            "wall_time_s": self.wall_time_s,
        }


@dataclass
class SuiteDef:
    name: str
    anchor: str
    defaults: dict
    runner: Callable[[dict], CheckResult]
    guard: Callable[[dict], str | None] = lambda params: None


def _dim_guard(limit: int, label: str):
    def guard(params: dict) -> str | None:
        if params.get("m", 0) + params.get("n", 0) > limit:
            return f"M+N = {params.get('m', 0) + params.get('n', 0)} exceeds {label} guard {limit}"
        return None

    return guard


def _needs_both(params: dict) -> str | None:
    if params.get("m", 0) < 1 or params.get("n", 0) < 1:
        return "needs M >= 1 and N >= 1"
    return _dim_guard(3, "tensor-battery")(params)


def _run_defining_relations(p: dict) -> CheckResult:
    from .central import closure_check

    return closure_check(p["m"], p["n"], p["bound"])


def _run_yang_baxter(p: dict) -> CheckResult:
    from .tensor_checks import unitarity_check, yang_baxter_check

    return yang_baxter_check(p["m"], p["n"]).merge(
        unitarity_check(p["m"], p["n"], p["order"]), "unitarity"
    )


def _run_z_central(p: dict) -> CheckResult:
    from .central import z_centrality_check, z_coherence_check

    return z_coherence_check(p["m"], p["n"], p["order"]).merge(
        z_centrality_check(p["m"], p["n"], p["r_max"], p["s_max"]), "centrality"
    )


def _run_berezinian_theorem(p: dict) -> CheckResult:
    from .central import berezinian_theorem_check

    return berezinian_theorem_check(p["m"], p["n"], p["order"])


def _run_az_relation(p: dict) -> CheckResult:
    from .central import az_relation_check

    return az_relation_check(p["n"], p["order"])


def _run_antipode_square(p: dict) -> CheckResult:
    from .central import antipode_square_check

    return antipode_square_check(p["m"], p["n"], p["order"])


def _run_hopf_axioms(p: dict) -> CheckResult:
    from .central import hopf_axioms_check

    return hopf_axioms_check(p["m"], p["n"], p["r_max"],
                             coassoc_r_max=p.get("coassoc_r_max", p["r_max"]))


def _run_grouplike(p: dict) -> CheckResult:
    from .central import grouplike_check

    out = grouplike_check("z", p["m"], p["n"], p["order"])
    return out.merge(grouplike_check("berezinian", p["m"], p["n"], p["order"]), "berezinian")


def _run_p28_symbol(p: dict) -> CheckResult:
    from .central import p21_symbol_check, z_symbol_check

    return z_symbol_check(p["m"], p["n"], p["r_max"]).merge(
        p21_symbol_check(p["m"], p["n"], p["r_max"]), "bracket-symbol"
    )


def _run_morphism_suite(p: dict) -> CheckResult:
    from .central import morphism_commutation_check, morphism_relation_check

    return morphism_relation_check(p["m"], p["n"], p["bound"]).merge(
        morphism_commutation_check(p["m"], p["n"], p["r_max"]), "commutation"
    )


def _run_l3(p: dict) -> CheckResult:
    from .central import l3_commutation_check

    return l3_commutation_check(p["m"], p["n"], p["bound"], p.get("order", 4))


def _run_q_identities(p: dict) -> CheckResult:
    from .tensor_checks import p_q_basics_check, q_identity_check

    return p_q_basics_check(p["m"], p["n"]).merge(
        q_identity_check(p["m"], p["n"]), "battery"
    )


def _run_fusion(p: dict) -> CheckResult:
    from .mixed import fusion_commutation_check
    from .tensor_checks import symmetrizer_agreement_check

    out = symmetrizer_agreement_check(p["m"], p["n"], p["n_max"])
    if p["m"] + p["n"] <= 2:
        out = out.merge(
            fusion_commutation_check(p["m"], p["n"], p["legs"], p["order"]), "series"
        )
    return out


def _run_pbw_confluence(p: dict) -> CheckResult:
    from .tensor_checks import pbw_confluence_check

    return pbw_confluence_check(p["m"], p["n"], p["schedules"], p["filt_max"],
                                seed=p.get("seed", 2024))


def _run_pbw_rank(p: dict) -> CheckResult:
    from .tensor_checks import pbw_rank_check

    return pbw_rank_check(p["m"], p["n"], p["filt_max"], tuple(p["points"]))


def _run_eval_rep(p: dict) -> CheckResult:
    from .tensor_checks import (
        eval_embedding_identity_check,
        eval_relations_check,
        multi_eval_consistency_check,
        rep_rtt_check,
    )

    out = eval_relations_check(p["m"], p["n"], tuple(p["points"]), p["r_max"])
    out = out.merge(eval_embedding_identity_check(p["m"], p["n"]), "embedding")
    out = out.merge(
        multi_eval_consistency_check(p["m"], p["n"], (0, 1), p["r_max"]), "two-point"
    )
    if p["m"] + p["n"] <= 3:
        out = out.merge(
            multi_eval_consistency_check(p["m"], p["n"], (0, 1, 5), min(p["r_max"], 3)),
            "three-point",
        )
    out = out.merge(rep_rtt_check(p["m"], p["n"], 2, p.get("samples", 10)), "rtt")
    return out


SUITES: dict[str, SuiteDef] = {}


def _register(name, anchor, defaults, runner, guard=lambda p: None):
    SUITES[name] = SuiteDef(name, anchor, defaults, runner, guard)


_register(
    "defining-relations",
    "(u-v)[T_ij(u),T_kl(v)]*(-1)^(ib*kb+ib*lb+kb*lb) = T_kj(u)T_il(v) - T_kj(v)T_il(u)",
    {"m": 1, "n": 1, "bound": 6},
    _run_defining_relations,
    _dim_guard(4, "abstract-algebra"),
)
_register(
    "yang-baxter",
    "R12(u-v)R13(u-w)R23(v-w) = R23(v-w)R13(u-w)R12(u-v); R(-u)R(u) = 1 - u^-2",
    {"m": 1, "n": 1, "order": 4},
    _run_yang_baxter,
    _dim_guard(4, "tensor"),
)
_register(
    "z-central",
    "sum_k T_kj(u+M-N)Ttilde_ik(u) = delta_ij Z(u) = sum_k Ttilde_kj(u)T_ik(u+M-N); [Z^(r), T_ij^(s)] = 0",
    {"m": 1, "n": 1, "order": 6, "r_max": 5, "s_max": 4},
    _run_z_central,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "berezinian-theorem",
    "B(u+1) = Z(u) B(u)",
    {"m": 1, "n": 1, "order": 4},
    _run_berezinian_theorem,
    _dim_guard(4, "abstract-algebra"),
)
_register(
    "az-relation",
    "Z(u) C(u+1) = C(u) for M = 0, and C(u) -> D(1-u) under the parity flip",
    {"n": 2, "order": 4},
    _run_az_relation,
    lambda p: "needs N <= 3" if p.get("n", 0) > 3 else None,
)
_register(
    "antipode-square",
    "Z(u) S^2(T_ij(u)) = T_ij(u+M-N)",
    {"m": 1, "n": 1, "order": 5},
    _run_antipode_square,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "hopf-axioms",
    "(eps x id)Delta = id = (id x eps)Delta; (Delta x id)Delta = (id x Delta)Delta; mu(S x id)Delta = delta.eps",
    {"m": 1, "n": 1, "r_max": 4},
    _run_hopf_axioms,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "grouplike",
    "Delta(Z) = Z x Z, Delta(B) = B x B, eps = 1; S(Z) = Z^-1, omega(Z) = Z^-1, transpose(Z) = Z",
    {"m": 1, "n": 1, "order": 4},
    _run_grouplike,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "p28-symbol",
    "Z^(r) has second-filtration degree r-2 with graded image (1-r) sum_i T[i,i,r-1](-1)^ibar",
    {"m": 1, "n": 1, "r_max": 5},
    _run_p28_symbol,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "morphism-suite",
    "eta_M, antipode_S, transpose_T anti-preserve the defining relations and pairwise commute; omega = S o transpose",
    {"m": 1, "n": 1, "bound": 5, "r_max": 4},
    _run_morphism_suite,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "l3",
    "[T_ij(u), Ttilde_kl(v)] = 0 for i,j <= M < k,l; the two Berezinian factors commute",
    {"m": 1, "n": 1, "bound": 6, "order": 4},
    _run_l3,
    _needs_both,
)
_register(
    "q-identities",
    "(IxJ)Q = 0, Q = Q(Ix1+1xJ), Q1L.Q(M+1)L = Q1L.P1(M+1), Q1L.Q1(M+2) = Q1L.P(M+2)L, the QR residue identity, and the two projected product equalities",
    {"m": 1, "n": 1},
    _run_q_identities,
    _needs_both,
)
_register(
    "fusion-commutation",
    "(G x 1)T_1(u)...T_n(u-n+1) = T_n(u-n+1)...T_1(u)(G x 1) and the symmetrizer twin; G/H constructions agree",
    {"m": 1, "n": 1, "legs": 2, "order": 3, "n_max": 4},
    _run_fusion,
    _dim_guard(3, "tensor"),
)
_register(
    "pbw-confluence",
    "randomized rewriting schedules reach the unique normal form",
    {"m": 1, "n": 1, "schedules": 1000, "filt_max": 6, "seed": 2024},
    _run_pbw_confluence,
    _dim_guard(3, "abstract-algebra"),
)
_register(
    "pbw-rank",
    "normal monomials of bounded level map to independent operators under the multi-point evaluation representation",
    {"m": 1, "n": 1, "filt_max": 3, "points": [0, 1, 5]},
    _run_pbw_rank,
    _dim_guard(2, "rank"),
)
_register(
    "eval-rep",
    "T[i,j,r+1] -> -E_ji z^r (-1)^jbar is a representation; coproduct route = R-product route",
    {"m": 1, "n": 1, "points": [0, 1, -2], "r_max": 3, "samples": 10},
    _run_eval_rep,
    _dim_guard(3, "tensor"),
)


def run_suite(spec: SuiteSpec) -> Report:
    t0 = time.time()
    suite = SUITES.get(spec.name)
    if suite is None:
        raise KeyError(f"unknown suite {spec.name!r} (known: {', '.join(sorted(SUITES))})")
    params = dict(suite.defaults)
    params.update(spec.params)
    reason = suite.guard(params)
    if reason is not None:
        return Report(spec.name, params, "skipped", suite.anchor,
                      skip_reason=reason, wall_time_s=round(time.time() - t0, 3))
    try:
        result = suite.runner(params)
    except Exception as exc:  # configuration errors surface as skips
        return Report(spec.name, params, "skipped", suite.anchor,
                      skip_reason=f"{type(exc).__name__}: {exc}",
                      wall_time_s=round(time.time() - t0, 3))
    return Report(
        spec.name,
        params,
        "pass" if result.ok else "fail",
        suite.anchor,
        verified=result.info,
        counterexamples=result.failures[:MAX_REPORTED_FAILURES],
        wall_time_s=round(time.time() - t0, 3),
    )


# ---------------------------------------------------------------------------
# batch runner
# ---------------------------------------------------------------------------

DEFAULT_PAIRS = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)]


def default_config() -> dict:
    suites = []
    for m, n in DEFAULT_PAIRS:
        suites.append({"name": "defining-relations", "params": {"m": m, "n": n, "bound": 4}})
        suites.append({"name": "yang-baxter", "params": {"m": m, "n": n}})
        if m + n <= 3:
            suites.append({"name": "z-central",
                           "params": {"m": m, "n": n, "order": 4, "r_max": 4, "s_max": 3}})
            suites.append({"name": "berezinian-theorem", "params": {"m": m, "n": n, "order": 4}})
            suites.append({"name": "antipode-square", "params": {"m": m, "n": n, "order": 4}})
            suites.append({"name": "hopf-axioms", "params": {"m": m, "n": n, "r_max": 3}})
            suites.append({"name": "grouplike", "params": {"m": m, "n": n, "order": 3}})
            suites.append({"name": "p28-symbol", "params": {"m": m, "n": n, "r_max": 4}})
            suites.append({"name": "morphism-suite",
                           "params": {"m": m, "n": n, "bound": 3, "r_max": 3}})
            suites.append({"name": "eval-rep", "params": {"m": m, "n": n, "r_max": 2}})
            suites.append({"name": "pbw-confluence",
                           "params": {"m": m, "n": n, "schedules": 200, "filt_max": 5}})
        if m >= 1 and n >= 1 and m + n <= 3:
            suites.append({"name": "l3", "params": {"m": m, "n": n, "bound": 4}})
            suites.append({"name": "q-identities", "params": {"m": m, "n": n}})
        if m + n <= 2:
            suites.append({"name": "fusion-commutation",
                           "params": {"m": m, "n": n, "order": 3}})
        if (m, n) == (1, 1):
            suites.append({"name": "pbw-rank", "params": {"m": m, "n": n, "filt_max": 2}})
    suites.append({"name": "az-relation", "params": {"n": 1, "order": 4}})
    suites.append({"name": "az-relation", "params": {"n": 2, "order": 4}})
    return {"suites": suites, "output": "reports.json", "parallelism": 1}


def _spec_sort_key(entry: dict):
    return (entry["name"], json.dumps(entry.get("params", {}), sort_keys=True))


def run_all(config: dict, name_filter: str | None = None) -> tuple[list[Report], int]:
    entries = config.get("suites", [])
    if not isinstance(entries, list) or not entries:
        raise ValueError("config must list at least one suite")
    if name_filter:
        entries = [e for e in entries if name_filter in e["name"]]
        if not entries:
            raise ValueError(f"filter {name_filter!r} matches no configured suites")
    entries = sorted(entries, key=_spec_sort_key)
    specs = [SuiteSpec(e["name"], e.get("params", {})) for e in entries]
    parallelism = int(config.get("parallelism", 1))
    if parallelism > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(run_suite, specs))
    else:
        reports = [run_suite(spec) for spec in specs]
    exit_code = 0 if all(r.status != "fail" for r in reports) else 1
    return reports, exit_code


def reports_to_json(reports: list[Report]) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# compute targets
# ---------------------------------------------------------------------------


def compute(target: str, params: dict, input_text: str | None = None) -> str:
    from .algebra import algebra
    from .central import berezinian, quantum_determinant_c, z_series
    from .grammar import element_to_text, parse_element, series_to_text
    from .morphisms import build_morphism

    if target == "z":
        series = z_series(params["m"], params["n"], params["order"])
        return series_to_text(series, element_coeffs=True)
    if target == "berezinian":
        series = berezinian(params["m"], params["n"], params["order"])
        return series_to_text(series, element_coeffs=True)
    if target == "qdet":
        series = berezinian(params["m"], 0, params["order"])
        return series_to_text(series, element_coeffs=True)
    if target == "c-series":
        series = quantum_determinant_c(params["n"], params["order"])
        return series_to_text(series, element_coeffs=True)
    if target == "normal-form":
        if input_text is None:
            raise ValueError("normal-form needs an input element")
        alg = algebra(params["m"], params["n"])
        return element_to_text(parse_element(alg, input_text))
    if target == "apply-map":
        if input_text is None:
            raise ValueError("apply-map needs an input element")
        alg = algebra(params["m"], params["n"])
        table = build_morphism(alg, params["map"], params.get("order", 6))
        return element_to_text(table.apply(parse_element(alg, input_text)))
    raise ValueError(f"unknown compute target {target!r}")
