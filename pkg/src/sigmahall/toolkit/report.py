"""JSON report assembly.

Reports are plain dicts with a fixed key order and no wall-clock data
unless explicitly requested, so equal inputs serialise to equal bytes.
"""
from __future__ import annotations

import json

from .. import __version__
from ..core import Group
from ..errors import ResourceLimitError
from ..series import chief_series, is_soluble, is_supersoluble
from ..sigma import (
    SigmaPartition,
    count_complete_hall_sigma_sets,
    hall_candidates,
    in_H_sigma_theoremB,
    induced_group_admissible,
    non_permutable_hall_pair,
)
from ..verifiers import CHECKED, NOT_APPLICABLE, SKIPPED, describe_subgroup

SCHEMA_VERSION = "1.0"


def header(command: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "tool": "sigmahall", "tool_version": __version__,
            "command": command}


def chief_rows(G: Group, sigma: SigmaPartition | None = None) -> list[dict]:
    rows = []
    for f in chief_series(G):
        row = {"below_order": f.below.order, "above_order": f.above.order,
               "factor_order": f.factor_order, "factor_primes": list(f.factor_primes),
               "induced_aut_order": f.induced_aut_order}
        if sigma is not None:
            row["admissible"] = (f.prime is not None and induced_group_admissible(
                sigma, f.prime, _primes(f.induced_aut_order)))
        rows.append(row)
    return rows


def _primes(n):
    from ..arith import prime_factors

    return prime_factors(n)


def analyze(G: Group, sigma: SigmaPartition) -> dict:
    out = header("analyze")
    soluble = is_soluble(G)
    out["group"] = {"label": G.label, "order": G.order, "degree": G.degree,
                    "soluble": soluble, "supersoluble": is_supersoluble(G)}
    cands = hall_candidates(G, sigma)
    out["sigma"] = {
        "label": sigma.label,
        "classes_meeting_group": [
            {"index": i, "class": sigma.class_label(i),
             "primes": sorted(ps), "hall_subgroups": len(cands[i])}
            for i, ps in sigma.classes_meeting(G.order).items()
        ],
    }
    out["hall_sigma_set_count"] = count_complete_hall_sigma_sets(G, sigma)
    pair = non_permutable_hall_pair(G, sigma)
    out["sigma_basis"] = {
        "every_set_is_basis": pair is None,
        "witness": None if pair is None else [describe_subgroup(pair[0][1]),
                                              describe_subgroup(pair[1][1])],
    }
    definitional = soluble and pair is None
    criterion = in_H_sigma_theoremB(G, sigma) if soluble else None
    out["in_H_sigma"] = {"definitional": definitional, "chief_factor_criterion": criterion,
                         "agree": None if criterion is None else definitional == criterion}
    out["chief_series"] = chief_rows(G, sigma)
    out["resource_status"] = "ok"
    return out


def group_entry(label: str, order: int | None, verdicts, status: str = "ok") -> dict:
    return {"label": label, "order": order, "status": status,
            "verdicts": [v.to_dict() for v in verdicts]}


def catalog_report(entries: list[dict], settings: dict, timing: float | None = None) -> dict:
    out = header("catalog run")
    out["settings"] = settings
    out["groups"] = entries
    all_v = [v for e in entries for v in e["verdicts"]]
    out["inconsistencies"] = [v for v in all_v if v["status"] == CHECKED and v["consistent"] is False]
    out["skipped"] = [v for v in all_v if v["status"] != CHECKED]
    out["summary"] = {
        "groups": len(entries),
        "groups_over_caps": sum(1 for e in entries if e["status"] != "ok"),
        "verdicts": len(all_v),
        "consistent": sum(1 for v in all_v if v["consistent"] is True),
        "inconsistent": len(out["inconsistencies"]),
        "skipped": sum(1 for v in all_v if v["status"] == SKIPPED),
        "not_applicable": sum(1 for v in all_v if v["status"] == NOT_APPLICABLE),
    }
    if timing is not None:
        out["timing_seconds"] = round(timing, 3)
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def resource_status(exc: ResourceLimitError) -> str:
    return f"resource_limit: {exc}"
