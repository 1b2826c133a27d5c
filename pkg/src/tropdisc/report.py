"""Structured (JSON-ready) and human-readable reports for each pipeline stage."""

from typing import List, Optional

from .exactmath import format_rational
from .hornkapranov import ResidualRow, perturbed, residual, residual_table
from .matroid import LinearMatroid, set_label
from .polytope import RayComparison, SupportPolynomial, compare_rays, facet_normals
from .system import DerivedMatrices, SystemSpec, hypersurface_check, lattice_index, theorem1_normals
from .tropical import TropicalFan

SCHEMA_VERSION = 1


def derive_report(spec: SystemSpec, d: DerivedMatrices) -> dict:
    out = d.to_dict()
    out["hypersurface_check"] = hypersurface_check(d)
    out["multiplicity"] = lattice_index(spec)
    return out


def normals_report(d: DerivedMatrices) -> dict:
    return {
        "direct_normals": [
            {"raw": list(v.raw), "primitive": list(v.primitive)} for v in theorem1_normals(d)
        ],
        "V_columns": [list(c) for c in d.V_columns()],
    }


def tropical_report(spec: SystemSpec, d: DerivedMatrices, fan: TropicalFan) -> dict:
    m = LinearMatroid(d.U)
    return {
        "matroid": {
            "rank": m.rank_total,
            "circuits": [set_label(c) for c in m.circuits()],
        },
        "direct_rays": [list(r) for r in fan.direct_rays],
        "hidden_rays": [
            {"ray": list(h.ray), "parents": [list(p) for p in h.parents]}
            for h in fan.hidden_rays
        ],
        "rays": [list(r) for r in fan.rays],
        "cones": [
            {"label": c.label, "extreme_rays": [list(g) for g in c.generators],
             "flags": list(c.sources)}
            for c in fan.cones
        ],
        "degenerate_cones": [
            {"label": c.label, "flags": list(c.sources), "generators": [list(g) for g in c.generators]}
            for c in fan.degenerate
        ],
        "diagnostics": list(fan.diagnostics),
        "multiplicity": lattice_index(spec),
        "hypersurface_check": hypersurface_check(d),
    }


def oracle_report(poly: SupportPolynomial, fan: TropicalFan) -> dict:
    facets = facet_normals(poly)
    cmp: RayComparison = compare_rays(facets, fan)
    return {
        "terms": len(poly),
        "vertices": [list(v) for v in facets.vertices],
        "facets": [{"normal": list(f.normal), "support_value": f.support_value}
                   for f in facets.facets],
        "matched": [list(r) for r in cmp.matched],
        "oracle_only": [list(r) for r in cmp.oracle_only],
        "fan_only": [list(r) for r in cmp.fan_only],
        "summary": cmp.summary(),
        "ok": cmp.ok,
    }


def hk_report(d: DerivedMatrices, poly: SupportPolynomial, samples: int, seed: int,
              tol: float, sensitivity_tol: float = 1e-3) -> dict:
    rows: List[ResidualRow] = residual_table(d, poly, samples, seed)
    first = next(iter(poly.terms), None)
    bumped = perturbed(poly, first) if first is not None else poly
    sens = [residual(d, bumped, r.s) for r in rows]
    return {
        "samples": samples,
        "seed": seed,
        "tolerance": tol,
        "points": [
            {"s": [format_rational(x) for x in r.s], "branches": r.branches,
             "residual": r.residual, "perturbed_residual": p}
            for r, p in zip(rows, sens)
        ],
        "max_residual": max((r.residual for r in rows), default=0.0),
        "ok": all(r.residual < tol for r in rows),
        "perturbed_exponent": list(first) if first is not None else [],
        "perturbed_detected": sum(p > sensitivity_tol for p in sens),
    }


def _rows(pairs) -> str:
    width = max((len(k) for k, _ in pairs), default=0)
    return "\n".join(f"  {k.ljust(width)}  {v}" for k, v in pairs)


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _mat(m) -> str:
    return "\n".join("    " + "  ".join(f"{x:>5}" for x in row) for row in m)


def render_human(report: dict) -> str:
    parts = []
    if "derive" in report:
        r = report["derive"]
        parts.append("== derive ==")
        parts.append(_rows([("N", r["N"]), ("n", r["n"]), ("|omega|", r["detOmega"]),
                            ("multiplicity", r["multiplicity"]),
                            ("hypersurface", r["hypersurface_check"])]))
        for name in ("Phi", "PhiTilde", "Psi", "PsiTilde", "U", "V"):
            parts.append(f"  {name}:\n{_mat(r[name])}")
    if "normals" in report:
        r = report["normals"]
        parts.append("== normals ==")
        parts.append(_rows([(_vec(v["raw"]), _vec(v["primitive"])) for v in r["direct_normals"]]))
    if "tropicalize" in report:
        r = report["tropicalize"]
        parts.append("== tropicalize ==")
        parts.append(f"  cones: {len(r['cones'])}   rays: {len(r['rays'])}")
        parts.append(_rows([(c["label"], "  ".join(_vec(g) for g in c["extreme_rays"]))
                            for c in r["cones"]]))
        parts.append("  direct rays: " + " ".join(_vec(v) for v in r["direct_rays"]))
        for h in r["hidden_rays"]:
            parents = ", ".join("&".join(p) for p in h["parents"])
            parts.append(f"  hidden ray {_vec(h['ray'])} from {parents}")
        for msg in r["diagnostics"]:
            parts.append(f"  note: {msg}")
    if "oracle_compare" in report:
        r = report["oracle_compare"]
        parts.append("== oracle-compare ==")
        parts.append(f"  {r['summary']}")
        for key in ("oracle_only", "fan_only"):
            if r[key]:
                parts.append(f"  {key}: " + " ".join(_vec(v) for v in r[key]))
    if "hk_verify" in report:
        r = report["hk_verify"]
        parts.append("== hk-verify ==")
        parts.append(_rows([(" ".join(p["s"]), f"branches={p['branches']}  residual={p['residual']:.3e}")
                            for p in r["points"]]))
        parts.append(f"  max residual {r['max_residual']:.3e} (tol {r['tolerance']:g}): "
                     + ("ok" if r["ok"] else "FAIL"))
    return "\n".join(parts) + "\n"


def attach_schema(report: dict, command: str, input_path: Optional[str]) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "command": command}
    if input_path is not None:
        out["input"] = str(input_path)
    out.update(report)
    return out
