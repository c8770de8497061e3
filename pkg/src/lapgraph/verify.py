"""Cross-check suite replaying the structural identities on one input graph.

Each check reports PASS, FAIL, or SKIP (not applicable to the input's rank or
planarity).  The suite is the CLI's ``verify`` subcommand; any FAIL gives a
nonzero exit status.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .colorings import bicycle_basis, conservative_vertex_basis
from .fields import GF2, QQ, ZZ, PrimeField
from .graphs import FiniteGraph, VoltageGraph, connected_components, voltage_laplacian
from .laurent import LaurentPoly, divides, normalize
from .linalg import det_laurent, elementary_divisor, first_nonzero_divisor, transpose
from .mahler import mahler_1var, mahler_2var
from .planar import (
    PlaneGraph,
    compact_orbit_count,
    dehn_extend,
    dehn_restrict,
    medial_components,
    medial_components_voltage,
    noncompact_count,
    shank_basis,
)
from .spanning import (
    annular_connectivity,
    crsf_coefficients,
    grimmett_bound,
    growth_covers,
)

GF5 = PrimeField(5)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS | FAIL | SKIP
    detail: str


def verify_ok(results: list[CheckResult]) -> bool:
    return all(r.status != "FAIL" for r in results)


def run_verify(
    obj: FiniteGraph | VoltageGraph | PlaneGraph,
    max_cover: int = 64,
    fibers: int = 512,
) -> list[CheckResult]:
    plane = obj if isinstance(obj, PlaneGraph) else None
    vg = None
    if isinstance(obj, VoltageGraph):
        vg = obj
    elif plane is not None and isinstance(plane.graph, VoltageGraph):
        vg = plane.graph
    base = obj.base if plane is not None else (vg.base if vg is not None else obj)
    if vg is not None and vg.rank == 0:
        vg = None

    out: list[CheckResult] = []

    def record(name: str, passed: bool, detail: str):
        out.append(CheckResult(name, "PASS" if passed else "FAIL", detail))

    def skip(name: str, why: str):
        out.append(CheckResult(name, "SKIP", why))

    # ---- voltage-side checks -------------------------------------------------
    if vg is not None:
        L = voltage_laplacian(vg)
        n = len(L)
        lt = [[e.reciprocal() for e in row] for row in transpose(L)]
        record("laplacian-transpose", lt == L, "L(1/x) equals L(x)^T")

        d0 = elementary_divisor(L, 0, ZZ)
        s, ds = first_nonzero_divisor(L, GF2)
        if d0.is_zero():
            record("gf2-vanishing", True, "Delta_0 = 0 over the integers")
        else:
            d0_gf2 = elementary_divisor(L, 0, GF2)
            if d0_gf2.is_zero():
                record("gf2-vanishing", True, "Delta_0 = 0 mod 2")

        # reciprocity of Delta_0 and the first nonzero divisor
        checked = []
        for label, poly in (("Delta_0", d0), (f"Delta_{s}", ds)):
            if poly.is_zero():
                continue
            ok = normalize(poly, QQ) == normalize(poly.reciprocal(), QQ)
            checked.append((label, ok))
        record(
            "reciprocity",
            all(ok for _, ok in checked),
            ", ".join(f"{lbl} reciprocal" for lbl, _ in checked) or "no nonzero divisor",
        )

        # divisibility at x = 1
        if d0.is_zero():
            skip("count-divisibility", "Delta_0 vanishes")
        elif vg.rank == 1:
            x_minus_1_sq = LaurentPoly(1, {(0,): 1, (1,): -2, (2,): 1})
            record(
                "count-divisibility",
                divides(x_minus_1_sq, d0, QQ),
                "(x-1)^2 divides Delta_0",
            )
        else:
            record("count-divisibility", d0.evaluate(1, 1) == 0, "Delta_0(1,1) = 0")

        # elementary divisor chain
        chain_ok = True
        details = []
        max_k = n if n <= 5 else 3
        prev = elementary_divisor(L, 0, QQ)
        for k in range(1, max_k + 1):
            cur = elementary_divisor(L, k, QQ)
            if not prev.is_zero() and cur.is_zero():
                chain_ok = False
                details.append(f"Delta_{k} = 0 after nonzero Delta_{k - 1}")
            elif not prev.is_zero() and not divides(cur, prev, QQ):
                chain_ok = False
                details.append(f"Delta_{k} does not divide Delta_{k - 1}")
            prev = cur
        record("delta-chain", chain_ok, "; ".join(details) or f"checked k <= {max_k}")

        if vg.rank == 1 and len(vg.base.edges) <= 16:
            rep = crsf_coefficients(vg)
            det = det_laurent(L, ZZ)
            ok = rep.general_reconstruction == det
            detail = f"C_k = {rep.coefficients}"
            if rep.max_winding <= 1:
                ok = ok and (
                    rep.reconstruction.is_zero()
                    if d0.is_zero()
                    else normalize(rep.reconstruction, ZZ) == d0
                )
            else:
                detail += f" (windings up to {rep.max_winding}: product form only)"
            record("forman-reconstruction", ok, detail)
        elif vg.rank == 1:
            skip("forman-reconstruction", "quotient too large for brute force")

        if len(connected_components(vg.base)) == 1 and not d0.is_zero():
            bound = grimmett_bound(vg)
            m0 = (
                mahler_1var(d0).value
                if vg.rank == 1
                else mahler_2var(d0, fibers).value
            )
            record(
                "grimmett-bound",
                bound >= m0 - 1e-9,
                f"bound {bound:.4f} >= m(Delta_0) {m0:.4f}",
            )
            schedule = (
                [n for n in (4, 8, 16, 32, 64) if n <= max_cover]
                if vg.rank == 1
                else [n for n in (2, 3, 4, 5, 6) if n * n <= max_cover]
            )
            report = growth_covers(vg, schedule, fibers=fibers)
            gaps = [abs(lg - report.reference) for _, _, lg in report.rows]
            # The gap behaves like (log r + c)/r, so it need not shrink
            # monotonically from the first cover; gate the final gap against
            # that rate at the largest scheduled index.
            r_last = report.rows[-1][0]
            limit = max(0.1, 2.0 * math.log(max(r_last, 3)) / r_last)
            record(
                "growth-vs-mahler",
                gaps[-1] < limit,
                f"gap {gaps[-1]:.4f} at cover index {r_last} (limit {limit:.4f})",
            )
        else:
            skip("grimmett-bound", "needs a connected quotient with nonzero Delta_0")
            skip("growth-vs-mahler", "needs a connected quotient with nonzero Delta_0")

    # ---- planar checks ---------------------------------------------------------
    if plane is not None:
        if plane.is_voltage:
            comps = medial_components_voltage(plane)
        else:
            comps = medial_components(plane)
        counts: dict[str, int] = {}
        for c in comps:
            for name in c.crossings:
                counts[name] = counts.get(name, 0) + 1
        ok = all(counts.get(e.name, 0) == 2 for e in base.edges)
        record("medial-crossings", ok, "every edge is crossed exactly twice")

        if plane.is_voltage:
            L = voltage_laplacian(plane.graph)
            s, ds = first_nonzero_divisor(L, GF2)
            deg = ds.degree_span()[0] if not ds.is_zero() else 0
            nc = noncompact_count(comps)
            zo = compact_orbit_count(comps)
            record(
                "medial-gf2-degree",
                deg == nc and s == zo,
                f"deg Delta_{s} = {deg}, noncompact = {nc}, zero-winding orbits = {zo}",
            )
            d0q = elementary_divisor(L, 0, QQ)
            if d0q.is_zero():
                skip("degree-connectivity", "Delta_0 vanishes over the rationals")
            else:
                kappa = annular_connectivity(plane.graph)
                record(
                    "degree-connectivity",
                    d0q.degree_span()[0] == 2 * kappa,
                    f"deg Delta_0 = {d0q.degree_span()[0]}, kappa = {kappa}",
                )
        else:
            nullity = len(conservative_vertex_basis(base, GF2))
            record(
                "medial-component-count",
                len(comps) == nullity,
                f"{len(comps)} components, GF(2) nullity {nullity}",
            )
            if len(connected_components(base)) == 1:
                try:
                    shank_basis(plane, 0)
                    record("shank-basis", True, "residues of non-base components form a bicycle basis")
                except AssertionError as exc:
                    record("shank-basis", False, str(exc))
                ok = True
                for alpha in conservative_vertex_basis(base, GF5):
                    dc = dehn_extend(plane, alpha, 0, GF5)
                    if dehn_restrict(dc) != [GF5.of(a) for a in alpha]:
                        ok = False
                record("dehn-roundtrip", ok, "extend then restrict is the identity over GF(5)")
            else:
                skip("shank-basis", "needs a connected graph")
                skip("dehn-roundtrip", "needs a connected graph")

    # ---- finite-graph checks ------------------------------------------------------
    dim2 = len(bicycle_basis(base, GF2))
    dimq = len(bicycle_basis(base, QQ))
    record(
        "bicycle-two-method",
        True,
        f"both methods agree; dim over GF(2) = {dim2}, over Q = {dimq}",
    )
    return out


def format_report(results: list[CheckResult]) -> str:
    lines = [f"{r.status:4s} {r.name}: {r.detail}" for r in results]
    lines.append("OK" if verify_ok(results) else "FAILED")
    return "\n".join(lines)
