"""The analysis report: one JSON-ready dict per diagram, rendered as text on demand."""

from __future__ import annotations

from fractions import Fraction

from .alternating import detect_alternating, reduced_via_lattice, special_genus_check
from .diagram import (
    LinkDiagram,
    classify,
    emit_pd,
    is_alternating_syntactic,
    is_reduced,
    seifert_circles,
    split_pieces,
    type_b_coloring,
)
from .errors import NoAllBColoring, PreconditionFailed
from .glform import gl_forms, link_signature, murasugi_xi, preferred_coloring


def _rational(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _piece_report(D: LinkDiagram) -> dict:
    try:
        type_b_coloring(D)
        coloring = "type-b"
    except NoAllBColoring:
        coloring = "default"
    col = preferred_coloring(D)
    W, B = gl_forms(D, col)
    _, k = classify(D, col)
    verdict = detect_alternating(D)
    sc = seifert_circles(D)
    out = {
        "pd": emit_pd(D),
        "c": k.c,
        "components": len(D.components),
        "writhe": k.writhe,
        "lk_total": k.lk_total,
        "coloring": coloring,
        "surfaces": [W.to_json(), B.to_json()],
        "sigma_L": link_signature(D, col),
        "xi_L": _rational(murasugi_xi(D, col)),
        "seifert_circles": sc.count,
        "alternating": verdict.is_alternating,
        "definiteness": {
            "white": verdict.white_definiteness.value,
            "black": verdict.black_definiteness.value,
        },
        "equality_chain": verdict.equality_chain.to_json(),
        "reduced": is_reduced(D),
    }
    if verdict.is_alternating:
        out["reduced_via_lattice"] = reduced_via_lattice(D)
        out["special"] = special_genus_check(D).to_json()
    else:
        out["special"] = None
    return out


def analyze(D: LinkDiagram, require_reduced: bool = False) -> dict:
    """Full report.  Split diagrams get one block per piece plus the summed invariants."""
    if require_reduced and not is_reduced(D):
        raise PreconditionFailed("reduced", "diagram has a nugatory crossing")
    if D.is_connected:
        report = _piece_report(D)
        report["connected"] = True
        return report
    pieces = [_piece_report(P) for P in split_pieces(D)]
    xi = sum(Fraction(p["xi_L"]) for p in pieces)
    return {
        "pd": emit_pd(D),
        "connected": False,
        "c": D.n_crossings,
        "components": len(D.components),
        "writhe": sum(D.signs),
        "sigma_L": sum(p["sigma_L"] for p in pieces),
        "xi_L": _rational(xi),
        "alternating": is_alternating_syntactic(D),
        "reduced": is_reduced(D),
        "pieces": pieces,
    }


def render_text(report: dict) -> str:
    """Human-readable rendering of a report (never computed separately)."""
    lines = []

    def emit(block, indent=""):
        for key, value in block.items():
            if isinstance(value, dict):
                lines.append(f"{indent}{key}:")
                emit(value, indent + "  ")
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                for j, item in enumerate(value):
                    lines.append(f"{indent}{key}[{j}]:")
                    emit(item, indent + "  ")
            else:
                lines.append(f"{indent}{key}: {value}")

    emit(report)
    return "\n".join(lines)
