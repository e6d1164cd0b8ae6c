"""Normalized invariant of a banded Kirby diagram."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import CycloNumber, InertiaTriple, format_complex, inertia
from .category import (CategoryError, CategoryParams, cap_scalar, cup_scalar, swim_check,
                       transparent_degrees)
from .diagram import Diagram, LinkSummary, link_summary, validate
from .engine import EvalContext, context_for, eval_closed

# competing values that disagree with the normalization applied consistently
KNOWN_DISCREPANCIES = {
    "cp2_bar": "a competing value for the mirror of CP2 divides the conjugate raw "
               "value by 3; the normalization formula divides it by Delta_C * Delta'' = 6",
}


def deltas(params: CategoryParams) -> tuple[int, int, int]:
    """(Delta_B, Delta_C, Delta'') for the pointed category; all dimensions are 1."""
    transparent = set(transparent_degrees(params, "full"))
    dpp = sum(1 for h in params.subgroup if h in transparent)
    return len(params.subgroup), params.N, dpp


@dataclass
class InvariantReport:
    raw: CycloNumber
    inertia: InertiaTriple
    s: int
    omega: int
    delta_B: int
    delta_C: int
    delta_pp: int
    k: CycloNumber
    kappa: CycloNumber
    value: CycloNumber | None
    float_value: complex | None
    warnings: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def denominator(self) -> CycloNumber:
        b = self.inertia
        den = (CycloNumber.from_int(self.raw.modulus, self.delta_B ** b.b_zero
                                    * (self.delta_C * self.delta_pp) ** b.b_plus))
        return den * self.k ** self.s * self.kappa ** self.omega

    @property
    def ok(self) -> bool:
        return not self.errors and self.value is not None

    def to_json(self) -> dict:
        return {
            "raw": cyclo_json(self.raw),
            "float": self.raw.float_str(),
            "inertia": {"b_plus": self.inertia.b_plus, "b_minus": self.inertia.b_minus,
                        "b_zero": self.inertia.b_zero},
            "s": self.s, "omega": self.omega,
            "delta_B": self.delta_B, "delta_C": self.delta_C, "delta_pp": self.delta_pp,
            "k": cyclo_json(self.k), "kappa": cyclo_json(self.kappa),
            "value": None if self.value is None else cyclo_json(self.value),
            "float_value": None if self.float_value is None else format_complex(self.float_value),
            "warnings": list(self.warnings),
            "errors": list(self.errors),
        }


def cyclo_json(x: CycloNumber) -> dict:
    return {"modulus": x.modulus, "coeffs": [str(Fraction(c)) for c in x.coeffs],
            "exact": str(x), "float": x.float_str()}


def invariant(diag: Diagram, ctx: EvalContext | None = None,
              fixture_name: str | None = None) -> InvariantReport:
    params = diag.params
    one = params.one()
    warnings: list[str] = []
    errors: list[str] = []
    check = validate(diag)
    if check["errors"]:
        raise ValueError("invalid diagram: " + "; ".join(check["errors"]))
    warnings.extend(check["warnings"])
    summary: LinkSummary = check["summary"]
    ctx = ctx or context_for(diag)
    k = kappa = one
    surface = summary.surface_components > 0 or summary.s or summary.omega
    if surface:
        if ctx.frob is None or ctx.mod is None:
            raise ValueError("surface components need frobenius and module data")
        try:
            k = cap_scalar(ctx.frob, ctx.mod)
            kappa = cup_scalar(ctx.frob, ctx.mod)
        except CategoryError as exc:
            errors.append(str(exc))
        sw = swim_check(params, ctx.frob, ctx.mod)
        if not sw["b_transparent"]:
            errors.append(f"swim condition fails: image degrees {sw['image_degrees']} "
                          "are not transparent to the 2-handle subcategory")
    raw = eval_closed(diag, ctx)
    tri = inertia(summary.linking_matrix)
    dB, dC, dpp = deltas(params)
    report = InvariantReport(raw, tri, summary.s, summary.omega, dB, dC, dpp, k, kappa,
                             None, None, warnings, errors)
    if not errors:
        den = report.denominator
        if den.is_zero():
            errors.append("normalization factor vanishes")
        else:
            report.value = raw / den
            report.float_value = report.value.to_complex()
    if fixture_name in KNOWN_DISCREPANCIES:
        warnings.append(KNOWN_DISCREPANCIES[fixture_name])
    return report


__all__ = ["InvariantReport", "deltas", "invariant", "cyclo_json", "KNOWN_DISCREPANCIES"]
