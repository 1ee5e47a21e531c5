"""JSON encoding and decoding for the domain types.

All integers and rationals travel as decimal strings ("p/q" for
non-integral rationals) so consumers never lose precision; matrices are
row-major arrays of such strings.  Parsers raise ValueError with a field
path so the CLI can report where an input file went wrong.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Mapping, Sequence, Tuple

from .homology import Family, SymplecticSpace, TwistGenerator, TwistWord
from .matrices import IntMatrix
from .penner import CurveSystem, PennerReport, Region
from .polytope import CandidatePoint, NormSpec, RatPolytope
from .sutured import NovikovWitness, Tangency, TangencyKind


# -- scalar encoding -----------------------------------------------------------


def fmt_int(n: int) -> str:
    return str(n)


def fmt_frac(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_int(value: Any, field: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{field}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ValueError(f"{field}: not an integer: {value!r}") from None
    raise ValueError(f"{field}: expected an integer, got {type(value).__name__}")


def parse_frac(value: Any, field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"{field}: expected an exact rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"{field}: not a rational 'p/q' string: {value!r}") from None
    raise ValueError(f"{field}: expected an exact rational, got {type(value).__name__}")


def _expect_list(value: Any, field: str) -> list:
    if not isinstance(value, list):
        raise ValueError(f"{field}: expected a list")
    return value


def _expect_map(value: Any, field: str) -> Mapping:
    if not isinstance(value, dict):
        raise ValueError(f"{field}: expected an object")
    return value


def _get(mapping: Mapping, key: str, field: str) -> Any:
    if key not in mapping:
        raise ValueError(f"{field}: missing key {key!r}")
    return mapping[key]


# -- matrices ------------------------------------------------------------------


def matrix_to_json(m: IntMatrix) -> List[List[str]]:
    return [[fmt_int(e) for e in row] for row in m.rows]


def matrix_from_json(data: Any, field: str = "matrix") -> IntMatrix:
    rows = _expect_list(data, field)
    return IntMatrix(
        [
            [parse_int(e, f"{field}[{i}][{j}]") for j, e in enumerate(_expect_list(row, f"{field}[{i}]"))]
            for i, row in enumerate(rows)
        ]
    )


# -- curve systems and words ---------------------------------------------------


def curve_system_to_json(sys: CurveSystem) -> dict:
    n = len(sys.curves)
    return {
        "genus": sys.genus,
        "curves": [
            {"label": c.label, "coords": [fmt_int(x) for x in c.cls.coords], "family": c.family.value}
            for c in sys.curves
        ],
        "geo_int": [[sys.geo_int[i][j] for j in range(i)] for i in range(n)],
        **(
            {"regions": [{"disk": r.disk, "label": r.label} for r in sys.regions]}
            if sys.regions is not None
            else {}
        ),
    }


def word_to_json(word: TwistWord) -> List[dict]:
    return [{"label": label, "exp": exp} for label, exp in word]


def curve_system_from_json(data: Any, field: str = "system") -> CurveSystem:
    obj = _expect_map(data, field)
    genus = parse_int(_get(obj, "genus", field), f"{field}.genus")
    space = SymplecticSpace(genus)
    curves = []
    for i, entry in enumerate(_expect_list(_get(obj, "curves", field), f"{field}.curves")):
        e = _expect_map(entry, f"{field}.curves[{i}]")
        label = _get(e, "label", f"{field}.curves[{i}]")
        if not isinstance(label, str):
            raise ValueError(f"{field}.curves[{i}].label: expected a string")
        coords = [
            parse_int(x, f"{field}.curves[{i}].coords[{j}]")
            for j, x in enumerate(_expect_list(_get(e, "coords", f"{field}.curves[{i}]"), f"{field}.curves[{i}].coords"))
        ]
        family_raw = _get(e, "family", f"{field}.curves[{i}]")
        try:
            family = Family(family_raw)
        except ValueError:
            raise ValueError(f"{field}.curves[{i}].family: expected 'A' or 'B'") from None
        curves.append(TwistGenerator(label, space.cls(coords), family))
    tri = _expect_list(_get(obj, "geo_int", field), f"{field}.geo_int")
    n = len(curves)
    if len(tri) != n:
        raise ValueError(f"{field}.geo_int: expected {n} rows, got {len(tri)}")
    geo = [[0] * n for _ in range(n)]
    for i, row in enumerate(tri):
        row = _expect_list(row, f"{field}.geo_int[{i}]")
        if len(row) != i:
            raise ValueError(f"{field}.geo_int[{i}]: expected {i} entries (strict lower triangle)")
        for j, e in enumerate(row):
            geo[i][j] = geo[j][i] = parse_int(e, f"{field}.geo_int[{i}][{j}]")
    regions = None
    if "regions" in obj:
        regions = []
        for i, entry in enumerate(_expect_list(obj["regions"], f"{field}.regions")):
            e = _expect_map(entry, f"{field}.regions[{i}]")
            disk = _get(e, "disk", f"{field}.regions[{i}]")
            if not isinstance(disk, bool):
                raise ValueError(f"{field}.regions[{i}].disk: expected a boolean")
            regions.append(Region(disk, e.get("label", "")))
        regions = tuple(regions)
    return CurveSystem(genus, tuple(curves), tuple(tuple(r) for r in geo), regions)


def twist_setup_to_json(gens: Sequence[TwistGenerator], word: TwistWord) -> dict:
    """Bare twist setup: genus, generators and a word, without intersection data."""
    if not gens:
        raise ValueError("need at least one generator")
    return {
        "genus": gens[0].cls.space.genus,
        "generators": [
            {"label": g.label, "coords": [fmt_int(x) for x in g.cls.coords], "family": g.family.value}
            for g in gens
        ],
        "word": word_to_json(word),
    }


def twist_setup_from_json(data: Any, field: str = "setup") -> Tuple[SymplecticSpace, dict, TwistWord]:
    obj = _expect_map(data, field)
    genus = parse_int(_get(obj, "genus", field), f"{field}.genus")
    space = SymplecticSpace(genus)
    gens = {}
    for i, entry in enumerate(_expect_list(_get(obj, "generators", field), f"{field}.generators")):
        e = _expect_map(entry, f"{field}.generators[{i}]")
        label = _get(e, "label", f"{field}.generators[{i}]")
        if not isinstance(label, str):
            raise ValueError(f"{field}.generators[{i}].label: expected a string")
        coords = [
            parse_int(x, f"{field}.generators[{i}].coords[{j}]")
            for j, x in enumerate(
                _expect_list(_get(e, "coords", f"{field}.generators[{i}]"), f"{field}.generators[{i}].coords")
            )
        ]
        try:
            family = Family(_get(e, "family", f"{field}.generators[{i}]"))
        except ValueError:
            raise ValueError(f"{field}.generators[{i}].family: expected 'A' or 'B'") from None
        if label in gens:
            raise ValueError(f"{field}.generators[{i}]: duplicate label {label!r}")
        gens[label] = TwistGenerator(label, space.cls(coords), family)
    word = word_from_json(_get(obj, "word", field), f"{field}.word")
    return space, gens, word


def word_from_json(data: Any, field: str = "word") -> TwistWord:
    letters = []
    for i, entry in enumerate(_expect_list(data, field)):
        e = _expect_map(entry, f"{field}[{i}]")
        label = _get(e, "label", f"{field}[{i}]")
        if not isinstance(label, str):
            raise ValueError(f"{field}[{i}].label: expected a string")
        exp = parse_int(_get(e, "exp", f"{field}[{i}]"), f"{field}[{i}].exp")
        if exp == 0:
            raise ValueError(f"{field}[{i}].exp: must be nonzero")
        letters.append((label, exp))
    return TwistWord(tuple(letters))


def penner_report_to_json(report: PennerReport) -> dict:
    return {
        "word_valid": report.word_valid,
        "all_curves_used": report.all_curves_used,
        "sign_discipline": report.sign_discipline,
        "filling_status": report.filling_status.value,
        "messages": list(report.messages),
    }


# -- polytopes -----------------------------------------------------------------


def polytope_to_json(p: RatPolytope) -> dict:
    return {
        "vertices": [[fmt_frac(x), fmt_frac(y)] for x, y in p.vertices],
        "halfspaces": [
            {"normal": [fmt_int(a), fmt_int(b)], "offset": fmt_int(c)}
            for (a, b), c in p.halfspaces
        ],
    }


def norm_spec_to_json(spec: NormSpec) -> dict:
    return {
        "x_f": fmt_frac(spec.x_f),
        "x_s": fmt_frac(spec.x_s),
        "x_sum": fmt_frac(spec.x_sum),
        "x_diff": fmt_frac(spec.x_diff),
        "chi": [fmt_int(spec.chi[0]), fmt_int(spec.chi[1])],
    }


def norm_spec_from_json(data: Any, field: str = "spec") -> NormSpec:
    obj = _expect_map(data, field)
    chi_raw = _expect_list(_get(obj, "chi", field), f"{field}.chi")
    if len(chi_raw) != 2:
        raise ValueError(f"{field}.chi: expected two entries")
    return NormSpec(
        x_f=parse_frac(_get(obj, "x_f", field), f"{field}.x_f"),
        x_s=parse_frac(_get(obj, "x_s", field), f"{field}.x_s"),
        x_sum=parse_frac(_get(obj, "x_sum", field), f"{field}.x_sum"),
        x_diff=parse_frac(_get(obj, "x_diff", field), f"{field}.x_diff"),
        chi=(parse_int(chi_raw[0], f"{field}.chi[0]"), parse_int(chi_raw[1], f"{field}.chi[1]")),
    )


def candidate_to_json(p: CandidatePoint) -> dict:
    return {
        "coords": [fmt_int(p.coords[0]), fmt_int(p.coords[1])],
        "location": p.location.value,
        "parity_ok": p.parity_ok,
        "realizability": p.realizability.value if p.realizability else None,
        "counterexample": p.counterexample,
    }


# -- sutured -------------------------------------------------------------------


def tangencies_from_json(data: Any, field: str = "tangencies") -> List[Tangency]:
    out = []
    for i, entry in enumerate(_expect_list(data, field)):
        e = _expect_map(entry, f"{field}[{i}]")
        kind_raw = _get(e, "kind", f"{field}[{i}]")
        try:
            kind = TangencyKind(kind_raw)
        except ValueError:
            raise ValueError(f"{field}[{i}].kind: expected 'saddle' or 'center'") from None
        sign = parse_int(_get(e, "sign", f"{field}[{i}]"), f"{field}[{i}].sign")
        if sign not in (1, -1):
            raise ValueError(f"{field}[{i}].sign: expected +1 or -1")
        out.append(Tangency(kind, sign))
    return out


def tangencies_to_json(tangencies: Sequence[Tangency]) -> List[dict]:
    return [{"kind": t.kind.value, "sign": t.sign} for t in tangencies]


def witness_to_json(w: NovikovWitness) -> dict:
    return {
        "k": fmt_int(w.k),
        "m": fmt_int(w.m),
        "initial_exponent": fmt_int(w.initial_exponent),
        "steps": [
            {
                "op": s.op,
                "exponent_added": fmt_int(s.exponent_added),
                "running_total": fmt_int(s.running_total),
            }
            for s in w.steps
        ],
        "final_exponent": fmt_int(w.final_exponent),
    }


# -- PL homeomorphisms ----------------------------------------------------------


def pl_to_json(f) -> dict:
    return {
        "breakpoints": [fmt_frac(b) for b in f.breakpoints],
        "values": [fmt_frac(v) for v in f.values],
    }


def pl_from_json(data: Any, field: str = "map"):
    from .holonomy import PLHomeo

    obj = _expect_map(data, field)
    bps = [
        parse_frac(b, f"{field}.breakpoints[{i}]")
        for i, b in enumerate(_expect_list(_get(obj, "breakpoints", field), f"{field}.breakpoints"))
    ]
    vals = [
        parse_frac(v, f"{field}.values[{i}]")
        for i, v in enumerate(_expect_list(_get(obj, "values", field), f"{field}.values"))
    ]
    return PLHomeo(bps, vals)
