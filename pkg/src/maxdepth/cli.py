"""Command-line surface: ingestion, analysis commands, regression suite.

Exit codes: 0 success, 2 malformed input, 3 cap exceeded, 4 precondition
violation.  With a fixed seed and flags the output is byte-identical across
reruns (canonical orderings everywhere).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import regress as regress_mod
from .errors import EngineError, MalformedInputError
from .ideals import (
    DEFAULT_COLON_SEARCH_CAP,
    FieldSpec,
    MonomialIdeal,
    ideal_from_json,
    parse_field,
    parse_generators,
    polarize,
    set_colon_search_cap,
    tensor_join,
)
from .complexes import (
    DEFAULT_MAX_VERTICES,
    complex_from_json,
    parse_edge_list,
    set_max_vertices,
    to_ideal,
)
from .invariants import (
    LocalizationProfile,
    ModuleProfile,
    direct_sum_profile,
    localization_profile,
    profile,
)
from .filtration import (
    AttReport,
    DimensionFiltration,
    ProbeConfig,
    ProbeReport,
    PsuppEntry,
    SeqCMResult,
    att_report,
    dimension_filtration,
    is_sequentially_cm,
    probe_open_question,
    psupp_monomial,
    quotient_depth_intervals,
)


# ---------------------------------------------------------------------------
# serialization

def _prime_names(p, rng) -> list[str]:
    return [rng.names[i] for i in p.vars]


def profile_json(prof: ModuleProfile) -> dict:
    rng = prof.ring
    h_table = []
    for d in prof.hochster.degrees:
        row = {"i": d.degree, "nonzero": d.nonzero, "finite_length": d.finite_length}
        if d.k_dim is not None:
            row["k_dim"] = d.k_dim
        h_table.append(row)
    return {
        "dim": prof.dim,
        "depth": prof.depth,
        "mdepth": prof.mdepth,
        "maximal_depth": prof.maximal_depth,
        "cohen_macaulay": prof.cohen_macaulay,
        "unmixed": prof.unmixed,
        "generalized_cm": prof.generalized_cm,
        "field": prof.field.label,
        "ass": [_prime_names(p, rng) for p in prof.ass],
        "assd": [_prime_names(p, rng) for p in prof.assd],
        "h_table": h_table,
    }


def filtration_json(f: DimensionFiltration) -> dict:
    rng = f.base.ring
    intervals = {iv.index: iv for iv in quotient_depth_intervals(f)}
    levels = []
    for lv in f.levels:
        iv = intervals[lv.index]
        levels.append(
            {
                "i": lv.index,
                "ideal_gens": [g.format(rng) for g in lv.ideal.gens],
                "nonzero": lv.nonzero,
                "ass_i": [_prime_names(p, rng) for p in lv.ass_level],
                "depth_interval": [iv.module.lo, iv.module.hi] if iv.module else None,
                "quotient_depth_interval": (
                    [iv.quotient.lo, iv.quotient.hi] if iv.quotient else None
                ),
            }
        )
    return {"t": f.t, "levels": levels}


def seqcm_json(res: SeqCMResult, I: MonomialIdeal) -> dict:
    out = {"sequentially_cm": res.status}
    if res.status == "false":
        out["witness"] = {
            "skeleton_dim": res.witness_skeleton,
            "face": [v + 1 for v in res.witness_face],
            "homology_degree": res.witness_degree,
        }
    return out


def att_json(rep: AttReport, I: MonomialIdeal) -> dict:
    rng = I.ring
    return {
        "notes": list(rep.notes),
        "claims": [
            {
                "degree": c.degree,
                "kind": c.kind,
                "tag": c.tag,
                "primes": [_prime_names(p, rng) for p in c.primes],
            }
            for c in rep.claims
        ],
    }


def psupp_json(entry: PsuppEntry) -> dict:
    return {
        "degree": entry.degree,
        "faces": [[v + 1 for v in f] for f in entry.faces],
    }


def localize_json(loc: LocalizationProfile) -> dict:
    return {
        "face": [v + 1 for v in loc.face],
        "prime_codim_complement": loc.codim_of_prime,
        "profile": profile_json(loc.profile),
    }


def probe_json(rep: ProbeReport) -> dict:
    return {
        "samples": rep.samples_run,
        "eligible": rep.eligible,
        "hits": [
            {
                "gens": [g.format(h.ideal.ring) for g in h.ideal.gens],
                "vars": list(h.ideal.ring.names),
                "degree": h.degree,
                "depth": h.depth,
                "dim": h.dim,
            }
            for h in rep.hits
        ],
    }


def _render(obj: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2)
    return _table(obj)


def _table(obj, indent: str = "") -> str:
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_table(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                row = "  ".join(f"{k}={_fmt_scalar(v)}" for k, v in item.items())
                lines.append(f"{indent}  {row}")
        else:
            lines.append(f"{indent}{key}: {_fmt_scalar(value)}")
    return "\n".join(lines)


def _fmt_scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        if v and isinstance(v[0], list):
            return " ".join("(" + ", ".join(map(str, x)) + ")" for x in v) or "{}"
        return "(" + ", ".join(map(str, v)) + ")"
    return str(v)


# ---------------------------------------------------------------------------
# input handling

def _load_ideal(args, field: FieldSpec, which: str = "") -> MonomialIdeal:
    gens = getattr(args, "gens" + which, None)
    edges = getattr(args, "edges" + which, None)
    ideal_json = getattr(args, "ideal_json" + which, None)
    facets_json = getattr(args, "facets_json" + which, None)
    sources = [s for s in (gens, edges, ideal_json, facets_json) if s is not None]
    if len(sources) != 1:
        raise MalformedInputError(
            "exactly one input source required (--gens, --edges, --ideal-json or --facets-json)"
        )
    nvars = getattr(args, "nvars" + which, None)
    if gens is not None:
        return parse_generators(gens, nvars=nvars, field=field)
    if edges is not None:
        return parse_edge_list(edges, field=field)
    if ideal_json is not None:
        return ideal_from_json(_read_file(ideal_json), field=field)
    cx = complex_from_json(_read_file(facets_json))
    return to_ideal(cx, field=field)


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc


def _add_input_flags(sp, which: str = "", dest_suffix: str = ""):
    sp.add_argument(f"--gens{which}", dest=f"gens{dest_suffix}")
    sp.add_argument(f"--edges{which}", dest=f"edges{dest_suffix}")
    sp.add_argument(f"--ideal-json{which}", dest=f"ideal_json{dest_suffix}")
    sp.add_argument(f"--facets-json{which}", dest=f"facets_json{dest_suffix}")
    sp.add_argument(f"--nvars{which}", dest=f"nvars{dest_suffix}", type=int)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maxdepth",
        description="Exact invariants of monomial quotient rings: depth, mdepth, "
        "maximal depth, dimension filtrations, attached primes.",
    )
    ap.add_argument("--field", default="q", help="coefficient field: q | f2 | fp=P")
    ap.add_argument("--format", default="table", choices=("table", "json"))
    ap.add_argument("--max-vertices", type=int, default=None)
    ap.add_argument("--search-cap", type=int, default=DEFAULT_COLON_SEARCH_CAP)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=200)
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("analyze", "filtration", "seqcm", "att", "polarize"):
        sp = sub.add_parser(name)
        _add_input_flags(sp)

    sp = sub.add_parser("psupp")
    _add_input_flags(sp)
    sp.add_argument("--degree", type=int, required=True)

    sp = sub.add_parser("localize")
    _add_input_flags(sp)
    sp.add_argument("--face", required=True, help="comma-separated 1-based vertices; empty for the empty face")

    sp = sub.add_parser("tensor")
    _add_input_flags(sp)
    _add_input_flags(sp, which="2", dest_suffix="2")

    sp = sub.add_parser("directsum")
    sp.add_argument("--gens", action="append", required=True)
    sp.add_argument("--nvars", type=int, required=True)

    sp = sub.add_parser("probe")
    sp.add_argument("--min-vertices", type=int, default=3)

    sub.add_parser("regress")
    return ap


def run(args) -> tuple[int, str]:
    field = parse_field(args.field)
    fmt = args.format
    cmd = args.command
    if args.search_cap != DEFAULT_COLON_SEARCH_CAP:
        set_colon_search_cap(args.search_cap)
    if args.max_vertices is not None:
        set_max_vertices(args.max_vertices)
    if cmd == "analyze":
        I = _load_ideal(args, field)
        return 0, _render(profile_json(profile(I)), fmt)
    if cmd == "filtration":
        I = _load_ideal(args, field)
        return 0, _render(filtration_json(dimension_filtration(I)), fmt)
    if cmd == "seqcm":
        I = _load_ideal(args, field)
        return 0, _render(seqcm_json(is_sequentially_cm(I), I), fmt)
    if cmd == "att":
        I = _load_ideal(args, field)
        return 0, _render(att_json(att_report(I), I), fmt)
    if cmd == "psupp":
        I = _load_ideal(args, field)
        return 0, _render(psupp_json(psupp_monomial(I, args.degree)), fmt)
    if cmd == "polarize":
        I = _load_ideal(args, field)
        pol = polarize(I)
        out = {
            "vars": list(pol.ideal.ring.names),
            "gens": [g.format(pol.ideal.ring) for g in pol.ideal.gens],
            "added_vars": pol.added_vars,
        }
        return 0, _render(out, fmt)
    if cmd == "localize":
        I = _load_ideal(args, field)
        face = tuple(
            int(v) - 1 for v in args.face.split(",") if v.strip()
        )
        return 0, _render(localize_json(localization_profile(I, face)), fmt)
    if cmd == "tensor":
        I = _load_ideal(args, field)
        J = _load_ideal(args, field, which="2")
        joined = tensor_join(I, J)
        out = {
            "vars": list(joined.ring.names),
            "gens": [g.format(joined.ring) for g in joined.gens],
            "profile": profile_json(profile(joined)),
        }
        return 0, _render(out, fmt)
    if cmd == "directsum":
        profiles = [
            profile(parse_generators(g, nvars=args.nvars, field=field))
            for g in args.gens
        ]
        return 0, _render(profile_json(direct_sum_profile(profiles)), fmt)
    if cmd == "probe":
        cfg = ProbeConfig(
            samples=args.samples,
            max_vertices=args.max_vertices if args.max_vertices is not None else 7,
            min_vertices=args.min_vertices,
            seed=args.seed,
        )
        return 0, _render(probe_json(probe_open_question(cfg)), fmt)
    if cmd == "regress":
        ok, lines = regress_mod.run_regression()
        return (0 if ok else 1), "\n".join(lines)
    raise MalformedInputError(f"unknown command {cmd}")


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code, text = run(args)
    except EngineError as exc:
        print(f'error kind={exc.kind} msg="{exc}"', file=sys.stderr)
        return exc.exit_code
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
