"""Command-line front end for the descriptor-driven computations.

Verbs:
  describe   structural summary of the relative data built from a descriptor
  adm        admissible set of a cocharacter class at a facet
  bernstein  central orbit-sum element in the Iwahori-Matsumoto basis, as JSON
  testfn     test function of a dual highest weight: one lift or the average
  verify     run the acceptance checks and report one line per criterion

A descriptor is a name from the shipped library, a packaged TOML file, or a
path to a TOML file.  All output is deterministic: supports are emitted in
(length, label, word) order and JSON keys are sorted.  Exit codes: 0 success,
1 computation failure, 2 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import CycNum
from .descriptors import descriptor_names, load_descriptor
from .dualside import pairing_with_two_rho
from .hecke import HeckeAlgebra, HeckeElement, element_to_json
from .iwahori import IwahoriWeylGroup, WeylElement
from .laurent import Laurent
from .rootdata import (UnsupportedCaseError, ValidationError,
                       relative_root_data)
from .testfn import (TestFunctionContext, fixed_slot_coefficients,
                     normalize_and_check_integrality, semisimple_test_function,
                     support_in_admissible, test_function)


def _context(source: str) -> TestFunctionContext:
    descent = load_descriptor(source)
    group = IwahoriWeylGroup(relative_root_data(descent))
    return TestFunctionContext(HeckeAlgebra(group))


def _parse_ints(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}")


def _parse_class(ctx: TestFunctionContext, text: str) -> Tuple[int, ...]:
    mu = _parse_ints(text)
    lat = ctx.group.lattice
    if len(mu) != lat.class_len:
        raise ValidationError(
            f"class needs {lat.class_len} coordinates, got {len(mu)}")
    return lat.reduce(mu)


def _parse_weight(ctx: TestFunctionContext, text: str) -> Tuple[int, ...]:
    mu = _parse_ints(text)
    if len(mu) != ctx.datum.rank:
        raise ValidationError(
            f"highest weight needs {ctx.datum.rank} coordinates, got {len(mu)}")
    return mu


def _parse_facet(ctx: TestFunctionContext, text: str) -> Tuple[int, ...]:
    if text.strip().lower() in ("", "iwahori"):
        return ()
    facet = _parse_ints(text)
    labels = {node.label for node in ctx.group.affine_nodes}
    for i in facet:
        if i not in labels:
            raise ValidationError(f"no affine node labeled {i}")
    return tuple(sorted(set(facet)))


def _abelian_str(free_rank: int, torsion: Sequence[int]) -> str:
    parts = []
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    parts.extend(f"Z/{d}" for d in torsion)
    return " x ".join(parts) if parts else "1"


def _relative_type(cfg) -> str:
    simples = list(cfg.simple_indices)
    if not simples:
        return "torus"
    adj = {i: [] for i in simples}
    for a in simples:
        for b in simples:
            if a != b and cfg.cartan_integer(a, b) != 0:
                adj[a].append(b)
    seen = set()
    names = []
    for start in simples:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    comp.append(nxt)
                    frontier.append(nxt)
        single_bonds = all(
            cfg.cartan_integer(a, b) * cfg.cartan_integer(b, a) == 1
            for a in comp for b in adj[a] if b in comp
        )
        path = all(len(adj[a]) <= 2 for a in comp)
        if single_bonds and path:
            names.append(f"A{len(comp)}")
        else:
            names.append(f"rank-{len(comp)} component")
    return " x ".join(sorted(names))


def _scalar_str(x) -> str:
    if isinstance(x, CycNum) and x.is_rational():
        return str(x.as_fraction())
    return str(x)


# -- verbs -------------------------------------------------------------------------


def _matrix_order(mat: Sequence[Sequence[int]], cap: int = 48) -> int:
    n = len(mat)
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    cur = ident
    for k in range(1, cap + 1):
        cur = tuple(
            tuple(sum(cur[i][t] * mat[t][j] for t in range(n)) for j in range(n))
            for i in range(n)
        )
        if cur == ident:
            return k
    raise ValidationError("descriptor matrix has no small finite order")


def cmd_describe(ctx: TestFunctionContext) -> dict:
    grp = ctx.group
    cfg = ctx.cfg
    lat = grp.lattice
    quot = grp.omega_quotient
    pi1 = cfg.pi1
    return {
        "absolute_rank": ctx.datum.rank,
        "relative_semisimple_rank": len(cfg.simple_indices),
        "relative_type": _relative_type(cfg),
        "translation_lattice": _abelian_str(lat.free_rank, lat.torsion),
        "pi1_coinvariants": _abelian_str(pi1.free_rank, pi1.torsion),
        "omega": _abelian_str(quot.free_rank, quot.torsion),
        "affine_nodes": [node.label for node in grp.affine_nodes],
        "length_parameters": {
            str(node.label): ctx.algebra.L[node.label] for node in grp.affine_nodes
        },
        "q": ctx.descent.q,
        "e": ctx.descent.e,
        "f": ctx.descent.f,
        "inertia_image_order": len(set(ctx.descent.inertia_elements())),
        "frobenius_order": _matrix_order(ctx.descent.frobenius),
    }


def _element_entry(grp: IwahoriWeylGroup, w: WeylElement) -> dict:
    label, word = grp.reduced_word(w)
    return {"omega_label": list(label), "reduced_word": list(word)}


def _sorted_elements(grp: IwahoriWeylGroup, elements) -> List[WeylElement]:
    return sorted(
        elements,
        key=lambda w: (grp.length(w),) + grp.reduced_word(w)[0] + grp.reduced_word(w)[1],
    )


def _facet_minimal(grp: IwahoriWeylGroup, elements, facet: Sequence[int]):
    """Minimal length representatives of the facet double cosets met."""
    if not facet:
        return list(elements)
    gens = [grp.affine_nodes[i].element for i in facet]
    out = []
    for w in elements:
        lw = grp.length(w)
        if all(grp.length(grp.multiply(s, w)) > lw for s in gens) and all(
            grp.length(grp.multiply(w, s)) > lw for s in gens
        ):
            out.append(w)
    return out


def cmd_adm(ctx: TestFunctionContext, cls: Tuple[int, ...],
            facet: Tuple[int, ...]) -> dict:
    grp = ctx.group
    adm = grp.admissible_set(cls)
    chosen = _facet_minimal(grp, adm, facet)
    elements = [_element_entry(grp, w) for w in _sorted_elements(grp, chosen)]
    return {
        "class": list(cls),
        "facet": list(facet),
        "count": len(elements),
        "elements": elements,
    }


def cmd_bernstein(ctx: TestFunctionContext, cls: Tuple[int, ...]) -> dict:
    z = ctx.algebra.z_element(cls)
    out = {"class": list(cls), "basis": "iwahori_matsumoto"}
    out.update(element_to_json_generic(ctx.algebra, z))
    return out


def _average_slot_coefficients(ctx: TestFunctionContext, rep) -> Dict[tuple, CycNum]:
    lifts = ctx.frobenius_lifts(rep)
    total: Dict[tuple, CycNum] = {}
    for op in lifts:
        for c, a in fixed_slot_coefficients(ctx, rep, op).items():
            total[c] = total.get(c, CycNum.rational(0)) + a
    inv = CycNum.rational(Fraction(1, len(lifts)))
    return {c: a * inv for c, a in total.items()}


def _dominant_coefficients(ctx: TestFunctionContext,
                           per_class: Dict[tuple, CycNum]) -> Dict[str, str]:
    # Weyl-orbit constancy is enforced where the element is assembled, so the
    # dominant representative carries the whole orbit's coefficient
    cfg = ctx.cfg
    out: Dict[str, str] = {}
    for c in sorted(per_class):
        dom, _ = cfg.dominant_class(c)
        if tuple(c) == tuple(dom) and per_class[c] != 0:
            out[",".join(str(x) for x in dom)] = _scalar_str(per_class[c])
    return out


def cmd_testfn(ctx: TestFunctionContext, mu_full: Tuple[int, ...],
               facet: Tuple[int, ...], lift: str) -> dict:
    alg = ctx.algebra
    grp = ctx.group
    rep = ctx.box_rep(mu_full)
    if lift == "ss":
        z = semisimple_test_function(ctx, rep)
        per_class = _average_slot_coefficients(ctx, rep)
    else:
        try:
            index = int(lift)
        except ValueError:
            raise ValidationError(
                f"--lift must be an integer index or 'ss', got {lift!r}")
        lifts = ctx.frobenius_lifts(rep)
        if not 0 <= index < len(lifts):
            raise ValidationError(
                f"lift index {index} out of range; {len(lifts)} inertia lifts exist")
        z = test_function(ctx, rep, lifts[index])
        per_class = fixed_slot_coefficients(ctx, rep, lifts[index])
    ok_adm, extra = support_in_admissible(ctx, z, mu_full)
    twist = pairing_with_two_rho(ctx.datum, mu_full)
    if facet:
        # denominator-free facet average: sum of v^{L(w)} T_w over the facet group
        sup = {w: Laurent.gen(alg.length_param(w)) for w in grp.finite_subgroup(facet)}
        probe = alg.mul(HeckeElement(sup), z)
    else:
        probe = z
    report = normalize_and_check_integrality(alg, probe, twist)
    return {
        "class": list(grp.lattice.project(mu_full)),
        "highest_weight": list(mu_full),
        "lift": lift,
        "facet": list(facet),
        "basis": "iwahori_matsumoto",
        "coefficients": _dominant_coefficients(ctx, per_class),
        "support": element_to_json_generic(alg, z),
        "admissible_check": {
            "ok": ok_adm,
            "violations": [_element_entry(grp, w) for w in extra],
        },
        "integrality_report": {
            "ok": report.ok,
            "twist": twist,
            "failures": [_element_entry(grp, w) for w in report.failures],
            "values": [
                {
                    **_element_entry(grp, w),
                    "polynomial_in_q": [
                        [e, c] for e, c in sorted(report.values[w].items())
                    ],
                }
                for w in _sorted_elements(grp, report.values)
            ],
        },
    }


def element_to_json_generic(alg: HeckeAlgebra, h: HeckeElement) -> dict:
    """Element JSON that tolerates non-integer exact coefficients."""
    try:
        return element_to_json(alg, h)
    except ValidationError:
        grp = alg.group
        terms = []
        for w in _sorted_elements(grp, h.support):
            label, word = grp.reduced_word(w)
            terms.append({
                "omega_label": list(label),
                "reduced_word": list(word),
                "coeffs": [[e, _scalar_str(c)] for e, c in h.support[w].items()],
            })
        out = {"terms": terms}
        if not h.den.is_one():
            out["denominator"] = [[e, _scalar_str(c)] for e, c in h.den.items()]
        return out


def cmd_verify(selector: str) -> Tuple[dict, bool]:
    from . import acceptance

    results = acceptance.run(selector)
    ok = all(r.ok for r in results)
    table = {
        "results": [
            {"criterion": r.index, "name": r.name, "ok": r.ok, "detail": r.detail}
            for r in results
        ],
        "ok": ok,
    }
    return table, ok


# -- output formatting --------------------------------------------------------------


def _emit_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def _emit_text(verb: str, data: dict) -> str:
    lines: List[str] = []
    if verb == "describe":
        lines.append(
            f"relative type {data['relative_type']}, "
            f"pi_1 = {data['pi1_coinvariants']}, Omega = {data['omega']}"
        )
        for key in ("absolute_rank", "relative_semisimple_rank",
                    "translation_lattice", "q", "e", "f",
                    "inertia_image_order", "frobenius_order"):
            lines.append(f"{key} = {data[key]}")
        lines.append(f"affine nodes {data['affine_nodes']} "
                     f"with lengths {data['length_parameters']}")
    elif verb == "adm":
        lines.append(f"admissible set of {data['class']} at facet "
                     f"{data['facet'] or 'iwahori'}: {data['count']} elements")
        for entry in data["elements"]:
            lines.append(f"  omega {entry['omega_label']} word {entry['reduced_word']}")
    elif verb == "bernstein":
        lines.append(f"z for class {data['class']}: {len(data['terms'])} terms")
        for entry in data["terms"]:
            lines.append(
                f"  omega {entry['omega_label']} word {entry['reduced_word']}"
                f" coeffs {entry['coeffs']}")
        if "denominator" in data:
            lines.append(f"  denominator {data['denominator']}")
    elif verb == "testfn":
        lines.append(
            f"test function for weight {data['highest_weight']} (lift {data['lift']}):"
            f" {len(data['support']['terms'])} terms")
        lines.append(f"bernstein coefficients: {data['coefficients']}")
        lines.append(f"admissible: {data['admissible_check']['ok']}")
        lines.append(f"integral after twist {data['integrality_report']['twist']}: "
                     f"{data['integrality_report']['ok']}")
    elif verb == "verify":
        for entry in data["results"]:
            mark = "PASS" if entry["ok"] else "FAIL"
            lines.append(f"{mark} criterion {entry['criterion']}: {entry['name']}"
                         f" -- {entry['detail']}")
        lines.append("all passed" if data["ok"] else "FAILURES PRESENT")
    return "\n".join(lines)


def _emit_csv(verb: str, data: dict) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    if verb == "adm":
        writer.writerow(["omega_label", "reduced_word"])
        for entry in data["elements"]:
            writer.writerow([
                " ".join(map(str, entry["omega_label"])),
                " ".join(map(str, entry["reduced_word"])),
            ])
    elif verb in ("bernstein", "testfn"):
        body = data if verb == "bernstein" else data["support"]
        writer.writerow(["omega_label", "reduced_word", "coefficient"])
        for entry in body["terms"]:
            writer.writerow([
                " ".join(map(str, entry["omega_label"])),
                " ".join(map(str, entry["reduced_word"])),
                " + ".join(f"({c})*v^{e}" for e, c in entry["coeffs"]),
            ])
    elif verb == "verify":
        writer.writerow(["criterion", "name", "ok", "detail"])
        for entry in data["results"]:
            writer.writerow([entry["criterion"], entry["name"], entry["ok"],
                             entry["detail"]])
    else:
        writer.writerow(["key", "value"])
        for key in sorted(data):
            writer.writerow([key, data[key]])
    return buf.getvalue().rstrip("\n")


def _emit(verb: str, data: dict, fmt: str) -> str:
    if fmt == "json":
        return _emit_json(data)
    if fmt == "csv":
        return _emit_csv(verb, data)
    return _emit_text(verb, data)


# -- entry point -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parahoric",
        description="exact parahoric Hecke algebra centers and test functions",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, mu_help):
        p.add_argument("--descriptor", required=True,
                       help="shipped name, packaged TOML, or path "
                            f"(shipped: {', '.join(descriptor_names())})")
        if mu_help:
            p.add_argument("--mu", required=True, help=mu_help)
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="json")

    p = sub.add_parser("describe", help="summarize the relative data")
    common(p, None)

    p = sub.add_parser("adm", help="admissible set of a class at a facet")
    common(p, "comma-separated coinvariant class coordinates")
    p.add_argument("--facet", default="iwahori",
                   help="comma-separated affine node labels, or 'iwahori'")

    p = sub.add_parser("bernstein", help="central orbit-sum element")
    common(p, "comma-separated coinvariant class coordinates")

    p = sub.add_parser("testfn", help="test function of a dual highest weight")
    common(p, "comma-separated highest weight on the full datum")
    p.add_argument("--facet", default="iwahori",
                   help="comma-separated affine node labels, or 'iwahori'")
    p.add_argument("--lift", default="ss",
                   help="inertia lift index, or 'ss' for the semisimple average")

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("selector", nargs="?", default="all",
                   help="'all' or comma-separated criterion numbers")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "verify":
            table, ok = cmd_verify(args.selector)
            return (0 if ok else 1), _emit("verify", table, args.format)
        ctx = _context(args.descriptor)
        if args.verb == "describe":
            data = cmd_describe(ctx)
        elif args.verb == "adm":
            data = cmd_adm(ctx, _parse_class(ctx, args.mu),
                           _parse_facet(ctx, args.facet))
        elif args.verb == "bernstein":
            data = cmd_bernstein(ctx, _parse_class(ctx, args.mu))
        else:
            data = cmd_testfn(ctx, _parse_weight(ctx, args.mu),
                              _parse_facet(ctx, args.facet), args.lift)
        return 0, _emit(args.verb, data, args.format)
    except (ValidationError, UnsupportedCaseError) as exc:
        return 2, f"validation error: {exc}"
    except Exception as exc:  # computation failure
        return 1, f"computation error: {type(exc).__name__}: {exc}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, output = run(argv)
    stream = sys.stdout if code == 0 else sys.stderr
    print(output, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
