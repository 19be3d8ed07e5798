"""Command-line front-end.

Verbs:

  info FILE ALGEBRA            dimensions and structural predicates
  hh FILE ALGEBRA              cohomology with coefficients in the algebra
  hcoh FILE ALGEBRA --arrows   cohomology with coefficients in an arrow ideal
  verify FILE --base --tilde   the four-identity report for one splitting
  poset FILE --base --tilde    the poset of partial extensions
  ext2 FILE ALGEBRA            dimension of the second self-extension space
  cup FILE ALGEBRA             cup-product checks on degree 1 classes

Common flags: --format {human,json}, --field SPEC (Q or F<p>), and for the
cohomology verbs --degree {0,1,both} and --oracle (recompute dimensions by
the full-complex method and flag agreement).

Exit status: 0 when everything asked for holds, 1 when a mathematical check
fails (an identity row, oracle disagreement, a cup-product property), 2 for
unusable input (unreadable file, parse error, unknown names, or a family
that fails the structural gates).  Output is deterministic byte for byte;
machine output is JSON with frozen keys as documented in the README.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bimod, exactla, extensions, hochschild, qdsl, repmod
from .algebra import build, is_triangular


class InputError(Exception):
    pass


# -- shared helpers -----------------------------------------------------------


def _read_file(path: str) -> "qdsl.PresentationFile":
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror or e))
    return qdsl.parse(text)


def _get_block(pf, name: str):
    try:
        return pf.block(name)
    except KeyError:
        raise InputError(
            "no algebra named %r in this file (available: %s)"
            % (name, ", ".join(pf.names()))
        )


def _field_override(spec):
    if spec is None:
        return None
    return exactla.field_from_spec(spec)


def _build_algebra(pf, name: str, field_spec):
    return build(_get_block(pf, name), field=_field_override(field_spec))


def _format_element(alg, coords) -> str:
    f = alg.field
    terms = []
    for i, c in enumerate(coords):
        if f.is_zero(c):
            continue
        label = alg.basis[i].label()
        s = f.format(c)
        if s == "1":
            terms.append((False, label))
        elif s == "-1":
            terms.append((True, label))
        elif s.startswith("-"):
            terms.append((True, "%s*%s" % (s[1:], label)))
        else:
            terms.append((False, "%s*%s" % (s, label)))
    if not terms:
        return "0"
    neg, txt = terms[0]
    out = "-" + txt if neg else txt
    for neg, txt in terms[1:]:
        out += (" - " if neg else " + ") + txt
    return out


def _representative_entries(alg, m, layout, vec):
    """(arrow name, element string) pairs for the nonzero arrow values of a
    derivation given in arrow coordinates; elements print in ambient terms."""
    values = layout.embed(vec)
    out = []
    f = m.field
    for k, arrow in enumerate(alg.quiver.arrows):
        v = values[k]
        if all(f.is_zero(c) for c in v):
            continue
        out.append((arrow.name, _format_element(alg, m.to_ambient(v))))
    return out


def _pass(flag: bool) -> str:
    return "PASS" if flag else "FAIL"


def _emit(args, human_lines, payload) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    return "\n".join(human_lines) + "\n"


# -- verb: info ---------------------------------------------------------------


def _run_info(args):
    pf = _read_file(args.file)
    alg = _build_algebra(pf, args.algebra, args.field)
    block = alg.block
    payload = {
        "command": "info",
        "algebra": block.name,
        "field": alg.field.name,
        "dim": alg.dim,
        "vertices": len(alg.quiver.vertices),
        "arrows": len(alg.quiver.arrows),
        "relations": len(block.relations),
        "zero_length": alg.zero_length,
        "triangular": is_triangular(alg),
        "gldim_le_2": repmod.gldim_at_most(alg, 2),
        "center_dim": extensions.regular_h0(alg).dim,
    }
    lines = [
        "algebra %s over %s" % (block.name, alg.field.name),
        "  dim          %d" % payload["dim"],
        "  vertices     %d" % payload["vertices"],
        "  arrows       %d" % payload["arrows"],
        "  relations    %d" % payload["relations"],
        "  zero length  %d" % payload["zero_length"],
        "  triangular   %s" % ("true" if payload["triangular"] else "false"),
        "  gldim <= 2   %s" % ("true" if payload["gldim_le_2"] else "false"),
        "  center dim   %d" % payload["center_dim"],
    ]
    return _emit(args, lines, payload), True


# -- verbs: hh and hcoh -------------------------------------------------------


def _degree_sections(alg, m, degrees, want_reps: bool):
    """(payload fragment, human lines) for the requested degrees."""
    lines = []
    payload = {}
    if "0" in degrees:
        space = hochschild.h0(m)
        entry = {"dim": space.dim}
        if want_reps:
            entry["representatives"] = [
                _format_element(alg, m.to_ambient(list(v))) for v in space.basis
            ]
        payload["0"] = entry
        lines.append("dim %s = %d" % (degrees["0"], space.dim))
        for i, rep in enumerate(entry.get("representatives", ())):
            lines.append("  representative %d: %s" % (i + 1, rep))
    if "1" in degrees:
        space = hochschild.h1(alg, m)
        reps = space.representatives()
        entry = {"dim": space.dim}
        if want_reps:
            entry["representatives"] = [
                [
                    {"arrow": a, "value": v}
                    for a, v in _representative_entries(alg, m, space.layout, r)
                ]
                for r in reps
            ]
        payload["1"] = entry
        lines.append("dim %s = %d" % (degrees["1"], space.dim))
        for i, rep in enumerate(entry.get("representatives", ())):
            lines.append("  representative %d:" % (i + 1))
            for pair in rep:
                lines.append("    %s -> %s" % (pair["arrow"], pair["value"]))
    return payload, lines


def _oracle_section(alg, m, payload, lines):
    calc = hochschild.calculator(alg, m)
    bars = {}
    agrees = True
    for deg, entry in payload["degrees"].items():
        bars[deg] = calc.bar_h(int(deg))
        if bars[deg] != entry["dim"]:
            agrees = False
    payload["oracle"] = {"bar_dims": bars, "agrees": agrees}
    for deg in sorted(bars):
        lines.append("oracle: full-complex dim in degree %s = %d" % (deg, bars[deg]))
    lines.append("oracle agreement: %s" % _pass(agrees))
    return agrees


def _wanted_degrees(args, label0: str, label1: str) -> dict:
    if args.degree == "0":
        return {"0": label0}
    if args.degree == "1":
        return {"1": label1}
    return {"0": label0, "1": label1}


def _run_hh(args):
    pf = _read_file(args.file)
    alg = _build_algebra(pf, args.algebra, args.field)
    m = extensions.regular_bimodule_of(alg)
    degrees = _wanted_degrees(args, "HH^0", "HH^1")
    lines = ["algebra %s over %s, coefficients in itself" % (alg.block.name, alg.field.name)]
    sections, sec_lines = _degree_sections(alg, m, degrees, want_reps=True)
    lines += sec_lines
    payload = {
        "command": "hh",
        "algebra": alg.block.name,
        "field": alg.field.name,
        "degrees": sections,
    }
    ok = True
    if args.oracle:
        ok = _oracle_section(alg, m, payload, lines)
    return _emit(args, lines, payload), ok


def _parse_arrow_list(alg, spec: str) -> tuple:
    names = tuple(s for s in (part.strip() for part in spec.split(",")) if s)
    if not names:
        raise InputError("expected a comma-separated arrow list")
    known = {a.name for a in alg.quiver.arrows}
    for n in names:
        if n not in known:
            raise InputError(
                "no arrow named %r in algebra %s" % (n, alg.block.name)
            )
    return names


def _run_hcoh(args):
    pf = _read_file(args.file)
    alg = _build_algebra(pf, args.algebra, args.field)
    names = _parse_arrow_list(alg, args.arrows)
    try:
        m = bimod.arrow_ideal_bimodule(alg, names)
    except ValueError as e:
        raise InputError(str(e))
    degrees = _wanted_degrees(args, "H^0", "H^1")
    lines = [
        "algebra %s over %s, coefficients in the ideal (%s)"
        % (alg.block.name, alg.field.name, ", ".join(names))
    ]
    sections, sec_lines = _degree_sections(alg, m, degrees, want_reps=True)
    lines += sec_lines
    payload = {
        "command": "hcoh",
        "algebra": alg.block.name,
        "field": alg.field.name,
        "arrows": list(names),
        "degrees": sections,
    }
    ok = True
    if args.oracle:
        ok = _oracle_section(alg, m, payload, lines)
    return _emit(args, lines, payload), ok


# -- verb: verify -------------------------------------------------------------


def _split_arg(tilde_block, spec):
    if spec is None:
        return tuple(tilde_block.new_arrows)
    return tuple(s for s in (part.strip() for part in spec.split(",")) if s)


def _run_verify(args):
    pf = _read_file(args.file)
    base_block = _get_block(pf, args.base)
    tilde_block = _get_block(pf, args.tilde)
    if not tilde_block.new_arrows:
        raise InputError(
            "algebra %s declares no new arrows to split" % tilde_block.name
        )
    subset = _split_arg(tilde_block, args.split)
    report = extensions.verify_theorem(
        base_block, tilde_block, subset, field=_field_override(args.field)
    )
    d = report.to_dict()
    payload = {
        "command": "verify",
        "base": base_block.name,
        "tilde": tilde_block.name,
    }
    payload.update(d)

    lines = [
        "family %s -> partial(%s) -> %s over %s"
        % (base_block.name, ", ".join(subset), tilde_block.name, d["field"]),
        "dimensions:",
        "  HH^0: C=%d B=%d Ctilde=%d" % (d["hh0_C"], d["hh0_B"], d["hh0_Ctilde"]),
        "  HH^1: C=%d B=%d Ctilde=%d" % (d["hh1_C"], d["hh1_B"], d["hh1_Ctilde"]),
        "  H^0(B,E')=%d  H^0(Ct,E'')=%d" % (d["h0_B_Eprime"], d["h0_Ct_Esec"]),
        "  H^1(C,E')=%d  H^1(B,E')=%d  H^1(Ct,E'')=%d  H^1(B,E'')=%d  H^1(Ct,E)=%d"
        % (
            d["h1_C_Eprime"],
            d["h1_B_Eprime"],
            d["h1_Ct_Esec"],
            d["h1_B_Esec"],
            d["h1_Ct_E"],
        ),
        "  End over C-env of E'=%d  End over B-env of E''=%d"
        % (d["end_Ce_Eprime"], d["end_Be_Esec"]),
        "  maps E'->C space=%d  maps E''->B space=%d"
        % (d["curlyE_Eprime_C"], d["curlyE_Esec_B"]),
        "rows:",
    ]
    for r in d["rows"]:
        lines.append(
            "  %-24s %d = %s   %s"
            % (r["name"], r["lhs"], " + ".join(str(x) for x in r["rhs"]), _pass(r["pass"]))
        )
    lines += [
        "refinement a: %d = %d + %d   %s"
        % (
            d["h1_B_Eprime"],
            d["h1_C_Eprime"],
            d["end_Ce_Eprime"],
            _pass(d["refinement_a_pass"]),
        ),
        "refinement b: %d = %d + %d   %s"
        % (
            d["h1_Ct_Esec"],
            d["h1_B_Esec"],
            d["end_Be_Esec"],
            _pass(d["refinement_b_pass"]),
        ),
        "pushout:  %d = %d + %d - %d   %s"
        % (
            d["hh1_B"],
            d["hh1_Ctilde"],
            d["h1_B_Eprime"],
            d["h1_Ct_E"],
            _pass(d["pushout_pass"]),
        ),
        "projection ranks: deg0 B->C %d/%d, deg1 B->C %d/%d, deg0 Ct->B %d/%d, deg1 Ct->B %d/%d   %s"
        % (
            d["phi_ranks"]["deg0_B_to_C"],
            d["hh0_C"],
            d["phi_ranks"]["deg1_B_to_C"],
            d["hh1_C"],
            d["phi_ranks"]["deg0_Ctilde_to_B"],
            d["hh0_B"],
            d["phi_ranks"]["deg1_Ctilde_to_B"],
            d["hh1_B"],
            _pass(d["surjective"]),
        ),
        "deg0 kernel equals ideal-intersect-center: %s" % _pass(d["kernel_deg0_matches"]),
        "ideal-valued classes embed: %s %s"
        % (_pass(d["ideal_classes_embed"]), _pass(d["ideal_classes_embed_tilde"])),
        "center action on complement ideal: symmetric=%s positive-part-annihilates=%s literal-annihilation=%s"
        % (
            "yes" if d["center_symmetric_on_complement"] else "no",
            "yes" if d["center_positive_part_annihilates"] else "no",
            "yes" if d["center_annihilates_complement"] else "no",
        ),
        "derivation lifts solvable: %s" % _pass(d["lifts_ok"]),
        "result: %s" % ("ALL PASS" if d["all_pass"] else "FAILED"),
    ]
    return _emit(args, lines, payload), d["all_pass"]


# -- verb: poset --------------------------------------------------------------


def _run_poset(args):
    pf = _read_file(args.file)
    base_block = _get_block(pf, args.base)
    tilde_block = _get_block(pf, args.tilde)
    if not tilde_block.new_arrows:
        raise InputError(
            "algebra %s declares no new arrows to split" % tilde_block.name
        )
    field = _field_override(args.field)
    po = extensions.poset(base_block, tilde_block, field=field)
    d = po.to_dict()
    field_name = (field or exactla.field_from_spec(base_block.field_spec)).name
    payload = {
        "command": "poset",
        "base": base_block.name,
        "tilde": tilde_block.name,
        "field": field_name,
    }
    payload.update(d)
    ok = (
        d["monotone"]
        and d["surjective"]
        and d["triangles_commute"]
        and d["minimum"] == []
        and set(d["maximum"]) == set(tilde_block.new_arrows)
    )

    def fmt_arrows(arrows):
        return "(%s)" % ", ".join(arrows)

    lines = [
        "poset of partial extensions %s -> %s over %s"
        % (base_block.name, tilde_block.name, field_name)
    ]
    for n in d["nodes"]:
        lines.append("  node %-16s dim HH^1 = %d" % (fmt_arrows(n["arrows"]), n["dim_hh1"]))
    for e in d["edges"]:
        lines.append(
            "  edge %s < %s: rank %d, surjective %s, monotone %s"
            % (
                fmt_arrows(e["lower"]),
                fmt_arrows(e["upper"]),
                e["phi_rank"],
                "yes" if e["surjective"] else "no",
                "yes" if e["monotone"] else "no",
            )
        )
    lines += [
        "  triangles commute: %s" % ("yes" if d["triangles_commute"] else "no"),
        "  minimum %s, maximum %s" % (fmt_arrows(d["minimum"]), fmt_arrows(d["maximum"])),
        "result: %s" % ("ALL PASS" if ok else "FAILED"),
    ]
    return _emit(args, lines, payload), ok


# -- verb: ext2 ---------------------------------------------------------------


def _run_ext2(args):
    pf = _read_file(args.file)
    alg = _build_algebra(pf, args.algebra, args.field)
    dim = repmod.ext2_dimension(alg)
    payload = {
        "command": "ext2",
        "algebra": alg.block.name,
        "field": alg.field.name,
        "ext2_dimension": dim,
    }
    lines = [
        "algebra %s over %s" % (alg.block.name, alg.field.name),
        "ext2 dimension = %d" % dim,
    ]
    return _emit(args, lines, payload), True


# -- verb: cup ----------------------------------------------------------------


def _run_cup(args):
    pf = _read_file(args.file)
    alg = _build_algebra(pf, args.algebra, args.field)
    f = alg.field
    m = extensions.regular_bimodule_of(alg)
    space = extensions.regular_h1(alg)
    reps = space.representatives()
    cochains = [hochschild.derivation_to_cochain(alg, m, r) for r in reps]
    calc = hochschild.calculator(alg, m)

    unit = hochschild.unit_cochain(alg)
    unit_ok = True
    for c in cochains:
        left = hochschild.cup01(alg, unit, c)
        right = hochschild.cup10(alg, c, unit)
        if list(left) != list(c) or list(right) != list(c):
            unit_ok = False

    pairs = []
    all_ok = unit_ok
    for i in range(len(cochains)):
        for j in range(i, len(cochains)):
            fg = hochschild.cup_product(alg, cochains[i], cochains[j])
            gf = hochschild.cup_product(alg, cochains[j], cochains[i])
            cocycle = all(
                f.is_zero(c) for c in calc.b3_apply(fg).values()
            ) and all(f.is_zero(c) for c in calc.b3_apply(gf).values())
            diff = dict(fg)
            for k, v in gf.items():
                diff[k] = f.sub(diff.get(k, f.zero()), v)
            commutator = calc.is_coboundary(diff)
            pairs.append(
                {
                    "i": i + 1,
                    "j": j + 1,
                    "product_is_cocycle": cocycle,
                    "commutator_is_coboundary": commutator,
                }
            )
            if not (cocycle and commutator):
                all_ok = False

    payload = {
        "command": "cup",
        "algebra": alg.block.name,
        "field": alg.field.name,
        "dim_hh1": space.dim,
        "unit_law": unit_ok,
        "pairs": pairs,
        "all_pass": all_ok,
    }
    lines = [
        "algebra %s over %s" % (alg.block.name, alg.field.name),
        "dim HH^1 = %d" % space.dim,
        "unit law: %s" % _pass(unit_ok),
    ]
    for p in pairs:
        lines.append(
            "pair (%d,%d): product cocycle %s, commutator coboundary %s"
            % (
                p["i"],
                p["j"],
                _pass(p["product_is_cocycle"]),
                _pass(p["commutator_is_coboundary"]),
            )
        )
    lines.append("result: %s" % ("ALL PASS" if all_ok else "FAILED"))
    return _emit(args, lines, payload), all_ok


# -- argument parsing and dispatch --------------------------------------------


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="relext",
        description="bound quiver algebras, their degree 0/1 Hochschild "
        "cohomology, and partial relation extensions",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def common(p, algebra_arg=True):
        p.add_argument("file", help="presentation file")
        if algebra_arg:
            p.add_argument("algebra", help="algebra name within the file")
        p.add_argument("--format", choices=("human", "json"), default="human")
        p.add_argument("--field", default=None, help="field override: Q or F<p>")

    p = sub.add_parser("info", help="dimensions and structural predicates")
    common(p)

    p = sub.add_parser("hh", help="cohomology with coefficients in the algebra")
    common(p)
    p.add_argument("--degree", choices=("0", "1", "both"), default="both")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("hcoh", help="cohomology with arrow-ideal coefficients")
    common(p)
    p.add_argument("--arrows", required=True, help="comma-separated arrow names")
    p.add_argument("--degree", choices=("0", "1", "both"), default="both")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("verify", help="verify the extension identities")
    common(p, algebra_arg=False)
    p.add_argument("--base", required=True, help="base algebra name")
    p.add_argument("--tilde", required=True, help="full extension algebra name")
    p.add_argument(
        "--split",
        default=None,
        help="comma-separated new arrows of the partial extension "
        "(default: all declared new arrows)",
    )

    p = sub.add_parser("poset", help="poset of partial extensions")
    common(p, algebra_arg=False)
    p.add_argument("--base", required=True)
    p.add_argument("--tilde", required=True)

    p = sub.add_parser("ext2", help="second self-extension dimension")
    common(p)

    p = sub.add_parser("cup", help="cup-product checks in degree 1")
    common(p)
    return top


_RUNNERS = {
    "info": _run_info,
    "hh": _run_hh,
    "hcoh": _run_hcoh,
    "verify": _run_verify,
    "poset": _run_poset,
    "ext2": _run_ext2,
    "cup": _run_cup,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        text, ok = _RUNNERS[args.verb](args)
    except InputError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except (qdsl.ParseError, exactla.FieldError, extensions.SplitError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except ValueError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
