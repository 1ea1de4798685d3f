"""Command-line front-end.

``frobdiv analyze INPUT.json [--check ...]`` runs verification and the
selected theorem checks; ``frobdiv build --group S3 --as double`` emits
canonical ingestion JSON for the constructors.

Exit codes: 0 all checks pass; 1 a mathematical verdict is negative or a
theorem hypothesis is unmet; 2 invalid input; 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys

from . import hopf as hopf_mod
from .algebra import (DegenerateForm, NotATraceForm, frobenius_structure,
                      regular_character_form)
from .groups import InvalidGroupTable, group_from_table, named_group
from .integrality import (EquivalenceViolation, InapplicableHypothesis,
                          frobenius_divisibility_verdict)
from .modular import BadPrime, PrecisionExceeded
from .report import Report, Section, input_digest
from .scalars import CyclotomicField, QQ, Rat
from .serialize import (SchemaError, algebra_from_json, canonical_dumps,
                        hopf_from_json, hopf_to_json, is_hopf_doc, load_path)
from .wedderburn import central_primitive_idempotents

CHECKS = ("fd", "zhu", "class-equation", "schneider", "all")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="frobdiv",
        description="exact Frobenius/Casimir/Hopf divisibility toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="run checks on an ingestion file")
    pa.add_argument("input")
    pa.add_argument("--check", choices=CHECKS, default="all")
    pa.add_argument("--lambda", dest="lam", default="regular",
                    choices=("regular", "delta-one", "custom"))
    pa.add_argument("--conductor", type=int, default=None)
    pa.add_argument("--prime", type=int, default=None)
    pa.add_argument("--format", dest="fmt", choices=("text", "json"),
                    default="text")
    pa.add_argument("--out", default=None)
    pa.add_argument("--no-parallel", action="store_true",
                    help="accepted for compatibility; execution is always "
                         "sequential and deterministic")

    pb = sub.add_parser("build", help="emit canonical JSON for a constructor")
    pb.add_argument("--group", default=None,
                    help="named group (C2, C3, C4, C6, S3, D4, Q8, A4)")
    pb.add_argument("--table", default=None,
                    help="path to JSON {\"table\": [[...]]}")
    pb.add_argument("--as", dest="build_as", default="group-algebra",
                    choices=("group-algebra", "dual", "double"))
    pb.add_argument("--conductor", type=int, default=None)
    pb.add_argument("--out", default=None)

    args = parser.parse_args(argv)
    if args.command == "build":
        return cmd_build(args)
    return cmd_analyze(args)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def cmd_analyze(args):
    try:
        doc = load_path(args.input)
    except (OSError, ValueError) as err:
        print(f"cannot read input: {err}", file=sys.stderr)
        return 2
    digest = input_digest(canonical_dumps(doc))
    sections = []
    try:
        report, code = _analyze(doc, args, sections)
    except SchemaError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 2
    except (EquivalenceViolation, hopf_mod.HopfError) as err:
        print(f"internal inconsistency: {err}", file=sys.stderr)
        return 3
    except (BadPrime, PrecisionExceeded) as err:
        print(f"modular pipeline failed: {err}", file=sys.stderr)
        return 3
    status = "pass" if code == 0 else "fail"
    rep = Report(digest, sections, status)
    text = rep.to_text() if args.fmt == "text" else rep.dumps_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _analyze(doc, args, sections):
    field_fmt = None
    if is_hopf_doc(doc):
        H, lam, R = hopf_from_json(doc)
        if args.conductor:
            H, lam, R = _embed_hopf(H, lam, R, args.conductor)
        base_report = hopf_mod.verify_hopf(H)
        if not base_report.passed:
            raise SchemaError(f"Hopf axioms fail: {base_report.failures[:3]}")
        sections.append(Section("hopf axioms", "pass",
                                [("dim", str(H.dim)),
                                 ("field", _field_str(H.field))]))
        return _analyze_hopf(H, R, args, sections)

    algebra, lam = algebra_from_json(doc)
    if args.conductor:
        algebra, lam = _embed_algebra(algebra, lam, args.conductor)
    base_report = algebra.verify()
    if not base_report.passed:
        raise SchemaError(f"algebra axioms fail: {base_report.failures[:3]}")
    sections.append(Section("algebra axioms", "pass",
                            [("dim", str(algebra.dim)),
                             ("field", _field_str(algebra.field))]))
    if args.check not in ("fd", "all"):
        raise SchemaError(f"check {args.check!r} needs Hopf input")
    return None, _check_fd_plain(algebra, lam, args, sections)


def _check_fd_plain(algebra, lam, args, sections):
    field = algebra.field
    form = _select_lambda(algebra, lam, args.lam)
    try:
        frob = frobenius_structure(algebra, form)
    except NotATraceForm as err:
        raise SchemaError(f"lambda is not a trace form: {err}")
    except DegenerateForm as err:
        sections.append(Section(
            "frobenius form", "fail",
            [("degenerate", "yes"),
             ("ideal witness", _vec_str(field, err.witness))]))
        return 1
    data = central_primitive_idempotents(algebra, frob, prime=args.prime)
    items = [("degrees", " ".join(map(str, data.degrees))),
             ("split certified", " ".join("yes" if f else "no"
                                          for f in data.split_certified))]
    try:
        verdict = frobenius_divisibility_verdict(algebra, frob, data)
    except InapplicableHypothesis as err:
        sections.append(Section("frobenius divisibility", "inapplicable",
                                items + [("reason", str(err))]))
        return 1
    items.append(("Gamma(1)", str(verdict.gamma_one)))
    items.append(("casimir integral",
                  "yes" if verdict.casimir_cert.integral else "no"))
    items.append(("minimal polynomial",
                  " ".join(verdict.casimir_cert.poly_strings())))
    sections.append(Section("frobenius divisibility",
                            "pass" if verdict.holds else "fail", items))
    return 0 if verdict.holds else 1


def _analyze_hopf(H, R, args, sections):
    code = 0
    I = hopf_mod.integrals(H)
    pipe = hopf_mod.frobenius_divisibility_hopf(H, I=I, prime=args.prime)
    data = pipe.data
    if args.check in ("fd", "all"):
        verdict = pipe.verdict
        sections.append(Section(
            "frobenius divisibility (FD)",
            "pass" if verdict.holds else "fail",
            [("degrees", " ".join(map(str, data.degrees))),
             ("dim", str(H.dim)),
             ("Gamma(1)", str(verdict.gamma_one)),
             ("casimir integral",
              "yes" if verdict.casimir_cert.integral else "no"),
             ("minimal polynomial",
              " ".join(verdict.casimir_cert.poly_strings()))]))
        if not verdict.holds:
            code = 1
    RR = None
    if args.check in ("zhu", "all"):
        entries = hopf_mod.zhu_check(H, data, I)
        ok = all(e.divides for e in entries if e.central) and \
            all(e.identity_ok for e in entries if e.central)
        items = []
        for e in entries:
            if e.central:
                items.append((f"S{e.index} (degree {e.degree})",
                              f"central; identity {'ok' if e.identity_ok else 'FAIL'}; "
                              f"integral {'yes' if e.integral else 'no'}; "
                              f"divides {'yes' if e.divides else 'no'}"))
            else:
                items.append((f"S{e.index} (degree {e.degree})",
                              "character not central: theorem silent"))
        sections.append(Section("Zhu divisibility",
                                "pass" if ok else "fail", items))
        if not ok:
            code = max(code, 1)
    if args.check in ("class-equation", "all"):
        RR = hopf_mod.representation_ring(H, data, I)
        ce = hopf_mod.class_equation_check(H, data, I, RR, prime=args.prime)
        sections.append(Section(
            "class equation",
            "pass" if ce.holds else "fail",
            [("induced dimensions", " ".join(map(str, ce.induced_dims))),
             ("dim", str(ce.dim))]))
        if not ce.holds:
            code = max(code, 1)
    if args.check in ("schneider", "all"):
        if R is None:
            if args.check == "schneider":
                raise SchemaError("schneider check needs an R-matrix")
        else:
            Q = hopf_mod.quasitriangular_verify(H, R)
            if not Q.report.passed:
                sections.append(Section(
                    "schneider divisibility", "fail",
                    [("quasitriangular axioms",
                      str(Q.report.failures[:3]))]))
                return None, 1
            fv = hopf_mod.factorizable_check(Q)
            if not fv.factorizable:
                sections.append(Section(
                    "schneider divisibility", "inapplicable",
                    [("factorizable", "no"),
                     ("Phi rank", f"{fv.rank}/{fv.dim}")]))
                code = max(code, 1)
            else:
                if RR is None:
                    RR = hopf_mod.representation_ring(H, data, I)
                sch = hopf_mod.schneider_check(H, Q, data, RR, I,
                                               prime=args.prime)
                sections.append(Section(
                    "schneider divisibility",
                    "pass" if sch.holds else "fail",
                    [("factorizable", "yes"),
                     ("degree squares",
                      " ".join(map(str, sch.squares))),
                     ("induced dimensions",
                      " ".join(map(str, sch.induced_dims))),
                     ("dim", str(sch.dim))]))
                if not sch.holds:
                    code = max(code, 1)
    return None, code


def _select_lambda(algebra, custom, mode):
    field = algebra.field
    if mode == "regular":
        return regular_character_form(algebra)
    if mode == "delta-one":
        support = [i for i, c in enumerate(algebra.unit) if bool(c)]
        if len(support) != 1:
            raise SchemaError("--lambda delta-one needs a unit supported on "
                              "a single basis element")
        i0 = support[0]
        form = [field.zero] * algebra.dim
        form[i0] = field.one / algebra.unit[i0]
        return form
    if custom is None:
        raise SchemaError("--lambda custom requires a \"lambda\" entry in "
                          "the input")
    return custom


def _field_str(field):
    d = field.describe()
    if d["type"] == "rational":
        return "Q"
    return f"Q(zeta_{d['conductor']})"


def _vec_str(field, vec):
    return "[" + ", ".join(field.format(c) for c in vec) + "]"


# ---------------------------------------------------------------------------
# conductor embedding
# ---------------------------------------------------------------------------


def _embed_scalar(old_field, new_field, x):
    old = old_field.describe()
    m = old["conductor"] if old["type"] == "cyclotomic" else 1
    N = new_field.conductor
    if N % m != 0:
        raise SchemaError(f"conductor {N} is not a multiple of {m}")
    step = N // m
    out = new_field.zero
    for i, q in enumerate(old_field.to_qvec(x)):
        if q:
            out = out + new_field.from_rat(q) * new_field.zeta(i * step)
    return out


def _embed_algebra(algebra, lam, conductor):
    new_field = CyclotomicField(conductor) if conductor > 1 else QQ
    from .algebra import StructureConstantAlgebra
    emb = lambda x: _embed_scalar(algebra.field, new_field, x)
    table = [[{k: emb(c) for k, c in algebra.table[i][j].items()}
              for j in range(algebra.dim)] for i in range(algebra.dim)]
    unit = [emb(c) for c in algebra.unit]
    out = StructureConstantAlgebra(new_field, algebra.dim, table, unit,
                                   name=algebra.name)
    return out, ([emb(c) for c in lam] if lam is not None else None)


def _embed_hopf(H, lam, R, conductor):
    from .hopf import HopfAlgebraData
    from .linalg import Matrix
    algebra, lam2 = _embed_algebra(H.algebra, lam, conductor)
    new_field = algebra.field
    emb = lambda x: _embed_scalar(H.field, new_field, x)
    delta = [{k: emb(c) for k, c in d.items()} for d in H.delta]
    counit = [emb(c) for c in H.counit]
    antipode = Matrix(new_field, [[emb(c) for c in row]
                                  for row in H.antipode.entries])
    H2 = HopfAlgebraData(algebra, delta, counit, antipode, name=H.name)
    R2 = [emb(c) for c in R] if R is not None else None
    return H2, lam2, R2


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------


def cmd_build(args):
    try:
        if args.group:
            G = named_group(args.group)
        elif args.table:
            raw = load_path(args.table)
            G = group_from_table(raw["table"], name="G")
        else:
            print("build needs --group or --table", file=sys.stderr)
            return 2
    except (KeyError, ValueError, OSError, InvalidGroupTable) as err:
        print(f"invalid group: {err}", file=sys.stderr)
        return 2
    conductor = args.conductor or G.exponent
    if args.build_as == "group-algebra":
        H = hopf_mod.group_algebra(G, conductor=conductor)
        I = hopf_mod.integrals(H)
        doc = hopf_to_json(H, lam=I.lam)
    elif args.build_as == "dual":
        H = hopf_mod.dual_hopf(hopf_mod.group_algebra(G, conductor=conductor))
        I = hopf_mod.integrals(H)
        doc = hopf_to_json(H, lam=I.lam)
    else:
        H, Q = hopf_mod.drinfeld_double(G, conductor=conductor)
        I = hopf_mod.integrals(H)
        doc = hopf_to_json(H, lam=I.lam, R=Q.R)
    text = canonical_dumps(doc) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
