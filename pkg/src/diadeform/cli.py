"""Command-line front end.

Exit codes: 0 = success / property holds, 1 = property fails or an
obstruction blocks, 2 = input error.  All reports are deterministic for
identical inputs; `--format records` emits machine-readable key=value
lines instead of prose.
"""

import argparse
import sys

from .deformation import (extend_to_order, infinitesimal, obstruction,
                          obstruction_cocycle_check, rigidity_probe,
                          trivialize_step, verify_deformation)
from .dialgebra import adjoint_rep
from .errors import NotACoboundary, WorkbenchError
from .fields import parse_field
from .cochain import cohomology_dim
from .modelfile import parse_model, validate_model
from .morphism_complex import MorphismComplex
from .selftest import run_selftest
from .trees import enumerate_trees, face, prod_label

import itertools


class Emitter:
    def __init__(self, records=False):
        self.records = records

    def line(self, text, **kv):
        if self.records:
            print(" ".join("%s=%s" % (k, v) for k, v in kv.items()))
        else:
            print(text)


def _load_model(args):
    override = parse_field(args.field) if args.field else None
    if args.model == "-":
        text = sys.stdin.read()
    else:
        with open(args.model, encoding="utf-8") as fh:
            text = fh.read()
    return parse_model(text, field_override=override)


def _get(table, name, kind):
    if name is None:
        if len(table) == 1:
            return next(iter(table.values()))
        raise WorkbenchError(
            "model declares %d %ss; pick one with the flag"
            % (len(table), kind))
    if name not in table:
        raise WorkbenchError("unknown %s %r" % (kind, name))
    return table[name]


def cmd_check(args, emit):
    model = _load_model(args)
    ok = True
    for kind, name, report in validate_model(model):
        ok = ok and report.valid
        status = "PASS" if report.valid else "FAIL"
        detail = ""
        if not report.valid:
            detail = "  (%d violation(s); first: %r)" % (
                len(report.violations), report.violations[0])
        emit.line("%s %s %s%s" % (status, kind, name, detail),
                  check=kind, name=name, status=status)
    return 0 if ok else 1


def cmd_trees(args, emit):
    m = args.degree
    trees = enumerate_trees(m)
    emit.line("Y_%d: %d trees" % (m, len(trees)), degree=m,
              count=len(trees))
    for y in trees:
        emit.line("  %-8s shape %r" % (y.name, y.shape),
                  tree=y.name, index=y.index)
        if m >= 1:
            labels = "".join(prod_label(y, i).value
                             for i in range(m + 1))
            emit.line("    labels: %s" % labels, tree=y.name,
                      labels=labels)
        if m >= 2:
            faces = " ".join("d%d=%s" % (i, face(y, i).name)
                             for i in range(m + 1))
            emit.line("    faces:  %s" % faces, tree=y.name, faces=faces)
    return 0


def cmd_cohomology(args, emit):
    model = _load_model(args)
    d = _get(model.dialgebras, args.object, "dialgebra")
    n = args.degree
    dim = cohomology_dim(d, adjoint_rep(d), n)
    emit.line("HY^%d(%s,%s) = %d" % (n, d.name, d.name, dim),
              object=d.name, degree=n, dim=dim)
    return 0


def cmd_mor_cohomology(args, emit):
    model = _load_model(args)
    psi = _get(model.morphisms, args.morphism, "morphism")
    cx = MorphismComplex(psi)
    n = args.degree
    dim = cx.cohomology_dim(n)
    emit.line("HY^%d(%s,%s) = %d" % (n, psi.name, psi.name, dim),
              morphism=psi.name, degree=n, dim=dim)
    return 0


def cmd_deform_verify(args, emit):
    model = _load_model(args)
    th = _get(model.deformations, args.deformation, "deformation")
    report = verify_deformation(th)
    if report:
        emit.line("PASS deformation valid through order %d" % th.order,
                  status="PASS", order=th.order)
        return 0
    emit.line("FAIL at order %d: %s"
              % (report.first_failing_order, report.failing_identity),
              status="FAIL", order=report.first_failing_order)
    return 1


def cmd_infinitesimal(args, emit):
    model = _load_model(args)
    th = _get(model.deformations, args.deformation, "deformation")
    cx = MorphismComplex(th.psi)
    theta = infinitesimal(th, cx)
    _print_mor_cochain(emit, cx, theta)
    residual = cx.coboundary(theta)
    cocycle = residual.is_zero()
    emit.line("2-cocycle: %s" % ("yes" if cocycle else "NO"),
              cocycle=cocycle)
    return 0 if cocycle else 1


def cmd_obstruction(args, emit):
    model = _load_model(args)
    th = _get(model.deformations, args.deformation, "deformation")
    cx = MorphismComplex(th.psi)
    ob = obstruction(th, cx)
    _print_mor_cochain(emit, cx, ob.cochain,
                       names=("Ob_D", "Ob_E", "Ob_psi"))
    check = obstruction_cocycle_check(ob, cx)
    emit.line("3-cocycle: %s" % ("yes" if check.passed else "NO"),
              cocycle=check.passed)
    return 0 if check.passed else 1


def cmd_extend(args, emit):
    model = _load_model(args)
    th = _get(model.deformations, args.deformation, "deformation")
    cx = MorphismComplex(th.psi)
    report = extend_to_order(th, args.to, cx)
    emit.line("reached order %d of %d (HY^3 = %d%s)"
              % (report.reached, report.target, report.hy3_dim,
                 ", extension guaranteed" if report.guaranteed else ""),
              reached=report.reached, target=report.target,
              hy3=report.hy3_dim)
    if report.certificate:
        for line in report.certificate.splitlines():
            emit.line(line, certificate=line.strip())
        return 1
    return 0


def cmd_trivialize(args, emit):
    model = _load_model(args)
    th = _get(model.deformations, args.deformation, "deformation")
    cx = MorphismComplex(th.psi)
    try:
        iso, result = trivialize_step(th, cx)
    except NotACoboundary as exc:
        emit.line("NOT A COBOUNDARY: %s" % exc, status="FAIL")
        emit.line(exc.certificate, certificate=exc.certificate)
        return 1
    zero_through = next((k - 1 for k in range(1, result.order + 1)
                         if not result.theta(k, cx).is_zero()),
                        result.order)
    emit.line("trivialized; transported deformation vanishes through"
              " order %d" % zero_through, zero_through=zero_through)
    return 0


def cmd_rigidity_probe(args, emit):
    model = _load_model(args)
    psi = _get(model.morphisms, args.morphism, "morphism")
    report = rigidity_probe(psi, order_cap=args.order)
    emit.line("HY^2(%s,%s) = %d" % (psi.name, psi.name, report.hy2_dim),
              morphism=psi.name, hy2=report.hy2_dim)
    emit.line("verdict: %s" % report.verdict, verdict=report.verdict)
    if report.trivialized_samples:
        emit.line("trivialized %d sampled deformation(s) to order %d"
                  % (report.trivialized_samples, args.order),
                  samples=report.trivialized_samples)
    return 0 if report.hy2_dim == 0 else 1


def cmd_selftest(args, emit):
    def report(name, ok, detail):
        status = "PASS" if ok else "FAIL"
        extra = ("  %s" % detail) if detail else ""
        emit.line("%s %s%s" % (status, name, extra), check=name,
                  status=status)

    ok = run_selftest(report)
    emit.line("selftest: %s" % ("all checks passed" if ok
                                else "FAILURES above"),
              result="pass" if ok else "fail")
    return 0 if ok else 1


def _print_mor_cochain(emit, cx, mc, names=("xi", "pi", "phi")):
    fmt = cx.field.format
    z = cx.field.zero
    shown = False
    for tag, c in zip(names, (mc.xi, mc.pi, mc.phi)):
        d = c.dialgebra
        for tree in enumerate_trees(c.degree):
            for multi in itertools.product(range(d.dim), repeat=c.degree):
                v = c.value(tree.index, multi)
                if any(x != z for x in v):
                    shown = True
                    emit.line("  %s %s %r = (%s)"
                              % (tag, tree.name, multi,
                                 ", ".join(fmt(x) for x in v)),
                              block=tag, tree=tree.name,
                              value=",".join(fmt(x) for x in v))
    if not shown:
        emit.line("  (zero)", value="0")


def build_parser():
    top = argparse.ArgumentParser(
        prog="diadeform",
        description="Exact workbench for dialgebra cohomology and"
                    " deformations of dialgebra morphisms.")
    top.add_argument("--format", choices=("text", "records"),
                     default="text", help="report style")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_model=True):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        if needs_model:
            p.add_argument("model", help="model file path, or - for stdin")
            p.add_argument("--field", default=None,
                           help="override the base field, e.g. gf:7")
        return p

    add("check", cmd_check)

    p = add("trees", cmd_trees, needs_model=False)
    p.add_argument("--degree", type=int, default=3)

    p = add("cohomology", cmd_cohomology)
    p.add_argument("--object", default=None)
    p.add_argument("--degree", type=int, default=2)

    p = add("mor-cohomology", cmd_mor_cohomology)
    p.add_argument("--morphism", default=None)
    p.add_argument("--degree", type=int, default=2)

    p = add("deform-verify", cmd_deform_verify)
    p.add_argument("--deformation", default=None)

    p = add("infinitesimal", cmd_infinitesimal)
    p.add_argument("--deformation", default=None)

    p = add("obstruction", cmd_obstruction)
    p.add_argument("--deformation", default=None)

    p = add("extend", cmd_extend)
    p.add_argument("--deformation", default=None)
    p.add_argument("--to", type=int, default=2)

    p = add("trivialize", cmd_trivialize)
    p.add_argument("--deformation", default=None)

    p = add("rigidity-probe", cmd_rigidity_probe)
    p.add_argument("--morphism", default=None)
    p.add_argument("--order", type=int, default=4)

    add("selftest", cmd_selftest, needs_model=False)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    emit = Emitter(records=(args.format == "records"))
    try:
        return args.fn(args, emit)
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except WorkbenchError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
