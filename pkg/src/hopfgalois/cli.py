"""Batch front end: parse structure files, run any verifier, and emit
human-readable or machine-readable reports.

Subcommands operate on the TOML structure files read by presfile:

    nf <file> <expr>            normal form in a presentation
    mul <file> <e1> <e2>        product in a presentation
    pbw <file>                  standard-basis confluence check
    hopf check <file>           Hopf axioms (matrix or generator level)
    hopf integrals <file>       integral spaces, unimodularity, semisimplicity
    hopf dual <file>            serialize and verify the dual
    comodule check <file>       coaction laws
    coinvariants <file>         coinvariant basis of the coaction
    galois check <file>         canonical map ranks and bijectivity
    cleft check <file> <gamma>  cleaving map laws; gamma maps basis labels
                                to element expressions, "h -> expr; ..."
    torsor check <file>         torsor and endomorphism laws
    torsor reconstruct <file>   equalizer Hopf algebra of a torsor
    hgs check <file>            linked coaction system laws
    catalog list                built-in presentations and Hopf algebras
    catalog show <name>         serialize a catalog entry

Every command exits 0 exactly when all requested checks pass; failing
checks exit 1 with a witness, unreadable input exits 2. With --json the
report is a deterministic JSON document

    {"command", "input_sha256", "checks": [{"name", "pass", ...}],
     "degree_bound"?, "seed"?, "output"?}

where identical inputs (and seed, when given) produce byte-identical
text. Checks carry their quantitative evidence (ranks, dimensions,
degree bounds) alongside the verdict.
"""

import argparse
import hashlib
import json
import sys

from . import presfile
from .catalog import catalog, catalog_names
from .exprs import ExprError
from .findim import LinMap, parse_element
from .galois import cleft_check, coinvariants, galois_check, \
    strongly_graded_check
from .genhopf import check_hopf_on_generators
from .hgs import GenHGS, check_hgs
from .hopf import builtin_hopf, builtin_names, dual_hopf, hopf_check, \
    integrals
from .reports import Report
from .skewpbw import multiply, normal_form, pbw_check
from .torsor import check_torsor, grunspan_map, reconstruct_hopf


class CliError(Exception):
    """Unusable invocation or input; exits 2 without a report."""


class _Emitter:
    """Collects checks and the optional output payload, prints them in
    the selected format, and turns them into the exit status."""

    def __init__(self, command, sha, args):
        self.json = args.json
        self.obj = {"command": command, "input_sha256": sha, "checks": []}
        if getattr(args, "seed", None) is not None:
            self.obj["seed"] = args.seed
        self.lines = []

    def degree(self, d):
        self.obj["degree_bound"] = d

    def report(self, rep):
        for check in rep.checks:
            self.obj["checks"].append(check.as_dict())
        if not self.json:
            if rep.title:
                self.lines.append(rep.title)
            for check in rep.checks:
                self.lines.append("  " + _render_check(check))

    def output(self, payload, human=None):
        self.obj["output"] = payload
        if not self.json:
            if human is None:
                human = payload if isinstance(payload, str) else None
            if human:
                self.lines.append(human)

    def finish(self):
        ok = all(c["pass"] for c in self.obj["checks"])
        if self.json:
            print(json.dumps(self.obj, sort_keys=True, indent=2))
        else:
            for line in self.lines:
                print(line)
            if self.obj["checks"]:
                print("all checks pass" if ok else "FAILED")
        return 0 if ok else 1


def _render_check(check):
    line = "%s: %s" % (check.name, "pass" if check.ok else "FAIL")
    if check.data:
        line += " (%s)" % ", ".join(
            "%s=%s" % (k, check.data[k]) for k in sorted(check.data))
    if check.witness is not None:
        line += "  [witness: %s]" % check.witness
    return line


def _load(path, extra=()):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise CliError("cannot read %s: %s" % (path, e))
    digest = hashlib.sha256(data)
    for part in extra:
        digest.update(b"\0")
        digest.update(part.encode("utf-8"))
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CliError("%s is not UTF-8: %s" % (path, e))
    return presfile.parse_text(text), digest.hexdigest()


def _name_sha(*parts):
    digest = hashlib.sha256()
    for i, part in enumerate(parts):
        if i:
            digest.update(b"\0")
        digest.update(part.encode("utf-8"))
    return digest.hexdigest()


def _want(pf, layer, message):
    val = getattr(pf, layer)
    if val is None:
        raise CliError(message)
    return val


def _parse_poly(pres, text):
    try:
        return pres.parse(text)
    except (ExprError, ZeroDivisionError, ValueError) as e:
        raise CliError("expression %r: %s" % (text, e))


# ------------------------------------------------------------- handlers


def cmd_nf(args):
    pf, sha = _load(args.file, (args.expr,))
    em = _Emitter("nf", sha, args)
    pres = _want(pf, "pres", "nf needs a presentation file")
    result = normal_form(pres, _parse_poly(pres, args.expr))
    em.output(str(result))
    return em.finish()


def cmd_mul(args):
    pf, sha = _load(args.file, (args.left, args.right))
    em = _Emitter("mul", sha, args)
    pres = _want(pf, "pres", "mul needs a presentation file")
    result = multiply(pres, _parse_poly(pres, args.left),
                      _parse_poly(pres, args.right))
    em.output(str(result))
    return em.finish()


def cmd_pbw(args):
    pf, sha = _load(args.file)
    em = _Emitter("pbw", sha, args)
    pres = _want(pf, "pres", "pbw needs a presentation file")
    em.report(pbw_check(pres))
    return em.finish()


def cmd_hopf_check(args):
    pf, sha = _load(args.file)
    em = _Emitter("hopf check", sha, args)
    if pf.hopf is not None:
        em.report(hopf_check(pf.hopf))
    elif pf.genhopf is not None:
        degree = 3 if args.degree is None else args.degree
        em.degree(degree)
        em.report(check_hopf_on_generators(pf.genhopf, degree=degree))
    else:
        raise CliError("the file has no [hopf] section")
    return em.finish()


def cmd_hopf_integrals(args):
    pf, sha = _load(args.file)
    em = _Emitter("hopf integrals", sha, args)
    h = _want(pf, "hopf", "integrals need matrix-level [hopf] data")
    ir = integrals(h)
    em.report(ir.report)
    show = h.alg.show_vec
    em.output({"left": [show(v) for v in ir.left],
               "right": [show(v) for v in ir.right],
               "unimodular": ir.unimodular,
               "semisimple": ir.semisimple},
              human="left integrals: %s\nright integrals: %s"
              % ("; ".join(show(v) for v in ir.left) or "0",
                 "; ".join(show(v) for v in ir.right) or "0"))
    return em.finish()


def cmd_hopf_dual(args):
    pf, sha = _load(args.file)
    em = _Emitter("hopf dual", sha, args)
    h = _want(pf, "hopf", "dual needs matrix-level [hopf] data")
    dual = dual_hopf(h)
    em.report(hopf_check(dual))
    em.output(presfile.dumps(presfile.hopf_doc(dual)))
    return em.finish()


def cmd_comodule_check(args):
    pf, sha = _load(args.file)
    em = _Emitter("comodule check", sha, args)
    com = _want(pf, "comodule", "the file has no [coaction] section")
    em.report(com.validate())
    return em.finish()


def cmd_coinvariants(args):
    pf, sha = _load(args.file)
    em = _Emitter("coinvariants", sha, args)
    com = _want(pf, "comodule", "the file has no [coaction] section")
    rep = Report("coinvariants of %s" % com.alg.name)
    try:
        basis = coinvariants(com)
    except ValueError as e:
        rep.add("subalgebra", False, witness=str(e))
        em.report(rep)
        return em.finish()
    rep.add("subalgebra", True, dim=len(basis))
    em.report(rep)
    shown = [com.alg.show_vec(com.alg.sparse(v)) for v in basis]
    em.output({"dim": len(basis), "basis": shown},
              human="basis: " + ("; ".join(shown) or "(zero)"))
    return em.finish()


def cmd_galois_check(args):
    pf, sha = _load(args.file)
    em = _Emitter("galois check", sha, args)
    com = _want(pf, "comodule", "the file has no [coaction] section")
    gr = galois_check(com)
    em.report(gr.report)
    if pf.grading is not None:
        group_name, degrees = pf.grading
        group = presfile._group_by_name(group_name, "coaction")
        em.report(strongly_graded_check(com.alg, group, degrees))
    shown = [com.alg.show_vec(com.alg.sparse(v)) for v in gr.coinvariants]
    em.output({"rank": gr.rank, "domain": gr.rel.dim,
               "codomain": gr.beta.cod_dim, "bijective": gr.bijective,
               "coinvariants": shown},
              human="rank %d of %d, coinvariant dimension %d"
              % (gr.rank, gr.beta.cod_dim, len(gr.coinvariants)))
    return em.finish()


def _parse_gamma(com, text):
    alg, h = com.alg, com.hopf
    images = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "->" not in chunk:
            raise CliError("gamma entries look like \"label -> expr\", "
                           "got %r" % chunk)
        label, expr = chunk.split("->", 1)
        label = label.strip()
        if label not in h.alg.index:
            raise CliError("gamma names %r, not a basis label of %s"
                           % (label, h.name))
        if label in images:
            raise CliError("gamma assigns %r twice" % label)
        try:
            images[label] = parse_element([alg], expr.strip())
        except (ExprError, ValueError) as e:
            raise CliError("gamma image of %r: %s" % (label, e))
    missing = [lab for lab in h.alg.labels if lab not in images]
    if missing:
        raise CliError("gamma is missing basis element %r" % missing[0])
    field = alg.field
    rows = [[field.zero()] * h.dim for _ in range(alg.dim)]
    for label, vec in images.items():
        j = h.alg.index[label]
        for i, c in vec.items():
            rows[i][j] = c
    return LinMap((h.space(),), (alg.space(),), rows, field)


def cmd_cleft_check(args):
    pf, sha = _load(args.file, (args.gamma,))
    em = _Emitter("cleft check", sha, args)
    com = _want(pf, "comodule", "the file has no [coaction] section")
    gamma = _parse_gamma(com, args.gamma)
    em.report(cleft_check(com, gamma))
    return em.finish()


def cmd_torsor_check(args):
    pf, sha = _load(args.file)
    em = _Emitter("torsor check", sha, args)
    t = _want(pf, "torsor", "the file has no [torsor] section")
    em.report(check_torsor(t))
    _, grun = grunspan_map(t)
    em.report(grun)
    return em.finish()


def cmd_torsor_reconstruct(args):
    pf, sha = _load(args.file)
    em = _Emitter("torsor reconstruct", sha, args)
    t = _want(pf, "torsor", "the file has no [torsor] section")
    rep = Report("reconstruction from %s" % t.alg.name)
    try:
        h, com, gr = reconstruct_hopf(t)
    except ValueError as e:
        rep.add("equalizer_hopf_algebra", False, witness=str(e))
        em.report(rep)
        return em.finish()
    rep.add("equalizer_hopf_algebra", True, dim=h.dim)
    rep.add("torsor_galois_over_reconstruction", gr.bijective,
            rank=gr.rank, domain=gr.rel.dim, codomain=gr.beta.cod_dim)
    em.report(rep)
    em.report(hopf_check(h))
    em.output(presfile.dumps(presfile.hopf_doc(h)))
    return em.finish()


def cmd_hgs_check(args):
    pf, sha = _load(args.file)
    em = _Emitter("hgs check", sha, args)
    system = _want(pf, "hgs", "the file has no [hgs] section")
    if isinstance(system, GenHGS):
        if args.degree is None:
            raise CliError("generator-level systems need --degree")
        em.degree(args.degree)
        em.report(check_hgs(system, degree=args.degree))
    else:
        em.report(check_hgs(system))
    return em.finish()


def cmd_catalog_list(args):
    em = _Emitter("catalog list", _name_sha(), args)
    pres_entries = []
    for name in catalog_names():
        try:
            catalog(name)
            pres_entries.append({"name": name, "parameters": False})
        except TypeError:
            pres_entries.append({"name": name, "parameters": True})
    hopf_entries = [{"name": name, "dim": builtin_hopf(name).dim}
                    for name in builtin_names()]
    em.output({"presentations": pres_entries, "hopf": hopf_entries},
              human="\n".join(
                  ["presentations:"]
                  + ["  %s%s" % (e["name"],
                                 " (needs parameters)" if e["parameters"]
                                 else "")
                     for e in pres_entries]
                  + ["hopf algebras:"]
                  + ["  %s (dim %d)" % (e["name"], e["dim"])
                     for e in hopf_entries]))
    return em.finish()


def cmd_catalog_show(args):
    em = _Emitter("catalog show", _name_sha(args.name), args)
    name = args.name
    if name in builtin_names():
        text = presfile.dumps(presfile.hopf_doc(builtin_hopf(name)))
    elif name in catalog_names():
        try:
            pres = catalog(name)
        except TypeError:
            raise CliError("catalog entry %r needs parameters and cannot "
                           "be shown" % name)
        text = presfile.dumps(presfile.presentation_doc(pres))
    else:
        raise CliError("unknown catalog entry %r" % name)
    em.output(text)
    return em.finish()


# --------------------------------------------------------------- parser


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the machine-readable report")
    common.add_argument("--seed", type=int, default=None,
                        help="seed recorded in the report for randomized "
                             "checks")

    top = argparse.ArgumentParser(
        prog="hopfgalois",
        description="verifiers for skew polynomial presentations, Hopf "
                    "algebra data, coactions, torsors, and linked "
                    "coaction systems")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common],
                       help="normal form of an expression")
    p.add_argument("file")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("mul", parents=[common], help="product of two "
                       "expressions")
    p.add_argument("file")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("pbw", parents=[common],
                       help="standard-basis confluence check")
    p.add_argument("file")
    p.set_defaults(func=cmd_pbw)

    hopf = sub.add_parser("hopf", help="Hopf algebra commands")
    hsub = hopf.add_subparsers(dest="subcommand", required=True)
    p = hsub.add_parser("check", parents=[common], help="Hopf axioms")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=None,
                   help="degree bound for generator-level data "
                        "(default 3)")
    p.set_defaults(func=cmd_hopf_check)
    p = hsub.add_parser("integrals", parents=[common],
                        help="integral spaces")
    p.add_argument("file")
    p.set_defaults(func=cmd_hopf_integrals)
    p = hsub.add_parser("dual", parents=[common],
                        help="serialize and verify the dual")
    p.add_argument("file")
    p.set_defaults(func=cmd_hopf_dual)

    com = sub.add_parser("comodule", help="comodule algebra commands")
    csub = com.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("check", parents=[common], help="coaction laws")
    p.add_argument("file")
    p.set_defaults(func=cmd_comodule_check)

    p = sub.add_parser("coinvariants", parents=[common],
                       help="coinvariant basis of the coaction")
    p.add_argument("file")
    p.set_defaults(func=cmd_coinvariants)

    gal = sub.add_parser("galois", help="Galois map commands")
    gsub = gal.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("check", parents=[common],
                        help="canonical map bijectivity")
    p.add_argument("file")
    p.set_defaults(func=cmd_galois_check)

    clf = sub.add_parser("cleft", help="cleft extension commands")
    lsub = clf.add_subparsers(dest="subcommand", required=True)
    p = lsub.add_parser("check", parents=[common], help="cleaving map laws")
    p.add_argument("file")
    p.add_argument("gamma", help="images \"label -> expr; ...\" covering "
                                 "every basis label of H")
    p.set_defaults(func=cmd_cleft_check)

    tor = sub.add_parser("torsor", help="torsor commands")
    tsub = tor.add_subparsers(dest="subcommand", required=True)
    p = tsub.add_parser("check", parents=[common],
                        help="torsor and endomorphism laws")
    p.add_argument("file")
    p.set_defaults(func=cmd_torsor_check)
    p = tsub.add_parser("reconstruct", parents=[common],
                        help="equalizer Hopf algebra")
    p.add_argument("file")
    p.set_defaults(func=cmd_torsor_reconstruct)

    hgs = sub.add_parser("hgs", help="linked coaction system commands")
    xsub = hgs.add_subparsers(dest="subcommand", required=True)
    p = xsub.add_parser("check", parents=[common], help="system laws")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=None,
                   help="degree bound for generator-level systems")
    p.set_defaults(func=cmd_hgs_check)

    cat = sub.add_parser("catalog", help="catalog access")
    ksub = cat.add_subparsers(dest="subcommand", required=True)
    p = ksub.add_parser("list", parents=[common], help="list entries")
    p.set_defaults(func=cmd_catalog_list)
    p = ksub.add_parser("show", parents=[common],
                        help="serialize an entry")
    p.add_argument("name")
    p.set_defaults(func=cmd_catalog_show)

    return top


def main(argv=None):
    args = _parser().parse_args(argv)
    if getattr(args, "degree", None) is not None and args.degree < 0:
        print("error: --degree must be nonnegative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except presfile.StructureError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except presfile.PresFileError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
