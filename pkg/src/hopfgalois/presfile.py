"""Reader and writer for the declarative structure files of the batch
front end.

A file is a TOML document with a mandatory ``[field]`` section and one
subject:

* a skew polynomial presentation: ``[variables]``, with optional
  ``[coefficients]`` (generator names and laurent flags),
  ``[sigma.<var>]`` and ``[delta.<var>]`` generator-image maps,
  ``[relation."xj*xi"]`` tables carrying ``lead`` / ``linear.<var>`` /
  ``const`` entries, ``[flags]``, and a generator-level ``[hopf]``
  section with per-generator ``delta`` / ``epsilon`` / ``antipode``
  expressions;
* a finite-dimensional algebra by structure constants: ``[algebra]``
  with basis labels, the unit vector, and the multiplication matrix,
  plus optional matrix-level ``[hopf]``, ``[coaction]`` and
  ``[torsor]`` sections;
* a linked coaction system: ``[hgs]``, either naming four builtin
  structures with their five connecting maps, or giving bracket and
  cocycle data for a twisted enveloping system.

Scalars are expression strings in the declared field. Linear maps of
finite-dimensional objects are dense row-major matrices of scalar
strings, matching the report serialization. The writer emits the same
shapes back, so parsing a written file reproduces the structure up to
the structural equality helpers at the bottom of the module.

Expression entry points (torsor generator images, the command line's
element arguments) address basis elements by label, so they are only
available when the labels tokenize as expressions; matrix forms carry
no such restriction.
"""

import re

try:
    import tomllib as _toml
except ImportError:  # pragma: no cover - python < 3.11
    import tomli as _toml

import tomlkit

from . import exprs
from .scalars import Cyclotomic, RationalFunctions, field_make
from .coeffring import DerivSpec, EndoSpec, ring_make
from .skewpbw import PairRelation, Presentation
from .findim import LinMap, algebra_make, parse_element, word_dim
from .reports import Report
from .hopf import (builtin_hopf, builtin_names, cyclic_group, hopf_make,
                   symmetric_group_3)
from .genhopf import GenHopfSpec
from .galois import ComoduleAlgebra, grading_to_comodule
from .torsor import TorsorData
from .hgs import HGSData, sridharan_build
from .catalog import LieCocycle, LieData


class PresFileError(ValueError):
    """Malformed structure file: bad TOML, missing or unknown keys,
    unparseable expressions, shape mismatches."""


class StructureError(ValueError):
    """Well-formed file whose data fails a structural law (for now:
    a multiplication table that is not associative or unital); carries
    the failing report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class PresFile:
    """Parsed structure file: the field plus whichever subject and
    optional layers the document declares. Absent layers are None."""

    def __init__(self, field, kind, pres=None, genhopf=None, alg=None,
                 hopf=None, comodule=None, grading=None, torsor=None,
                 hgs=None):
        self.field = field
        self.kind = kind
        self.pres = pres
        self.genhopf = genhopf
        self.alg = alg
        self.hopf = hopf
        self.comodule = comodule
        self.grading = grading
        self.torsor = torsor
        self.hgs = hgs

    def __repr__(self):
        layers = [name for name in
                  ("pres", "genhopf", "alg", "hopf", "comodule", "torsor",
                   "hgs")
                  if getattr(self, name) is not None]
        return "PresFile(%s: %s)" % (self.kind, ", ".join(layers))


_TOP_KEYS = {"field", "coefficients", "variables", "sigma", "delta",
             "relation", "flags", "hopf", "algebra", "coaction", "torsor",
             "hgs"}
_PRES_ONLY = {"coefficients", "sigma", "delta", "relation", "flags"}
_ALG_ONLY = {"coaction", "torsor"}


def _check_keys(table, allowed, where):
    unknown = sorted(set(table) - set(allowed))
    if unknown:
        raise PresFileError("unknown key %r in [%s]" % (unknown[0], where))


def _need(table, key, where, types):
    if key not in table:
        raise PresFileError("[%s] is missing the %r key" % (where, key))
    val = table[key]
    if not isinstance(val, types):
        raise PresFileError("[%s] key %r has the wrong type" % (where, key))
    return val


def _str_list(val, where, key):
    if not isinstance(val, list) or any(not isinstance(x, str) for x in val):
        raise PresFileError("[%s] key %r must be a list of strings"
                            % (where, key))
    return list(val)


def _parse_scalar(field, text, where):
    if isinstance(text, int):
        return field.from_int(text)
    if not isinstance(text, str):
        raise PresFileError("[%s] expects scalar strings, found %r"
                            % (where, text))
    try:
        return field.parse(text)
    except (exprs.ExprError, ZeroDivisionError) as e:
        raise PresFileError("[%s] scalar %r: %s" % (where, text, e))


def _parse_matrix(field, val, nrows, ncols, where):
    if not isinstance(val, list) or len(val) != nrows:
        raise PresFileError("[%s] must be a %d x %d matrix of scalar "
                            "strings" % (where, nrows, ncols))
    out = []
    for r, row in enumerate(val):
        if not isinstance(row, list) or len(row) != ncols:
            raise PresFileError("[%s] row %d must have %d entries"
                                % (where, r, ncols))
        out.append([_parse_scalar(field, x, where) for x in row])
    return out


def _parse_relem(ring, text, where):
    if isinstance(text, int):
        return ring.from_int(text)
    if not isinstance(text, str):
        raise PresFileError("[%s] expects expression strings, found %r"
                            % (where, text))
    try:
        return ring.parse(text)
    except (exprs.ExprError, ZeroDivisionError, ValueError) as e:
        raise PresFileError("[%s] expression %r: %s" % (where, text, e))


def _parse_field(doc):
    sec = _need(doc, "field", "file", dict)
    _check_keys(sec, {"kind", "order", "var"}, "field")
    kind = _need(sec, "kind", "field", str)
    try:
        return field_make(kind, n=sec.get("order"), var=sec.get("var"))
    except ValueError as e:
        raise PresFileError("[field]: %s" % e)


def _parse_presentation(doc, field):
    coeff = doc.get("coefficients", {})
    _check_keys(coeff, {"gens", "laurent"}, "coefficients")
    gens = _str_list(coeff.get("gens", []), "coefficients", "gens")
    laurent = _str_list(coeff.get("laurent", []), "coefficients", "laurent")
    try:
        ring = ring_make(field, gens, laurent)
    except ValueError as e:
        raise PresFileError("[coefficients]: %s" % e)

    varsec = _need(doc, "variables", "file", dict)
    _check_keys(varsec, {"names"}, "variables")
    names = _str_list(_need(varsec, "names", "variables", list),
                      "variables", "names")
    vindex = {name: i for i, name in enumerate(names)}

    def gen_images(section, default):
        out = {}
        for var, table in doc.get(section, {}).items():
            where = "%s.%s" % (section, var)
            if var not in vindex:
                raise PresFileError("[%s] names an unknown variable" % where)
            if not isinstance(table, dict):
                raise PresFileError("[%s] must be a table of generator "
                                    "images" % where)
            _check_keys(table, ring.gens, where)
            out[var] = {g: (_parse_relem(ring, table[g], where)
                            if g in table else default(g))
                        for g in ring.gens}
        return out

    sigma = {var: EndoSpec(ring, imgs)
             for var, imgs in gen_images("sigma", ring.gen).items()}
    delta = {}
    for var, imgs in gen_images("delta", lambda g: ring.zero()).items():
        twist = sigma.get(var, ring.identity_endo())
        delta[var] = DerivSpec(ring, imgs, twist=twist)

    pairs = {}
    for key, table in doc.get("relation", {}).items():
        where = 'relation."%s"' % key
        parts = key.split("*")
        if len(parts) != 2 or any(p not in vindex for p in parts):
            raise PresFileError("[%s] key must be \"xj*xi\" over declared "
                                "variables" % where)
        if vindex[parts[0]] <= vindex[parts[1]]:
            raise PresFileError("[%s] must name the later variable first"
                                % where)
        if not isinstance(table, dict):
            raise PresFileError("[%s] must be a table" % where)
        _check_keys(table, {"lead", "linear", "const"}, where)
        lead = _parse_relem(ring, table.get("lead", "1"), where)
        linear = {}
        for vname, text in table.get("linear", {}).items():
            if vname not in vindex:
                raise PresFileError("[%s.linear] names unknown variable %r"
                                    % (where, vname))
            linear[vname] = _parse_relem(ring, text, where + ".linear")
        const = _parse_relem(ring, table.get("const", "0"), where)
        pairs[(parts[0], parts[1])] = PairRelation(lead, linear, const)

    flags = doc.get("flags", {})
    if not isinstance(flags, dict):
        raise PresFileError("[flags] must be a table")
    try:
        return Presentation(ring, names, sigma, delta, pairs, dict(flags))
    except ValueError as e:
        raise PresFileError("presentation data: %s" % e)


def _parse_genhopf(doc, pres):
    sec = doc["hopf"]
    _check_keys(sec, {"delta", "epsilon", "antipode"}, "hopf")
    for key in ("delta", "epsilon", "antipode"):
        _need(sec, key, "hopf", dict)
    try:
        return GenHopfSpec(pres, delta=dict(sec["delta"]),
                           epsilon=dict(sec["epsilon"]),
                           antipode=dict(sec["antipode"]))
    except (exprs.ExprError, ValueError) as e:
        raise PresFileError("[hopf]: %s" % e)


def _parse_algebra(doc, field):
    sec = doc["algebra"]
    _check_keys(sec, {"name", "basis", "unit", "mult"}, "algebra")
    labels = _str_list(_need(sec, "basis", "algebra", list),
                       "algebra", "basis")
    n = len(labels)
    if n == 0:
        raise PresFileError("[algebra] basis must be nonempty")
    name = sec.get("name", "A")
    if not isinstance(name, str):
        raise PresFileError("[algebra] name must be a string")
    unit_row = _parse_matrix(field, [_need(sec, "unit", "algebra", list)],
                             1, n, "algebra.unit")[0]
    unit = {i: c for i, c in enumerate(unit_row) if not field.is_zero(c)}
    rows = _parse_matrix(field, _need(sec, "mult", "algebra", list),
                         n, n * n, "algebra.mult")
    mult = {}
    for i in range(n):
        for j in range(n):
            cell = {k: rows[k][i * n + j] for k in range(n)
                    if not field.is_zero(rows[k][i * n + j])}
            if cell:
                mult[(i, j)] = cell
    made = algebra_make(field, labels, mult, unit, name=name)
    if isinstance(made, Report):
        fail = made.failures()[0]
        raise StructureError("[algebra] table fails %s (witness %s)"
                             % (fail.name, fail.witness), made)
    return made


def _parse_findim_hopf(doc, field, alg):
    sec = doc["hopf"]
    _check_keys(sec, {"name", "delta", "counit", "antipode"}, "hopf")
    n = alg.dim
    sp = alg.space()
    delta = LinMap((sp,), (sp, sp),
                   _parse_matrix(field, _need(sec, "delta", "hopf", list),
                                 n * n, n, "hopf.delta"), field)
    counit = LinMap((sp,), (),
                    _parse_matrix(field, _need(sec, "counit", "hopf", list),
                                  1, n, "hopf.counit"), field)
    antipode = LinMap((sp,), (sp,),
                      _parse_matrix(field,
                                    _need(sec, "antipode", "hopf", list),
                                    n, n, "hopf.antipode"), field)
    name = sec.get("name", alg.name)
    if not isinstance(name, str):
        raise PresFileError("[hopf] name must be a string")
    return hopf_make(alg, delta, counit, antipode, name=name, defer=True)


_GROUP_RE = re.compile(r"^Z(\d+)$")


def _group_by_name(name, where):
    m = _GROUP_RE.match(name)
    if m:
        n = int(m.group(1))
        if n >= 1:
            return cyclic_group(n)
    if name == "S3":
        return symmetric_group_3()
    raise PresFileError("[%s] unknown group %r (use Zn or S3)"
                        % (where, name))


def _parse_coaction(doc, field, alg, hopf):
    sec = doc["coaction"]
    _check_keys(sec, {"hopf", "matrix", "group", "degrees"}, "coaction")
    if "group" in sec:
        if "hopf" in sec or "matrix" in sec:
            raise PresFileError("[coaction] grading form takes only group "
                                "and degrees")
        group = _group_by_name(_need(sec, "group", "coaction", str),
                               "coaction")
        degrees = _str_list(_need(sec, "degrees", "coaction", list),
                            "coaction", "degrees")
        bad = sorted(set(degrees) - set(group.labels))
        if bad:
            raise PresFileError("[coaction] degree %r is not a group "
                                "element" % bad[0])
        try:
            com = grading_to_comodule(alg, group, degrees)
        except ValueError as e:
            raise StructureError("[coaction] %s" % e,
                                 Report("grading").add("respects_products",
                                                       False,
                                                       witness=str(e)))
        return com, (sec["group"], degrees)

    if "hopf" in sec:
        h = _resolve_builtin(_need(sec, "hopf", "coaction", str), "coaction")
        if h.field != field:
            raise PresFileError("[coaction] hopf %r is over a different "
                                "field" % sec["hopf"])
    else:
        h = hopf
        if h is None:
            raise PresFileError("[coaction] needs a hopf key or a [hopf] "
                                "section in the same file")
    if "matrix" in sec:
        rho = LinMap((alg.space(),), (alg.space(), h.space()),
                     _parse_matrix(field, sec["matrix"], alg.dim * h.dim,
                                   alg.dim, "coaction.matrix"), field)
    else:
        if h is not hopf or alg is not h.alg:
            raise PresFileError("[coaction] without a matrix means the "
                                "coproduct coaction and needs the file's "
                                "own [hopf]")
        rho = h.delta
    try:
        return ComoduleAlgebra(alg, h, rho), None
    except ValueError as e:
        raise PresFileError("[coaction] %s" % e)


def _resolve_builtin(name, where):
    try:
        return builtin_hopf(name)
    except ValueError:
        raise PresFileError("[%s] unknown builtin %r (one of: %s)"
                            % (where, name, ", ".join(builtin_names())))


def _parse_torsor(doc, field, alg):
    sec = doc["torsor"]
    _check_keys(sec, {"mu", "images"}, "torsor")
    n = alg.dim
    sp = alg.space()
    if ("mu" in sec) == ("images" in sec):
        raise PresFileError("[torsor] needs exactly one of mu and images")
    if "mu" in sec:
        rows = _parse_matrix(field, sec["mu"], n ** 3, n, "torsor.mu")
    else:
        images = sec["images"]
        if not isinstance(images, dict):
            raise PresFileError("[torsor.images] must be a table")
        missing = [lab for lab in alg.labels if lab not in images]
        if missing:
            raise PresFileError("[torsor.images] is missing basis element "
                                "%r" % missing[0])
        _check_keys(images, alg.labels, "torsor.images")
        rows = [[field.zero()] * n for _ in range(n ** 3)]
        for lab, text in images.items():
            if not isinstance(text, str):
                raise PresFileError("[torsor.images] %r must be an "
                                    "expression string" % lab)
            try:
                vec = parse_element([alg, alg, alg], text)
            except (exprs.ExprError, ValueError) as e:
                raise PresFileError("[torsor.images] %r: %s" % (lab, e))
            j = alg.index[lab]
            for k, c in vec.items():
                rows[k][j] = c
    try:
        return TorsorData(alg, LinMap((sp,), (sp, sp, sp), rows, field))
    except ValueError as e:
        raise PresFileError("[torsor] %s" % e)


def _pair_key(key, names, where):
    parts = key.split("*")
    index = {name: i for i, name in enumerate(names)}
    if len(parts) != 2 or any(p not in index for p in parts):
        raise PresFileError("[%s] key %r must be \"xi*xj\" over the "
                            "declared generators" % (where, key))
    i, j = index[parts[0]], index[parts[1]]
    if i >= j:
        raise PresFileError("[%s] key %r must name the earlier generator "
                            "first" % (where, key))
    return i, j


def _parse_hgs(doc, field):
    sec = doc["hgs"]
    if sec.get("kind") == "sridharan":
        _check_keys(sec, {"kind", "generators", "bracket", "cocycle"}, "hgs")
        names = _str_list(_need(sec, "generators", "hgs", list),
                          "hgs", "generators")
        n = len(names)
        brackets = {}
        for key, val in sec.get("bracket", {}).items():
            i, j = _pair_key(key, names, "hgs.bracket")
            coords = val if isinstance(val, list) else None
            if coords is None or len(coords) != n:
                raise PresFileError("[hgs.bracket] %r must be a list of %d "
                                    "scalar strings" % (key, n))
            brackets[(i, j)] = tuple(
                _parse_scalar(field, c, "hgs.bracket") for c in coords)
        cocycle = {}
        for key, val in sec.get("cocycle", {}).items():
            i, j = _pair_key(key, names, "hgs.cocycle")
            cocycle[(i, j)] = _parse_scalar(field, val, "hgs.cocycle")
        try:
            lie = LieData(field, names, brackets)
            f = LieCocycle(lie, cocycle) if cocycle else None
            return sridharan_build(lie, f)
        except ValueError as e:
            raise PresFileError("[hgs] %s" % e)

    _check_keys(sec, {"a", "b", "z", "t", "alpha", "beta", "gamma", "delta",
                      "smap"}, "hgs")
    memo = {}

    def structure(key):
        name = _need(sec, key, "hgs", str)
        if name not in memo:
            memo[name] = _resolve_builtin(name, "hgs")
            if memo[name].field != field:
                raise PresFileError("[hgs] %r is over a different field"
                                    % name)
        return memo[name]

    ha, hb, hz, ht = (structure(k) for k in ("a", "b", "z", "t"))

    def connecting(key, owner, dom, cod):
        val = _need(sec, key, "hgs", (str, list))
        if isinstance(val, str):
            if val == "delta":
                return owner.delta
            if val == "antipode":
                return owner.antipode
            raise PresFileError("[hgs] map %r must be \"delta\", "
                                "\"antipode\", or a matrix" % key)
        rows = _parse_matrix(field, val, word_dim(cod), word_dim(dom),
                             "hgs.%s" % key)
        return LinMap(dom, cod, rows, field)

    asp, bsp = ha.space(), hb.space()
    zsp, tsp = hz.space(), ht.space()
    try:
        return HGSData(ha, hb, hz.alg, ht.alg,
                       connecting("alpha", hz, (zsp,), (asp, zsp)),
                       connecting("beta", hz, (zsp,), (zsp, bsp)),
                       connecting("gamma", ha, (asp,), (zsp, tsp)),
                       connecting("delta", hb, (bsp,), (tsp, zsp)),
                       connecting("smap", ht, (tsp,), (zsp,)))
    except ValueError as e:
        raise PresFileError("[hgs] %s" % e)


def parse_text(text):
    """Parse a structure file from TOML text into a PresFile."""
    try:
        doc = _toml.loads(text)
    except _toml.TOMLDecodeError as e:
        raise PresFileError("TOML parse error: %s" % e)
    _check_keys(doc, _TOP_KEYS, "file")
    field = _parse_field(doc)

    has_pres = "variables" in doc
    has_alg = "algebra" in doc
    if has_pres and has_alg:
        raise PresFileError("a file declares either [variables] or "
                            "[algebra], not both")
    if "hgs" in doc and (has_pres or has_alg):
        raise PresFileError("[hgs] files carry no other subject")

    if has_pres:
        bad = _ALG_ONLY & set(doc)
        if bad:
            raise PresFileError("[%s] needs an [algebra] file"
                                % sorted(bad)[0])
        pres = _parse_presentation(doc, field)
        genhopf = _parse_genhopf(doc, pres) if "hopf" in doc else None
        return PresFile(field, "presentation", pres=pres, genhopf=genhopf)

    if has_alg:
        bad = _PRES_ONLY & set(doc)
        if bad:
            raise PresFileError("[%s] needs a [variables] file"
                                % sorted(bad)[0])
        alg = _parse_algebra(doc, field)
        hopf = _parse_findim_hopf(doc, field, alg) if "hopf" in doc else None
        comodule = grading = None
        if "coaction" in doc:
            comodule, grading = _parse_coaction(doc, field, alg, hopf)
        torsor = _parse_torsor(doc, field, alg) if "torsor" in doc else None
        return PresFile(field, "algebra", alg=alg, hopf=hopf,
                        comodule=comodule, grading=grading, torsor=torsor)

    if "hgs" in doc:
        return PresFile(field, "hgs", hgs=_parse_hgs(doc, field))

    raise PresFileError("file declares no subject: add [variables], "
                        "[algebra], or [hgs]")


def load_path(path):
    """Read and parse a structure file from disk."""
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise PresFileError("file %s is not UTF-8: %s" % (path, e))
    return parse_text(text)


# ---------------------------------------------------------------- writer


def field_doc(field):
    out = {"kind": field.kind}
    if isinstance(field, Cyclotomic):
        out["order"] = field.n
    elif isinstance(field, RationalFunctions):
        out["var"] = field.var
    return out


def presentation_doc(pres):
    """Serialize a presentation to the document dict; the inverse of
    the [variables]-shape parser."""
    ring = pres.ring
    doc = {"field": field_doc(ring.field)}
    if ring.gens:
        coeff = {"gens": list(ring.gens)}
        laurent = sorted(ring.gens[i] for i in ring.laurent)
        if laurent:
            coeff["laurent"] = laurent
        doc["coefficients"] = coeff
    doc["variables"] = {"names": list(pres.vars)}

    sigma = {}
    delta = {}
    for name in pres.vars:
        sg = pres.sigma[name]
        if not sg.is_identity():
            sigma[name] = {g: str(sg.images[g]) for g in ring.gens
                           if sg.images[g] != ring.gen(g)}
        dl = pres.delta[name]
        if dl.twist != sg:
            raise ValueError("the file format carries the variable's own "
                             "twist only; delta_%s has a different one"
                             % name)
        if not dl.is_zero():
            delta[name] = {g: str(dl.images[g]) for g in ring.gens
                           if not dl.images[g].is_zero()}
    if sigma:
        doc["sigma"] = sigma
    if delta:
        doc["delta"] = delta

    relations = {}
    for (j, i) in sorted(pres.pairs):
        rel = pres.pairs[(j, i)]
        table = {}
        if rel.lead != ring.one():
            table["lead"] = str(rel.lead)
        if rel.linear:
            table["linear"] = {pres.vars[t]: str(r)
                               for t, r in sorted(rel.linear.items())}
        if not rel.const.is_zero():
            table["const"] = str(rel.const)
        if table:
            relations["%s*%s" % (pres.vars[j], pres.vars[i])] = table
    if relations:
        doc["relation"] = relations
    if pres.flags:
        doc["flags"] = dict(pres.flags)
    return doc


def _show_matrix(field, rows):
    return [[field.show(c) for c in row] for row in rows]


def algebra_doc(alg):
    """Serialize a finite-dimensional algebra; the inverse of the
    [algebra]-shape parser."""
    field = alg.field
    n = alg.dim
    mult_rows = [[field.zero()] * (n * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in alg.mult[i][j].items():
                mult_rows[k][i * n + j] = c
    unit = alg.dense(alg.unit)
    return {
        "field": field_doc(field),
        "algebra": {
            "name": alg.name,
            "basis": list(alg.labels),
            "unit": [field.show(c) for c in unit],
            "mult": _show_matrix(field, mult_rows),
        },
    }


def hopf_doc(h):
    """Serialize finite-dimensional Hopf data: the algebra document
    plus the three structure matrices."""
    doc = algebra_doc(h.alg)
    field = h.field
    sec = {}
    if h.name != h.alg.name:
        sec["name"] = h.name
    sec["delta"] = _show_matrix(field, h.delta.rows)
    sec["counit"] = _show_matrix(field, h.counit.rows)
    sec["antipode"] = _show_matrix(field, h.antipode.rows)
    doc["hopf"] = sec
    return doc


def torsor_doc(t):
    """Serialize a torsor: the algebra document plus the mu matrix."""
    doc = algebra_doc(t.alg)
    doc["torsor"] = {"mu": _show_matrix(t.field, t.mu.rows)}
    return doc


def dumps(doc):
    """Render a document dict as TOML text."""
    return tomlkit.dumps(doc)


# ------------------------------------------------------ structural equality


def presentation_equal(a, b):
    """Same ring, variables, twist maps, derivations, pair relations,
    and flags."""
    if a.ring != b.ring or a.vars != b.vars or a.flags != b.flags:
        return False
    for name in a.vars:
        if a.sigma[name] != b.sigma[name] or a.delta[name] != b.delta[name]:
            return False
    for key, rel in a.pairs.items():
        other = b.pairs[key]
        if (rel.lead != other.lead or rel.linear != other.linear
                or rel.const != other.const):
            return False
    return True


def algebra_equal(a, b):
    """Same field, name, labels, unit, and structure constants."""
    if (a.field != b.field or a.name != b.name or a.labels != b.labels
            or a.unit != b.unit):
        return False
    return all(a.mult[i][j] == b.mult[i][j]
               for i in range(a.dim) for j in range(a.dim))


def hopf_equal(a, b):
    """Same underlying algebra and identical structure matrices."""
    return (a.name == b.name and algebra_equal(a.alg, b.alg)
            and a.delta.rows == b.delta.rows
            and a.counit.rows == b.counit.rows
            and a.antipode.rows == b.antipode.rows)
