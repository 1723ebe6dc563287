"""Line-oriented text formats for presentations and extension data.

Algebra::

    algebra jordan
    field Q                  # or: field GF 32003
    param q = 2
    gen x:1 y:1
    rel y*x - x*y - x^2

Extension (after an algebra block, or naming a catalog presentation)::

    extend <base-name>
    var y
    sigma y: x -> x
    delta y: x -> x^2
    c x y = -1
    lower y x = z^2

Blank lines and ``#`` comments are ignored. Parameters are substituted at
parse time.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, StructuralError
from .freealg import FieldSpec, FreeAlgebra, GeneratorOrder, format_poly
from .presentation import Presentation
from .skewpbw import ExtensionData

EXT_KEYS = ("var", "sigma", "delta", "c", "lower")

_SIGMA_RE = re.compile(r"(\S+)\s*:\s*(\S+)\s*->\s*(.+)\Z")
_PAIR_RE = re.compile(r"(\S+)\s+(\S+)\s*=\s*(.+)\Z")


def parse_field(text: str) -> FieldSpec:
    """``Q``, ``GF``, ``GF 7``, ``GF7`` or ``GF(7)``."""
    t = text.strip().replace("(", " ").replace(")", " ")
    if t == "Q":
        return FieldSpec.Q()
    m = re.fullmatch(r"GF\s*(\d*)\s*", t)
    if not m:
        raise ParseError(f"unknown field {text.strip()!r}")
    p = int(m.group(1)) if m.group(1) else FieldSpec.GF().characteristic
    try:
        return FieldSpec.GF(p)
    except StructuralError as exc:
        raise ParseError(str(exc)) from None


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            key, _, rest = line.partition(" ")
            yield no, key, rest.strip()


def parse_file(text: str, resolve=None, params: dict | None = None):
    """Parse a presentation or extension file.

    ``resolve(name)`` supplies a base presentation for ``extend <name>``
    when the file has no algebra block; ``params`` override ``param`` lines.
    """
    name = ""
    field = None
    fparams: dict = {}
    gens: list = []
    rels: list = []
    ext = None
    ext_lines: list = []
    seen_any = False
    for no, key, rest in _lines(text):
        seen_any = True
        if ext is not None:
            if key not in EXT_KEYS:
                raise ParseError(f"unexpected {key!r} in extension block", line=no, column=1)
            ext_lines.append((no, key, rest))
            continue
        if key == "algebra":
            if name:
                raise ParseError("duplicate algebra line", line=no, column=1)
            if not rest:
                raise ParseError("algebra needs a name", line=no, column=9)
            name = rest
        elif key == "field":
            if field is not None:
                raise ParseError("duplicate field line", line=no, column=1)
            try:
                field = parse_field(rest)
            except ParseError as exc:
                raise ParseError(exc.message, line=no, column=7) from None
        elif key == "param":
            pname, eq, val = rest.partition("=")
            pname = pname.strip()
            if not eq or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", pname):
                raise ParseError("expected: param <name> = <rational>", line=no, column=7)
            try:
                fparams[pname] = Fraction(val.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {val.strip()!r}", line=no, column=7) from None
        elif key == "gen":
            for tok in rest.split():
                gname, colon, wt = tok.partition(":")
                if colon and not wt.isdigit():
                    raise ParseError(f"bad weight in {tok!r}", line=no, column=5)
                gens.append((gname, int(wt) if colon else 1, no))
        elif key == "rel":
            rels.append((no, rest))
        elif key == "extend":
            if not rest:
                raise ParseError("extend needs a base name", line=no, column=8)
            ext = (no, rest)
        else:
            raise ParseError(f"unknown key {key!r}", line=no, column=1)
    if not seen_any:
        raise ParseError("empty file")
    fparams.update(params or {})
    field = field or FieldSpec.Q()
    base = None
    if gens or rels or name or ext is None:
        base = _build_presentation(name, field, gens, rels, fparams)
    if ext is None:
        return base
    no, base_name = ext
    if base is None or (name and base_name != name):
        if base is not None:
            raise ParseError(f"extend names {base_name!r} but the file defines {name!r}", line=no, column=8)
        if resolve is None:
            raise ParseError(f"unknown base algebra {base_name!r}", line=no, column=8)
        try:
            base = resolve(base_name)
        except ValueError as exc:
            raise ParseError(str(exc), line=no, column=8) from None
        if not isinstance(base, Presentation):
            raise ParseError(f"{base_name!r} is not a presentation", line=no, column=8)
        base = base.over(field) if base.field != field else base
    return _build_extension(base, ext_lines, fparams, no)


def _build_presentation(name, field, gens, rels, params) -> Presentation:
    if not gens and rels:
        raise ParseError("relations given before any generator", line=rels[0][0])
    try:
        order = GeneratorOrder(tuple(g for g, _, _ in gens), tuple(w for _, w, _ in gens))
    except StructuralError as exc:
        raise ParseError(str(exc), line=gens[0][2] if gens else None) from None
    ring = FreeAlgebra(field, order)
    polys = []
    for no, text in rels:
        try:
            polys.append(ring.parse(text, params))
        except ParseError as exc:
            col = None if exc.column is None else exc.column + 4
            raise ParseError(exc.message, line=no, column=col) from None
        except (StructuralError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), line=no) from None
    return Presentation(ring, tuple(polys), name)


def _build_extension(base: Presentation, lines, params, ext_no) -> ExtensionData:
    vars: list = []
    sigma, delta, c, lower = {}, {}, {}, {}
    for no, key, rest in lines:
        if key == "var":
            vars.extend(rest.split())
            continue
        if key in ("sigma", "delta"):
            m = _SIGMA_RE.match(rest)
            if not m:
                raise ParseError(f"expected: {key} <var>: <gen> -> <poly>", line=no)
            (sigma if key == "sigma" else delta)[m.group(1), m.group(2)] = (no, m.group(3))
        else:
            m = _PAIR_RE.match(rest)
            if not m:
                raise ParseError(f"expected: {key} <var> <var> = <value>", line=no)
            (c if key == "c" else lower)[m.group(1), m.group(2)] = (no, m.group(3))
    if not vars and (sigma or delta or c or lower):
        raise ParseError("extension data given without var line", line=ext_no)
    if len(set(vars)) != len(vars):
        raise ParseError("duplicate variable name", line=ext_no)
    F = base.field
    try:
        ring = ExtensionData(base, tuple(vars), (), (), (), {}).ring
    except StructuralError as exc:
        raise ParseError(str(exc), line=ext_no) from None
    scalar_ring = FreeAlgebra(F, GeneratorOrder(()))

    def parse(R, no, text):
        try:
            return R.parse(text, params)
        except ParseError as exc:
            raise ParseError(exc.message, line=no) from None
        except (StructuralError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), line=no) from None

    def check_vars(no, *names):
        for v in names:
            if v not in vars:
                raise ParseError(f"unknown variable {v!r}", line=no)

    for (v, t), (no, _) in list(sigma.items()) + list(delta.items()):
        check_vars(no, v)
        if t not in base.ord.names:
            raise ParseError(f"unknown base generator {t!r}", line=no)
    for (a, b), (no, _) in c.items():
        check_vars(no, a, b)
        if vars.index(a) >= vars.index(b):
            raise ParseError("c entries need the first variable before the second", line=no)
    for (a, b), (no, _) in lower.items():
        check_vars(no, a, b)
    return ExtensionData.build(
        base,
        vars,
        {k: parse(base.ring, no, text) for k, (no, text) in sigma.items()},
        {k: parse(base.ring, no, text) for k, (no, text) in delta.items()},
        {k: parse(scalar_ring, no, text).coeff(()) for k, (no, text) in c.items()},
        {k: parse(ring, no, text) for k, (no, text) in lower.items()},
        name=base.name and f"{base.name}<{','.join(vars)}>",
    )


# -- rendering ------------------------------------------------------------------


def _render_field(F: FieldSpec) -> str:
    return "Q" if not F.is_prime else f"GF {F.characteristic}"


def render_presentation(P: Presentation, name: str | None = None) -> str:
    name = name or P.name
    lines = [f"algebra {name}"] if name else []
    lines.append(f"field {_render_field(P.field)}")
    if P.ngens:
        lines.append("gen " + " ".join(f"{n}:{w}" for n, w in zip(P.ord.names, P.ord.weights)))
    lines += [f"rel {format_poly(r)}" for r in P.relations]
    return "\n".join(lines) + "\n"


def render_extension(E: ExtensionData) -> str:
    bname = E.base.name or "R"
    out = render_presentation(E.base).splitlines()
    out.append(f"extend {bname}")
    F = E.field
    tnames = E.base.ord.names
    if E.vars:
        out.append("var " + " ".join(E.vars))
    R = E.base.ring
    for i, v in enumerate(E.vars):
        for k, t in enumerate(tnames):
            if E.sigma[i][k] != R.word((k,)):
                out.append(f"sigma {v}: {t} -> {format_poly(E.sigma[i][k])}")
        for k, t in enumerate(tnames):
            if E.delta[i][k]:
                out.append(f"delta {v}: {t} -> {format_poly(E.delta[i][k])}")
    for i in range(E.n):
        for j in range(i + 1, E.n):
            if E.c[i][j] != F.one:
                out.append(f"c {E.vars[i]} {E.vars[j]} = {F.to_str(E.c[i][j])}")
    for (j, i), d in sorted(E.lower.items()):
        if d:
            out.append(f"lower {E.vars[j]} {E.vars[i]} = {format_poly(d)}")
    return "\n".join(out) + "\n"


def render(obj) -> str:
    if isinstance(obj, ExtensionData):
        return render_extension(obj)
    return render_presentation(obj)
