"""Textual formats: polynomials, bivariate terms, and space/set files.

A space or set file starts with a header line ``field p^r`` (optionally
followed by ``modulus c0,c1,...`` on the same line or the next one) and then
one polynomial per line as comma-separated coefficients in increasing
degree.  Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from .bivariate import BiPoly
from .errors import InputFormatError
from .field import Field
from .poly import Poly
from .sets import PolySet
from .spaces import Subspace


def parse_poly(field: Field, text: str) -> Poly:
    tokens = [tok.strip() for tok in text.strip().split(",")]
    if not tokens or any(not tok for tok in tokens):
        raise InputFormatError(f"bad polynomial {text!r}")
    try:
        coeffs = [int(tok) for tok in tokens]
    except ValueError:
        raise InputFormatError(f"bad coefficient in {text!r}") from None
    try:
        return Poly(field, coeffs)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def poly_to_text(p: Poly) -> str:
    return str(p)


def parse_bipoly(field: Field, text: str) -> BiPoly:
    body = text.strip()
    if body == "0":
        return BiPoly.zero(field)
    terms = []
    for chunk in body.split(";"):
        parts = [tok.strip() for tok in chunk.split(",")]
        if len(parts) != 3:
            raise InputFormatError(f"bad bivariate term {chunk!r}; expected i,j,c")
        try:
            i, j, c = (int(tok) for tok in parts)
        except ValueError:
            raise InputFormatError(f"bad bivariate term {chunk!r}") from None
        terms.append((i, j, c))
    try:
        return BiPoly(field, terms)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def bipoly_to_text(e: BiPoly) -> str:
    return str(e)


def _parse_header(tokens: list[str]) -> tuple[str, str | None]:
    if not tokens or tokens[0] != "field" or len(tokens) < 2:
        raise InputFormatError("file must start with a 'field p^r' header")
    spec = tokens[1]
    modulus = None
    rest = tokens[2:]
    if rest:
        if rest[0] != "modulus" or len(rest) != 2:
            raise InputFormatError(f"bad header trailer {' '.join(rest)!r}")
        modulus = rest[1]
    return spec, modulus


def parse_records(lines) -> tuple[Field, list[Poly]]:
    """Parse header plus one polynomial per line from an iterable of lines."""
    field = None
    spec = modulus = None
    polys: list[Poly] = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if field is None and spec is None:
            spec, modulus = _parse_header(tokens)
            continue
        if field is None and tokens[0] == "modulus":
            if modulus is not None or len(tokens) != 2:
                raise InputFormatError("duplicate or malformed modulus line")
            modulus = tokens[1]
            continue
        if field is None:
            field = Field.from_spec(spec, modulus)
        if len(tokens) != 1:
            raise InputFormatError(f"bad record line {line!r}")
        polys.append(parse_poly(field, tokens[0]))
    if spec is None:
        raise InputFormatError("empty input; expected a 'field p^r' header")
    if field is None:
        field = Field.from_spec(spec, modulus)
    return field, polys


def load_records(path: str) -> tuple[Field, list[Poly]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_records(fh)


def load_space(path: str) -> tuple[Field, list[Poly], Subspace]:
    """Read generators from a file and span them."""
    field, gens = load_records(path)
    return field, gens, Subspace.span(field, gens)


def load_set(path: str) -> tuple[Field, PolySet]:
    field, polys = load_records(path)
    return field, PolySet(field, polys)


def dump_records(field: Field, polys) -> str:
    lines = [f"field {field.spec_string}"]
    if field.r > 1:
        lines.append("modulus " + ",".join(str(c) for c in field.modulus))
    lines.extend(str(p) for p in polys)
    return "\n".join(lines) + "\n"
