"""Plain-text family files.

    q=3 n=4 m=2 count=2 [l=1]
    # comment lines start with '#'
    1 0 0 0;0 1 0 0
    1 0 2 0;0 0 0 1

One member per line, basis rows separated by ';', entries by spaces. With
l present the ambient space is GF(q)^(n+l) and W1 is its last l
coordinates. The reader accepts any basis; the writer always emits the
canonical basis with members in canonical order, so writing is a function
of the family alone."""
import logging
from pathlib import Path

from qcover.error.core_errors import QCoverError
from qcover.error.format_error import FamilyFileError
from qcover.family.family import Family
from qcover.gfq.field import make_field
from qcover.singular.singular_space import SingularSpace
from qcover.subspace.subspace import span_of

_REQUIRED_KEYS = ("q", "n", "m", "count")
_OPTIONAL_KEYS = ("l", )


def format_header(q, n, m, count, l=None):
    header = f"q={q} n={n} m={m} count={count}"
    return header if l is None else header + f" l={l}"


def format_member(member):
    return ";".join(" ".join(str(x) for x in row) for row in member.rows)


def format_family(family, sing=None):
    if sing is None:
        header = format_header(family.spec.q, family.ambient, family.m,
                               len(family))
    else:
        header = format_header(family.spec.q, sing.n, family.m, len(family),
                               sing.l)
    lines = [header] + [format_member(member) for member in family]
    return "\n".join(lines) + "\n"


def _parse_header(line):
    fields = {}
    for token in line.split():
        (key, sep, value) = token.partition("=")
        if not sep or key not in _REQUIRED_KEYS + _OPTIONAL_KEYS:
            raise FamilyFileError(f"bad header field '{token}'")
        if key in fields:
            raise FamilyFileError(f"header field '{key}' repeated")
        try:
            fields[key] = int(value)
        except ValueError:
            raise FamilyFileError(f"header field '{key}' is not an integer")
    missing = [key for key in _REQUIRED_KEYS if key not in fields]
    if missing:
        raise FamilyFileError(f"header misses {', '.join(missing)}")
    return fields


def _parse_row(text, q, ambient, line_no):
    try:
        row = tuple(int(x) for x in text.split())
    except ValueError:
        raise FamilyFileError(f"line {line_no}: non-integer entry")
    if len(row) != ambient:
        raise FamilyFileError(f"line {line_no}: row of length {len(row)}, "
                              f"expected {ambient}")
    if any(not (0 <= x < q) for x in row):
        raise FamilyFileError(f"line {line_no}: entry outside [0, {q})")
    return row


def parse_family(text):
    """Returns (family, singular space or None).

    Throws:
        FamilyFileError: on any malformed header or member line, a member of
            the wrong dimension, a duplicate member or a count mismatch.
    """
    lines = [(line_no, line.strip())
             for (line_no, line) in enumerate(text.splitlines(), start=1)]
    lines = [(line_no, line) for (line_no, line) in lines
             if line and not line.startswith("#")]
    if not lines:
        raise FamilyFileError("empty family file")
    fields = _parse_header(lines[0][1])
    (q, n, m) = (fields["q"], fields["n"], fields["m"])
    l = fields.get("l")
    try:
        spec = make_field(q)
        sing = None if l is None else SingularSpace(spec, n, l)
    except QCoverError as error:
        raise FamilyFileError(f"bad header: {error}")
    ambient = n if l is None else n + l
    members = []
    for (line_no, line) in lines[1:]:
        rows = [
            _parse_row(part, q, ambient, line_no) for part in line.split(";")
        ]
        member = span_of(spec, ambient, rows)
        if member.dim != m:
            raise FamilyFileError(f"line {line_no}: member of dimension "
                                  f"{member.dim}, expected {m}")
        members.append(member)
    if len(members) != fields["count"]:
        raise FamilyFileError(f"header count {fields['count']} but "
                              f"{len(members)} members listed")
    family = Family(members, spec, ambient, m)
    if len(family) != len(members):
        raise FamilyFileError(f"{len(members) - len(family)} duplicate "
                              f"members")
    return (family, sing)


def read_family(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as error:
        raise FamilyFileError(f"cannot read '{path}': {error}")
    (family, sing) = parse_family(text)
    logging.info(f"Read {len(family)} members from '{path}'")
    return (family, sing)


def write_family(path, family, sing=None):
    path = Path(path)
    path.write_text(format_family(family, sing))
    logging.info(f"Wrote {len(family)} members to '{path}'")
