"""JSON certificates for computed results.

Keys are always written in CERTIFICATE_KEYS order and exact values stay
exact: integers of any size are JSON integers, non-integral fractions are
written as "a/b" strings."""
import json
from collections import namedtuple
from fractions import Fraction
from pathlib import Path

import qcover
from qcover.error.format_error import CertificateError, FamilyFileError
from qcover.family.covering import covering_number
from qcover.family.family import Family, is_intersecting
from qcover.subspace.subspace import intersects

from .family_file import format_family, parse_family

CERTIFICATE_KEYS = ("kind", "parameters", "result", "witness", "steps",
                    "optimal", "nodes", "tool_version")

Certificate = namedtuple("Certificate", CERTIFICATE_KEYS)


def make_json_safe(obj):
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {
            str(key): make_json_safe(value)
            for (key, value) in obj.items()
        }
    if isinstance(obj, (list, tuple)):
        return [make_json_safe(value) for value in obj]
    return obj


def make_certificate(kind, parameters, result, witness=None, steps=(),
                     optimal=True, nodes=0):
    return Certificate(kind, make_json_safe(parameters),
                       make_json_safe(result), witness, make_json_safe(
                           [step._asdict() for step in steps]), optimal,
                       nodes, qcover.__version__)


def cover_certificate(family, cover, sing=None):
    """Certificate of a covering number; the witness is the cover written as
    a one-member family file."""
    witness = format_family(Family([cover.witness]), sing)
    parameters = {
        "q": family.spec.q,
        "ambient": family.ambient,
        "m": family.m,
        "members": len(family),
        "exact": cover.exact,
        "lower_bound": cover.lower_bound,
        "intersecting": cover.intersecting
    }
    return make_certificate("tau", parameters, cover.tau, witness,
                            optimal=cover.exact, nodes=cover.nodes_explored)


def inequality_certificate(report):
    parameters = dict(report.params)
    parameters["lhs"] = report.lhs
    parameters["rhs"] = report.rhs
    return make_certificate(report.kind, parameters, report.holds,
                            steps=report.steps)


def search_certificate(search):
    parameters = dict(search.parameters)
    parameters["num_optima"] = len(search.optima)
    parameters["structure_checks"] = list(search.structure_checks)
    parameters["wall_time"] = round(search.wall_time, 3)
    witness = None if search.witness is None else \
        format_family(search.witness)
    return make_certificate("search", parameters, search.result, witness,
                            optimal=search.optimal, nodes=search.nodes)


def dumps_certificate(cert):
    payload = {key: getattr(cert, key) for key in CERTIFICATE_KEYS}
    return json.dumps(payload, indent=2) + "\n"


def loads_certificate(text):
    """Throws:
        CertificateError: on invalid JSON or a missing or unknown key.
    """
    try:
        payload = json.loads(text)
    except ValueError as error:
        raise CertificateError(f"invalid certificate JSON: {error}")
    if not isinstance(payload, dict) or \
            set(payload) != set(CERTIFICATE_KEYS):
        raise CertificateError(f"certificate keys must be exactly "
                               f"{', '.join(CERTIFICATE_KEYS)}")
    return Certificate(*(payload[key] for key in CERTIFICATE_KEYS))


def write_certificate(path, cert):
    Path(path).write_text(dumps_certificate(cert))


def read_certificate(path):
    try:
        text = Path(path).read_text()
    except OSError as error:
        raise CertificateError(f"cannot read '{path}': {error}")
    return loads_certificate(text)


def revalidate_certificate(cert, family=None):
    """Recomputes a certified result. For "tau" certificates the witness
    must meet every member of family and a fresh covering_number must give
    the certified value; for "search" certificates the witness family must
    be intersecting of the certified size with tau >= min_tau.

    Throws:
        CertificateError: if the certificate kind cannot be revalidated or
            its witness is malformed.
    """
    try:
        witness = None if cert.witness is None else \
            parse_family(cert.witness)[0]
    except FamilyFileError as error:
        raise CertificateError(f"malformed witness: {error}")
    if cert.kind == "tau":
        if family is None or witness is None:
            raise CertificateError("a tau certificate needs its family and "
                                   "witness")
        (cover, ) = witness.members
        if cover.dim != cert.result:
            return False
        covers = all(intersects(cover, member) for member in family)
        return covers and covering_number(family).tau == cert.result
    if cert.kind == "search":
        if witness is None:
            return cert.result == 0
        min_tau = cert.parameters["min_tau"]
        return len(witness) == cert.result and \
            is_intersecting(witness).holds and \
            covering_number(witness).tau >= min_tau
    raise CertificateError(f"cannot revalidate a '{cert.kind}' certificate")

