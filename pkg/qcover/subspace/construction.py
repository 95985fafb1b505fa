import logging

from qcover.error.core_errors import InternalError
from qcover.error.subspace_error import DimensionRangeError

from .enumeration import greedy_complement
from .subspace import check_same_space, contains, join, meet, span_of


@check_same_space
def lemma37_construct(first, second, d):
    """Builds S ⊆ A+B with dim S = b-c+d, dim(S ∩ A) = d and S ∩ B = 0,
    where a, b are the dimensions of A (first) and B (second) and c is the
    dimension of their meet.

    Complements are chosen greedily from the canonical bases, so the result
    is a function of (A, B, d). All postconditions are re-checked with
    meet/join before returning.

    Throws:
        DimensionRangeError: if d is not in [0, a-b].
    """
    spec = first.spec
    ambient = first.ambient
    a, b = first.dim, second.dim
    if not (0 <= d <= a - b):
        raise DimensionRangeError(f"d={d} outside [0, {a - b}] for subspaces "
                                  f"of dimension {a} and {b}")
    common = meet(first, second)
    c = common.dim
    if contains(first, second):
        # a d-subspace of A meeting B trivially
        alphas = greedy_complement(second, first, d)
        result = span_of(spec, ambient, alphas)
    else:
        alphas = greedy_complement(common, first, b - c + d)
        betas = greedy_complement(common, second, b - c)
        paired = [
            spec.add_vec(alpha, beta)
            for (alpha, beta) in zip(alphas[:b - c], betas)
        ]
        # the trailing alphas only exist when d >= 1
        result = span_of(spec, ambient, paired + alphas[b - c:])
    _verify_lemma37(first, second, d, b - c + d, result)
    logging.debug(f"Meet-prescribed construction: a={a} b={b} c={c} d={d} -> "
                  f"{result}")
    return result


def _verify_lemma37(first, second, d, expected_dim, result):
    failures = []
    if result.dim != expected_dim:
        failures.append(f"dim S = {result.dim}, expected {expected_dim}")
    if meet(result, first).dim != d:
        failures.append(f"dim(S ∩ A) != {d}")
    if meet(result, second).dim != 0:
        failures.append("S ∩ B != 0")
    if not contains(join(first, second), result):
        failures.append("S not inside A + B")
    if failures:
        raise InternalError("construction postconditions failed: " +
                            "; ".join(failures))
