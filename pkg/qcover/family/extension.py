import logging

from qcover.error.family_error import BoundViolationError, HypothesisError
from qcover.qcount.gaussian import point_count
from qcover.subspace.enumeration import point_vectors
from qcover.subspace.subspace import meet_dim, span_of

from .family import check_member_space, count_through


@check_member_space
def lemma21_extend(family, sub):
    """One extension step: a (dim S + 1)-subspace T ⊇ S with
    |F_T| >= |F_S| / [m 1].

    Takes the first member M (canonical order) with S ∩ M = 0 and returns
    the candidate S + p, p a point of M, with the most members through it;
    ties go to the first point in canonical order. The bound is re-checked
    by cross multiplication before returning.

    Throws:
        HypothesisError: if S already meets every member.
        BoundViolationError: if the counting bound fails.
    """
    missed = next((member for member in family
                   if meet_dim(sub, member) == 0), None)
    if missed is None:
        raise HypothesisError(f"{sub} meets every member of the family")
    (best, best_count) = (None, -1)
    for vector in point_vectors(missed):
        candidate = span_of(sub.spec, sub.ambient, sub.rows + (vector, ))
        count = count_through(family, candidate)
        if count > best_count:
            (best, best_count) = (candidate, count)
    through_sub = count_through(family, sub)
    if best_count * point_count(family.m, family.spec.q) < through_sub:
        raise BoundViolationError(
            f"|F_T| = {best_count} below |F_S| / [m 1] with |F_S| = "
            f"{through_sub}")
    logging.debug(f"Extended {sub} to {best}: |F_S|={through_sub}, "
                  f"|F_T|={best_count}")
    return best


@check_member_space
def corollary22_chain(family, sub, target_dim):
    """Iterates lemma21_extend from S up to dimension target_dim; returns
    [S, T_1, ..., T_t] with |F_T_i| * [m 1]^i >= |F_S| at every step.

    Throws:
        HypothesisError: if some intermediate subspace already meets every
            member (possible only when target_dim >= tau of the family).
    """
    chain = [sub]
    while chain[-1].dim < target_dim:
        chain.append(lemma21_extend(family, chain[-1]))
    factor = point_count(family.m, family.spec.q)
    base = count_through(family, sub)
    for (steps, current) in enumerate(chain):
        if count_through(family, current) * factor**steps < base:
            raise BoundViolationError(f"chain bound fails at {current}")
    return chain


@check_member_space
def corollary22_bound_holds(family, sub):
    """|F_S| <= [m 1]^(m-s), which holds for every family with tau = m."""
    if sub.dim > family.m:
        return count_through(family, sub) == 0
    return count_through(family, sub) <= \
        point_count(family.m, family.spec.q)**(family.m - sub.dim)
