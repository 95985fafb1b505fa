"""Exact integer counting formulas. No floating point is used anywhere in
this package's counting code."""
import functools

from qcover.error.core_errors import InternalError
from qcover.error.count_error import InfeasibleTypeError, ParameterRangeError


def check_params(**lower_bounds):
    """Decorator to check named integer arguments against lower bounds.

    Args:
        lower_bounds: mapping from argument name to its minimum value.
    """
    def decorator(func):
        @functools.wraps(func)
        def _check_params(*args, **kwargs):
            named = dict(zip(func.__code__.co_varnames, args))
            named.update(kwargs)
            for (name, min_val) in lower_bounds.items():
                value = named[name]
                if int(value) != value or value < min_val:
                    raise ParameterRangeError(
                        f"{func.__name__}: {name}={value}, expected an "
                        f"integer of at least {min_val}")
            return func(*args, **kwargs)

        return _check_params

    return decorator


@functools.lru_cache(maxsize=None)
@check_params(n=0, m=0, q=2)
def gaussian(n, m, q):
    """Gaussian binomial [n m]_q, the number of m-subspaces of an
    n-dimensional space over GF(q); 0 when m > n."""
    if m > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(m):
        numerator *= q**(n - i) - 1
        denominator *= q**(m - i) - 1
    (quotient, remainder) = divmod(numerator, denominator)
    if remainder != 0:
        raise InternalError(f"inexact Gaussian binomial [{n} {m}]_{q}")
    return quotient


def point_count(n, q):
    """[n 1]_q, the number of points of an n-dimensional space."""
    return gaussian(n, 1, q)


def check_type_condition(m1, k1, m, k, n, l):
    """Returns the first violated clause of the feasibility condition
    0 <= k1 <= k <= l, 0 <= m1-k1 <= m-k <= n, or None if it holds."""
    clauses = (
        ("0 <= k1", 0 <= k1),
        ("k1 <= k", k1 <= k),
        ("k <= l", k <= l),
        ("0 <= m1-k1", 0 <= m1 - k1),
        ("m1-k1 <= m-k", m1 - k1 <= m - k),
        ("m-k <= n", m - k <= n),
    )
    for (text, holds) in clauses:
        if not holds:
            return (f"{text} violated for (m1,k1,m,k,n,l) = "
                    f"({m1},{k1},{m},{k},{n},{l})")
    return None


def require_type_condition(m1, k1, m, k, n, l):
    """Throws:
        InfeasibleTypeError: naming the violated clause.
    """
    violation = check_type_condition(m1, k1, m, k, n, l)
    if violation is not None:
        raise InfeasibleTypeError(violation)


@check_params(m1=0, k1=0, m=0, k=0, n=0, l=0, q=2)
def count_type(m1, k1, m, k, n, l, q):
    """N(m1,k1;m,k;n+l,n): the number of type-(m1,k1) subspaces inside a
    fixed type-(m,k) subspace of the singular space with split (n, l)."""
    if check_type_condition(m1, k1, m, k, n, l) is not None:
        return 0
    return q**((m1 - k1) * (k - k1)) * gaussian(m - k, m1 - k1, q) * \
        gaussian(k, k1, q)


def eq99_t(m, k, n):
    """Dimension t of X ∩ W1 for the extremal span of type (2m-1, t):
    max{0, 2m-1-n} when k = 0 and m+k-1 when k >= 1."""
    if m < 2 or k < 0:
        raise ParameterRangeError(f"eq99_t needs m >= 2 and k >= 0, got "
                                  f"m={m}, k={k}")
    if k == 0:
        return max(0, 2 * m - 1 - n)
    return m + k - 1
