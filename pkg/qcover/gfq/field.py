"""Arithmetic in GF(q) for prime powers q.

Elements are integer codes in [0, q): the base-p digits of a code are the
coefficients (low degree first) of a polynomial residue modulo the field's
modulus. Multiplication goes through log/antilog tables built once per
field."""
import functools
import itertools

import numpy as np

from qcover.constants import ADD_TABLE_MAX_Q, MAX_FIELD_SIZE
from qcover.error.field_error import (ElementRangeError, NotPrimePowerError,
                                      UnknownOperationError,
                                      ZeroInverseError)

_BINARY_OPS = ("add", "sub", "mul")
_UNARY_OPS = ("neg", "inv")


def factor_prime_power(q):
    """Returns (p, e) with q = p**e, or None if q is not a prime power."""
    q = int(q)
    if q < 2:
        return None
    p = _smallest_prime_factor(q)
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    return (p, e) if rest == 1 else None


def is_prime_power(q):
    return factor_prime_power(q) is not None


def prime_powers(lower, upper):
    """All prime powers q with lower <= q <= upper, ascending."""
    return [q for q in range(max(lower, 2), upper + 1) if is_prime_power(q)]


def _smallest_prime_factor(n):
    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            return divisor
        divisor += 1
    return n


def _poly_mod(coeffs, divisor, p):
    """Remainder of coeffs modulo a monic divisor, both low degree first."""
    rem = list(coeffs)
    deg = len(divisor) - 1
    for top in range(len(rem) - 1, deg - 1, -1):
        lead = rem[top] % p
        if lead:
            shift = top - deg
            for (idx, coeff) in enumerate(divisor):
                rem[shift + idx] = (rem[shift + idx] - lead * coeff) % p
    return [c % p for c in rem[:deg]]


def _monic_polys(p, degree):
    """Monic polynomials of the given degree, low degree first, in
    lexicographic order of their coefficient tuples."""
    for lower in itertools.product(range(p), repeat=degree):
        yield tuple(lower) + (1, )


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    degree = len(poly) - 1
    for divisor_degree in range(1, degree // 2 + 1):
        for divisor in _monic_polys(p, divisor_degree):
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def _smallest_irreducible(p, e):
    for poly in _monic_polys(p, e):
        if e == 1 or (poly[0] != 0 and _is_irreducible(poly, p)):
            return poly
    raise NotPrimePowerError(f"no irreducible of degree {e} over GF({p})")


class FieldSpec:
    """A finite field GF(q), q = p**e, with a fixed modulus.

    Instances are immutable and compare equal when q and the modulus agree,
    so they can be shared freely between subspaces and worker processes."""
    def __init__(self, p, e, modulus):
        self._p = p
        self._e = e
        self._q = p**e
        self._modulus = tuple(modulus)
        self._exp, self._log = self._build_log_tables()
        self._add_table = self._build_add_table()

    @property
    def q(self):
        return self._q

    @property
    def p(self):
        return self._p

    @property
    def e(self):
        return self._e

    @property
    def modulus(self):
        return self._modulus

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def to_digits(self, code):
        digits = []
        for _ in range(self._e):
            digits.append(code % self._p)
            code //= self._p
        return digits

    def from_digits(self, digits):
        code = 0
        for digit in reversed(digits):
            code = code * self._p + digit
        return code

    def _poly_mul_code(self, a, b):
        a_digits = self.to_digits(a)
        b_digits = self.to_digits(b)
        product = [0] * (2 * self._e - 1)
        for (i, a_coeff) in enumerate(a_digits):
            if a_coeff:
                for (j, b_coeff) in enumerate(b_digits):
                    product[i + j] += a_coeff * b_coeff
        return self.from_digits(_poly_mod(product, self._modulus, self._p))

    def _build_log_tables(self):
        """Antilog table doubled in length so that exp[log a + log b] needs
        no reduction."""
        order = self._q - 1
        generator = self._find_generator()
        powers = [1]
        for _ in range(order - 1):
            powers.append(self._poly_mul_code(powers[-1], generator))
        exp_table = np.array(powers + powers, dtype=np.int64)
        log_table = np.zeros(self._q, dtype=np.int64)
        log_table[exp_table[:order]] = np.arange(order)
        return tuple(exp_table.tolist()), tuple(log_table.tolist())

    def _find_generator(self):
        order = self._q - 1
        if order == 1:
            return 1
        for candidate in range(2, self._q):
            power = candidate
            exponent = 1
            while power != 1:
                power = self._poly_mul_code(power, candidate)
                exponent += 1
            if exponent == order:
                return candidate
        raise NotPrimePowerError(f"modulus {self._modulus} is not "
                                 "irreducible")

    def _build_add_table(self):
        if self._e == 1 or self._p == 2 or self._q > ADD_TABLE_MAX_Q:
            return None
        codes = np.arange(self._q)
        place_values = self._p**np.arange(self._e)
        digits = (codes[:, None] // place_values[None, :]) % self._p
        summed = (digits[:, None, :] + digits[None, :, :]) % self._p
        table = summed @ place_values
        return tuple(tuple(row) for row in table.tolist())

    def check_code(self, code):
        if not (0 <= code < self._q):
            raise ElementRangeError(f"element code {code} out of range for "
                                    f"GF({self._q})")
        return code

    def add(self, a, b):
        if self._e == 1:
            return (a + b) % self._p
        if self._p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self.from_digits([(x + y) % self._p for (x, y) in zip(
            self.to_digits(a), self.to_digits(b))])

    def neg(self, a):
        if self._e == 1:
            return (-a) % self._p
        if self._p == 2:
            return a
        return self.from_digits([(-x) % self._p for x in self.to_digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroInverseError(f"zero has no inverse in GF({self._q})")
        return self._exp[(self._q - 1 - self._log[a]) % (self._q - 1)]

    def add_vec(self, u, v):
        if self._e == 1:
            p = self._p
            return tuple((x + y) % p for (x, y) in zip(u, v))
        if self._p == 2:
            return tuple(x ^ y for (x, y) in zip(u, v))
        return tuple(self.add(x, y) for (x, y) in zip(u, v))

    def scale_vec(self, c, v):
        if c == 0:
            return (0, ) * len(v)
        if c == 1:
            return tuple(v)
        exp_table = self._exp
        log_c = self._log[c]
        log_table = self._log
        return tuple(exp_table[log_c + log_table[x]] if x else 0 for x in v)

    def axpy(self, c, x, y):
        """y + c*x."""
        if c == 0:
            return tuple(y)
        return self.add_vec(y, self.scale_vec(c, x))

    def combine(self, coeffs, vectors, length):
        """Linear combination sum(c_i * v_i) of equal-length vectors."""
        acc = (0, ) * length
        for (coeff, vector) in zip(coeffs, vectors):
            if coeff:
                acc = self.axpy(coeff, vector, acc)
        return acc

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._q == other._q and \
            self._modulus == other._modulus

    def __hash__(self):
        return hash((self._q, self._modulus))

    def __reduce__(self):
        return (make_field, (self._q, ))

    def __repr__(self):
        return f"{self.__class__.__name__}(q={self._q}, p={self._p}, " \
               f"e={self._e}, modulus={self._modulus!r})"

    def __str__(self):
        return f"GF({self._q})"


@functools.lru_cache(maxsize=None)
def make_field(q):
    """Public factory for GF(q).

    The modulus is the lexicographically smallest monic irreducible of
    degree e over GF(p), coefficients compared low degree first, so element
    codes are identical across runs and platforms.

    Throws:
        NotPrimePowerError: if q is not a prime power in [2, 2**16].
    """
    q = int(q)
    factors = factor_prime_power(q)
    if factors is None or q > MAX_FIELD_SIZE:
        raise NotPrimePowerError(f"invalid field size {q}: must be a prime "
                                 f"power no larger than {MAX_FIELD_SIZE}")
    (p, e) = factors
    modulus = _smallest_irreducible(p, e)
    return FieldSpec(p, e, modulus)


def field_arith(spec, op, a, b=None):
    """Dispatches one of add, sub, mul, neg, inv on element codes.

    Throws:
        UnknownOperationError: if op is not one of those, or a binary op
            is missing its second operand.
        ElementRangeError: if an operand is not a code in [0, q).
    """
    if op not in _BINARY_OPS + _UNARY_OPS:
        raise UnknownOperationError(f"unknown field operation '{op}'")
    if op in _BINARY_OPS and b is None:
        raise UnknownOperationError(f"'{op}' needs two operands")
    spec.check_code(a)
    if b is not None:
        spec.check_code(b)
    if op == "add":
        return spec.add(a, b)
    elif op == "sub":
        return spec.sub(a, b)
    elif op == "mul":
        return spec.mul(a, b)
    elif op == "neg":
        return spec.neg(a)
    elif op == "inv":
        return spec.inv(a)
