from .field import (FieldSpec, factor_prime_power, field_arith,
                    is_prime_power, make_field, prime_powers)
from .matrix import (Matrix, RrefResult, kernel_rows, mat_kernel, mat_rank,
                     mat_rref, rref_rows)
