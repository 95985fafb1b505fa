from .covering import CoverResult, covering_number, covering_number_oracle
from .extension import (corollary22_bound_holds, corollary22_chain,
                        lemma21_extend)
from .family import (Family, IntersectingResult, common_points,
                     count_through, is_intersecting, span_family,
                     sub_family_through)
from .incidence import PointIncidence, iter_bits, popcount
