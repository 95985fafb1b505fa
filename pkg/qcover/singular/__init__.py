from .extremal import (ExtremalReport, ReportItem, construct_extremal_thm12,
                       construct_extremal_thm31, construct_trivial,
                       extremal_size, extremal_span_thm31,
                       short_cover_for_type, structure_check,
                       verify_extremal)
from .singular_space import (SingularSpace, SubspaceType, enumerate_type,
                             make_singular_space, make_typed_subspace,
                             type_of, w1_part)
