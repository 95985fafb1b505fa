from .construction import lemma37_construct
from .enumeration import (enumerate_points, enumerate_subspaces,
                          extend_within, greedy_complement, point_vectors)
from .sampling import random_pair_with_meet, random_subspace
from .subspace import (Subspace, check_same_space, contains,
                       coordinate_subspace, full_space, intersects, join,
                       meet, meet_dim, span_of, standard_vector,
                       zero_subspace)
