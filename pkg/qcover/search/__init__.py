from .max_family import (IntersectionGraph, SearchCertificate, exists_family,
                         max_family)
from .recorder import SearchRecorder
