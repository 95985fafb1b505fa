from .certificate import (CERTIFICATE_KEYS, Certificate, cover_certificate,
                          dumps_certificate, inequality_certificate,
                          loads_certificate, make_certificate,
                          read_certificate, revalidate_certificate,
                          search_certificate, write_certificate)
from .family_file import (format_family, parse_family, read_family,
                          write_family)
