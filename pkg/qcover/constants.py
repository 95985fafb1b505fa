MAX_FIELD_SIZE = 2**16
# add tables are precomputed up to this field size
ADD_TABLE_MAX_Q = 256

EXIT_SUCCESS = 0
EXIT_PROPERTY_VIOLATED = 1
EXIT_INVALID_INPUT = 2
EXIT_GATE_EXCEEDED = 3
