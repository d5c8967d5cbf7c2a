from .vandermonde import (  # noqa
    BY_THEOREM, EXHAUSTIVE, TnsCheck, TnsMatrix, all_minors, certify,
    combination_nonzero_count, is_totally_nonsingular, minors_by_order, vandermonde
)
