# Largest field scanned element by element for right roots or cube roots.
FIELD_SCAN_CAP = 10 ** 6

# Largest number of monic quadratics x^2 + bx + c scanned as right divisors.
QUADRATIC_SCAN_CAP = 10 ** 7

# Largest automorphism group walked by ``enumerate_automorphisms``.
AUTOMORPHISM_CAP = 10 ** 5

# Largest code enumerated word by word in ``min_distance``.
EXHAUSTIVE_CAP = 2 ** 22

# Largest number of column subsets rank-tested in ``min_distance``.
SUBSET_TEST_CAP = 10 ** 7

# Largest ambient module (in elements) for ideal enumeration.
IDEAL_ENUMERATION_CAP = 2 ** 20

# Irreducibility of a user modulus is only checked up to this degree.
MAX_EXTENSION_DEGREE = 8

# Largest field order accepted at all.
MAX_FIELD_ORDER = 10 ** 7

# Batch size for vectorised scans.
CHUNK_SIZE = 2 ** 16

# Symbols used in polynomial text: field generator, chain variable, skew variable.
FIELD_SYMBOL = 'w'
CHAIN_SYMBOL = 'u'
SKEW_SYMBOL = 'x'

# Conway polynomials, low-to-high coefficients. Used when ``galois`` cannot supply
# one (e.g. an offline install without its database).
CONWAY_POLYNOMIALS = {
    (3, 2): [2, 2, 1],
    (5, 2): [2, 4, 1],
    (7, 2): [3, 6, 1],
    (11, 2): [2, 7, 1],
    (13, 2): [2, 12, 1],
    (5, 5): [3, 4, 0, 0, 0, 1],
    (7, 7): [4, 6, 0, 0, 0, 0, 0, 1],
}

FIELD_OPS = ['add', 'sub', 'mul', 'div']
RING_OPS = ['add', 'sub', 'mul']

# Labels for the k = 2 ideal types.
IDEAL_TYPES = ['trivial', 'non-monic principal', 'principal', 'non-principal']
