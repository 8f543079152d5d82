from pkg_resources import DistributionNotFound, get_distribution

from . import (
    chain_ring,
    code_model,
    conversions,
    crt_decomp,
    factor_engine,
    finite_field,
    linalg,
    metrics,
    skew_poly,
    tables,
)
from .chain_ring import ChainRingParams, RingAutomorphism
from .finite_field import FieldParams
from .skew_poly import SkewPolyRing
from .versioning.print_versions import show_versions

try:
    __version__ = get_distribution(__name__).version
except DistributionNotFound:
    # package is not installed
    pass
