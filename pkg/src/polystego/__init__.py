"""LSB steganography with messages carried as GF(2) polynomial syndromes."""
from .codec import (
    CoverImage,
    StegoCode,
    apply_modifier,
    base_modifier,
    embed,
    embed_with_report,
    enumerate_modifiers,
    extract,
    phi,
    sigma,
    sigma_inv,
)
from .errors import (
    CapacityError,
    FormatError,
    GuardError,
    LengthMismatchError,
    StegoError,
    StrategyError,
    UnsupportedFormatError,
)
from .gf2poly import Gf2Poly
from .lcdm import DistortionMap, dffa, head_families, make_lcdm

__version__ = "0.1.0"
