"""Exact arithmetic for the Beatty sequence of sqrt(2) and its parities."""

from .beatty import (
    CONDITIONS,
    ComplementarityReport,
    ConditionVector,
    EquivalenceReport,
    RationalValue,
    beatty_inv_sqrt2,
    beatty_sqrt2,
    check_equivalence,
    complement_partner,
    complementarity_check,
    condition_vector,
    eq1_residue,
    lemma1_holds,
)
from .exact import PrecisionError, floor_n_sqrt2_checked, floor_n_sqrt2_oracle, isqrt
from .sequences import (
    BFileEntry,
    BFileError,
    BitStream,
    SequenceId,
    SequenceSpec,
    compare_with_bfile,
    parity_bits,
    parse_bfile,
    satisfying_indices,
    serialize_bfile,
    shift_identity_check,
)
from .walk import Heading, Walk, WalkStats, cloitre_walk, render_pgm, render_svg, walk_stats

__version__ = "0.1.0"
