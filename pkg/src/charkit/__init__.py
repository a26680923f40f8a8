"""Exact character tables and class function algebra for small finite groups.

The package computes character tables exactly (finite field splitting
followed by cyclotomic lifting), exposes class function arithmetic with
decomposition into irreducibles, tracks the squaring map chi(g) ->
chi(g^2), and ships a corpus harness that verifies the structural facts
about squares of irreducible characters on a built in family of groups.

Typical use:

    >>> import charkit
    >>> T = charkit.compute_table(charkit.from_spec("metacyclic:7:3:2"))
    >>> T.decompose_square(3).multiplicities
    (0, 0, 0, 1, 2)
"""

from .cache import cached_table
from .chartable import (
    CharacterTable,
    ClassFunction,
    Decomposition,
    SecondPowerMap,
    char_center,
    char_kernel,
    compute_table,
    decompose,
    eta,
    induce,
    inner_product,
    pointwise_product,
    restrict,
    second_power,
    second_power_permutation,
    square_root_char,
    verify_table,
)
from .cyclotomic import CycNum, CyclotomicContext, context
from .errors import (
    BadCorpusSpec,
    BadParameters,
    BadSpec,
    CharkitError,
    ClosureExceedsCap,
    ContextMismatch,
    DegreeMismatch,
    EvenOrder,
    GroupMismatch,
    InternalInconsistency,
    NotACharacter,
    NotSubgroup,
)
from .groups import (
    Group,
    Subgroup,
    build_from_generators,
    builtin,
    from_spec,
    subgroup_closure,
    subgroup_from_members,
)
from .harness import (
    DEFAULT_CORPUS,
    SUITES,
    CheckResult,
    Report,
    Witness,
    run_corpus,
)
from .version import VERSION

__version__ = VERSION

__all__ = [
    "BadCorpusSpec",
    "BadParameters",
    "BadSpec",
    "CharacterTable",
    "CharkitError",
    "CheckResult",
    "ClassFunction",
    "ClosureExceedsCap",
    "ContextMismatch",
    "CycNum",
    "CyclotomicContext",
    "DEFAULT_CORPUS",
    "Decomposition",
    "DegreeMismatch",
    "EvenOrder",
    "Group",
    "GroupMismatch",
    "InternalInconsistency",
    "NotACharacter",
    "NotSubgroup",
    "Report",
    "SUITES",
    "SecondPowerMap",
    "Subgroup",
    "VERSION",
    "Witness",
    "build_from_generators",
    "builtin",
    "cached_table",
    "char_center",
    "char_kernel",
    "compute_table",
    "context",
    "decompose",
    "eta",
    "from_spec",
    "induce",
    "inner_product",
    "pointwise_product",
    "restrict",
    "run_corpus",
    "second_power",
    "second_power_permutation",
    "square_root_char",
    "subgroup_closure",
    "subgroup_from_members",
    "verify_table",
]
