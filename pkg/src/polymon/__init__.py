"""Exact symbolic computation in polycyclic inverse monoids.

The package is organized by concern:

- ``core``: alphabets, normal forms, closed-form arithmetic
- ``rewriting``: the free-word oracle and congruence-collapse search
- ``green``: R-classes, the finite equation solver, balls, stack action
- ``topology``: the compact one-point model and continuity certificates
- ``parsing`` / ``cli``: expression front end and the ``polymon`` command
"""

from .core import (
    Alphabet,
    Element,
    element,
    enumeration_key,
    from_json,
    generator,
    letter_name,
    make_alphabet,
    one,
    render_word,
    zero,
)
from .errors import (
    AlphabetMismatch,
    EqualPair,
    ExpressionSyntaxError,
    InfiniteAlphabet,
    KeyMismatch,
    PolymonError,
    RadiusTooSmall,
    SolverBoundError,
    TooFewGenerators,
    UnknownLetter,
    ZeroArgument,
    ZeroHasNoDownset,
    ZeroTarget,
)
from .green import (
    Ball,
    RClassKey,
    act,
    ball,
    ball_cardinality,
    cayley_dot,
    in_subsemigroup,
    rclass_key,
    rclass_witness,
    solve_axb,
)
from .parsing import evaluate, parse, parse_positive_word
from .rewriting import (
    Derivation,
    DerivationStep,
    collapse_witness,
    free_word,
    mul_oracle,
    multiplier_pool,
    reduce,
    reduce_stepwise,
    signed,
    verify_derivation,
)
from .topology import (
    CofiniteNbhd,
    WitnessFamily,
    certify_translations,
    cofinite,
    joint_discontinuity_family,
    rclass_growth,
    rclass_missing,
    shrink_neighborhood,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Element", "element", "enumeration_key", "from_json", "generator",
    "letter_name", "make_alphabet", "one", "render_word", "zero",
    "PolymonError", "TooFewGenerators", "AlphabetMismatch", "UnknownLetter",
    "ZeroHasNoDownset", "ZeroArgument", "KeyMismatch", "InfiniteAlphabet",
    "EqualPair", "ZeroTarget", "RadiusTooSmall", "SolverBoundError",
    "ExpressionSyntaxError",
    "Ball", "RClassKey", "act", "ball", "ball_cardinality", "cayley_dot",
    "in_subsemigroup", "rclass_key", "rclass_witness", "solve_axb",
    "evaluate", "parse", "parse_positive_word",
    "Derivation", "DerivationStep", "collapse_witness", "free_word", "mul_oracle",
    "multiplier_pool", "reduce", "reduce_stepwise", "signed", "verify_derivation",
    "CofiniteNbhd", "WitnessFamily", "certify_translations", "cofinite",
    "joint_discontinuity_family", "rclass_growth", "rclass_missing",
    "shrink_neighborhood",
]
