"""Verification toolkit for coprimality-typed Goldbach partitions.

For an even target 2N, odd primes and odd numbers below it split into
A-type (coprime to 2N) and B-type (sharing a factor).  This package
classifies them, censuses the odd partitions of 2N, and checks a family of
structural claims about that split exhaustively over ranges, reporting any
counterexample it finds.
"""

from .classify import (
    EvenFactorization,
    EvenTarget,
    NumberClass,
    PrimeSplit,
    classify_odd,
    factorize_even,
    split_primes,
)
from .claims import (
    ALL_CLAIMS,
    ClaimId,
    ClaimOutcome,
    CompanionRecord,
    ExponentVector,
    MidpointReport,
    PairingReport,
    claim_goldbach_witness,
    claim_pairing_non_empty,
    comet_rows,
    companions,
    decompose_over_a_basis,
    evaluate_claims,
    midpoint_report,
    pairing_report,
    prime_power_exclusion,
    range_verify,
    verify_s_bounds,
    verify_same_type_lemma,
)
from .errors import CounterexampleFound, NotAPureAProduct, UsageError
from .partition import (
    OddPartition,
    PartitionCensus,
    PartitionKind,
    census,
    classify_partition,
    goldbach_partitions,
    odd_partitions,
)
from .sieve import (
    FactorMultiset,
    PrimeTable,
    build_table,
    factorize,
    is_prime,
    primes_in,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLAIMS",
    "ClaimId",
    "ClaimOutcome",
    "CompanionRecord",
    "CounterexampleFound",
    "EvenFactorization",
    "EvenTarget",
    "ExponentVector",
    "FactorMultiset",
    "MidpointReport",
    "NotAPureAProduct",
    "NumberClass",
    "OddPartition",
    "PairingReport",
    "PartitionCensus",
    "PartitionKind",
    "PrimeSplit",
    "PrimeTable",
    "UsageError",
    "build_table",
    "census",
    "claim_goldbach_witness",
    "claim_pairing_non_empty",
    "classify_odd",
    "classify_partition",
    "comet_rows",
    "companions",
    "decompose_over_a_basis",
    "evaluate_claims",
    "factorize",
    "factorize_even",
    "goldbach_partitions",
    "is_prime",
    "midpoint_report",
    "odd_partitions",
    "pairing_report",
    "prime_power_exclusion",
    "primes_in",
    "range_verify",
    "split_primes",
    "verify_s_bounds",
    "verify_same_type_lemma",
]
