"""Census, classification and verification tools for Euler pseudoprimes.

The library answers, exactly and by machine, for which odd composite n the
Solovay-Strassen test lies for precisely half of the admissible bases, and
provides everything around that question: Jacobi symbols, exhaustive liar
censuses, a closed-form liar count, Korselt-style classifiers, witness
constructions, Carmichael enumeration and the Solovay-Strassen test itself.
"""

from .classify import (
    ClassificationReport,
    KorseltFact,
    Verdict,
    WitnessCertificate,
    WitnessKind,
    classify,
    find_euler_witness,
    find_generator,
    find_independent_witnesses,
    find_nonresidue,
    is_carmichael,
    is_special_carmichael,
    verify_certificate,
)
from .errors import DomainError, FactorizationTimeout, RangeError, UsageError
from .factor import (
    FactoredInteger,
    euler_phi,
    factorize,
    is_perfect_square,
    is_prime,
    is_squarefree,
)
from .liars import (
    DeltaClass,
    LiarCensus,
    MonierProfile,
    MonierRow,
    census,
    census_bound,
    is_euler_liar,
    is_fermat_liar,
    monier_euler_liar_count,
)
from .modmath import (
    INT_CAP,
    crt_solve,
    dyadic_valuation,
    gcd,
    jacobi_symbol,
    mod_inverse,
    mod_pow,
)
from .sstest import SplitMix64, SSVerdict, TestOutcome, solovay_strassen
from .sweeps import (
    SweepMode,
    SweepReport,
    Violation,
    enumerate_carmichael,
    enumerate_special_carmichael,
    verify_characterization,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "DeltaClass",
    "DomainError",
    "FactoredInteger",
    "FactorizationTimeout",
    "INT_CAP",
    "KorseltFact",
    "LiarCensus",
    "MonierProfile",
    "MonierRow",
    "RangeError",
    "SSVerdict",
    "SplitMix64",
    "SweepMode",
    "SweepReport",
    "TestOutcome",
    "UsageError",
    "Verdict",
    "Violation",
    "WitnessCertificate",
    "WitnessKind",
    "census",
    "census_bound",
    "classify",
    "crt_solve",
    "dyadic_valuation",
    "enumerate_carmichael",
    "enumerate_special_carmichael",
    "euler_phi",
    "factorize",
    "find_euler_witness",
    "find_generator",
    "find_independent_witnesses",
    "find_nonresidue",
    "gcd",
    "is_carmichael",
    "is_euler_liar",
    "is_fermat_liar",
    "is_perfect_square",
    "is_prime",
    "is_special_carmichael",
    "is_squarefree",
    "jacobi_symbol",
    "mod_inverse",
    "mod_pow",
    "monier_euler_liar_count",
    "solovay_strassen",
    "verify_certificate",
    "verify_characterization",
]
