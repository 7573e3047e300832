"""Monomial subalgebras of R[x,y]: membership and non-finite-generation certificates."""

from ._core import (
    BoundExceeded,
    Certificate,
    Family,
    InvalidFamily,
    InvalidGenerators,
    MonosubError,
    NoSuchElement,
    NotInSubalgebra,
    ParseError,
    SearchSpaceTooLarge,
    TheoremNotApplicable,
    UnsupportedVersion,
    compare_slopes,
    construct_witness,
    construct_witness_from_generators,
    escalation_chain,
    extract_mstar,
    factorizations,
    fibonacci,
    in_subalgebra,
    max_slope,
    member,
    member_bruteforce,
    verify_certificate_text,
)

__all__ = [
    "BoundExceeded",
    "Certificate",
    "Family",
    "InvalidFamily",
    "InvalidGenerators",
    "MonosubError",
    "NoSuchElement",
    "NotInSubalgebra",
    "ParseError",
    "SearchSpaceTooLarge",
    "TheoremNotApplicable",
    "UnsupportedVersion",
    "compare_slopes",
    "construct_witness",
    "construct_witness_from_generators",
    "escalation_chain",
    "extract_mstar",
    "factorizations",
    "fibonacci",
    "in_subalgebra",
    "max_slope",
    "member",
    "member_bruteforce",
    "verify_certificate_text",
]
