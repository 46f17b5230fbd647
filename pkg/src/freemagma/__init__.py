"""Exact computation in the cyclic free magma of binary trees."""
from .arithmetic import (Factorization, divides, divisor_chain, factorize, gcd, is_prime,
                         left_divide, multiply, pair_embed, product)
from .config import LIMITS, Limits, configure
from .counting import (CATALAN, PRIMES, abundance_bound, abundance_gap, catalan_count,
                       prime_count_closed, prime_count_oracle, prime_count_recursive, prime_gap)
from .elements import (TWO, UNIT, MagmaElement, add, enumerate_level, enumerate_upto,
                       format_element, format_set, make, parse_element, parse_set, precedes,
                       reverse, segment)
from .errors import DomainError, MagmaError, ParseError, ResourceCapError
from .families import (RootedTree, enumerate_rooted_trees, family_instances, labelize,
                       match_scheme, parse_scheme, substitute)
from .primesets import (PrimeSet, SpectrumLattice, arborescence, decomposition_digraph,
                        enumerate_closed_sets, enumerate_prime_sets, is_closed_set,
                        is_prime_set, kmax_level, spectrum)
from .report import VerificationRecord
from .submagmas import (LongitudinalSpec, Submagma, contains, join, principal, submagma,
                        truncated_members)

__version__ = "0.1.0"
