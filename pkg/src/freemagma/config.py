from dataclasses import dataclass, fields


@dataclass
class Limits:
    # total number of elements a level/truncated enumeration may produce
    enumeration_cap: int = 1_000_000
    # leaves in the result of a product
    multiply_cap: int = 2**20
    # largest level the brute-force prime-count oracle will enumerate
    oracle_max_len: int = 12
    # elements in a set whose spectrum (2^n subsets) we build
    spectrum_cap: int = 16
    # nesting depth for submagma membership recursion
    membership_depth: int = 100_000
    # largest rooted tree size enumerated
    tree_cap: int = 14
    # distinct prime sets a single enumeration may hold
    primeset_cap: int = 2_000_000


LIMITS = Limits()


def configure(**overrides):
    """Update the global limits in place; unknown names raise TypeError."""
    names = {f.name for f in fields(Limits)}
    for key, value in overrides.items():
        if key not in names:
            raise TypeError(f"unknown limit {key!r}")
        setattr(LIMITS, key, value)
    return LIMITS
