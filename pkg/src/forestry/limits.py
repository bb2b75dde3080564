"""Shared enumeration cap for the exhaustive 2^m operations."""

from .errors import EnumerationCapExceeded

# 2^24 subsets is a few seconds of kernel time; anything past that should be
# an explicit caller decision via the cap argument / --cap flag.
DEFAULT_ENUMERATION_CAP = 24


def check_cap(count: int, cap: int, what: str) -> None:
    """Raise unless an enumeration over 2^count states fits under the cap."""
    if count > cap:
        raise EnumerationCapExceeded(
            f"{what} would enumerate 2^{count} states; cap is 2^{cap} "
            f"(raise the cap explicitly to allow this)"
        )
