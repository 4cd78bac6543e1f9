__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Exceptions shared by all the packages.

Input problems (bad words, bad files, bad homomorphisms) derive from ValueError so that callers
that only care about "the arguments were wrong" can catch that. Failures of a numerical or search
procedure derive from RuntimeError. Verification failures are never raised: they are entries of a
report."""


class BUCertError(Exception):
    """Root of the exception hierarchy."""


class InputError(BUCertError, ValueError):
    """Malformed or inconsistent input: strand mismatch, index out of range, invalid homomorphism."""


class DomainError(BUCertError, ValueError):
    """The input is well formed but outside the domain of the operation."""


class MembershipError(BUCertError, ValueError):
    """A braid whose permutation is not in the cyclic subgroup generated by (1,n,...,2)."""


class TracingError(BUCertError, RuntimeError):
    """The geometric tracer could not produce a certified braid word."""

    def __init__(self, message: str, interval: tuple = None):
        super().__init__(message)
        self.interval = interval


class SearchError(BUCertError, RuntimeError):
    """A bounded search exhausted its bound."""


class UnsupportedError(BUCertError, NotImplementedError):
    """The request is valid but not covered by the implemented constructions."""
