"""Identity catalog: verifiable claims about theta functions, pfaffians and sums of squares"""

from .reports import VerifyReport, Discrepancy
from .catalog import list_identities, resolve, get_identity, verify_series

__all__ = ['VerifyReport', 'Discrepancy', 'list_identities', 'resolve', 'get_identity', 'verify_series']
