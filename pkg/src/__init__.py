"""
ellipsum
Exact verification of theta-function, pfaffian and sums of squares identities
"""

__version__ = "1.0.0"
