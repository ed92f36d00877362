"""Exact calculus for the rational homology balls B(s_{k,m}).

Thin re-export of the compiled extension: plumbing strings, Hirzebruch-Jung
continued fractions, SL2(Z) chain-link products, handle-slide reduction
certificates and the q^2+9 symplectic-embedding obstruction.
"""

from rhb._core import *  # noqa: F401,F403
from rhb._core import __version__  # noqa: F401
