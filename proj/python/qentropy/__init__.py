"""Quantized entropy toolkit.

Conductance quanta, ballistic channel counting, the variational potential
formulation of heat conduction, single-quantum entropy bookkeeping and
spin-lattice relaxation. All numerics live in the compiled extension; this
package re-exports them.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
