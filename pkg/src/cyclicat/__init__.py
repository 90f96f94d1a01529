"""Exact combinatorics of the simplex, interval and cyclic categories.

Submodules:

* :mod:`cyclicat.delta` - the simplex and interval categories
* :mod:`cyclicat.cyclic` - the cyclic category
* :mod:`cyclicat.crossed` - crossed simplicial groups
* :mod:`cyclicat.presheaf` - finite simplicial and cyclic sets
* :mod:`cyclicat.segal` - triangulations, Segal and 2-Segal checks
* :mod:`cyclicat.reedy` - generalized Reedy structure
* :mod:`cyclicat.lifting` - lifting properties
"""

from .errors import CyclicatError

__version__ = "0.1.0"
__all__ = ["CyclicatError", "__version__"]
