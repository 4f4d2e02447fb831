"""Young wall models of level-1 Fock spaces for quantum affine algebras.

Subpackages build on each other in this order: qlaurent (exact
coefficient ring), cartan (Cartan data for the six families), pattern
(wall-building patterns per highest weight), wall (the combinatorial
walls themselves), crystal (Kashiwara operators and crystal graphs),
fock (the q-deformed Fock space action), canonical (global bases via
the generalized LLT algorithm), cli (command line front end).
"""

__version__ = "0.1.0"
