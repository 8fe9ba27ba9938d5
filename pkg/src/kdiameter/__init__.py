"""Exact constructions and solvers for Max-k-Diameter hardness instances:
Hadamard-code embeddings, gadget composites, sphere-lattice pointsets,
clustering algorithms, and a rational embeddability LP."""

__version__ = "0.1.0"
