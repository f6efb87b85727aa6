"""Computational toolkit for Ehresmann monoids: power-set semidirect
products, free inverse/ample monoids, pruned-tree free Ehresmann monoids,
normal forms, coherence-obstruction checkers, Margolis-Meakin / Szendrei
style expansions, and a semilattice-valued embedding of the two-generated
free left Ehresmann monoid."""

__version__ = "0.1.0"
