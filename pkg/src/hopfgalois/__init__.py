"""Exact-arithmetic kernel for noncommutative polynomial rings and
finite-dimensional Hopf algebras.

Layers, bottom to top:

  scalars    exact base fields (rationals, cyclotomic, rational functions)
  coeffring  commutative (Laurent) polynomial coefficient rings with
             endomorphisms and twisted derivations
  skewpbw    skew polynomial presentations, normal forms, confluence
  catalog    named algebra constructions
  findim     finite-dimensional algebras as structure constants, exact
             linear algebra
  hopf       Hopf algebra structures, axiom checks, integrals
  genhopf    Hopf structure on skew polynomial presentations, checked on
             generators up to a degree bound
  galois     comodule algebras, coinvariants, Galois maps, smash and
             crossed products, truncated checks for polynomial extensions
  torsor     quantum torsors, the square-of-antipode map, Hopf algebra
             reconstruction
  hgs        paired-coaction systems linking two Hopf algebras through an
             algebra
  presfile   the on-disk presentation format
  cli        command line front end
"""

__version__ = "0.1.0"
