"""frobp3: exact arithmetic for theta-coordinate quadric maps on P^3 over GF(2^n).

The package implements, over explicit binary fields:

* the degree-2 self-maps of P^3 cut out by the four coset quadrics scaled by
  nonzero theta constants (the separable Verschiebung part and the absolute
  Frobenius), together with their unique indeterminacy point (1:1:1:1);
* the characteristic-2 Kummer quartic, the boundary conic, 2-torsion
  coordinate translations and the Pluecker-line projection;
* closed-form fiber solving through characteristic-2 quadratics, with the
  generic-4 / empty / line trichotomy and a translation-based surjectivity
  witness;
* Frobenius orbit iteration, exhaustive censuses of P^3 over small fields,
  and preimage towers whose field growth happens in quadratic steps;
* a symbolic verification suite for the defining polynomial identities, and
  a CLI exposing all of the above with reproducible JSON/CSV output.
"""

__version__ = "0.1.0"

from .gf2k import (BinaryField, FieldElement, artin_schreier_roots,
                   quadratic_extension)
from .moduli import ProjPoint, ThetaConstants

__all__ = [
    "BinaryField", "FieldElement", "artin_schreier_roots",
    "quadratic_extension", "ProjPoint", "ThetaConstants", "__version__",
]
