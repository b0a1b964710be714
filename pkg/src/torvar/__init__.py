"""torvar: exact SL2 trace curves of knot groups and the adjoint torsion form.

A pure-Python exact symbolic library.  The core pipeline:

* build the tautological SL2 representation of a two-generator knot group
  and the plane trace curve it cuts out,
* expand Puiseux branches at singular and ideal points of the curve and its
  eigenvalue double cover,
* assemble the adjoint Reidemeister torsion as a rational 1-form on the
  cover, compute its divisor, and
* check the computed vanishing orders against singularity lengths,
  Alexander-root multiplicities, and incompressible-surface Euler
  characteristic bounds.

All arithmetic is exact (rationals and simple algebraic number fields).
"""

__version__ = "0.1.0"
