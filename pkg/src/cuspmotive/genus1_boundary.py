"""Boundary contributions of the stable-curve compactification in genus one.

Stable degenerations of a pointed genus-one curve are either irreducible
(a cycle of rational components with trees of rational curves attached)
or carry the genus on a single component.  After composing with the
stabilized tree series h_1 + b0', the full boundary contribution to the
equivariant e_c is assembled from two genus-zero ingredients:

* the necklace series: cycles of rational curves, counted by orbits of
  the rotation action, giving -(1/2) sum_m phi(m)/m log(1 - psi_m(a0''))
  with psi_m the plethysm by p_m; the 1/2 accounts for the reflection;
* a correction series for the shortest cycles, where the dihedral count
  needs the two marked branches to be handled directly:
  (a0dot^2 + a0dot + (1/4) psi_2(a0'')) / (1 - psi_2(a0''))
  with a0dot the p_2-derivative of a0.

Everything here is a formal identity in symmetric functions over the
Tate subring; the alternating functional of the sum collapses to the
closed form t/(1 - t^2), i.e. exactly 1 in each odd degree, and the
composition with h_1 + b0' does not move the alternating image at all.
Both facts are enforced at runtime and in the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from . import genus0, symfunc as sf
from .combinatorics import euler_phi


def necklace_from(a0pp: sf.SymSeries) -> sf.SymSeries:
    """Necklace series built from a given second-derivative input."""
    n = a0pp.max_degree
    total = sf.zero(n)
    for m in range(1, n + 1):
        phi = Fraction(euler_phi(m), m)
        psi_m = sf.power_sum(m, n).plethysm(a0pp)
        total = total + sf.log_one_minus(psi_m).scaled(phi)
    return total.scaled(Fraction(-1, 2))


def correction_from(a0dot: sf.SymSeries, a0pp: sf.SymSeries) -> sf.SymSeries:
    """Short-cycle correction from given derivative inputs."""
    psi2 = sf.power_sum(2, a0pp.max_degree).plethysm(a0pp)
    num = a0dot * a0dot + a0dot + psi2.scaled(Fraction(1, 4))
    return num * sf.geometric(psi2)


@cache
def necklace_series(max_degree: int) -> sf.SymSeries:
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    return necklace_from(genus0.a0_second_derivative(max_degree))


@cache
def correction_series(max_degree: int) -> sf.SymSeries:
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    return correction_from(
        genus0.a0_p2_derivative(max_degree), genus0.a0_second_derivative(max_degree)
    )


@cache
def boundary_sum(max_degree: int) -> sf.SymSeries:
    return necklace_series(max_degree) + correction_series(max_degree)


@cache
def boundary_alt(max_degree: int) -> sf.AltSeries:
    """Alternating image of the boundary sum, verified against composition.

    The alternating functional is blind to plethysm with h_1 + b0'
    because every Adams image of b0' has vanishing alternating part;
    this is recomputed from scratch here and a mismatch is fatal.
    """
    u = boundary_sum(max_degree)
    direct = u.alt()
    composed = u.plethysm(sf.complete(1, max_degree) + genus0.b0_prime(max_degree))
    if composed.alt() != direct:
        raise RuntimeError("alternating image moved under boundary composition")
    return direct


@dataclass(frozen=True)
class BoundaryAssembly:
    """All the pieces of one full-boundary evaluation at a fixed truncation."""

    necklace: sf.SymSeries
    correction: sf.SymSeries
    inner_sum: sf.SymSeries
    composed: sf.SymSeries


def b1_series(max_degree: int, a1_input: sf.SymSeries) -> sf.SymSeries:
    """Genus-one equivariant e_c series: (a1 + boundary) o (h_1 + b0').

    ``a1_input`` supplies the interior term; it must share the truncation
    degree.  Degrees of the output above the highest trusted degree of
    the input are only as good as the input."""
    return assemble(max_degree, a1_input).composed


def assemble(max_degree: int, a1_input: sf.SymSeries) -> BoundaryAssembly:
    if a1_input.max_degree != max_degree:
        raise ValueError(
            f"a1 input is truncated at {a1_input.max_degree}, expected {max_degree}"
        )
    neck = necklace_series(max_degree)
    corr = correction_series(max_degree)
    inner = a1_input + neck + corr
    composed = inner.plethysm(
        sf.complete(1, max_degree) + genus0.b0_prime(max_degree)
    )
    return BoundaryAssembly(neck, corr, inner, composed)
