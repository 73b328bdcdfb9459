"""Cohomology of powers of a genus-one fiber, with its twisted S_n action.

The open stratum of interest is the complement of the big diagonals in the
(n-1)-st power of a pointed genus-one curve E: configurations
(0, x_2, ..., x_n) with all coordinates distinct.  H^*(E^(n-1)) is the
(n-1)-st graded tensor power of H^*(E) = <1, alpha, beta, point> with

    |1| = 0,  |alpha| = |beta| = 1,  |point| = 2,
    alpha . beta = point,  alpha^2 = beta^2 = 0,

and SL_2-weights +1 for alpha and -1 for beta.  Basis elements are words
over the four letters, one letter per coordinate slot (slot t holds the
class pulled back from coordinate x_(t+2)).  Products follow the Koszul
rule: letters anticommute when both are odd, across slots as well as
inside a slot, so for words u, v the sign is
(-1)^(sum over pairs k < j of |v_k| |u_j|).

Transpositions (i, i+1) with i >= 2 just swap two slots, with a Koszul
sign.  The transposition (1 2) moves the marked point: it sends
(0, x_2, x_3, ...) to (0, -x_2, x_3 - x_2, ...), so on classes from the
first slot it is the inversion, and on a class z from slot t >= 1 it
pulls back to (slot-t copy of z) minus (slot-0 copy of z), with the
degree-2 letter expanding by the Kuenneth formula.

Worked example at n = 3 (slots for x_2, x_3): writing a@0 for alpha in
slot 0, the action of (1 2) gives

    a@0          |->  -a@0
    a@1          |->  a@1 - a@0
    a@0 . b@1    |->  (-a@0)(b@1 - b@0) = p@0 - a@0 . b@1

where a@0 . b@0 = p@0 by the in-slot product.  Every permutation action
is composed from these generators; the Coxeter relations are verified in
the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product

from .combinatorics import (
    Partition,
    adjacent_transposition_word,
    class_sign,
    cycle_type,
    partitions_of,
    perm_from_cycle_type,
    set_partitions_of,
    stable_poset_mobius,
    stable_set_partitions,
    z_of,
)
from .motive import MotiveClass

MAX_FIBER_POINTS = 7
MAX_STRATUM_POINTS = 6

# letters: 0 = unit, 1 = alpha, 2 = beta, 3 = point
DEG = (0, 1, 1, 2)
WT = (0, 1, -1, 0)
LETTER_NAMES = ("1", "a", "b", "p")

_SLOT_MUL = {
    (0, 0): (1, 0),
    (0, 1): (1, 1),
    (0, 2): (1, 2),
    (0, 3): (1, 3),
    (1, 0): (1, 1),
    (2, 0): (1, 2),
    (3, 0): (1, 3),
    (1, 2): (1, 3),
    (2, 1): (-1, 3),
}


def word_degree(w) -> int:
    return sum(DEG[x] for x in w)


def word_weight(w) -> int:
    return sum(WT[x] for x in w)


def word_mul(u, v):
    """Product of basis words: (sign, word), or None when it vanishes."""
    exp = 0
    odd_v_prefix = 0
    letters = []
    for a, b in zip(u, v):
        if DEG[a] & 1:
            exp += odd_v_prefix
        if DEG[b] & 1:
            odd_v_prefix += 1
        got = _SLOT_MUL.get((a, b))
        if got is None:
            return None
        s, c = got
        if s < 0:
            exp += 1
        letters.append(c)
    return ((-1) ** (exp & 1), tuple(letters))


class FiberAlgebra:
    """The graded algebra H^*(E^(n-1)) on its word basis."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n

    @property
    def dimension(self) -> int:
        return 4 ** (self.n - 1)

    def words(self):
        return product(range(4), repeat=self.n - 1)

    degree = staticmethod(word_degree)
    weight = staticmethod(word_weight)
    mul = staticmethod(word_mul)


def _combo_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            got = word_mul(u, v)
            if got is None:
                continue
            s, w = got
            out[w] = out.get(w, 0) + s * cu * cv
    return {w: c for w, c in out.items() if c}


def _apply_map(mp: dict, combo: dict) -> dict:
    out: dict = {}
    for w, c in combo.items():
        for w2, c2 in mp[w].items():
            out[w2] = out.get(w2, 0) + c * c2
    return {w: c for w, c in out.items() if c}


def _placed(n: int, placements) -> tuple:
    word = [0] * (n - 1)
    for slot, letter in placements:
        word[slot] = letter
    return tuple(word)


def _tau_slot_image(n: int, t: int, letter: int) -> dict:
    """Image of a single-slot class under the (1 2) pullback."""
    if letter == 0:
        return {_placed(n, ()): 1}
    if t == 0:
        # inversion on the slot of x_2: -1 on odd letters
        sign = -1 if DEG[letter] & 1 else 1
        return {_placed(n, ((0, letter),)): sign}
    if letter in (1, 2):
        return {
            _placed(n, ((0, letter),)): -1,
            _placed(n, ((t, letter),)): 1,
        }
    # letter == 3: the point class expands by Kuenneth
    return {
        _placed(n, ((0, 3),)): 1,
        _placed(n, ((0, 1), (t, 2))): -1,
        _placed(n, ((0, 2), (t, 1))): 1,
        _placed(n, ((t, 3),)): 1,
    }


@cache
def transposition_action(n: int, i: int) -> dict:
    """Pullback of the transposition (i, i+1) as a map on basis words.

    Returned as a dict from each word to its image combination.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= {n - 1}, got {i}")
    alg = FiberAlgebra(n)
    out = {}
    if i >= 2:
        s, t = i - 2, i - 1
        for w in alg.words():
            img = list(w)
            img[s], img[t] = img[t], img[s]
            sign = -1 if (DEG[w[s]] & 1) and (DEG[w[t]] & 1) else 1
            out[w] = {tuple(img): sign}
        return out
    for w in alg.words():
        combo = {_placed(n, ()): 1}
        for t, letter in enumerate(w):
            combo = _combo_mul(combo, _tau_slot_image(n, t, letter))
        out[w] = combo
    return out


def permutation_action(n: int, perm) -> dict:
    """Pullback map of an arbitrary permutation, composed from generators."""
    dec = adjacent_transposition_word(tuple(perm))
    gens = [transposition_action(n, i) for i in dec]
    out = {}
    for w in FiberAlgebra(n).words():
        combo = {w: 1}
        for g in reversed(gens):
            combo = _apply_map(g, combo)
        out[w] = combo
    return out


@cache
def graded_traces(n: int, ct) -> dict:
    """Trace of a cycle-type-ct permutation per (degree, weight) block."""
    ct = Partition(ct)
    if ct.size != n:
        raise ValueError("cycle type size mismatch")
    mp = permutation_action(n, perm_from_cycle_type(ct))
    traces: dict[tuple[int, int], int] = {}
    for w, combo in mp.items():
        d = combo.get(w)
        if d:
            key = (word_degree(w), word_weight(w))
            traces[key] = traces.get(key, 0) + d
    return traces


def alternating_component(n: int) -> dict:
    """Dimensions of the sign-isotypic part per (degree, weight).

    Computed as the trace of the exact averaging projector
    (1/n!) sum sgn(sigma) sigma^*, class by class.
    """
    if not 2 <= n <= MAX_FIBER_POINTS:
        raise ValueError(f"alternating_component supports 2 <= n <= {MAX_FIBER_POINTS}")
    import math

    acc: dict[tuple[int, int], Fraction] = {}
    for lam in partitions_of(n):
        size = math.factorial(n) // z_of(lam)
        sign = class_sign(lam)
        for key, tr in graded_traces(n, lam).items():
            acc[key] = acc.get(key, Fraction(0)) + Fraction(sign * size * tr)
    out = {}
    for key, v in acc.items():
        v = v / math.factorial(n)
        if v.denominator != 1 or v < 0:
            raise RuntimeError(f"projector trace is not a dimension at {key}: {v}")
        if v:
            out[key] = int(v)
    return out


# ---------------------------------------------------------------------------
# Equivariant Euler characteristic of the open stratum.


@dataclass(frozen=True)
class EquivariantClass:
    """Signed trace table of e_c on the open stratum of E^(n-1).

    ``bins[(m, w)][ct]`` is the trace of any permutation of cycle type
    ``ct`` on the weight-m, SL_2-weight-w part of e_c (cohomological
    signs already folded in; m is also the motivic weight, and the Tate
    twist is j = (m - w) / 2).
    """

    n: int
    bins: dict

    def trace(self, m: int, w: int, ct) -> int:
        return self.bins.get((m, w), {}).get(Partition(ct), 0)

    def is_weight_symmetric(self) -> bool:
        for (m, w), vec in self.bins.items():
            if self.bins.get((m, -w), {}) != vec:
                return False
        return True

    def identity_trace(self) -> int:
        """Plain e_c of the stratum: the trace table at the identity class."""
        ident = Partition((1,) * self.n)
        return sum(vec.get(ident, 0) for vec in self.bins.values())

    def sym_multiplicities(self) -> dict:
        """Virtual multiplicity of Sym^k (x) L^j per class, by weight differencing.

        The block of motivic weight m = k + 2j contains Sym^k with
        multiplicity trace(w = k) - trace(w = k + 2).
        """
        out: dict[tuple[int, int], dict[Partition, int]] = {}
        for (m, w), vec in self.bins.items():
            if w < 0 or (m - w) % 2:
                continue
            upper = self.bins.get((m, w + 2), {})
            diff = {}
            for ct in set(vec) | set(upper):
                v = vec.get(ct, 0) - upper.get(ct, 0)
                if v:
                    diff[ct] = v
            if diff:
                out[(w, (m - w) // 2)] = diff
        return out

    def alternating_parts(self) -> dict:
        """Multiplicity of the sign character in each Sym^k (x) L^j slot."""
        result = {}
        for (k, j), vec in self.sym_multiplicities().items():
            total = Fraction(0)
            for ct, v in vec.items():
                total += Fraction(class_sign(ct) * v, z_of(ct))
            if total.denominator != 1:
                raise RuntimeError(f"non-integral sign multiplicity at {(k, j)}")
            if total:
                result[(k, j)] = int(total)
        return result


def ec_open_stratum(n: int) -> EquivariantClass:
    """Equivariant e_c of the distinct-coordinate stratum in E^(n-1).

    Inclusion-exclusion over the diagonal strata: for each permutation
    the fixed set partitions form a sub-poset of the partition lattice,
    and the trace on the open stratum is the Moebius-weighted sum of
    traces on the sub-tori E_P, each of which is a smaller fiber power
    carrying the induced block permutation.
    """
    if not 1 <= n <= MAX_STRATUM_POINTS:
        raise ValueError(f"ec_open_stratum supports 1 <= n <= {MAX_STRATUM_POINTS}")
    bins: dict[tuple[int, int], dict[Partition, int]] = {}
    for lam in partitions_of(n):
        perm = perm_from_cycle_type(lam)
        stable = stable_set_partitions(perm)
        mob = stable_poset_mobius([p for p, _ in stable])
        for p, pi in stable:
            mu = mob[p]
            traces = graded_traces(p.block_count, cycle_type(pi))
            for (m, w), tr in traces.items():
                signed = mu * tr * (-1) ** (m & 1)
                vec = bins.setdefault((m, w), {})
                vec[lam] = vec.get(lam, 0) + signed
    bins = {
        key: {ct: v for ct, v in vec.items() if v}
        for key, vec in bins.items()
    }
    return EquivariantClass(n, {k: v for k, v in bins.items() if v})


# ---------------------------------------------------------------------------
# From the stratum to the interior Euler characteristics.


def local_system_euler(k: int) -> MotiveClass:
    """e_c of the open modular curve with coefficients in Sym^k.

    L for the trivial system, 0 in odd symmetric powers, and
    -S[k+2] - 1 for even k >= 2, where S[k+2] is the cusp symbol.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return MotiveClass.lefschetz()
    if k % 2 == 1:
        return MotiveClass.zero()
    return -MotiveClass.cusp(k + 2) - MotiveClass.one()


def interior_alternating(n: int) -> MotiveClass:
    """Sign-isotypic e_c of the open genus-one moduli space with n points.

    The fiberwise sign component is (-1)^(n-1) Sym^(n-1) in weight n - 1,
    so only the weight-(n-1) local system survives.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = (-1) ** (n - 1)
    return local_system_euler(n - 1) * sign


def interior_alt_series(max_degree: int):
    """Alternating series of the interior: sum_n interior_alternating(n) t^n."""
    from .symfunc import AltSeries

    return AltSeries(
        max_degree, {n: interior_alternating(n) for n in range(1, max_degree + 1)}
    )


def interior_exact_series(max_degree: int):
    """Symmetric-function lift of the interior placing each degree on s_(1^n).

    Only the sign-isotypic information is retained, which is all the
    alternating functional ever reads.
    """
    from . import symfunc as sf

    total = sf.zero(max_degree)
    for n in range(1, max_degree + 1):
        c = interior_alternating(n)
        if not c.is_zero():
            total = total + sf.elementary(n, max_degree).scaled(c)
    return total


def interior_small_series(max_degree: int, n_max: int | None = None):
    """Full equivariant interior e_c for degrees up to min(n_max, 6).

    Degree n is assembled from the open-stratum trace table: every
    Sym^k (x) L^j multiplicity is paired with the Euler characteristic
    of the corresponding local system on the open modular curve.
    """
    from . import symfunc as sf

    if n_max is None:
        n_max = MAX_STRATUM_POINTS
    n_max = min(n_max, MAX_STRATUM_POINTS, max_degree)
    terms: dict[Partition, MotiveClass] = {}
    for n in range(1, n_max + 1):
        ec = ec_open_stratum(n)
        for (k, j), vec in ec.sym_multiplicities().items():
            factor = local_system_euler(k) * MotiveClass.lefschetz(j)
            if factor.is_zero():
                continue
            for ct, v in vec.items():
                add = factor * Fraction(v, z_of(ct))
                prev = terms.get(ct)
                terms[ct] = add if prev is None else prev + add
    return sf.SymSeries(max_degree, terms)
