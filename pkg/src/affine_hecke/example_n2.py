"""The infinite cyclic-quotient module U for n = 2, truncated.

U is the quotient of the rank-2 algebra by the left ideal generated by
rho^2 - 1 and b_1 rho - q^-1 b_1.  The classes u_k of b_{(...k letters
ending in 1)} and u'_k of rho b_{(...ending in 1)} form a basis; the
reduction table sends a KL element rho^m b_w (rho-power first folded mod 2)
to

    b_{..1}       -> u_k          rho b_{..1} -> u'_k
    b_{..0}       -> q^-1 u'_k    rho b_{..0} -> q^-1 u_k

with k the word length.  Truncation is explicit: anything escaping the
bound raises TruncationExceeded rather than being dropped, because kernel
certificates would be silently corrupted otherwise.

The projection onto the two-dimensional module W sends u_0 to the cyclic
vector w and intertwines the generator actions.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BadIndex, TruncationExceeded
from .hecke import HeckeElt, KLLabel, alt_word, b_gen, kl_to_std, rho_gen, std_to_kl
from .laurent import ONE, Q, Q2, QINV, ZERO, LaurentPoly
from .modules import induce, module_act, trivial_module

DEFAULT_BOUND = 20


class UVec:
    """Truncated element of U: finite combination of u_k, u'_k with k <= N."""

    __slots__ = ("N", "coeffs")

    def __init__(self, bound=DEFAULT_BOUND, coeffs=None):
        self.N = bound
        c = {}
        if coeffs:
            for (primed, k), coeff in coeffs.items():
                if k < 0 or k > bound:
                    raise TruncationExceeded(f"index {k} outside truncation bound {bound}")
                if coeff:
                    key = (bool(primed), k)
                    acc = c.get(key, ZERO) + coeff
                    if acc:
                        c[key] = acc
                    elif key in c:
                        del c[key]
        self.coeffs = c

    @classmethod
    def basis(cls, k, primed=False, bound=DEFAULT_BOUND):
        return cls(bound, {(primed, k): ONE})

    @classmethod
    def zero(cls, bound=DEFAULT_BOUND):
        return cls(bound)

    @property
    def is_zero(self):
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        if not isinstance(other, UVec):
            return NotImplemented
        bound = min(self.N, other.N)
        out = dict(self.coeffs)
        for key, coeff in other.coeffs.items():
            acc = out.get(key, ZERO) + coeff
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        v = UVec.__new__(UVec)
        v.N = bound
        v.coeffs = out
        return v

    def __neg__(self):
        v = UVec.__new__(UVec)
        v.N = self.N
        v.coeffs = {k: -c for k, c in self.coeffs.items()}
        return v

    def __sub__(self, other):
        if not isinstance(other, UVec):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = LaurentPoly.const(coeff)
        v = UVec.__new__(UVec)
        v.N = self.N
        v.coeffs = {} if coeff.is_zero else {k: c * coeff for k, c in self.coeffs.items()}
        return v

    def __rmul__(self, coeff):
        if isinstance(coeff, (int, LaurentPoly)):
            return self.scale(coeff)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, UVec):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (primed, k), coeff in sorted(self.coeffs.items()):
            name = f"u'{k}" if primed else f"u{k}"
            if coeff == 1:
                parts.append(name)
            else:
                parts.append(f"({coeff})*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UVec(N={self.N}, {self.coeffs!r})"


def u_reduce(elt, bound=DEFAULT_BOUND):
    """Image of a rank-2 element under the projection onto U."""
    out = {}
    for label, coeff in std_to_kl(elt).items():
        k = label.length()
        if k > bound:
            raise TruncationExceeded(
                f"KL word of length {k} exceeds truncation bound {bound}"
            )
        primed = label.m % 2 == 1
        if k == 0 or label.word[-1] == 1:
            key, factor = (primed, k), coeff
        else:
            key, factor = (not primed, k), coeff * QINV
        acc = out.get(key, ZERO) + factor
        if acc:
            out[key] = acc
        elif key in out:
            del out[key]
    v = UVec.__new__(UVec)
    v.N = bound
    v.coeffs = out
    return v


def lift(vec):
    """Section of the projection: u_k -> b_{..1}, u'_k -> rho b_{..1}."""
    out = HeckeElt.zero(2)
    for (primed, k), coeff in vec.coeffs.items():
        label = KLLabel(1 if primed else 0, alt_word(k, last=1))
        out = out + kl_to_std(label).scale(coeff)
    return out


_GENERATORS = ("rho", "b0", "b1", "T0", "T1")


def _act_basis_closed(gen, primed, k, bound):
    """Closed-form action of a generator on u_k or u'_k."""
    if gen == "rho":
        return {(not primed, k): ONE}
    if gen not in ("b0", "b1"):
        raise BadIndex(f"unknown generator {gen!r}")
    # the primed row swaps the roles of b_0 and b_1
    eff = gen if not primed else ("b0" if gen == "b1" else "b1")
    if eff == "b1":
        if k == 0:
            out = {(primed, 1): ONE}
        elif k % 2 == 1:
            out = {(primed, k): Q2}
        else:
            out = {(primed, k + 1): ONE, (primed, k - 1): ONE}
    else:
        if k == 0:
            out = {(not primed, 1): QINV}
        elif k == 1:
            out = {(primed, 2): ONE}
        elif k % 2 == 0:
            out = {(primed, k): Q2}
        else:
            out = {(primed, k + 1): ONE, (primed, k - 1): ONE}
    if any(j > bound for _, j in out):
        raise TruncationExceeded(f"action on index {k} exceeds truncation bound {bound}")
    return out


def gen_elt(gen):
    """The generator as a rank-2 algebra element."""
    if gen == "rho":
        return rho_gen(2)
    if gen in ("b0", "b1"):
        return b_gen(2, int(gen[1]))
    if gen in ("T0", "T1"):
        from .hecke import t_gen

        return t_gen(2, int(gen[1]))
    raise BadIndex(f"unknown generator {gen!r}")


def u_act(gen, vec, engine="closed"):
    """Action of a generator on a truncated vector.

    Two engines: the closed-form table, and reduce-after-multiply through
    the algebra.  They agree; the test suite pins this down.
    """
    if gen in ("T0", "T1"):
        # T_i = b_i - q
        return u_act("b" + gen[1], vec, engine) - vec.scale(Q)
    if engine == "closed":
        out = UVec.zero(vec.N)
        for (primed, k), coeff in vec.coeffs.items():
            for key, factor in _act_basis_closed(gen, primed, k, vec.N).items():
                out = out + UVec(vec.N, {key: coeff * factor})
        return out
    if engine == "reduce":
        return u_reduce(gen_elt(gen) * lift(vec), vec.N)
    raise ValueError(f"unknown engine {engine!r}")


def act_elt(elt, vec):
    """Action of an arbitrary rank-2 element, by lift-multiply-reduce."""
    return u_reduce(elt * lift(vec), vec.N)


# ---------------------------------------------------------------------------
# the projection onto W

@lru_cache(maxsize=1)
def w_module():
    """The two-dimensional target W, realized by induction from two copies
    of the trivial rank-1 module."""
    v = trivial_module(1)
    return induce(v, v)


@lru_cache(maxsize=None)
def _pi_basis(primed, k):
    # the image of u_k is the KL element b_{..1} acting on the cyclic
    # vector w = (1, 0); the primed vector adds one rho in front
    mod = w_module()
    elt = kl_to_std(KLLabel(1 if primed else 0, alt_word(k, last=1)))
    return module_act(mod, elt, (ONE, ZERO))


def pi_uw(vec):
    """Project a truncated vector to W, as a pair of coordinates in the
    basis {w, w'}."""
    out = (ZERO, ZERO)
    for (primed, k), coeff in vec.coeffs.items():
        base = _pi_basis(primed, k)
        out = (out[0] + coeff * base[0], out[1] + coeff * base[1])
    return out


def ideal_generators():
    """The two left-ideal generators rho^2 - 1 and b_1 rho - q^-1 b_1."""
    g1 = rho_gen(2, 2) - HeckeElt.one(2)
    b1 = b_gen(2, 1)
    g2 = b1 * rho_gen(2) - b1.scale(QINV)
    return g1, g2


def kernel_generator():
    """The submodule generator T_1 u_0 - rho u_0, as a truncated vector."""
    t1u0 = u_act("T1", UVec.basis(0))
    ru0 = u_act("rho", UVec.basis(0))
    return t1u0 - ru0


def left_ideal_probe(gen, x, bound=DEFAULT_BOUND):
    """Reduce x * gen; zero certifies that the left multiple dies in U."""
    return u_reduce(x * gen, bound)


def quotient_coords(primed, k):
    """Coordinates of the class of u_k (or u'_k) in the span of the classes
    of u_0 and u'_0 inside U/J, following the two-step recursion
    u_k = b u_{k-1} - u_{k-2} with b alternating between b_1 and b_0."""
    table = {
        (False, 0): (ONE, ZERO),
        (True, 0): (ZERO, ONE),
    }

    def act_b(i, v):
        # b_1 and b_0 on span{u_0bar, u'_0bar}: columns are images of the
        # two basis classes
        if i == 1:
            cols = ((Q, ONE), (ONE, QINV))
        else:
            cols = ((QINV, ONE), (ONE, Q))
        return (
            cols[0][0] * v[0] + cols[1][0] * v[1],
            cols[0][1] * v[0] + cols[1][1] * v[1],
        )

    for j in range(1, k + 1):
        letter = alt_word(j, last=1)[0]
        prev = table[(False, j - 1)]
        cur = act_b(letter, prev)
        if j >= 3:
            # b u_{j-1} = u_j + u_{j-2} once both neighbours exist
            before = table[(False, j - 2)]
            cur = (cur[0] - before[0], cur[1] - before[1])
        table[(False, j)] = cur
        table[(True, j)] = (cur[1], cur[0])
    return table[(bool(primed), k)]
