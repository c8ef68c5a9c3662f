"""Noncommutative polynomials with exact coefficients and normal ordering.

Words are tuples of generator names; a polynomial maps words to sympy
coefficients in the field Q(i)(v).  Each preset fixes an alphabet, a total
normal order on it (F-block, then K-block, then E-block) and a confluent
set of adjacent-pair rewrite rules; normal ordering rewrites the leftmost
reducible pair until none remains, which decides equality in the quotient
algebra syntactically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import sympy as sp

from .coeffs import V, canon, is_zero, qpow

Word = tuple[str, ...]
RuleBranch = tuple[sp.Expr, Word]


class RewriteError(RuntimeError):
    """Step budget exhausted or an unsupported adjacency was hit."""


@dataclass(frozen=True)
class AlgebraPreset:
    """Alphabet, normal order and rewrite rules of one quotient algebra."""

    name: str
    symbols: tuple[str, ...]
    rules: Mapping[tuple[str, str], tuple[RuleBranch, ...]]
    v: sp.Symbol = V
    forbidden: frozenset[tuple[str, str]] = frozenset()

    def order_key(self, g: str) -> int:
        return self.symbols.index(g)

    def validate_word(self, word: Word) -> None:
        for g in word:
            if g not in self.symbols:
                raise ValueError(f"generator {g!r} not in preset {self.name}")


class NCPoly:
    """Finite linear combination of words over a preset's alphabet."""

    __slots__ = ("preset", "terms")

    def __init__(self, preset: AlgebraPreset, terms: Mapping[Word, sp.Expr] | None = None):
        self.preset = preset
        self.terms: dict[Word, sp.Expr] = {}
        if terms:
            for w, c in terms.items():
                self.preset.validate_word(w)
                if c != 0:
                    self.terms[tuple(w)] = sp.sympify(c)

    # ------------------------------------------------------------------ basics
    @classmethod
    def zero(cls, preset: AlgebraPreset) -> "NCPoly":
        return cls(preset)

    @classmethod
    def one(cls, preset: AlgebraPreset) -> "NCPoly":
        return cls(preset, {(): sp.S.One})

    @classmethod
    def gen(cls, preset: AlgebraPreset, name: str, coeff: sp.Expr = sp.S.One) -> "NCPoly":
        return cls(preset, {(name,): coeff})

    @classmethod
    def word(cls, preset: AlgebraPreset, letters: Sequence[str], coeff: sp.Expr = sp.S.One) -> "NCPoly":
        return cls(preset, {tuple(letters): coeff})

    def _check_compatible(self, other: "NCPoly") -> None:
        if self.preset is not other.preset and self.preset != other.preset:
            raise ValueError("polynomials come from different presets")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, sp.S.Zero) + c
        return NCPoly(self.preset, {w: c for w, c in out.items() if c != 0})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (other * sp.S.NegativeOne)

    def __mul__(self, other: "NCPoly | sp.Expr | int") -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check_compatible(other)
            out: dict[Word, sp.Expr] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, sp.S.Zero) + c1 * c2
            return NCPoly(self.preset, out)
        coeff = sp.sympify(other)
        return NCPoly(self.preset, {w: c * coeff for w, c in self.terms.items()})

    def __rmul__(self, other: "sp.Expr | int") -> "NCPoly":
        return self * other

    def __pow__(self, n: int) -> "NCPoly":
        if n < 0:
            raise ValueError("negative powers are not defined on NCPoly")
        out = NCPoly.one(self.preset)
        for _ in range(n):
            out = out * self
        return out

    def canonicalize(self) -> "NCPoly":
        return NCPoly(
            self.preset,
            {w: cc for w, c in self.terms.items() if not is_zero(c) for cc in [canon(c)]},
        )

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.terms.values())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            wrd = "*".join(w) if w else "1"
            parts.append(f"({c})*{wrd}")
        return " + ".join(parts)

    # --------------------------------------------------------- normal ordering
    def _leftmost_reducible(self, word: Word) -> int | None:
        rules = self.preset.rules
        for i in range(len(word) - 1):
            pair = (word[i], word[i + 1])
            if pair in rules:
                return i
            if pair in self.preset.forbidden:
                raise RewriteError(
                    f"unsupported adjacency {pair} in preset {self.preset.name}"
                )
        return None

    def normal_order(self, max_steps: int = 2_000_000) -> "NCPoly":
        """Unique normal form; two polynomials are equal in the quotient
        algebra iff their normal forms coincide."""
        done: dict[Word, sp.Expr] = {}
        frontier = dict(self.terms)
        steps = 0
        while frontier:
            new: dict[Word, sp.Expr] = {}
            for word, coeff in frontier.items():
                i = self._leftmost_reducible(word)
                if i is None:
                    done[word] = done.get(word, sp.S.Zero) + coeff
                    continue
                steps += 1
                if steps > max_steps:
                    raise RewriteError(
                        f"normal ordering exceeded {max_steps} rewrite steps; "
                        "rule set is likely broken"
                    )
                for c, repl in self.preset.rules[(word[i], word[i + 1])]:
                    w = word[:i] + repl + word[i + 2:]
                    new[w] = new.get(w, sp.S.Zero) + coeff * c
            frontier = new
        return NCPoly(self.preset, done).canonicalize()

    def equals(self, other: "NCPoly") -> bool:
        return (self - other).normal_order().is_zero()


# ---------------------------------------------------------------- presets
def _commuting_block(symbols: Iterable[str]) -> dict[tuple[str, str], tuple[RuleBranch, ...]]:
    """Plain swaps restoring the listed order within a commuting block."""
    symbols = list(symbols)
    rules: dict[tuple[str, str], tuple[RuleBranch, ...]] = {}
    for i, a in enumerate(symbols):
        for b in symbols[:i]:
            rules[(a, b)] = ((sp.S.One, (b, a)),)
    return rules


def _node_rules(
    v: sp.Symbol,
    cartan: Mapping[tuple[int, int], int],
    nodes: Sequence[int],
) -> dict[tuple[str, str], tuple[RuleBranch, ...]]:
    """Simple-generator rules shared by every preset built on Cartan data."""
    one = sp.S.One
    qcomm = one / (qpow(1, v) - qpow(-1, v))
    rules: dict[tuple[str, str], tuple[RuleBranch, ...]] = {}
    for i in nodes:
        K, Ki = f"K{i}", f"K{i}i"
        rules[(K, Ki)] = ((one, ()),)
        rules[(Ki, K)] = ((one, ()),)
        for j in nodes:
            a = cartan[(i, j)]
            E, F = f"E{j}", f"F{j}"
            rules[(E, K)] = ((qpow(-a, v), (K, E)),)
            rules[(E, Ki)] = ((qpow(a, v), (Ki, E)),)
            rules[(K, F)] = ((qpow(-a, v), (F, K)),)
            rules[(Ki, F)] = ((qpow(a, v), (F, Ki)),)
            if i == j:
                rules[(E, F)] = (
                    (one, (F, E)),
                    (qcomm, (K,)),
                    (-qcomm, (Ki,)),
                )
            else:
                rules[(f"E{i}", F)] = ((one, (F, f"E{i}")),)
    return rules


def sl2_preset(v: sp.Symbol = V) -> AlgebraPreset:
    symbols = ("F1", "K1", "K1i", "E1")
    rules = _node_rules(v, {(1, 1): 2}, (1,))
    return AlgebraPreset("sl2", symbols, rules, v=v)


def sl3_preset(v: sp.Symbol = V) -> AlgebraPreset:
    """Rank-2 simply-laced preset with the non-simple root letters E12, F12.

    Straightening rules for the non-simple roots are derived from their
    definition plus the q-Serre relation (the q-Serre zero test in the
    suite re-validates them):

        E1*E2  = q * E2*E1 - i * q^{1/2} * E12
        E1*E12 = q^{-1} * E12*E1
        E12*E2 = q^{-1} * E2*E12

    and mirrored for F.  Adjacencies mixing E12/F12 with opposite-type
    simple generators have no straightening rule and raise.
    """
    one = sp.S.One
    q, qi = qpow(1, v), qpow(-1, v)
    cartan = {(1, 1): 2, (2, 2): 2, (1, 2): -1, (2, 1): -1}
    symbols = ("F2", "F12", "F1", "K1", "K1i", "K2", "K2i", "E2", "E12", "E1")
    rules = _node_rules(v, cartan, (1, 2))
    rules.update(_commuting_block(("K1", "K1i", "K2", "K2i")))
    rules[("K1", "K1i")] = ((one, ()),)
    rules[("K1i", "K1")] = ((one, ()),)
    rules[("K2", "K2i")] = ((one, ()),)
    rules[("K2i", "K2")] = ((one, ()),)
    # Non-simple root letters: K commutation picks up q^{a_i1 + a_i2} = q.
    for i in (1, 2):
        rules[("E12", f"K{i}")] = ((qi, (f"K{i}", "E12")),)
        rules[("E12", f"K{i}i")] = ((q, (f"K{i}i", "E12")),)
        rules[(f"K{i}", "F12")] = ((qi, ("F12", f"K{i}")),)
        rules[(f"K{i}i", "F12")] = ((q, ("F12", f"K{i}i")),)
    rules[("E1", "E2")] = ((q, ("E2", "E1")), (-sp.I * v, ("E12",)))
    rules[("E1", "E12")] = ((qi, ("E12", "E1")),)
    rules[("E12", "E2")] = ((qi, ("E2", "E12")),)
    rules[("F1", "F2")] = ((q, ("F2", "F1")), (-sp.I * v, ("F12",)))
    rules[("F1", "F12")] = ((qi, ("F12", "F1")),)
    rules[("F12", "F2")] = ((qi, ("F2", "F12")),)
    forbidden = frozenset(
        [("E12", "F1"), ("E12", "F2"), ("E12", "F12"), ("E1", "F12"), ("E2", "F12")]
    )
    return AlgebraPreset("sl3", symbols, rules, v=v, forbidden=forbidden)


def commuting_pair_preset(v: sp.Symbol = V) -> AlgebraPreset:
    """Two nodes with zero Cartan pairing: all cross pairs commute."""
    cartan = {(1, 1): 2, (2, 2): 2, (1, 2): 0, (2, 1): 0}
    symbols = ("F1", "F2", "K1", "K1i", "K2", "K2i", "E1", "E2")
    rules = _node_rules(v, cartan, (1, 2))
    rules.update(_commuting_block(("K1", "K1i", "K2", "K2i")))
    rules[("K1", "K1i")] = ((sp.S.One, ()),)
    rules[("K1i", "K1")] = ((sp.S.One, ()),)
    rules[("K2", "K2i")] = ((sp.S.One, ()),)
    rules[("K2i", "K2")] = ((sp.S.One, ()),)
    rules[("F2", "F1")] = ((sp.S.One, ("F1", "F2")),)
    rules[("E2", "E1")] = ((sp.S.One, ("E1", "E2")),)
    return AlgebraPreset("commuting_pair", symbols, rules, v=v)


def qweyl_pair_preset(v: sp.Symbol = V) -> AlgebraPreset:
    """Two letters with u*v = q^2 * v*u, normal order u before v."""
    symbols = ("u", "v")
    rules = {("v", "u"): ((qpow(-2, v), ("u", "v")),)}
    return AlgebraPreset("qweyl_pair", symbols, rules, v=v)


def nonsimple_root_poly(preset: AlgebraPreset, kind: str) -> NCPoly:
    """The non-simple root letter expressed through simple generators:
    E12 = -i (q^{1/2} E2 E1 - q^{-1/2} E1 E2), likewise for F."""
    if kind not in ("E", "F"):
        raise ValueError("kind must be 'E' or 'F'")
    v = preset.v
    return NCPoly(
        preset,
        {
            (f"{kind}2", f"{kind}1"): -sp.I * v,
            (f"{kind}1", f"{kind}2"): sp.I / v,
        },
    )


def divided_power(preset: AlgebraPreset, name: str, n: int) -> NCPoly:
    """g^n scaled by prod(q - q^{-1}) / prod(q^k - q^{-k}), k = 1..n."""
    if n < 0:
        raise ValueError("divided power needs n >= 0")
    v = preset.v
    coeff = sp.S.One
    for k in range(1, n + 1):
        coeff *= (qpow(1, v) - qpow(-1, v)) / (qpow(k, v) - qpow(-k, v))
    return NCPoly(preset, {tuple([name] * n): canon(coeff)})


# ---------------------------------------------------------------- tensors
class NCTensor:
    """Linear combination of tensor words (tuples of words, fixed arity)."""

    __slots__ = ("preset", "arity", "terms")

    def __init__(
        self,
        preset: AlgebraPreset,
        arity: int,
        terms: Mapping[tuple[Word, ...], sp.Expr] | None = None,
    ):
        self.preset = preset
        self.arity = arity
        self.terms: dict[tuple[Word, ...], sp.Expr] = {}
        if terms:
            for tw, c in terms.items():
                if len(tw) != arity:
                    raise ValueError("tensor word arity mismatch")
                if c != 0:
                    self.terms[tuple(tuple(w) for w in tw)] = sp.sympify(c)

    @classmethod
    def one(cls, preset: AlgebraPreset, arity: int) -> "NCTensor":
        return cls(preset, arity, {tuple(() for _ in range(arity)): sp.S.One})

    def __add__(self, other: "NCTensor") -> "NCTensor":
        out = dict(self.terms)
        for tw, c in other.terms.items():
            out[tw] = out.get(tw, sp.S.Zero) + c
        return NCTensor(self.preset, self.arity, out)

    def __sub__(self, other: "NCTensor") -> "NCTensor":
        return self + (other * sp.S.NegativeOne)

    def __mul__(self, other: "NCTensor | sp.Expr | int") -> "NCTensor":
        if isinstance(other, NCTensor):
            out: dict[tuple[Word, ...], sp.Expr] = {}
            for tw1, c1 in self.terms.items():
                for tw2, c2 in other.terms.items():
                    tw = tuple(w1 + w2 for w1, w2 in zip(tw1, tw2))
                    out[tw] = out.get(tw, sp.S.Zero) + c1 * c2
            return NCTensor(self.preset, self.arity, out)
        coeff = sp.sympify(other)
        return NCTensor(
            self.preset, self.arity, {tw: c * coeff for tw, c in self.terms.items()}
        )

    def __rmul__(self, other: "sp.Expr | int") -> "NCTensor":
        return self * other

    def normal_order(self) -> "NCTensor":
        """Normal order every tensor leg independently."""
        out: dict[tuple[Word, ...], sp.Expr] = {}
        for tw, c in self.terms.items():
            pieces: list[tuple[tuple[Word, ...], sp.Expr]] = [((), c)]
            for leg_word in tw:
                nf = NCPoly(self.preset, {leg_word: sp.S.One}).normal_order()
                pieces = [
                    (prefix + (w,), cc * c2)
                    for prefix, cc in pieces
                    for w, c2 in nf.terms.items()
                ]
            for full, cc in pieces:
                out[full] = out.get(full, sp.S.Zero) + cc
        cleaned = {tw: canon(c) for tw, c in out.items()}
        return NCTensor(
            self.preset, self.arity, {tw: c for tw, c in cleaned.items() if c != 0}
        )

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.terms.values())

    def equals(self, other: "NCTensor") -> bool:
        return (self - other).normal_order().is_zero()


_COPRODUCT_SHAPE = {
    # generator suffix -> list of (left letters, right letters) with coeff 1
    "E": [(("E",), ()), (("Ki",), ("E",))],
    "F": [((), ("F",)), (("F",), ("K",))],
    "K": [(("K",), ("K",))],
    "Ki": [(("Ki",), ("Ki",))],
}


def _coproduct_letter(preset: AlgebraPreset, g: str) -> NCTensor:
    if g.startswith("K"):
        node = g[1:].rstrip("i")
        kind = "Ki" if g.endswith("i") else "K"
    elif g[0] in ("E", "F") and g[1:] in ("1", "2"):
        node, kind = g[1:], g[0]
    else:
        raise ValueError(f"coproduct is not defined on {g!r}")
    terms: dict[tuple[Word, ...], sp.Expr] = {}
    for left, right in _COPRODUCT_SHAPE[kind]:
        lw = tuple(f"{s[0]}{node}{'i' if s.endswith('i') else ''}" for s in left)
        rw = tuple(f"{s[0]}{node}{'i' if s.endswith('i') else ''}" for s in right)
        terms[(lw, rw)] = terms.get((lw, rw), sp.S.Zero) + sp.S.One
    return NCTensor(preset, 2, terms)


def coproduct(x: NCPoly) -> NCTensor:
    """Standard coproduct, extended multiplicatively over words."""
    out = NCTensor(x.preset, 2)
    for word, c in x.terms.items():
        acc = NCTensor.one(x.preset, 2)
        for g in word:
            acc = acc * _coproduct_letter(x.preset, g)
        out = out + acc * c
    return out


def coproduct_on_leg(t: NCTensor, leg: int) -> NCTensor:
    """Apply the coproduct to one tensor leg, raising the arity by one."""
    out = NCTensor(t.preset, t.arity + 1)
    for tw, c in t.terms.items():
        inner = coproduct(NCPoly(t.preset, {tw[leg]: sp.S.One}))
        for (lw, rw), c2 in inner.terms.items():
            new_tw = tw[:leg] + (lw, rw) + tw[leg + 1:]
            out.terms[new_tw] = out.terms.get(new_tw, sp.S.Zero) + c * c2
    return out
