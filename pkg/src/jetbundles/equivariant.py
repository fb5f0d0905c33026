"""Torus weights of jet fibers at the standard fixed point.

The diagonal torus of GL(N+1) acts on P^N; at the fixed point
[1:0:...:0] every equivariant sheaf used here has a fiber that is a
finite-dimensional torus representation, i.e. a multiset of characters.
Characters are integer vectors in the basis eps_0..eps_N, recorded
modulo the overall scaling direction by subtracting the first
component, so every stored weight starts with 0.

Building blocks: L is the fiber of the tautological line (character
eps_0), V the standard (N+1)-dimensional representation with weights
eps_i, and the fiber of O(d) is Sym^d(L*).  On the line the residual
torus is the standard SL2 one and a weight (0, w) has label -w, so dt
(character eps_0 - eps_1) gets label 2.

Closed-form fiber predictions are compared against an independent
route: on the line, an assembly of sym powers with containment-checked
multiset subtraction coming from restriction of global sections; in
higher dimension, the layer-by-layer sum of sym powers of the
cotangent space twisted by the line-bundle fiber.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Union

from .cohomology import jet_rank
from .errors import UnsupportedCaseError
from .jets import JetSpec, Side


@dataclass(frozen=True)
class Weight:
    """Torus character, canonicalized so the first component is 0."""

    components: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("weight needs at least one component")
        base = self.components[0]
        if base != 0:
            object.__setattr__(
                self,
                "components",
                tuple(c - base for c in self.components),
            )

    @classmethod
    def of(cls, components: Iterable[int]) -> "Weight":
        return cls(tuple(int(c) for c in components))

    @classmethod
    def zero(cls, N: int) -> "Weight":
        return cls((0,) * (N + 1))

    @classmethod
    def eps(cls, i: int, N: int) -> "Weight":
        """Basis character eps_i on the torus of GL(N+1)."""
        return cls(tuple(1 if j == i else 0 for j in range(N + 1)))

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.components) != len(other.components):
            raise ValueError("weights of different tori")
        return Weight(
            tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.components))

    def scaled(self, m: int) -> "Weight":
        return Weight(tuple(m * c for c in self.components))

    @property
    def sl2_label(self) -> int:
        """Weight for the standard SL2 torus; only meaningful on P^1."""
        if len(self.components) != 2:
            raise ValueError("SL2 labels only exist for two components")
        return self.components[0] - self.components[1]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class WeightModule:
    """Finite multiset of weights: a torus representation up to iso."""

    counts: tuple[tuple[Weight, int], ...] = field(default=())

    @classmethod
    def of(cls, weights: Iterable[Weight]) -> "WeightModule":
        return cls._from_counter(Counter(weights))

    @classmethod
    def zero(cls) -> "WeightModule":
        return cls(())

    @classmethod
    def trivial(cls, N: int) -> "WeightModule":
        return cls.of([Weight.zero(N)])

    @classmethod
    def _from_counter(cls, counter: Counter) -> "WeightModule":
        items = tuple(
            sorted(
                ((w, c) for w, c in counter.items() if c),
                key=lambda wc: wc[0].components,
            )
        )
        return cls(items)

    def _counter(self) -> Counter:
        return Counter(dict(self.counts))

    @property
    def dimension(self) -> int:
        return sum(c for _, c in self.counts)

    def is_zero(self) -> bool:
        return not self.counts

    def weights(self) -> Iterator[Weight]:
        for w, c in self.counts:
            for _ in range(c):
                yield w

    def __add__(self, other: "WeightModule") -> "WeightModule":
        merged = self._counter()
        merged.update(other._counter())
        return WeightModule._from_counter(merged)

    def tensor(self, other: "WeightModule") -> "WeightModule":
        out: Counter = Counter()
        for w1, c1 in self.counts:
            for w2, c2 in other.counts:
                out[w1 + w2] += c1 * c2
        return WeightModule._from_counter(out)

    def dual(self) -> "WeightModule":
        return WeightModule._from_counter(
            Counter({-w: c for w, c in self.counts})
        )

    def subtract(self, other: "WeightModule") -> "WeightModule":
        """Multiset difference; raises unless other is contained in self."""
        remaining = self._counter()
        for w, c in other.counts:
            if remaining.get(w, 0) < c:
                raise ValueError(
                    f"cannot remove {c} copies of weight {w}: not contained"
                )
            remaining[w] -= c
        return WeightModule._from_counter(remaining)

    def sl2_labels(self) -> list[int]:
        """All SL2 labels with multiplicity, descending; P^1 only."""
        return sorted((w.sl2_label for w in self.weights()), reverse=True)

    def __str__(self) -> str:
        if not self.counts:
            return "0"
        parts = []
        for w, c in self.counts:
            parts.append(str(w) if c == 1 else f"{w}*{c}")
        return " + ".join(parts)


# ---------------------------------------------------------------------
# symbolic expressions for fibers


@dataclass(frozen=True)
class SymL:
    """Sym^a of the tautological line L; negative a flips to the dual."""

    a: int
    dualized: bool = False

    def __post_init__(self) -> None:
        if self.a < 0:
            object.__setattr__(self, "a", -self.a)
            object.__setattr__(self, "dualized", not self.dualized)

    def __str__(self) -> str:
        base = "L*" if self.dualized else "L"
        return f"Sym^{self.a}({base})"


@dataclass(frozen=True)
class SymV:
    """Sym^b of the standard (N+1)-dimensional representation."""

    b: int
    dualized: bool = False

    def __str__(self) -> str:
        base = "V*" if self.dualized else "V"
        return f"Sym^{self.b}({base})"


@dataclass(frozen=True)
class TensorExpr:
    factors: tuple["ModuleExpr", ...]

    def __str__(self) -> str:
        return " (x) ".join(_wrap(f) for f in self.factors)


@dataclass(frozen=True)
class SumExpr:
    summands: tuple["ModuleExpr", ...]

    def __str__(self) -> str:
        return " (+) ".join(str(s) for s in self.summands)


ModuleExpr = Union[SymL, SymV, TensorExpr, SumExpr]


def _wrap(expr: ModuleExpr) -> str:
    text = str(expr)
    return f"({text})" if isinstance(expr, SumExpr) else text


def tensor(*factors: ModuleExpr) -> TensorExpr:
    return TensorExpr(tuple(factors))


def direct_sum(*summands: ModuleExpr) -> SumExpr:
    return SumExpr(tuple(summands))


def _sym_standard(b: int, N: int, dualized: bool) -> WeightModule:
    if b < 0:
        raise ValueError(f"Sym^{b} of the standard representation is undefined")
    eps = [Weight.eps(i, N) for i in range(N + 1)]
    weights = []
    for combo in combinations_with_replacement(range(N + 1), b):
        total = Weight.zero(N)
        for i in combo:
            total = total + eps[i]
        weights.append(-total if dualized else total)
    return WeightModule.of(weights)


def realize(expr: ModuleExpr, N: int) -> WeightModule:
    """Weight multiset of an expression at the standard fixed point."""
    if isinstance(expr, SymL):
        a = -expr.a if expr.dualized else expr.a
        return WeightModule.of([Weight.eps(0, N).scaled(a)])
    if isinstance(expr, SymV):
        return _sym_standard(expr.b, N, expr.dualized)
    if isinstance(expr, TensorExpr):
        out = WeightModule.trivial(N)
        for factor in expr.factors:
            out = out.tensor(realize(factor, N))
        return out
    if isinstance(expr, SumExpr):
        out = WeightModule.zero()
        for summand in expr.summands:
            out = out + realize(summand, N)
        return out
    raise TypeError(f"not a module expression: {expr!r}")


# ---------------------------------------------------------------------
# jet fiber predictions and the independent weight routes


def predicted_fiber(spec: JetSpec) -> ModuleExpr:
    """Closed-form fiber of the order-k jet bundle of O(d) at the fixed point.

    On the line both structures are covered for every twist; in higher
    dimension only the left structure below the critical order (k < d)
    has a classified closed form.
    """
    N, k, d, side = spec.N, spec.k, spec.d, spec.side
    if N == 1:
        if side is Side.LEFT:
            if k <= d:
                return tensor(SymL(d - k, dualized=True), SymV(k, dualized=True))
            if d < 0:
                return tensor(SymL(k - d), SymV(k))
            return direct_sum(
                SymV(d, dualized=True),
                tensor(SymL(k + 1), SymV(k - d - 1)),
            )
        if k == 0:
            return SymL(d, dualized=True)
        if d < 0:
            return direct_sum(
                SymL(-d),
                tensor(SymL(k - d + 1), SymV(k - 1)),
            )
        return direct_sum(
            SymL(d, dualized=True),
            tensor(SymL(d - k - 1, dualized=True), SymV(k - 1)),
        )
    if side is Side.LEFT and 0 <= k < d:
        return tensor(SymL(d - k, dualized=True), SymV(k, dualized=True))
    raise UnsupportedCaseError(
        f"no classified fiber for N={N}, k={k}, d={d}, side={side}"
    )


def _cotangent_fiber(N: int) -> WeightModule:
    """Cotangent space at the fixed point: weights eps_0 - eps_i."""
    e0 = Weight.eps(0, N)
    return WeightModule.of(
        [e0 + (-Weight.eps(i, N)) for i in range(1, N + 1)]
    )


def line_cohomology_weights(d: int) -> tuple[WeightModule, WeightModule]:
    """H^0 and H^1 of O(d) on the line as SL2-torus modules.

    Sections are degree-d forms, so H^0 = Sym^d(V*); dually
    H^1 = Sym^(-d-2)(V).  Out-of-range sym powers are the zero module.
    """
    h0 = _sym_standard(d, 1, dualized=True) if d >= 0 else WeightModule.zero()
    h1 = (
        _sym_standard(-d - 2, 1, dualized=False)
        if -d - 2 >= 0
        else WeightModule.zero()
    )
    return h0, h1


def ideal_cohomology_weights(k: int, d: int) -> tuple[WeightModule, WeightModule]:
    """H^0 and H^1 of the order-(k+1) vanishing ideal inside O(d) on P^1.

    Vanishing to order k+1 at the fixed point twists by the (k+1)-st
    power of the tautological character, so each group is
    Sym^(k+1)(L) tensor the corresponding group of O(d-k-1).
    """
    factor = WeightModule.of([Weight.eps(0, 1).scaled(k + 1)])
    h0, h1 = line_cohomology_weights(d - k - 1)
    return factor.tensor(h0), factor.tensor(h1)


def _sym_module(module: WeightModule, j: int, N: int) -> WeightModule:
    """Sym^j of a multiset of weights (all multiplicity one or more)."""
    base = list(module.weights())
    weights = []
    for combo in combinations_with_replacement(range(len(base)), j):
        total = Weight.zero(N)
        for i in combo:
            total = total + base[i]
        weights.append(total)
    return WeightModule.of(weights)


def fiber_oracle(spec: JetSpec) -> WeightModule:
    """Independent weight computation to test predictions against.

    Line, left structure: assembled from sym powers of the standard
    representation through containment-checked multiset subtraction,
    following how jets of global sections fill (or fail to fill) the
    fiber.  Line, right structure: the twist factors out, leaving a
    trivial summand plus one sym block.  Higher dimension, left
    structure: sum of cotangent sym layers twisted by the fiber of
    O(d); the filtration is equivariant, so the layer sum equals the
    fiber as a torus representation.
    """
    N, k, d, side = spec.N, spec.k, spec.d, spec.side
    if N == 1:
        if side is Side.LEFT:
            line_h0, line_h1 = line_cohomology_weights(d)
            ideal_h0, ideal_h1 = ideal_cohomology_weights(k, d)
            # six-term sequence of the ideal inclusion: the fiber is the
            # cokernel of H^0 plus the kernel of the H^1 map, and each
            # subtraction must be an honest submultiset
            return line_h0.subtract(ideal_h0) + ideal_h1.subtract(line_h1)
        twist = realize(SymL(d, dualized=True), 1)
        tail = WeightModule.trivial(1)
        if k >= 1:
            tail = tail + realize(SymL(k + 1), 1).tensor(
                _sym_standard(k - 1, 1, dualized=False)
            )
        return twist.tensor(tail)
    if side is not Side.LEFT:
        raise UnsupportedCaseError(
            f"no independent fiber route for N={N}, side={side}"
        )
    cotangent = _cotangent_fiber(N)
    twist = realize(SymL(d, dualized=True), N)
    out = WeightModule.zero()
    for j in range(k + 1):
        out = out + _sym_module(cotangent, j, N).tensor(twist)
    return out


@dataclass(frozen=True)
class FiberReport:
    """Comparison of the closed-form fiber against the independent route."""

    spec: JetSpec
    expression: ModuleExpr
    predicted: WeightModule
    oracle: WeightModule
    expected_dimension: int

    @property
    def weights_match(self) -> bool:
        return self.predicted == self.oracle

    @property
    def dimension_ok(self) -> bool:
        return (
            self.predicted.dimension == self.expected_dimension
            and self.oracle.dimension == self.expected_dimension
        )

    @property
    def match(self) -> bool:
        return self.weights_match and self.dimension_ok

    def __str__(self) -> str:
        status = "match" if self.match else "MISMATCH"
        return (
            f"N={self.spec.N} k={self.spec.k} d={self.spec.d} "
            f"side={self.spec.side}: {self.expression} [{status}]"
        )


def verify_fiber(spec: JetSpec) -> FiberReport:
    expr = predicted_fiber(spec)
    return FiberReport(
        spec=spec,
        expression=expr,
        predicted=realize(expr, spec.N),
        oracle=fiber_oracle(spec),
        expected_dimension=jet_rank(spec.N, spec.k, 1),
    )
