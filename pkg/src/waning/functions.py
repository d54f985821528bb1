"""Waning functions and the calculus around them.

A waning function is a non-increasing map from the extended naturals to
themselves that is either constantly OMEGA or strictly decreasing at every
finite nonzero value until it reaches 0.  ``WaningFn`` stores the canonical
finite encoding; ``GenFn`` stores an arbitrary eventually-constant function,
the input of ``closure``, which computes the greatest waning function
pointwise below it at every finite index.

The order ``preceq`` is reversed-pointwise: ``f preceq g`` iff ``f(i) >= g(i)``
everywhere.  Under it the constant-OMEGA function is the bottom element, the
constant-0 function the top, pointwise minima are joins and pointwise maxima
are meets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, NotWaning, OmegaEntries
from .extnat import OMEGA, ExtNat, check_extnat, is_omega


@dataclass(frozen=True)
class GenFn:
    """Eventually-constant function on the extended naturals.

    ``prefix`` gives the first values, ``tail`` the value at every larger
    finite index, and ``omega`` the value at the top point.
    """

    prefix: tuple[ExtNat, ...] = ()
    tail: ExtNat = 0
    omega: ExtNat = 0

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(check_extnat(v) for v in self.prefix))
        check_extnat(self.tail)
        check_extnat(self.omega)

    def __call__(self, i: ExtNat) -> ExtNat:
        if is_omega(i):
            return self.omega
        if i < 0:
            raise DomainError(f"negative index {i}")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.tail


@dataclass(frozen=True)
class WaningFn:
    """Canonical form of a waning function.

    The constant-OMEGA function is the single instance with ``const_omega``
    set.  Every other waning function is OMEGA on the first ``omega_prefix``
    indices, runs through the strictly decreasing positive ``drops``, and is
    0 from there on, including at the top point.
    """

    omega_prefix: int = 0
    drops: tuple[int, ...] = ()
    const_omega: bool = False

    def __post_init__(self):
        object.__setattr__(self, "drops", tuple(int(d) for d in self.drops))
        if self.const_omega:
            if self.omega_prefix or self.drops:
                raise DomainError("constant-omega form carries no finite data")
            return
        if self.omega_prefix < 0:
            raise DomainError("negative omega prefix")
        if self.drops and self.drops[-1] < 1:
            raise DomainError(f"drops must stay positive: {self.drops}")
        for a, b in zip(self.drops, self.drops[1:]):
            if b >= a:
                raise DomainError(f"drops not strictly decreasing: {self.drops}")

    @classmethod
    def from_values(cls, values: Iterable[ExtNat]) -> "WaningFn":
        """Canonical form from leading values (0 from there on).

        Raises NotWaning when the values do not describe a waning function.
        """
        values = list(values)
        k = 0
        while k < len(values) and is_omega(values[k]):
            k += 1
        drops: list[int] = []
        seen_zero = False
        for v in values[k:]:
            if is_omega(v):
                raise NotWaning(values)
            if v == 0:
                seen_zero = True
            elif seen_zero:
                raise NotWaning(values)
            else:
                drops.append(v)
        if any(b >= a for a, b in zip(drops, drops[1:])):
            raise NotWaning(values)
        return cls(omega_prefix=k, drops=tuple(drops))

    def __call__(self, i: ExtNat) -> ExtNat:
        if self.const_omega:
            return OMEGA
        if is_omega(i):
            return 0
        if i < 0:
            raise DomainError(f"negative index {i}")
        if i < self.omega_prefix:
            return OMEGA
        j = i - self.omega_prefix
        return self.drops[j] if j < len(self.drops) else 0

    @property
    def support_end(self) -> int:
        """First index from which the function is constantly 0."""
        if self.const_omega:
            raise OmegaEntries("constant-omega function never reaches 0")
        return self.omega_prefix + len(self.drops)

    def as_genfn(self) -> GenFn:
        if self.const_omega:
            return GenFn(prefix=(), tail=OMEGA, omega=OMEGA)
        values = tuple(self(i) for i in range(self.support_end))
        return GenFn(prefix=values, tail=0, omega=0)

    def sort_key(self) -> tuple:
        return (1 if self.const_omega else 0, self.omega_prefix, self.drops)

    def __repr__(self) -> str:
        if self.const_omega:
            return "WaningFn(OMEGA)"
        head = ["ω"] * self.omega_prefix + [str(d) for d in self.drops]
        head.append("0…")
        return f"WaningFn({','.join(head)})"


CONST_OMEGA = WaningFn(const_omega=True)
CONST_ZERO = WaningFn()


def is_waning(f: GenFn) -> bool:
    """Decide the waning predicate for an eventually-constant function."""
    values = list(f.prefix) + [f.tail]
    if all(is_omega(v) for v in values):
        # constant OMEGA counts only when it extends to the top point
        return is_omega(f.omega)
    for a, b in zip(values, values[1:]):
        if b > a:
            return False
        if not is_omega(a) and a != 0 and b >= a:
            return False
    if f.tail != 0:
        # a finite nonzero tail repeats forever; an omega tail rose above
        # some finite value and was caught by the pairwise checks
        return False
    return f.omega == 0


def closure(f: GenFn) -> WaningFn:
    """Greatest waning function pointwise below ``f`` at every finite index.

    Step rules: start at ``f(0)``; while the running value is nonzero the
    next value is ``min(f(i+1), value - 1)``; once 0 is reached stay at 0.
    An everywhere-OMEGA run yields the constant-OMEGA function.
    """
    value = f(0)
    values = [value]
    i = 0
    while value != 0:
        if is_omega(value) and i >= len(f.prefix) and is_omega(f.tail):
            return CONST_OMEGA
        value = min(f(i + 1), value - 1)
        values.append(value)
        i += 1
    return WaningFn.from_values(values)


def preceq(f: WaningFn, g: WaningFn) -> bool:
    """Reversed pointwise order: f(i) >= g(i) at every index including the top."""
    if f.const_omega:
        return True
    if g.const_omega:
        return False
    end = max(f.support_end, g.support_end)
    return all(f(i) >= g(i) for i in range(end))


def join(f: WaningFn, g: WaningFn) -> WaningFn:
    """Pointwise minimum; the least upper bound of f and g under preceq."""
    if f.const_omega:
        return g
    if g.const_omega:
        return f
    end = max(f.support_end, g.support_end)
    return WaningFn.from_values([min(f(i), g(i)) for i in range(end)])


def meet_if_waning(f: WaningFn, g: WaningFn) -> WaningFn:
    """Pointwise maximum, with the waning predicate asserted on the result.

    No violating pair is known; ``NotWaning`` reports one if it ever appears.
    """
    if f.const_omega or g.const_omega:
        return CONST_OMEGA
    end = max(f.support_end, g.support_end)
    return WaningFn.from_values([max(f(i), g(i)) for i in range(end)])


def enumerate_below(f: WaningFn) -> list[WaningFn]:
    """All waning functions pointwise at most ``f``, for omega-free ``f``.

    Any such function is itself omega-free, so it is a strictly decreasing
    run of positive values bounded by ``f``; the search branches on the value
    chosen at each index.  Results are sorted by canonical form.
    """
    if f.const_omega or f.omega_prefix:
        raise OmegaEntries("enumeration below an omega entry is infinite")
    results: list[WaningFn] = []

    def grow(drops: list[int], i: int) -> None:
        # entering with value 0 at index i pins the function from here on
        results.append(WaningFn(drops=tuple(drops)))
        if i >= f.support_end:
            return
        ceiling = f(i) if not drops else min(f(i), drops[-1] - 1)
        for v in range(ceiling, 0, -1):
            grow(drops + [v], i + 1)

    grow([], 0)
    results.sort(key=WaningFn.sort_key)
    return results


def descending_chain_element(n: int) -> WaningFn:
    """n at index 0 and 0 everywhere else; strictly descending in n."""
    if n < 0:
        raise DomainError(f"negative chain index {n}")
    return CONST_ZERO if n == 0 else WaningFn(drops=(n,))


def staircase(c: int) -> WaningFn:
    """The pointwise-largest omega-free waning function with value c at 0."""
    if c < 0:
        raise DomainError(f"negative start value {c}")
    return WaningFn(drops=tuple(range(c, 0, -1)))


def count_with_first_value_below(c: int) -> int:
    """Number of omega-free waning functions whose value at 0 is at most c."""
    return len(enumerate_below(staircase(c)))
