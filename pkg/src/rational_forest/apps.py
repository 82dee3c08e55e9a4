"""Applications of the tree machinery.

Fibonacci numbers fall out of the all-ones continued fraction: the n-th
term is the numerator of [0, 1, 1, ..., 1] with n ones, which is also the
numerator of the rightmost vertex of s-level n-1.

The calculator synthesizer solves the classic broken-calculator puzzle: a
display starting at 0 and only the six keys sin, cos, tan, arcsin, arccos,
arctan must produce an arbitrary positive rational q.  Every reachable
display value has the form sqrt(r) for rational r, and the two identities

    sin(arctan(sqrt(a/b))) = sqrt(a/(a+b))
    cos(arctan(sqrt(a/b))) = sqrt(b/(a+b))

are exactly the child steps of the s tree.  Walking the tree down to q**2
therefore spells out a key sequence, and an exact rational simulator (no
floating point) replays it to certify the result.
"""

import enum
import math
from typing import NamedTuple, Optional, Union

from .locate import s_locate
from .rational import ONE, Rational, make_rational
from .contfrac import cf_eval


def fibonacci(n: int) -> int:
    """n-th Fibonacci number, F(1) = F(2) = 1, as a continued-fraction numerator."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return cf_eval((0,) + (1,) * n).num


class Button(enum.Enum):
    SIN = "sin"
    COS = "cos"
    TAN = "tan"
    ARCSIN = "arcsin"
    ARCCOS = "arccos"
    ARCTAN = "arctan"


ButtonSequence = list[Button]


class SqrtState(NamedTuple):
    """Exact calculator display: sqrt(radicand), or an angle if pending is set.

    pending marks that the last key was an inverse function, i.e. the
    display currently shows pending(sqrt(radicand)).
    """

    radicand: Rational
    pending: Optional[Button] = None


class CalculatorDomainError(ValueError):
    """A key was pressed outside its exact-rewrite domain."""


_START = SqrtState(Rational(0, 1))


def press(state: SqrtState, key: Button) -> SqrtState:
    """Apply one key under the exact rewrite table.

    Only compositions whose result is again sqrt(rational) are supported;
    anything else (which would leave the rational world) raises.
    """
    r = state.radicand
    if state.pending is None:
        if key is Button.ARCTAN:
            return SqrtState(r, Button.ARCTAN)
        if key in (Button.ARCSIN, Button.ARCCOS):
            if r.num > r.den:
                raise CalculatorDomainError(f"{key.value} needs a display <= 1, got sqrt({r})")
            return SqrtState(r, key)
        if key is Button.COS and r.num == 0:
            return SqrtState(ONE)
        raise CalculatorDomainError(f"{key.value} on display sqrt({r}) leaves exact form")
    if state.pending is Button.ARCTAN:
        # display is arctan(sqrt(p/q)): sin -> sqrt(p/(p+q)), cos -> sqrt(q/(p+q))
        if key is Button.SIN:
            return SqrtState(make_rational(r.num, r.num + r.den))
        if key is Button.COS:
            return SqrtState(make_rational(r.den, r.num + r.den))
    elif state.pending is Button.ARCCOS:
        # display is arccos(sqrt(p/q)), p <= q: tan -> sqrt((q-p)/p), sin -> sqrt((q-p)/q)
        if key is Button.TAN:
            if r.num == 0:
                raise CalculatorDomainError("tan of arccos(0) is undefined")
            return SqrtState(make_rational(r.den - r.num, r.num))
        if key is Button.SIN:
            return SqrtState(make_rational(r.den - r.num, r.den))
    raise CalculatorDomainError(
        f"{key.value} after {state.pending.value} is outside the rewrite table"
    )


def trace_buttons(seq: ButtonSequence) -> list[SqrtState]:
    """States after each key, starting from display 0."""
    states = []
    state = _START
    for key in seq:
        state = press(state, key)
        states.append(state)
    return states


def _exact_sqrt(r: Rational) -> Optional[Rational]:
    a, b = math.isqrt(r.num), math.isqrt(r.den)
    if a * a == r.num and b * b == r.den:
        return Rational(a, b)
    return None


def simulate_buttons(seq: ButtonSequence) -> Union[Rational, SqrtState]:
    """Exact final display of a key sequence.

    Returns a Rational when the final display is one (the radicand is a
    perfect square and no inverse function is pending); otherwise returns
    the raw SqrtState.
    """
    state = _START if not seq else trace_buttons(seq)[-1]
    if state.pending is None:
        value = _exact_sqrt(state.radicand)
        if value is not None:
            return value
    return state


def buttons_for(q: Rational) -> ButtonSequence:
    """Key sequence whose exact simulation ends at q, for any finite q > 0.

    cos turns the initial 0 into 1; one arctan+sin pair takes the forced
    root step down to sqrt(1/2); after that each s-path bit of q**2 maps to
    arctan+sin (left) or arctan+cos (right).  Values above 1 are built as
    the reciprocal followed by the inverting tail arctan sin arccos tan.
    """
    if q.is_pseudo:
        raise ValueError(f"{q} is not a positive rational")
    if q == ONE:
        return [Button.COS]
    if q.num > q.den:
        return buttons_for(q.reciprocal()) + [
            Button.ARCTAN,
            Button.SIN,
            Button.ARCCOS,
            Button.TAN,
        ]
    seq = [Button.COS, Button.ARCTAN, Button.SIN]
    square = Rational(q.num * q.num, q.den * q.den)
    for bit in s_locate(square).path:
        seq.append(Button.ARCTAN)
        seq.append(Button.SIN if bit == "0" else Button.COS)
    return seq


def replay_float(seq: ButtonSequence) -> float:
    """Double-precision replay, for display only; never used to verify."""
    fns = {
        Button.SIN: math.sin,
        Button.COS: math.cos,
        Button.TAN: math.tan,
        Button.ARCSIN: math.asin,
        Button.ARCCOS: math.acos,
        Button.ARCTAN: math.atan,
    }
    display = 0.0
    for key in seq:
        display = fns[key](display)
    return display
