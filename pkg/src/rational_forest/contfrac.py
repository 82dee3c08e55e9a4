"""Continued fractions of positive rationals, in canonical form.

A continued fraction [a0, a1, ..., ak] denotes a0 + 1/(a1 + 1/(... + 1/ak)).
Canonical form requires a0 >= 0, interior terms >= 1, and the last term >= 2
whenever there is more than one term; under that convention every positive
rational has exactly one expansion.  Positive integers expand to the single
term [n].

The two child-derivation rules below mirror how the fraction trees grow:
stepping to a child edits the term list in place of doing any fraction
arithmetic, which is what makes closed-form vertex location possible.
"""

from .rational import Rational, make_rational

ContinuedFraction = tuple[int, ...]


def _check_terms(terms) -> ContinuedFraction:
    terms = tuple(terms)
    if not terms:
        raise ValueError("empty continued fraction")
    if terms[0] < 0:
        raise ValueError(f"negative leading term in {list(terms)}")
    if any(t < 1 for t in terms[1:]):
        raise ValueError(f"nonpositive interior term in {list(terms)}")
    return terms


def is_canonical(terms: ContinuedFraction) -> bool:
    terms = _check_terms(terms)
    return len(terms) == 1 or terms[-1] >= 2


def cf_expand(q: Rational) -> ContinuedFraction:
    """Canonical expansion of a finite positive rational.

    Euclidean division; a trailing 1 (which only arises from non-Euclidean
    sources) merges into the preceding term so the result is canonical.
    """
    if q.num < 1 or q.den < 1:
        raise ValueError(f"cannot expand {q}, need a finite positive rational")
    p, d = q.num, q.den
    terms = []
    while d:
        a, r = divmod(p, d)
        terms.append(a)
        p, d = d, r
    if len(terms) > 1 and terms[-1] == 1:
        terms.pop()
        terms[-1] += 1
    return tuple(terms)


def cf_eval(terms) -> Rational:
    """Evaluate a term list to an exact reduced rational.

    Canonical form is not required: trailing-1 variants such as [2, 1, 1, 2, 1]
    evaluate like their canonical twin [2, 1, 1, 3].  The value must be a
    positive rational, so the bare [0] is rejected.
    """
    terms = _check_terms(terms)
    if terms == (0,):
        raise ValueError("[0] does not denote a positive rational")
    p, q = terms[-1], 1
    for a in reversed(terms[:-1]):
        p, q = a * p + q, p
    # successive convergents are coprime, so p/q is already reduced
    return make_rational(p, q)


def _check_proper(terms) -> ContinuedFraction:
    terms = _check_terms(terms)
    if terms[0] != 0 or len(terms) < 2:
        raise ValueError(f"{list(terms)} is not a proper fraction in (0,1)")
    if terms[-1] < 2:
        raise ValueError(f"{list(terms)} is not canonical (last term must be >= 2)")
    return terms


def s_children_cf(cf) -> tuple[ContinuedFraction, ContinuedFraction]:
    """Children of a vertex of the sibling-sum tree, on term lists.

    For a vertex m/n = [0, a1, ..., ak] the left child m/(m+n) is
    [0, a1+1, a2, ..., ak] and the right child n/(m+n) is [0, 1, a1, ..., ak].
    """
    cf = _check_proper(cf)
    left = (0, cf[1] + 1) + cf[2:]
    right = (0, 1) + cf[1:]
    return left, right


def sc_children_cf(cf) -> tuple[ContinuedFraction, ContinuedFraction]:
    """Children of an SC-tree vertex in (0,1), on term lists.

    The left child increments the last term; the right child decrements it
    and appends a fresh 2.  Both outputs stay canonical because the last
    term of a canonical input is at least 2.
    """
    cf = _check_proper(cf)
    left = cf[:-1] + (cf[-1] + 1,)
    right = cf[:-1] + (cf[-1] - 1, 2)
    return left, right


def parse_cf(text: str) -> ContinuedFraction:
    """Parse the textual form "[a0,a1,...,ak]"."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed continued fraction {text!r}")
    body = text[1:-1].strip()
    if not body:
        raise ValueError("empty continued fraction")
    try:
        terms = tuple(int(part.strip()) for part in body.split(","))
    except ValueError:
        raise ValueError(f"malformed continued fraction {text!r}") from None
    return _check_terms(terms)


def format_cf(terms: ContinuedFraction) -> str:
    return "[" + ",".join(str(t) for t in terms) + "]"
