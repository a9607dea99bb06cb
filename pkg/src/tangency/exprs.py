"""Surface syntax for characteristic-number queries.

An expression is one bracketed class group followed by constraint monomial
factors, e.g.::

    [T1 T1 T2] * y1^2 * yd^31
    [A1F T1] . y1 . yd^8
    [A1A1] * yd^12

Grammar (whitespace-insensitive)::

    expr        := class_group (('*' | '.') monomial)*
    class_group := '[' atom+ ']'
    atom        := 'T' INT | 'A1F' | 'A1L' | 'PA1' '(' INT ')'
                 | 'A2F' | 'A2L' | 'A1A1' | 'PA3' | 'A3F'
    monomial    := ('y1' | 'yd' | 'b' INT | 'a' INT) ('^' INT)?

Parsing produces a :class:`ClassExpr` tree; :func:`evaluate` dispatches it
to the appropriate evaluator at a concrete degree d.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import cusp, multisingular, nodal, tangency
from .ring import RingElem, SpaceSig, integrate

HEAD_ATOMS = {"A1F", "A1L", "A2F", "A2L", "A1A1", "PA3", "A3F"}

# head atom -> (singular marked points of the constraint space, class codimension)
_HEAD_SPACE = {
    None: (0, 0),
    "A1F": (1, 3),
    "A1L": (1, 4),
    "A2F": (1, 4),
    "A2L": (1, 5),
    "A1A1": (2, 8),
    "PA3": (1, 7),
    "A3F": (1, 5),
}


class ParseError(ValueError):
    """Syntax error with the 0-based source offset where it occurred."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class ClassExpr:
    """One class group and an exponent map for the constraint monomial.

    Atoms are tuples: ('T', k), ('PA1', r) or (name,) for the other heads.
    Monomial keys are 'y1', 'yd', ('b', j), ('a', i).
    """

    atoms: tuple
    monomial: tuple  # sorted ((key, exponent), ...) pairs

    def exponents(self) -> dict:
        return dict(self.monomial)


_TOKEN_RE = re.compile(r"\[|\]|\*|\.|\^|\(|\)|[A-Za-z][A-Za-z0-9]*|\d+")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(src, pos)
        if not match:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        tokens.append((match.group(), pos))
        pos = match.end()
    return tokens


_MONO_KEY_ORDER = {"y1": (0, 0), "yd": (1, 0)}


def _mono_sort_key(item):
    key, _ = item
    if isinstance(key, str):
        return _MONO_KEY_ORDER[key]
    return (2 if key[0] == "b" else 3, key[1])


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, len(self.src))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, text: str):
        tok, at = self.take()
        if tok != text:
            raise ParseError(f"expected {text!r}, found {tok!r}", at)

    def parse(self) -> ClassExpr:
        self.expect("[")
        atoms = []
        while True:
            tok, at = self.peek()
            if tok == "]":
                self.take()
                break
            if tok is None:
                raise ParseError("unterminated class group", at)
            atoms.append(self._parse_atom())
        if not atoms:
            raise ParseError("empty class group", self.peek()[1])

        exponents: dict = {}
        while self.peek()[0] is not None:
            tok, at = self.take()
            if tok not in ("*", "."):
                raise ParseError(f"expected '*' or '.', found {tok!r}", at)
            key, exp = self._parse_monomial()
            exponents[key] = exponents.get(key, 0) + exp
        monomial = tuple(sorted(exponents.items(), key=_mono_sort_key))
        return ClassExpr(tuple(atoms), monomial)

    def _parse_atom(self):
        tok, at = self.take()
        if tok == "PA1":
            self.expect("(")
            num, nat = self.take()
            if num is None or not num.isdigit():
                raise ParseError(f"expected a tangency order, found {num!r}", nat)
            self.expect(")")
            return ("PA1", int(num))
        if tok in HEAD_ATOMS:
            return (tok,)
        if tok and re.fullmatch(r"T\d+", tok):
            return ("T", int(tok[1:]))
        raise ParseError(f"unknown class atom {tok!r}", at)

    def _parse_monomial(self):
        tok, at = self.take()
        if tok in ("y1", "yd"):
            key = tok
        elif tok and re.fullmatch(r"[ba]\d+", tok):
            key = (tok[0], int(tok[1:]))
        else:
            raise ParseError(f"unknown variable {tok!r}", at)
        exp = 1
        if self.peek()[0] == "^":
            self.take()
            num, nat = self.take()
            if num is None or not num.isdigit():
                raise ParseError(f"expected an exponent, found {num!r}", nat)
            exp = int(num)
        return key, exp


def parse(src: str) -> ClassExpr:
    """Parse an expression; raises ParseError with a source offset."""
    parser = _Parser(src)
    expr = parser.parse()
    return expr


def to_string(expr: ClassExpr) -> str:
    """Canonical printing; parse(to_string(e)) == e."""
    atoms = []
    for atom in expr.atoms:
        if atom[0] == "T":
            atoms.append(f"T{atom[1]}")
        elif atom[0] == "PA1":
            atoms.append(f"PA1({atom[1]})")
        else:
            atoms.append(atom[0])
    parts = [f"[{' '.join(atoms)}]"]
    for key, exp in expr.monomial:
        name = key if isinstance(key, str) else f"{key[0]}{key[1]}"
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " * ".join(parts)


def _split_atoms(expr: ClassExpr):
    heads = [atom for atom in expr.atoms if atom[0] != "T"]
    profile = tuple(atom[1] for atom in expr.atoms if atom[0] == "T")
    if len(heads) > 1:
        raise ValueError(f"at most one singular class per group, got {heads}")
    head = heads[0] if heads else None
    if head is not None and head[0] in ("A1A1", "PA3", "A3F") and profile:
        raise ValueError(f"{head[0]} does not combine with tangency atoms")
    return head, profile


def _build_constraint(expr: ClassExpr, sig: SpaceSig) -> RingElem:
    r = s = 0
    nu = [0] * sig.m
    eps = [0] * sig.n
    for key, exp in expr.monomial:
        if key == "y1":
            r = exp
        elif key == "yd":
            s = exp
        elif key[0] == "b":
            if not 1 <= key[1] <= sig.m:
                raise ValueError(f"b{key[1]} is out of range for this class group")
            nu[key[1] - 1] = exp
        else:
            if not 1 <= key[1] <= sig.n:
                raise ValueError(f"a{key[1]} exceeds the number of tangency atoms")
            eps[key[1] - 1] = exp
    if r > 2 or s > sig.delta or any(e > 2 for e in nu) or any(e > 2 for e in eps):
        raise ValueError("constraint exponent exceeds its nilpotency cap")
    return RingElem.monomial(sig, y1=r, yd=s, b=tuple(nu), a=tuple(eps))


def evaluate(expr: ClassExpr, d: int) -> tangency.CountResult:
    """Evaluate a parsed expression at degree d."""
    head, profile = _split_atoms(expr)
    head_name = head[0] if head else None
    if head_name == "PA1":
        m, codim = 1, 4 + head[1]
    else:
        m, codim = _HEAD_SPACE[head_name]
    sig = SpaceSig(d, m, len(profile))
    c = _build_constraint(expr, sig)

    warnings = []
    expected_deg = sig.dim - codim - sum(k + 2 for k in profile)
    actual_deg = next(iter(c.degrees()))
    if actual_deg != expected_deg:
        warnings.append(
            f"constraint degree {actual_deg} does not match the class "
            f"codimension (expected {expected_deg}); the count is 0"
        )

    if head is None:
        result = tangency.eval_T(d, profile, c)
    elif head_name == "A1F":
        result = nodal.eval_A1F_T(d, profile, c)
    elif head_name == "A1L":
        result = nodal.eval_A1L_T(d, profile, c)
    elif head_name == "PA1":
        value = nodal.eval_PA1(head[1], profile, c)
        result = tangency._make_result(value, profile, c, [])
    elif head_name == "A2F":
        if any(k != 1 for k in profile):
            raise ValueError("cusp chains support only first-order tangencies")
        result = cusp.eval_A2F_T1s(d, len(profile), c)
    elif head_name == "A2L":
        if any(k != 1 for k in profile):
            raise ValueError("cusp chains support only first-order tangencies")
        value = cusp.eval_A2L_T1s(d, len(profile), c)
        result = tangency._make_result(value, profile, c, [])
    elif head_name == "A1A1":
        value = multisingular.eval_A1LA1L(d, c)
        b_vectors = {mono[2] for mono in c.terms}
        sym = 2 if len(b_vectors) == 1 and all(v[0] == v[1] for v in b_vectors) else 1
        unordered = value // sym if value % sym == 0 else None
        result = tangency.CountResult(value, sym, unordered, ())
    elif head_name == "PA3":
        value = multisingular.eval_PA3(d, c)
        result = tangency.CountResult(value, 1, value, ())
    else:  # A3F
        value = integrate(multisingular.class_A3F(d) * c)
        result = tangency.CountResult(value, 1, value, ())

    if warnings:
        result = tangency.CountResult(
            result.ordered_value, result.symmetry_factor,
            result.unordered_value, result.warnings + tuple(warnings),
        )
    return result
