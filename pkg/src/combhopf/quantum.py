"""q-deformations: FQSym with the twisted coproduct Delta_q, QSym_q and NCSF_q,
the morphism phi : FQSym_q -> QSym_q, the q-sylvester and q-hypoplactic
congruences, and the one-parameter family Delta^(q) built on connected permutations."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .combinat.enumerate import enumerate_family
from .combinat.partitions import compositions, refinements
from .combinat.words import (
    Word,
    connected_factorization,
    cross_inversions,
    descent_composition,
    inversions,
    is_connected,
    shifted_concat,
    shifted_shuffle,
    standardize,
)
from .element import Element, Tensor2
from .errors import CongruenceGradingError, InvariantViolation
from .hopf import twist_factor
from .scalar import QPoly, normalize, q_power

FQSYM = "FQSym"
FQSYM_Q = "FQSym_q"
FQSYM_ZERO = "FQSym-0"
QSYM_Q = "QSym_q"
QSYM_Q_F = "QSym_q-F"
NCSF_Q = "NCSF_q"


# ------------------------------------------------------------------- FQSym


@lru_cache(maxsize=65536)
def _shuffle_counts(alpha: Word, beta: Word) -> tuple[tuple[Word, int], ...]:
    return tuple(sorted(Counter(shifted_shuffle(alpha, beta)).items()))


def fqsym_product(alpha: Word, beta: Word, algebra: str = FQSYM_Q) -> Element:
    """F_alpha F_beta: sum over shuffles of alpha with beta shifted by |alpha|."""
    return Element(algebra, _shuffle_counts(tuple(alpha), tuple(beta)))


def delta_q(sigma: Word, q=None, algebra: str = FQSYM_Q) -> Tensor2:
    """Sum over cuts k of q^{cross inversions} F_std(prefix) (x) F_std(suffix)."""
    sigma = tuple(sigma)
    n = len(sigma)
    terms = []
    for k in range(n + 1):
        e = cross_inversions(sigma, k)
        terms.append(((standardize(sigma[:k]), standardize(sigma[k:])), q_power(e, q)))
    return Tensor2(algebra, terms)


def fqsym_coproduct(sigma: Word) -> Tensor2:
    return delta_q(sigma, 1, FQSYM)


def fqsym_basis(n: int) -> list[Word]:
    return list(enumerate_family("permutations", n))


def twisted_multiply(t1: Tensor2, t2: Tensor2, product=None, degree=len, q=None, algebra: str | None = None) -> Tensor2:
    """(a (x) b)(a' (x) b') = chi(b, a') aa' (x) bb' with chi(b, a') = q^{deg b deg a'}."""
    if product is None:
        product = fqsym_product
    tag = algebra or t1.algebras[0]
    acc: dict = {}
    for (a, b), c1 in t1.terms.items():
        for (a2, b2), c2 in t2.terms.items():
            chi = twist_factor(degree(b), degree(a2), q)
            left, right = product(a, a2), product(b, b2)
            for ka, la in left.terms.items():
                for kb, lb in right.terms.items():
                    acc[(ka, kb)] = acc.get((ka, kb), 0) + c1 * c2 * chi * la * lb
    return Tensor2(tag, acc)


def specialize_tensor(t: Tensor2, value, algebra: str | None = None) -> Tensor2:
    from .scalar import specialize

    tag = algebra or t.algebras[0]
    return Tensor2(tag, [(k, specialize(c, value)) for k, c in t.terms.items()])


def specialize_element(x: Element, value, algebra: str | None = None) -> Element:
    from .scalar import specialize

    return Element(algebra or x.algebra, [(k, specialize(c, value)) for k, c in x.terms.items()])


# ------------------------------------------------------------------ NCSF_q


def ncsfq_product(I: Sequence[int], J: Sequence[int]) -> Element:
    return Element.basis(NCSF_Q, tuple(I) + tuple(J))


def ncsfq_coproduct_generator(n: int, q=None) -> Tensor2:
    """Delta_q S_n = sum_{i+j=n} q^{ij} S_i (x) S_j."""
    terms = []
    for i in range(n + 1):
        j = n - i
        terms.append(((((i,) if i else ()), ((j,) if j else ())), q_power(i * j, q)))
    return Tensor2(NCSF_Q, terms)


@lru_cache(maxsize=4096)
def _ncsfq_coproduct(I: tuple[int, ...]) -> Tensor2:
    acc = Tensor2(NCSF_Q, {((), ()): 1})
    for part in I:
        acc = twisted_multiply(acc, ncsfq_coproduct_generator(part), product=ncsfq_product, degree=sum, algebra=NCSF_Q)
    return acc


def ncsfq_coproduct(I: Sequence[int], q=None) -> Tensor2:
    """Delta_q S^I as the chi-twisted product of the Delta_q S_{i_k}."""
    t = _ncsfq_coproduct(tuple(I))
    return t if q is None else specialize_tensor(t, q)


def composition_basis(n: int) -> list[tuple[int, ...]]:
    return list(compositions(n)) if n else [()]


def bar_shift(c, degree: int):
    """q^degree * c(1/q); degree must bound the q-degree of c."""
    if not isinstance(c, QPoly):
        return normalize(QPoly.q(degree, int(c))) if c else 0
    if c.degree > degree:
        raise ValueError("degree shift too small for this polynomial")
    return normalize(QPoly([0] * (degree - c.degree) + list(reversed(c.coeffs))))


def ncsf_pairing_defects(max_degree: int, *, literal: bool = False) -> list[tuple]:
    """Compare <Delta_q S^K, S^I (x) S^J> with the QSym_q product constants.

    ``literal=True`` compares with [M_K](M_I M_J) directly; otherwise with
    q^{|I||J|} [M_K](M_J M_I) evaluated at 1/q.  Returns the mismatches.
    """
    bad = []
    for d in range(1, max_degree + 1):
        for K in compositions(d):
            cop = ncsfq_coproduct(K).terms
            for d1 in range(d + 1):
                for I in composition_basis(d1):
                    for J in composition_basis(d - d1):
                        if literal:
                            other = qsymq_product(I, J).terms.get(K, 0)
                        else:
                            other = bar_shift(qsymq_product(J, I).terms.get(K, 0), d1 * (d - d1))
                        if cop.get((I, J), 0) != other:
                            bad.append((K, I, J))
    return bad


# ------------------------------------------------------------------ QSym_q


@lru_cache(maxsize=65536)
def _qqsh(I: tuple[int, ...], J: tuple[int, ...]) -> tuple:
    if not I:
        return ((J, QPoly([1])),)
    if not J:
        return ((I, QPoly([1])),)
    acc: dict = {}

    def add(prefix: int, rest, weight: int) -> None:
        for w, c in rest:
            key = (prefix,) + w
            acc[key] = acc.get(key, 0) + c * QPoly.q(weight)

    add(I[0], _qqsh(I[1:], J), 0)
    add(J[0], _qqsh(I, J[1:]), J[0] * sum(I))
    add(I[0] + J[0], _qqsh(I[1:], J[1:]), J[0] * sum(I[1:]))
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def qsymq_product(I: Sequence[int], J: Sequence[int], q=None) -> Element:
    """M_I M_J in q-commuting letters (x_j x_i = q x_i x_j for j > i), via the q-quasi-shuffle."""
    out = Element(QSYM_Q, _qqsh(tuple(I), tuple(J)))
    return out if q is None else specialize_element(out, q)


def qsymq_coproduct(I: Sequence[int]) -> Tensor2:
    I = tuple(I)
    return Tensor2(QSYM_Q, [((I[:k], I[k:]), 1) for k in range(len(I) + 1)])


def quasi_shuffle_product(I: Sequence[int], J: Sequence[int]) -> Element:
    return qsymq_product(I, J, q=1)


def fundamental_to_monomial(I: Sequence[int], coeff=1) -> Element:
    """F_I = sum of M_J over compositions J refining I."""
    I = tuple(I)
    if not I:
        return Element.basis(QSYM_Q, (), coeff)
    return Element(QSYM_Q, [(J, coeff) for J in refinements(I)])


def phi_map_fundamental(sigma: Word) -> Element:
    """phi(F_sigma) = q^{l(sigma)} F_{c(sigma)}, with l the inversion count."""
    return Element.basis(QSYM_Q_F, descent_composition(sigma), QPoly.q(inversions(sigma)))


def phi_map(x) -> Element:
    """phi on F_sigma (a word) or on an FQSym element, landing in the M basis of QSym_q."""
    if not isinstance(x, Element):
        x = Element.basis(FQSYM_Q, tuple(x))
    acc = Element(QSYM_Q)
    for s, c in x.terms.items():
        acc = acc + fundamental_to_monomial(descent_composition(s), c * QPoly.q(inversions(s)))
    return acc


def qsymq_multiply(x: Element, y: Element) -> Element:
    acc: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for k, c in _qqsh(a, b):
                acc[k] = acc.get(k, 0) + ca * cb * c
    return Element(QSYM_Q, acc)


# --------------------------------------------------------------- congruences


@dataclass
class CongruenceClass:
    representative: Word
    exponents: dict[Word, int]


def _sylvester_moves(w: Word) -> Iterable[Word]:
    """Words w' with w = u c a v b x and w' = u a c v b x, a <= b < c."""
    n = len(w)
    for i in range(n - 1):
        c, a = w[i], w[i + 1]
        if a < c and any(a <= b < c for b in w[i + 2 :]):
            yield w[:i] + (a, c) + w[i + 2 :]


def _hypo_moves(w: Word) -> Iterable[Word]:
    """Both bi-sylvester rules, oriented from the word containing ca to the one with ac."""
    yield from _sylvester_moves(w)
    n = len(w)
    for i in range(1, n - 1):
        c, a = w[i], w[i + 1]
        if a < c and any(a < b <= c for b in w[:i]):
            yield w[:i] + (a, c) + w[i + 2 :]


def _inverse_moves(moves):
    def back(w: Word) -> Iterable[Word]:
        # w' -> w whenever w -> w' is a move; rebuild by swapping adjacent ascents
        n = len(w)
        for i in range(n - 1):
            if w[i] < w[i + 1]:
                cand = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                if w in set(moves(cand)):
                    yield cand

    return back


def congruence_class(w: Sequence[int], kind: str = "sylvester") -> CongruenceClass:
    """Closure of w under the q-congruence with exponent bookkeeping.

    Each forward move (ca -> ac) carries a factor q: word = q * moved word.  The
    exponent e(u) satisfies u = q^{e(u)} w; a second path assigning a different
    exponent raises CongruenceGradingError.
    """
    moves = {"sylvester": _sylvester_moves, "hypoplactic": _hypo_moves}[kind]
    back = _inverse_moves(moves)
    w = tuple(w)
    exps = {w: 0}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v, delta in [(v, -1) for v in moves(u)] + [(v, 1) for v in back(u)]:
            e = exps[u] + delta
            if v in exps:
                if exps[v] != e:
                    raise CongruenceGradingError(f"congruence not q-graded here: {u} -> {v}")
                continue
            exps[v] = e
            queue.append(v)
    rep = min(exps)
    shift = exps[rep]
    # store e with u = q^e rep
    return CongruenceClass(rep, {u: e - shift for u, e in exps.items()})


def _normal_form(w: Sequence[int], kind: str) -> tuple[Word, int]:
    cls = congruence_class(w, kind)
    return cls.representative, cls.exponents[tuple(w)]


def q_sylvester_normal_form(w: Sequence[int]) -> tuple[Word, int]:
    """(rep, e) with w = q^e rep, rep lexicographically minimal in the class."""
    return _normal_form(w, "sylvester")


def q_hypoplactic_normal_form(w: Sequence[int]) -> tuple[Word, int]:
    return _normal_form(w, "hypoplactic")


def class_partition(words: Iterable[Word], kind: str) -> dict[Word, list[Word]]:
    """Group words by congruence class (keyed by representative)."""
    out: dict[Word, list[Word]] = {}
    seen: set[Word] = set()
    for w in words:
        if w in seen:
            continue
        cls = congruence_class(w, kind)
        seen.update(cls.exponents)
        out[cls.representative] = sorted(cls.exponents)
    return out


def permutation_class_count(n: int, kind: str = "sylvester") -> int:
    """Number of classes of S_n (permutations are closed under both congruences)."""
    return len(class_partition(enumerate_family("permutations", n), kind))


# ------------------------------------------------ the connected-permutation family


@lru_cache(maxsize=None)
def _p_basis(sigma: Word) -> Element:
    """P_sigma = product of F over the connected factors of sigma."""
    acc = Element.basis(FQSYM_ZERO, ())
    for f in connected_factorization(sigma):
        nxt: dict = {}
        for a, ca in acc.terms.items():
            for k, c in _shuffle_counts(a, f):
                nxt[k] = nxt.get(k, 0) + ca * c
        acc = Element(FQSYM_ZERO, nxt)
    return acc


@lru_cache(maxsize=None)
def _f_in_p(sigma: Word) -> Element:
    # P_sigma = F_sigma + lexicographically larger F's
    acc = Element.basis("P", sigma)
    for tau, c in _p_basis(sigma).terms.items():
        if tau == sigma:
            if c != 1:
                raise InvariantViolation(f"P basis not unitriangular at {sigma}")
            continue
        if not tau > sigma:
            raise InvariantViolation(f"P basis not triangular at {sigma}")
        acc = acc - c * _f_in_p(tau)
    return acc


def _tensor_product_ordinary(t1: Tensor2, t2: Tensor2, tag: str) -> Tensor2:
    acc: dict = {}
    for (a, b), c1 in t1.terms.items():
        for (a2, b2), c2 in t2.terms.items():
            for ka, la in _shuffle_counts(a, a2):
                for kb, lb in _shuffle_counts(b, b2):
                    acc[(ka, kb)] = acc.get((ka, kb), 0) + c1 * c2 * la * lb
    return Tensor2(tag, acc)


@lru_cache(maxsize=None)
def _delta_family_p(sigma: Word, q, twisted: bool) -> Tensor2:
    acc = Tensor2(FQSYM_ZERO, {((), ()): 1})
    for f in connected_factorization(sigma):
        d = delta_q(f, q, FQSYM_ZERO)
        if twisted:
            acc = twisted_multiply(acc, d, q=q, algebra=FQSYM_ZERO)
        else:
            acc = _tensor_product_ordinary(acc, d, FQSYM_ZERO)
    return acc


@lru_cache(maxsize=None)
def _delta_family(sigma: Word, q, twisted: bool) -> Tensor2:
    acc = Tensor2(FQSYM_ZERO)
    for p, c in _f_in_p(sigma).terms.items():
        acc = acc + c * _delta_family_p(p, q, twisted)
    return acc


def delta_zero_family(sigma: Word, q=0, *, twisted: bool = False) -> Tensor2:
    """Delta^(q): Delta_q on connected F_sigma, extended multiplicatively.

    ``twisted=False`` extends with the ordinary tensor product, ``True`` with the
    chi-twisted one.  ``q=None`` keeps q formal.
    """
    sigma = tuple(sigma)
    if is_connected(sigma) or not sigma:
        return delta_q(sigma, q, FQSYM_ZERO)
    return _delta_family(sigma, q, twisted)


def delta_zero_coproduct(sigma: Word) -> Tensor2:
    return delta_zero_family(sigma, 0)


def fqsym_zero_product(alpha: Word, beta: Word) -> Element:
    return fqsym_product(alpha, beta, FQSYM_ZERO)


def primitive_dimension(n: int, q=0) -> int:
    """dim of the kernel of the reduced coproduct of Delta^(q) in degree n (exact rank over Q)."""
    if n < 1:
        raise ValueError("degree must be positive")
    perms = list(enumerate_family("permutations", n))
    rows: dict = {}
    cols = []
    for s in perms:
        col = {}
        for (a, b), c in delta_zero_family(s, q).terms.items():
            if a and b:
                if (a, b) not in rows:
                    rows[(a, b)] = len(rows)
                col[rows[(a, b)]] = c
        cols.append(col)
    if not rows:
        return len(perms)
    mat = [[QQ(0)] * len(perms) for _ in range(len(rows))]
    for j, col in enumerate(cols):
        for i, c in col.items():
            mat[i][j] = QQ(int(c))
    rank = DomainMatrix(mat, (len(rows), len(perms)), QQ).rank()
    return len(perms) - rank


def p_basis_rank(n: int) -> int:
    """Rank of the P_sigma in degree n (n! exactly when they form a basis)."""
    perms = list(enumerate_family("permutations", n))
    index = {s: i for i, s in enumerate(perms)}
    mat = [[QQ(0)] * len(perms) for _ in perms]
    for j, s in enumerate(perms):
        for t, c in _p_basis(s).terms.items():
            mat[index[t]][j] = QQ(int(c))
    return DomainMatrix(mat, (len(perms), len(perms)), QQ).rank()


def shifted_concat_word(a: Word, b: Word) -> Word:
    return shifted_concat(a, b)


@dataclass
class QuantumReport:
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness=None) -> None:
        prev = self.checks.get(name, True)
        self.checks[name] = prev and ok
        if not ok:
            self.witnesses.setdefault(name, witness)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def coefficient_at(x, value):
    return normalize(x(value)) if isinstance(x, QPoly) else x
