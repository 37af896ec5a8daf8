"""Verification suites shared by the command line and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .combinat.enumerate import count
from .combinat.partitions import compositions, partitions
from .element import Element, Tensor2
from .errors import CongruenceGradingError
from .hopf import check_hopf_axioms
from .series import catalan, lie_dims_from_generators

EXPECTED_CONNECTED_ENDOFUNCTIONS = (1, 3, 20, 197, 2511, 38924)
EXPECTED_LIE_DIMS = (1, 3, 23, 223, 2800, 42576)
EXPECTED_UPG_DIMS = (1, 1, 3, 7, 19, 47)
HOPF_SUITE = ("EQSym", "SGQSym", "PhiSym", "CPQSym", "CCQSym", "FQSym_q", "NCSF_q")


@dataclass
class SuiteReport:
    name: str
    entries: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.entries.append((label, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.entries)

    def lines(self) -> list[str]:
        out = []
        for label, ok, detail in self.entries:
            out.append(f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else ""))
        return out


def _series(values) -> str:
    return ",".join(str(v) for v in values)


# --------------------------------------------------------------------- dims


def connected_endofunction_counts(n_max: int) -> list[int]:
    return [count("connected_endofunctions", n) for n in range(1, n_max + 1)]


def dims_suite(n_max: int = 5) -> SuiteReport:
    from .parking import upg_basis

    rep = SuiteReport("dims")
    gens = connected_endofunction_counts(n_max)
    want = list(EXPECTED_CONNECTED_ENDOFUNCTIONS[:n_max])
    rep.add("connected endofunctions", gens[: len(want)] == want, _series(gens))
    lie = lie_dims_from_generators(gens, n_max)
    want = list(EXPECTED_LIE_DIMS[:n_max])
    rep.add("Lie dimensions from generators", lie[: len(want)] == want, _series(lie))
    cat = [count("nondecreasing_parking_functions", n) for n in range(1, n_max + 1)]
    rep.add("nondecreasing parking functions", cat == [catalan(n) for n in range(1, n_max + 1)], _series(cat))
    upg = [len(upg_basis(n)) for n in range(min(n_max, 5) + 1)]
    want = list(EXPECTED_UPG_DIMS[: len(upg)])
    rep.add("unlabelled parking graphs", upg == want, _series(upg))
    return rep


# -------------------------------------------------------------- hopf axioms


def hopf_suite(max_degree: int = 3, tags=HOPF_SUITE) -> SuiteReport:
    rep = SuiteReport("hopf-axioms")
    for tag in tags:
        r = check_hopf_axioms(tag, max_degree)
        for name, ok in r.checks.items():
            detail = f"{r.counts.get(name, 0)} cases"
            if not ok:
                detail += f", witness {r.counterexamples[name]!r}"
            rep.add(f"{tag} {name}", ok, detail)
    return rep


# ------------------------------------------------------------------ oracles


def oracle_suite(max_degree: int = 4, N: int = 8) -> SuiteReport:
    from .oracle.biword import BIWORD_BUDGET, verify_phi_constants
    from .oracle.qcommuting import verify_qsymq
    from .oracle.verify import verify_structure_constants

    rep = SuiteReport("oracle")
    for tag in ("EQSym", "SGQSym", "CCQSym"):
        r = verify_structure_constants(tag, max_degree, N)
        rep.add(f"{tag} x_ij realization (N={N})", r.passed, f"{r.checked} products")
    phi_deg = min(max_degree, BIWORD_BUDGET[0])
    phi_N = min(max(N, phi_deg), BIWORD_BUDGET[1])
    r = verify_phi_constants(phi_deg, phi_N)
    rep.add(f"PhiSym biword realization (N={phi_N})", r.passed, f"{r.checked} products")
    r = verify_qsymq(max_degree, N)
    rep.add(f"QSym_q q-commuting realization (N={N})", r.passed, f"{r.checked} products")
    return rep


# ------------------------------------------------------------------ duality


def _transpose_check(product, coproduct, basis, max_degree: int) -> tuple[bool, object, int]:
    """<Delta S^h, M_f (x) M_g> = <S^h, M_f M_g> on every basis triple."""
    checked = 0
    keys = {d: basis(d) for d in range(max_degree + 1)}
    for d in range(1, max_degree + 1):
        for h in keys[d]:
            cop = coproduct(h).terms
            for d1 in range(d + 1):
                for f, g in iproduct(keys[d1], keys[d - d1]):
                    checked += 1
                    if cop.get((f, g), 0) != product(f, g).terms.get(h, 0):
                        return False, (f, g, h), checked
    return True, None, checked


def duality_suite(max_degree: int = 4, sym_degree: int = 6) -> SuiteReport:
    from . import eqsym, phisym, sgqsym
    from .oracle.symfun import multiply_m

    rep = SuiteReport("duality")
    ok, w, n = _transpose_check(eqsym.eqsym_product, eqsym.esym_coproduct, eqsym.basis, max_degree)
    rep.add("ESym coproduct = transpose of EQSym product", ok, f"{n} triples" if ok else f"witness {w}")
    ok, w, n = _transpose_check(sgqsym.sg_product, sgqsym.sgsym_coproduct, sgqsym.basis, max_degree)
    rep.add("SGSym coproduct = transpose of SGQSym product", ok, f"{n} triples" if ok else f"witness {w}")

    for label, prod_, cop in (
        ("S'", phisym.sprime_product, phisym.sprime_coproduct),
        ("S''", phisym.ssec_product, phisym.ssec_coproduct),
    ):
        bad = None
        for d1 in range(1, max_degree):
            for d2 in range(1, max_degree - d1 + 1):
                for a, b in iproduct(phisym.basis(d1), phisym.basis(d2)):
                    if prod_(a, b).terms != sgqsym.sgsym_product(a, b).terms:
                        bad = bad or ("product", a, b)
        for d in range(max_degree + 1):
            for s in phisym.basis(d):
                if cop(s).terms != sgqsym.sgsym_coproduct(s).terms:
                    bad = bad or ("coproduct", s)
        rep.add(f"{label} basis constants equal SGSym constants", bad is None, "" if bad is None else f"witness {bad}")

    bad = None
    for n1 in range(1, sym_degree):
        for n2 in range(1, sym_degree - n1 + 1):
            for lam, mu in iproduct(partitions(n1), partitions(n2)):
                lhs = phisym.y_to_m(phisym.y_product(lam, mu))
                rhs = multiply_m(phisym.y_to_m(lam), phisym.y_to_m(mu))
                if lhs != rhs:
                    bad = bad or (lam, mu)
    rep.add(f"Y -> m is an algebra morphism (|lam|+|mu| <= {sym_degree})", bad is None, "" if bad is None else f"witness {bad}")
    return rep


# ------------------------------------------------------------------ embeddings


def embedding_suite(n_max: int = 4, N: int = 8, ul_degree: int = 6) -> SuiteReport:
    from .oracle.symfun import verify_sym_identities
    from .sgqsym import ul_identity_holds

    rep = SuiteReport("embeddings")
    r = verify_sym_identities(n_max, N)
    for name, ok in r.checks.items():
        rep.add(name, ok)
    bad = None
    for n1 in range(1, ul_degree):
        for n2 in range(1, ul_degree - n1 + 1):
            for lam, mu in iproduct(partitions(n1), partitions(n2)):
                if not ul_identity_holds(lam, mu):
                    bad = bad or (lam, mu)
    rep.add(f"ul_lam ul_mu = z ratio ul_(lam u mu) (|lam|+|mu| <= {ul_degree})", bad is None, "" if bad is None else f"witness {bad}")
    return rep


# ------------------------------------------------------------------ quantum


def _untwisted_ncsf_coproduct(I) -> Tensor2:
    from .quantum import NCSF_Q, ncsfq_coproduct_generator, ncsfq_product, twisted_multiply

    acc = Tensor2(NCSF_Q, {((), ()): 1})
    for part in I:
        acc = twisted_multiply(acc, ncsfq_coproduct_generator(part, 1), product=ncsfq_product, degree=sum, q=1, algebra=NCSF_Q)
    return acc


def _qsym_coproduct_element(x: Element) -> Tensor2:
    from .quantum import QSYM_Q, qsymq_coproduct

    acc = Tensor2(QSYM_Q)
    for k, c in x.terms.items():
        acc = acc + c * qsymq_coproduct(k)
    return acc


def _phi_tensor(t: Tensor2) -> Tensor2:
    from .quantum import QSYM_Q, phi_map

    acc: dict = {}
    for (a, b), c in t.terms.items():
        for ka, ca in phi_map(a).terms.items():
            for kb, cb in phi_map(b).terms.items():
                acc[(ka, kb)] = acc.get((ka, kb), 0) + c * ca * cb
    return Tensor2(QSYM_Q, acc)


def quantum_suite(max_degree: int = 5, phi_degree: int = 4, class_degree: int = 5, primitive_degree: int = 5,
                  expected_primitives=(1, 1, 3, 13, 71)) -> SuiteReport:
    """Quantum checks; ``expected_primitives=None`` compares the primitive
    dimensions of the q=0 family with the free Lie count over connected
    permutations instead of a fixed series."""
    from . import quantum as qm
    from .sgqsym import quasi_shuffle

    rep = SuiteReport("quantum")
    perms = {d: qm.fqsym_basis(d) for d in range(max_degree + 1)}

    bad = None
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for a, b in iproduct(perms[d1], perms[d2]):
                lhs: dict = {}
                for s, c in qm.fqsym_product(a, b).terms.items():
                    for k, v in qm.delta_q(s).terms.items():
                        lhs[k] = lhs.get(k, 0) + c * v
                rhs = qm.twisted_multiply(qm.delta_q(a), qm.delta_q(b), algebra=qm.FQSYM_Q)
                if Tensor2(qm.FQSYM_Q, lhs) != rhs:
                    bad = bad or (a, b)
    rep.add(f"Delta_q is a morphism into the twisted tensor (|a|+|b| <= {max_degree})", bad is None, "" if bad is None else f"witness {bad}")

    bad = None
    for d in range(max_degree + 1):
        for s in perms[d]:
            if qm.delta_q(s, 1, qm.FQSYM) != qm.fqsym_coproduct(s):
                bad = bad or ("FQSym", s)
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for I, J in iproduct(compositions(d1), compositions(d2)):
                if dict(qm.qsymq_product(I, J, 1).terms) != dict(quasi_shuffle(I, J)):
                    bad = bad or ("QSym", I, J)
    for d in range(max_degree + 1):
        for I in qm.composition_basis(d):
            if qm.ncsfq_coproduct(I, 1) != _untwisted_ncsf_coproduct(I):
                bad = bad or ("NCSF", I)
    rep.add("q=1 recovers the untwisted structures", bad is None, "" if bad is None else f"witness {bad}")

    bad = None
    for d1 in range(1, phi_degree):
        for d2 in range(1, phi_degree - d1 + 1):
            for a, b in iproduct(perms[d1], perms[d2]):
                lhs = qm.phi_map(qm.fqsym_product(a, b))
                rhs = qm.qsymq_multiply(qm.phi_map(a), qm.phi_map(b))
                if lhs != rhs:
                    bad = bad or ("product", a, b)
    for d in range(phi_degree + 1):
        for s in perms[d]:
            if _qsym_coproduct_element(qm.phi_map(s)) != _phi_tensor(qm.delta_q(s)):
                bad = bad or ("coproduct", s)
    rep.add(f"phi is a twisted Hopf morphism FQSym_q -> QSym_q (n <= {phi_degree})", bad is None, "" if bad is None else f"witness {bad}")

    bad = qm.ncsf_pairing_defects(min(max_degree, 4))
    rep.add("Delta_q on NCSF_q pairs with the reversed QSym_q product at 1/q", not bad, "" if not bad else f"witness {bad[0]}")

    counts, err = [], None
    try:
        counts = [qm.permutation_class_count(n, "sylvester") for n in range(1, class_degree + 1)]
    except CongruenceGradingError as exc:
        err = str(exc)
    ok = err is None and counts == [catalan(n) for n in range(1, class_degree + 1)]
    rep.add("q-sylvester classes of permutations are Catalan", ok, err or _series(counts))
    counts, err = [], None
    try:
        counts = [qm.permutation_class_count(n, "hypoplactic") for n in range(1, class_degree + 1)]
    except CongruenceGradingError as exc:
        err = str(exc)
    ok = err is None and counts == [2 ** (n - 1) for n in range(1, class_degree + 1)]
    rep.add("q-hypoplactic classes of permutations are compositions", ok, err or _series(counts))

    bad = None
    for d in range(primitive_degree + 1):
        for s in perms.get(d) or qm.fqsym_basis(d):
            t = qm.delta_zero_family(s, 0)
            if t.flip() != t:
                bad = bad or s
    rep.add(f"Delta^(0) is cocommutative (n <= {primitive_degree})", bad is None, "" if bad is None else f"witness {bad}")

    dims = [qm.primitive_dimension(n, 0) for n in range(1, primitive_degree + 1)]
    if expected_primitives is None:
        gens = [count("connected_permutations", n) for n in range(1, primitive_degree + 1)]
        want = lie_dims_from_generators(gens, primitive_degree)
        rep.add("Delta^(0) primitive dimensions = free Lie count on connected permutations", dims == want,
                f"{_series(dims)} (free Lie {_series(want)})")
    else:
        want = list(expected_primitives[:primitive_degree])
        rep.add(f"Delta^(0) primitive dimensions = {_series(want)}", dims == want, f"computed {_series(dims)}")
    return rep


SUITES = {
    "hopf-axioms": hopf_suite,
    "oracle": oracle_suite,
    "dims": dims_suite,
    "duality": duality_suite,
    "quantum": quantum_suite,
}

