"""Seeded verification harness, one runner per lemma.

Every case is driven by its own seed ``case_seed(seed, i)`` so that a
failure dump ``{"lemma", "index", "case_seed", "instance"}`` can be
replayed on its own.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import generate as gen
from .degeneracy import check_complement_independence, degeneracy_ideal
from .ideals import Ideal, ideal_codim, ideal_equal
from .jsonio import matrix_to_json, pair_to_json
from .linalg import (coerce, identity, is_alternating, is_symmetric, mat_det,
                     mat_equal, rank, zeros)
from .pairs import (common_complement, find_triple_without_complement, graph_pair,
                    homotopy_involution, lambda_of_pair, split_pair)
from .pfaffian import pfaffian, sub_pfaffians, submaximal_pfaffian_vector
from .quadform import LagSub, hyperbolic, is_lagrangian
from .resolutions import (be_complex, check_exactness, colon_equations,
                          euler_characteristic, parity_obstruction_codim1,
                          strategy_one_ideal, surface_cotangent_twists,
                          symmetric_codim1_resolution, threefold_sheaf_twists, verify_square)
from .rings import GF, QQ, PolyRing


class UnknownLemma(KeyError):
    pass


LEMMAS = {}


def lemma(name, count):
    def deco(fn):
        LEMMAS[name] = (fn, count, (fn.__doc__ or "").strip().splitlines()[0])
        return fn
    return deco


def case_seed(seed, index):
    return seed * 1_000_003 + index


FIELDS = (QQ, GF(2), GF(3), GF(101))
XYZ = ("x", "y", "z")


@dataclass
class CaseResult:
    index: int
    case_seed: int
    ok: bool
    instance: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    lemma: str
    total: int
    passed: int
    failed: int
    failures: list
    wall_time: float = 0.0
    info: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0 and self.passed == self.total

    def to_json(self, with_time=False):
        out = {"lemma": self.lemma, "total": self.total, "passed": self.passed,
               "failed": self.failed, "failures": self.failures}
        if self.info:
            out["info"] = self.info
        if with_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def summary(self):
        return f"{self.lemma}: {self.passed}/{self.total} passed"


# -- lemma runners: each maps a case seed to (ok, instance, info) ----------------


@lemma("pf-square", 100)
def check_pf_square(cs):
    """Pf(A)^2 = det(A) for random alternating matrices."""
    rng = random.Random(cs)
    K = FIELDS[cs % len(FIELDS)]
    n = 2 * rng.randint(1, 5)
    A = gen.random_alternating(K, n, rng, bound=9)
    return pfaffian(A) ** 2 == mat_det(A), {"matrix": matrix_to_json(A), "field": repr(K)}, {}


@lemma("pf-congruence", 100)
def check_pf_congruence(cs):
    """Pf(P^T A P) = det(P) Pf(A)."""
    rng = random.Random(cs)
    K = FIELDS[cs % len(FIELDS)]
    n = 2 * rng.randint(1, 4)
    A = gen.random_alternating(K, n, rng)
    P = gen.random_matrix(K, n, n, rng)
    ok = pfaffian(P.T @ A @ P) == mat_det(P) * pfaffian(A)
    return ok, {"A": matrix_to_json(A), "P": matrix_to_json(P)}, {}


@lemma("even-rank", 200)
def check_even_rank(cs):
    """Alternating matrices over small prime fields have even rank."""
    rng = random.Random(cs)
    K = (GF(2), GF(3))[cs % 2]
    n = rng.randint(1, 9)
    A = gen.random_alternating(K, n, rng)
    r = rank(A, K)
    return r % 2 == 0, {"matrix": matrix_to_json(A)}, {"rank": r}


@lemma("kernel-identity", 50)
def check_kernel_identity(cs):
    """A times its submaximal Pfaffian vector vanishes."""
    rng = random.Random(cs)
    K = (QQ, GF(2), GF(3))[cs % 3]
    R = PolyRing(K, XYZ)
    n = rng.choice((1, 3, 5))
    A = gen.random_alternating(R, n, rng, degree=rng.randint(1, 2))
    v = submaximal_pfaffian_vector(A, R)
    return all(not x for x in A @ v), {"matrix": matrix_to_json(A)}, {}


@lemma("three-lagr", 50)
def check_three_lagr(cs):
    """Parity-consistent pairs of Lagrangians have a common complement."""
    rng = random.Random(cs)
    K = (QQ, GF(2), GF(3))[cs % 3]
    n = rng.randint(1, 4)
    P = gen.random_field_pair(K, n, rng)
    w = common_complement(P)
    ok = w.valid and is_lagrangian(P.ambient, w.M.gens)
    return ok, pair_to_json(P), {"n": n}


@lemma("transform-involution", 50)
def check_transform_involution(cs):
    """The homotopy involution squares to the identity."""
    # constant h keeps the second round's local inverses small
    zeta, h = gen.lambda_beta_instance(cs, h_degree=0)
    z1, h1 = homotopy_involution(zeta, h)
    z2, h2 = homotopy_involution(z1, h1)
    ok = mat_equal(z2, zeta) and mat_equal(h2, h) and is_alternating(h1)
    return ok, {"zeta": matrix_to_json(zeta), "h": matrix_to_json(h)}, {}


@lemma("lambda-beta", 20)
def check_lambda_beta(cs):
    """Pf_2k(zeta) and Pf_2k(zeta - zeta h zeta) agree where u = 1 - h zeta
    is invertible."""
    zeta, h = gen.lambda_beta_instance(cs)
    R = zeta[0, 0].ring
    n = zeta.shape[0]
    du = mat_det(identity(R, n) - h @ zeta)
    inv = [] if du.is_constant() else [du]
    beta = zeta - zeta @ h @ zeta
    ok = True
    for k in range(1, n // 2 + 1):
        I = Ideal(sub_pfaffians(zeta, 2 * k, R), R, inv)
        J = Ideal(sub_pfaffians(beta, 2 * k, R), R, inv)
        ok = ok and ideal_equal(I, J)
    return ok, {"zeta": matrix_to_json(zeta), "h": matrix_to_json(h)}, {"n": n}


@lemma("scheme-independence", 10)
def check_scheme_independence(cs):
    """The degeneracy ideal does not depend on the common complement."""
    rng = random.Random(cs)
    R = PolyRing(QQ, XYZ)
    n = rng.choice((3, 4, 5))
    zeta = gen.random_alternating(R, n, rng, 1, bound=2, constant=False)
    P = graph_pair(zeta)
    # E(0) = F(0) = im(0; 1), so any im(1; h) is a second common complement
    h = gen.random_alternating(QQ, n, rng, bound=2)
    M2 = np.vstack([identity(QQ, n), h])
    M1 = coerce(R, np.vstack([identity(QQ, n), zeros(QQ, n)]))
    m = rng.choice(range(2 - n % 2, n + 1, 2))
    ok = check_complement_independence(P, m, LagSub(M1, P.ambient),
                                       LagSub(coerce(R, M2), P.ambient))
    return ok, {"zeta": matrix_to_json(zeta), "h": matrix_to_json(h), "m": m}, {}


@lemma("second-v-square", 3)
def check_second_v_square(cs):
    """The submaximal minors of lambda generate the square of the
    codimension-3 degeneracy ideal."""
    rng = random.Random(cs)
    R = PolyRing(QQ, XYZ)
    n = (3, 5)[cs % 2]
    A = gen.random_alternating(R, n, rng, 1, constant=False, homogeneous=True)
    P = graph_pair(A)
    res = degeneracy_ideal(P, 3)
    codim = ideal_codim(res.ideal)
    if codim != 3:
        return True, {"matrix": matrix_to_json(A)}, {"skipped": "codim != 3"}
    ok = verify_square(lambda_of_pair(P), res.ideal)
    return ok, {"matrix": matrix_to_json(A)}, {"codim": codim}


@lemma("strategy-equivalence", 10)
def check_strategy_equivalence(cs):
    """Degeneracy ideal, homotopy Pfaffians and colon equations agree."""
    psi, phi, _ = gen.strategy_instance(cs)
    D = degeneracy_ideal(split_pair(psi, phi), 3, kernel=False).ideal
    I1, _, _ = strategy_one_ideal(psi, phi)
    C = colon_equations(psi, phi)  # also checks det(phi) = unit * f^2
    ok = ideal_equal(D, I1) and ideal_equal(D, C)
    return ok, {"psi": matrix_to_json(psi), "phi": matrix_to_json(phi)}, {}


@lemma("quasisym", 10)
def check_quasisym(cs):
    """Codimension-1 ladders commute and phi^T psi is symmetric."""
    psi, phi = gen.symmetric_instance(cs)
    S = symmetric_codim1_resolution(psi, phi)
    ok = S.ladder_commutes() and is_symmetric(phi.T @ psi)
    return ok, {"psi": matrix_to_json(psi), "phi": matrix_to_json(phi)}, {}


@lemma("parity-codim1", 1)
def check_parity_codim1(cs):
    """The threefold in P^5 fails the parity condition; surfaces in P^3 fail
    the skew condition exactly for odd degree."""
    chi = euler_characteristic(threefold_sheaf_twists(), 5, -3)
    ok = chi == 1 and parity_obstruction_codim1(5, 6, chi, "symmetric")
    surfaces = {}
    for d in range(1, 7):
        c = euler_characteristic(surface_cotangent_twists(d), 3)
        fires = parity_obstruction_codim1(3, 0, c, "skew")
        surfaces[d] = c
        ok = ok and fires == (d % 2 == 1)
    return ok, {}, {"chi_threefold": chi, "chi_surfaces": surfaces}


@lemma("koszul-fixture", 1)
def check_koszul_fixture(cs):
    """The Koszul point: twists, exactness and the square of the ideal."""
    from .fixtures import fixture_matrix
    A, R = fixture_matrix("koszul-point")
    C = be_complex(A)
    want = [[0], [-1] * 3, [-2] * 3, [-3]]
    I = Ideal(list(R.gens()), R)
    ok = C.twists == want and check_exactness(C) and verify_square(A, I)
    return ok, {"matrix": matrix_to_json(A)}, {"twists": C.twists}


@lemma("f2-counterexample", 1)
def check_f2_counterexample(cs):
    """Exhaustive search over F_2 for three Lagrangians with no common
    complement."""
    K = GF(2)
    V = hyperbolic(2, ring=K)
    triple, lags = find_triple_without_complement(V)
    # the subspace x1 + x3 = x2 + x4 = 0 is b-isotropic but not q-isotropic
    literal = np.array([[K(1), K(0)], [K(0), K(1)], [K(1), K(0)], [K(0), K(1)]], dtype=object)
    info = {"lagrangians": len(lags), "literal_third_is_lagrangian": is_lagrangian(V, literal)}
    if triple is None:
        return False, {}, info
    return True, {"triple": [matrix_to_json(T) for T in triple]}, info


# -- driver ----------------------------------------------------------------------


def _run_case(args):
    name, index, cs = args
    fn = LEMMAS[name][0]
    try:
        ok, inst, info = fn(cs)
    except Exception as exc:  # a crash is a failed case, with its dump
        return CaseResult(index, cs, False, {}, {"error": f"{type(exc).__name__}: {exc}"})
    return CaseResult(index, cs, bool(ok), inst, info)


def _dump(name, r):
    return {"lemma": name, "index": r.index, "case_seed": r.case_seed,
            "instance": r.instance, "info": r.info}


def run_verification(lemma_id, count=None, seed=0, jobs=1):
    """Run ``count`` cases of a lemma; failures carry replayable dumps."""
    if lemma_id not in LEMMAS:
        raise UnknownLemma(f"unknown lemma {lemma_id!r}; known: {sorted(LEMMAS)}")
    count = LEMMAS[lemma_id][1] if count is None else count
    tasks = [(lemma_id, i, case_seed(seed, i)) for i in range(count)]
    t0 = time.perf_counter()
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_run_case, tasks))
    else:
        results = [_run_case(t) for t in tasks]
    results.sort(key=lambda r: r.index)
    passed = sum(r.ok for r in results)
    fails = [_dump(lemma_id, r) for r in results if not r.ok]
    info = [{"index": r.index, **r.info} for r in results if r.info and r.ok]
    return VerificationReport(lemma_id, count, passed, count - passed, fails,
                              time.perf_counter() - t0, info)


def replay(dump):
    """Re-run the single case recorded in a failure dump."""
    name = dump.get("lemma")
    if name not in LEMMAS:
        raise UnknownLemma(f"unknown lemma {name!r}")
    t0 = time.perf_counter()
    r = _run_case((name, dump.get("index", 0), dump["case_seed"]))
    fails = [] if r.ok else [_dump(name, r)]
    return VerificationReport(name, 1, int(r.ok), int(not r.ok), fails,
                              time.perf_counter() - t0, [r.info] if r.info and r.ok else [])
