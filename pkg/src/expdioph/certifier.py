"""Replay of the uniqueness argument for one family, plus a brute-force oracle.

A `Certificate` lists eight step records in a fixed order:

1. identities     A + B = C^2, gcd(A, B) = 1, gcd(C, AB) = 1
2. applicability  min(A, B) > 30
3. residues       P = -1 and Q = 1 modulo K
4. characteristic the class number of (1, 1, 2) in P X^2 + Q Y^2 = K^Z is 1
5. least          (1, 1, 2) is the least solution of the class {1, -1}
6. lehmer_pair    alpha, beta = sqrt(P) +- sqrt(-Q) form a Lehmer pair, F = -4Q
7. exclusion      premises of the contradiction for a nontrivial solution
8. oracle         brute-force search up to z_max agrees

Step 7 cannot be run on data, since the solutions it concerns do not
exist.  For odd m it records the checked premises: the smallest admissible
t is at least min(P, Q) > 30, and L_31 of the family pair has a primitive
divisor.  For even m, K is even, steps 5 and 6 are skipped, and step 7
instead checks the mod-2 sieve on all odd (x, y) up to a bound.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .family import (
    APPLICABILITY_BOUND,
    TRIVIAL_SOLUTION,
    FamilyParams,
    ParamsError,
    Solution,
    build_instance,
    map_corollary,
    theorem_applicable,
    validate_params,
)
from .lehmer import BHV_THRESHOLD, LehmerPairError, bhv_check, pair_from_family
from .quadform import QuadFormInstance, characteristic_residue, least_solution_in_class
from .sieve import even_m_excludes, sieve_candidate

__all__ = [
    "Verdict",
    "Step",
    "Certificate",
    "SkippedEntry",
    "STEP_NAMES",
    "DEFAULT_Z_MAX",
    "DEFAULT_Z_CAP",
    "EVEN_M_BOUND",
    "brute_force_solutions",
    "hypothetical_t_bound",
    "replay_proof",
    "worker_count",
    "certify_grid",
    "certify_corollary",
]

DEFAULT_Z_MAX = 8
DEFAULT_Z_CAP = 3
EVEN_M_BOUND = 25

STEP_NAMES = (
    "identities",
    "applicability",
    "residues",
    "characteristic",
    "least",
    "lehmer_pair",
    "exclusion",
    "oracle",
)


class Verdict(str, enum.Enum):
    CERTIFIED = "certified-unique"
    NOT_APPLICABLE = "not-applicable"
    FALSIFIED = "FALSIFIED"


@dataclass
class Step:
    name: str
    claim: str
    status: str  # "pass" | "fail" | "skip"
    values: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"


@dataclass
class Certificate:
    params: FamilyParams
    instance: object
    applicable: bool
    steps: list
    oracle_solutions: list
    verdict: Verdict
    z_max: int

    def to_dict(self):
        inst = self.instance
        return {
            "status": "certified",
            "params": {"ell": self.params.ell, "m": self.params.m, "r": self.params.r},
            "instance": {"A": str(inst.a), "B": str(inst.b), "C": str(inst.c)},
            "applicable": self.applicable,
            "z_max": self.z_max,
            "verdict": self.verdict.value,
            "steps": [
                {"name": s.name, "claim": s.claim, "status": s.status,
                 "values": {k: _jsonable(v) for k, v in s.values.items()}}
                for s in self.steps
            ],
            "oracle_solutions": [list(s) for s in self.oracle_solutions],
        }

    def step_bitmap(self):
        return "".join({"pass": "1", "fail": "0", "skip": "-"}[s.status] for s in self.steps)


@dataclass
class SkippedEntry:
    values: tuple
    reason: str
    failed: tuple

    def to_dict(self, keys=("ell", "m", "r")):
        return {
            "status": "skipped",
            "params": dict(zip(keys, self.values)),
            "reason": self.reason,
            "failed": list(self.failed),
        }


def _jsonable(v):
    # Big integers go out as decimal strings.
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def brute_force_solutions(instance, z_max):
    """Every (x, y, z) with z <= z_max and A^x + B^y = C^z, ordered by (z, x)."""
    if z_max < 2:
        raise ValueError(f"z_max must be at least 2, got {z_max}")
    a, b, c = instance.a, instance.b, instance.c
    found = []
    for z in range(1, z_max + 1):
        target = c ** z
        x, ax = 1, a
        while ax < target:
            rest, y = target - ax, 0
            while rest % b == 0:
                rest //= b
                y += 1
            if rest == 1 and y >= 1:
                found.append(Solution(x, y, z))
            x += 1
            ax *= a
    return found


def hypothetical_t_bound(instance, t):
    """Whether P | t or Q | t, the divisibility a nontrivial solution would force on t."""
    if t <= 1 or t % 2 == 0:
        raise ValueError(f"t must be odd and > 1, got {t}")
    return t % instance.a == 0 or t % instance.b == 0


def _status(ok):
    return "pass" if ok else "fail"


def replay_proof(params, z_max=DEFAULT_Z_MAX, z_cap=DEFAULT_Z_CAP):
    """Build the certificate for one family.

    ``params`` may be a `FamilyParams` or a raw (ell, m, r) tuple; invalid
    tuples raise `ParamsError`.  ``z_cap`` bounds the least-solution search
    in step 5, ``z_max`` the brute-force oracle in step 8.
    """
    if not isinstance(params, FamilyParams):
        params = validate_params(*params)
    inst = build_instance(params)
    p, q, k = inst.a, inst.b, inst.c
    m_odd = params.m % 2 == 1
    applicable = theorem_applicable(inst)
    steps = []

    steps.append(Step(
        "identities", "A + B = C^2, gcd(A, B) = 1, gcd(C, AB) = 1",
        "pass", {"A": p, "B": q, "C": k},
    ))
    steps.append(Step(
        "applicability", f"min(A, B) > {APPLICABILITY_BOUND}",
        _status(applicable), {"min": min(p, q)},
    ))
    steps.append(Step(
        "residues", "P = -1 (mod K), Q = 1 (mod K)",
        _status(p % k == k - 1 and q % k == 1 % k), {"P_mod_K": p % k, "Q_mod_K": q % k},
    ))
    l0 = characteristic_residue(p, k, 1, 1)
    steps.append(Step(
        "characteristic", "class number of (1, 1, 2) in P X^2 + Q Y^2 = K^Z is 1",
        _status(l0 == 1), {"L0": l0},
    ))

    pair = None
    if m_odd:
        least = least_solution_in_class(QuadFormInstance(p, q, k), 1, z_cap)
        steps.append(Step(
            "least", "(1, 1, 2) is the least solution in the class {1, -1}",
            _status(least == (1, 1, 2)),
            {"z_cap": z_cap, "least": list(least) if least else None},
        ))
        try:
            pair = pair_from_family(p, q, k)
            steps.append(Step(
                "lehmer_pair", "sqrt(P) +- sqrt(-Q) is a Lehmer pair with E = 4P, G = K^2, F = -4Q",
                _status(pair.f_val == -4 * q), {"E": pair.e_val, "G": pair.g_val, "F": pair.f_val},
            ))
        except LehmerPairError as exc:
            steps.append(Step("lehmer_pair", "sqrt(P) +- sqrt(-Q) is a Lehmer pair", "fail",
                              {"error": str(exc)}))
    else:
        note = "K even: the quadratic-form and Lehmer route needs K odd; the even-m sieve applies"
        steps.append(Step("least", "(1, 1, 2) is the least solution in the class {1, -1}", "skip",
                          {"note": note}))
        steps.append(Step("lehmer_pair", "sqrt(P) +- sqrt(-Q) is a Lehmer pair", "skip",
                          {"note": note}))

    steps.append(_exclusion_step(params, inst, pair, applicable))

    oracle = brute_force_solutions(inst, z_max)
    sieve_ok = all(sieve_candidate(params, s).admissible for s in oracle)
    has_trivial = TRIVIAL_SOLUTION in oracle
    nontrivial = [s for s in oracle if s != TRIVIAL_SOLUTION]
    oracle_ok = sieve_ok and has_trivial and (not applicable or not nontrivial)
    steps.append(Step(
        "oracle", f"brute force up to z = {z_max} finds only (1, 1, 2) and every hit passes the sieves",
        _status(oracle_ok),
        {"z_max": z_max, "solutions": [list(s) for s in oracle], "sieve_consistent": sieve_ok},
    ))

    hard_fail = any(s.status == "fail" for s in steps if s.name != "applicability")
    if hard_fail:
        verdict = Verdict.FALSIFIED
    elif applicable:
        verdict = Verdict.CERTIFIED
    else:
        verdict = Verdict.NOT_APPLICABLE
    return Certificate(params, inst, applicable, steps, oracle, verdict, z_max)


def _exclusion_step(params, inst, pair, applicable):
    p, q = inst.a, inst.b
    if params.m % 2 == 0:
        fires = all(
            even_m_excludes(params, x, y)
            for x in range(1, EVEN_M_BOUND + 1, 2)
            for y in range(1, EVEN_M_BOUND + 1, 2)
        )
        return Step(
            "exclusion", "m even: ell*(r*x + (ell - r)*y) is odd for every odd x, y",
            _status(fires), {"route": "even-m sieve", "checked_up_to": EVEN_M_BOUND},
        )
    claim = "t >= min(P, Q) > 30 forces a primitive divisor of L_t, contradicting |L_t| = Q^((y-1)/2)"
    if not applicable:
        return Step("exclusion", claim, "skip",
                    {"route": "lehmer", "note": f"min(P, Q) <= {APPLICABILITY_BOUND}"})
    if pair is None:
        return Step("exclusion", claim, "fail", {"route": "lehmer", "note": "no Lehmer pair"})
    # With K odd exactly one of P, Q is odd; its value is the least odd t > 1 divisible by P or Q.
    t_min = p if p % 2 else q
    spot_n = BHV_THRESHOLD + 1
    premises = {
        "t_min_divisible": hypothetical_t_bound(inst, t_min),
        "t_min_at_least_min_PQ": t_min >= min(p, q),
        "min_PQ_above_threshold": min(p, q) > BHV_THRESHOLD,
        "bhv_spot_check": bhv_check(pair, spot_n),
    }
    values = {"route": "lehmer", "t_min": t_min, "spot_n": spot_n, **premises}
    return Step("exclusion", claim, _status(all(premises.values())), values)


def worker_count():
    """Worker pool size: $EXPDIOPH_THREADS, else the CPU count."""
    env = os.environ.get("EXPDIOPH_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError(f"EXPDIOPH_THREADS must be positive, got {env}")
        return n
    return os.cpu_count() or 1


def _certify_one(job):
    values, z_max, z_cap = job
    try:
        params = validate_params(*values)
    except ParamsError as exc:
        return SkippedEntry(values, exc.reason, exc.failed)
    return replay_proof(params, z_max, z_cap)


def _corollary_one(job):
    values, z_max, z_cap = job
    try:
        params = map_corollary(*values)
    except ParamsError as exc:
        return SkippedEntry(values, exc.reason, exc.failed)
    return replay_proof(params, z_max, z_cap)


def _run(fn, jobs, workers):
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    chunk = max(1, len(jobs) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, whatever the completion order.
        return list(pool.map(fn, jobs, chunksize=chunk))


def certify_grid(triples, z_max=DEFAULT_Z_MAX, z_cap=DEFAULT_Z_CAP, workers=None):
    """Certificates (or `SkippedEntry`) for each (ell, m, r), in lexicographic order."""
    jobs = [(tuple(t), z_max, z_cap) for t in sorted(set(map(tuple, triples)))]
    return _run(_certify_one, jobs, workers)


def certify_corollary(pairs, z_max=DEFAULT_Z_MAX, z_cap=DEFAULT_Z_CAP, workers=None):
    """Same as `certify_grid` for (p, m) pairs mapped to (p, m, 3)."""
    jobs = [(tuple(t), z_max, z_cap) for t in sorted(set(map(tuple, pairs)))]
    return _run(_corollary_one, jobs, workers)
