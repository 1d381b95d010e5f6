"""Executable geometric checks for the generated-norm family.

Each suite probes one statement about the space (L^Phi, ||.||_{Phi,p}) at
desk scale: sampled positive directions are checked for violations, and
negative directions are backed by explicit constructions whose claimed
numbers are re-measured.  A suite returns a TheoremReport whose id is a
stable registry key (T1..T9, L1..L2, R2..R3):

    T1  planar sandwich bounds and ordering of the norm family
    T2  norm axioms of the generated norm
    L1  attainment of the defining infimum under fast growth
    L2  unit-ball bounds for elements pinned to the ball boundary
    T3  order almost-isometric embedding of the sup-norm sequence space
    T4  order isometric embedding on infinite atoms
    T5  strict convexity scan
    T6  strict monotonicity scan and flat-pair construction
    T7  norm-difference bound through the planar monotonicity modulus
    T8  lower local uniform monotonicity estimate
    T9  uniform monotonicity probe / failure construction
    R2  order continuity probe
    R3  modular-to-norm convergence equivalence probe

Hypothesis gates that fail mark the report "hypothesis-not-met" instead of
failing; violation records carry full input descriptors so that
replay_violation can re-evaluate them deterministically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .engine import K_CAP, generated_norm, lemma_bounds_check, luxemburg_norm
from .errors import DomainError
from .orlicz import (REGIME_GLOBAL, REGIME_INFINITY, REGIME_ZERO, OrliczFunction,
                     delta2_check, orlicz_from_descriptor, strict_convexity_probe)
from .planar import (MonotonicityModulusTable, PlanarNorm, build_modulus_table,
                     is_strictly_increasing_on_ray, l1, linf, planar_from_descriptor,
                     replay_sandwich_violation, strictly_monotone_probe, verify_sandwich)
from .spaces import (MeasureSpace, SimpleFunction, dominated_pair_sample, measure_space,
                     modular, simple_function, space_from_descriptor)

STATUS_PASSED = "passed"
STATUS_FAILED = "failed"
STATUS_HNM = "hypothesis-not-met"
STATUS_EMPTY = "empty-feasible"

SUITE_IDS = ("T1", "T2", "L1", "L2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "R2", "R3")


@dataclass
class TheoremReport:
    theorem_id: str
    status: str
    passed: bool
    trials: int
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "status": self.status,
                "passed": self.passed, "trials": self.trials,
                "violations": self.violations, "details": self.details}


def _passed(tid: str, trials: int, violations: list[dict], details: dict) -> TheoremReport:
    status = STATUS_PASSED if not violations else STATUS_FAILED
    return TheoremReport(tid, status, not violations, trials, violations, details)


def _hnm(tid: str, reason: str, **details) -> TheoremReport:
    return TheoremReport(tid, STATUS_HNM, True, 0, [], {"reason": reason, **details})


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _norm_value(phi, p, x, hints=()) -> float:
    return generated_norm(phi, p, x, k_hints=tuple(hints)).value


def _random_function(space: MeasureSpace, rng: np.random.Generator, scale: float = 1.0,
                     signed: bool = False) -> SimpleFunction:
    vals = np.zeros(space.n_atoms)
    fi = list(space.finite_indices)
    vals[fi] = rng.uniform(0.05, scale, len(fi))
    if signed:
        vals[fi] *= rng.choice([-1.0, 1.0], len(fi))
    return SimpleFunction(space, tuple(vals))


def suitable_delta2_regime(space: MeasureSpace) -> str:
    """Doubling regime matching the shape of the measure space: counting
    model (all weights 1) probes at zero, finite-weight spaces at infinity,
    anything with infinite atoms globally."""
    if space.has_infinite_atoms:
        return REGIME_GLOBAL
    if space.all_unit_weights:
        return REGIME_ZERO
    return REGIME_INFINITY


def _pack(phi: OrliczFunction, p: PlanarNorm, space: MeasureSpace | None = None) -> dict:
    out = {"phi": phi.descriptor(), "p": p.descriptor()}
    if space is not None:
        out["space"] = space.descriptor()
    return out


def _finite_phi_top(phi: OrliczFunction) -> float:
    """Largest argument at which Phi still evaluates to a finite double."""
    lo = 1.0
    hi = None
    v = lo
    for _ in range(140):
        v *= 2.0
        if math.isinf(phi.evaluate(v)):
            hi = v
            break
        lo = v
    if hi is None:
        return lo
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        if math.isinf(phi.evaluate(mid)):
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-9 * lo:
            break
    return lo


# ---------------------------------------------------------------------------
# T1: sandwich bounds and ordering of the family


def suite_sandwich_ordering(phi, p, space, *, seed: int = 0, budget: int = 200,
                            planar_samples: int = 10_000) -> TheoremReport:
    violations = list(verify_sandwich(p, planar_samples, seed).violations)
    rng = _rng(seed + 1)
    p_lo, p_hi = linf(), l1()
    for _ in range(budget):
        x = _random_function(space, rng, signed=True)
        v_mid = _norm_value(phi, p, x)
        v_lo = _norm_value(phi, p_lo, x)
        v_hi = _norm_value(phi, p_hi, x)
        if not (v_lo <= v_mid + 1e-9 and v_mid <= v_hi + 1e-9):
            violations.append({"kind": "ordering", **_pack(phi, p, space),
                               "values": list(x.values),
                               "smallest": v_lo, "middle": v_mid, "biggest": v_hi})
    return _passed("T1", planar_samples + budget, violations,
                   {"planar_samples": planar_samples, "functions": budget})


def _recheck_ordering(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["values"])
    v_mid = _norm_value(phi, p, x)
    v_lo = _norm_value(phi, linf(), x)
    v_hi = _norm_value(phi, l1(), x)
    return not (v_lo <= v_mid + 1e-9 and v_mid <= v_hi + 1e-9)


# ---------------------------------------------------------------------------
# T2: norm axioms


def suite_norm_axioms(phi, p, space, *, seed: int = 0, budget: int = 200) -> TheoremReport:
    rng = _rng(seed)
    violations: list[dict] = []
    zero = SimpleFunction(space, tuple([0.0] * space.n_atoms))
    if _norm_value(phi, p, zero) != 0.0:
        violations.append({"kind": "norm_zero", **_pack(phi, p, space),
                           "values": list(zero.values), "value": _norm_value(phi, p, zero)})
    for _ in range(budget):
        x = _random_function(space, rng, signed=True)
        y = _random_function(space, rng, signed=True)
        lam = float(rng.uniform(0.05, 4.0) * rng.choice([-1.0, 1.0]))
        nx = _norm_value(phi, p, x)
        ny = _norm_value(phi, p, y)
        nxy = _norm_value(phi, p, x.plus(y))
        if nxy > nx + ny + 1e-9:
            violations.append({"kind": "norm_triangle", **_pack(phi, p, space),
                               "x": list(x.values), "y": list(y.values),
                               "value": nxy, "bound": nx + ny})
        nlx = _norm_value(phi, p, x.scaled(lam))
        if abs(nlx - abs(lam) * nx) > 1e-9 * max(nx, 1e-12):
            violations.append({"kind": "norm_homogeneity", **_pack(phi, p, space),
                               "x": list(x.values), "lam": lam,
                               "value": nlx, "expected": abs(lam) * nx})
        if nx <= 0.0:
            violations.append({"kind": "norm_zero", **_pack(phi, p, space),
                               "values": list(x.values), "value": nx})
    return _passed("T2", budget, violations, {"triples": budget})


def _recheck_norm_triangle(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    y = simple_function(space, rec["y"])
    return _norm_value(phi, p, x.plus(y)) > _norm_value(phi, p, x) + _norm_value(phi, p, y) + 1e-9


def _recheck_norm_homogeneity(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    nx = _norm_value(phi, p, x)
    nlx = _norm_value(phi, p, x.scaled(rec["lam"]))
    return abs(nlx - abs(rec["lam"]) * nx) > 1e-9 * max(nx, 1e-12)


def _recheck_norm_zero(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["values"])
    v = _norm_value(phi, p, x)
    return (v != 0.0) if x.is_zero else (v <= 0.0)


# ---------------------------------------------------------------------------
# L1: attainment of the infimum


def suite_attainment(phi, p, space, *, seed: int = 0, budget: int = 50) -> TheoremReport:
    if math.isfinite(phi.slope_limit):
        return _hnm("L1", "needs an asymptotic slope diverging to infinity",
                    slope_limit=phi.slope_limit)
    rng = _rng(seed)
    violations = []
    for _ in range(budget):
        x = _random_function(space, rng, signed=True)
        r = generated_norm(phi, p, x)
        if not r.attained or r.k_star is None or (r.bracket and r.bracket[1] >= K_CAP):
            violations.append({"kind": "attainment", **_pack(phi, p, space),
                               "values": list(x.values), "attained": r.attained,
                               "bracket": list(r.bracket) if r.bracket else None})
    return _passed("L1", budget, violations, {"samples": budget})


def _recheck_attainment(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    r = generated_norm(phi, p, simple_function(space, rec["values"]))
    return not r.attained or r.k_star is None or (r.bracket and r.bracket[1] >= K_CAP)


# ---------------------------------------------------------------------------
# L2: unit-ball bounds


def suite_unit_ball_bounds(phi, p, space=None, *, seed: int = 0, budget: int = 0) -> TheoremReport:
    a = phi.zero_bound
    if a <= 0.0:
        return _hnm("L2", "needs a flat zone: largest zero of the generator must be positive")
    cases = []
    sp1 = measure_space([math.inf])
    cases.append(simple_function(sp1, [a]))
    sp2 = measure_space([math.inf, 1.0, 1.0])
    cases.append(simple_function(sp2, [a, 1.5 * a, 2.0 * a]))
    violations = []
    for x in cases:
        lb = lemma_bounds_check(phi, p, x)
        if not (lb.lower_ok and lb.upper_ok):
            violations.append({"kind": "unit_ball_bounds", **_pack(phi, p, x.space),
                               "values": list(x.values), "norm": lb.norm,
                               "modular": lb.modular_value})
    return _passed("L2", len(cases), violations, {"cases": len(cases)})


def _recheck_unit_ball_bounds(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    lb = lemma_bounds_check(phi, p, simple_function(space, rec["values"]))
    return not (lb.lower_ok and lb.upper_ok)


# ---------------------------------------------------------------------------
# T3 / T4: embeddings of the bounded-sequence space


@dataclass(frozen=True)
class LinfEmbeddingWitness:
    n: int
    basis: tuple[SimpleFunction, ...]
    epsilon: float
    eta: float | None
    exact: bool
    threshold_achieved: float | None

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.basis:
            sup = set(b.support)
            if sup & seen:
                raise DomainError("witness basis must have pairwise disjoint supports")
            seen |= sup
            if any(v < 0.0 for v in b.values):
                raise DomainError("witness basis must be nonnegative")
        if self.exact and not self.basis[0].space.has_infinite_atoms:
            raise DomainError("exact witness requires infinite atoms")


def _z_batch(n: int, count: int, rng: np.random.Generator) -> list[np.ndarray]:
    zs = [np.zeros(n), np.ones(n)]
    alt = np.ones(n)
    alt[1::2] = -1.0
    zs.append(alt)
    while len(zs) < count + 3:
        z = rng.uniform(-1.0, 1.0, n)
        if np.max(np.abs(z)) >= 0.05:
            zs.append(z)
    return zs


def build_linf_witness(phi, p, n: int, mode: str, *, epsilon: float = 0.1,
                       eta: float = 0.01, threshold: float = 1e9,
                       z_samples: int = 100, seed: int = 0):
    """Construct a positive embedding of the bounded-sequence space and
    measure its distortion.  Returns (witness, report); the witness is None
    when a hypothesis gate fails."""
    if mode == "exact":
        return _exact_witness(phi, p, n, z_samples=z_samples, seed=seed)
    if mode == "approximate":
        return _approximate_witness(phi, p, n, epsilon=epsilon, eta=eta,
                                    threshold=threshold, z_samples=z_samples, seed=seed)
    raise DomainError(f"unknown witness mode {mode!r}")


def _exact_witness(phi, p, n, *, z_samples, seed):
    a = phi.zero_bound
    if a <= 0.0:
        return None, _hnm("T4", "exact embedding needs a positive flat zone")
    space = measure_space([math.inf] * n)
    basis = tuple(simple_function(space, [a if j == i else 0.0 for j in range(n)])
                  for i in range(n))
    witness = LinfEmbeddingWitness(n, basis, epsilon=0.0, eta=None, exact=True,
                                   threshold_achieved=None)
    rng = _rng(seed)
    violations = []
    zs = _z_batch(n, z_samples, rng)
    for z in zs:
        pz = simple_function(space, a * z)
        nz = float(np.max(np.abs(z)))
        if nz == 0.0:
            got = _norm_value(phi, p, pz)
        else:
            got = _norm_value(phi, p, pz, hints=(1.0 / nz,))
        if abs(got - nz) > 1e-12:
            violations.append({"kind": "embedding_exact", **_pack(phi, p, space),
                               "z": [float(t) for t in z], "norm": got, "expected": nz})
    return witness, _passed("T4", len(zs), violations, {"n": n, "level": a})


def _recheck_embedding_exact(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    z = np.array(rec["z"])
    pz = simple_function(space, phi.zero_bound * z)
    nz = float(np.max(np.abs(z)))
    hints = (1.0 / nz,) if nz > 0 else ()
    return abs(_norm_value(phi, p, pz, hints=hints) - nz) > 1e-12


def _approximate_witness(phi, p, n, *, epsilon, eta, threshold, z_samples, seed):
    gate = delta2_check(phi, REGIME_INFINITY)
    if gate.holds:
        return None, _hnm("T3", "generator satisfies the doubling condition at infinity",
                          constant=gate.constant)
    v_top = _finite_phi_top(phi)
    hi_v = v_top / (1.0 + eta) * (1.0 - 1e-12)
    lo_v = max(phi.zero_bound * 1.01, 1e-6)
    if hi_v <= lo_v:
        return None, _hnm("T3", "no representable level range for the construction")

    levels, weights, achieved = [], [], []
    grid = np.geomspace(lo_v, hi_v, 400)
    fv = phi.evaluate_array(grid)
    f2v = phi.evaluate_array((1.0 + eta) * grid)
    for j in range(1, n + 1):
        target = epsilon / 2.0 ** j
        with np.errstate(invalid="ignore", divide="ignore"):
            ach = np.where(fv > 0.0, target * (f2v / np.where(fv > 0.0, fv, 1.0)), -math.inf)
        ok = np.isfinite(ach) & (ach >= threshold)
        if np.any(ok):
            i = int(np.argmax(ok))
            v_j, a_j = float(grid[i]), float(ach[i])
        else:
            i = int(np.nanargmax(np.where(np.isfinite(ach), ach, -math.inf)))
            v_j, a_j = float(grid[i]), float(ach[i])
        if not math.isfinite(a_j) or a_j < 2.0:
            return None, _hnm("T3", "double precision cannot hold the required modular jump",
                              best_achievable=a_j, level=v_j)
        w_j = target / phi.evaluate(v_j) * (1.0 - 1e-12)
        while w_j == 0.0 and i > 0:  # weight underflowed; step the level down
            i -= 1
            v_j, a_j = float(grid[i]), float(ach[i])
            w_j = target / phi.evaluate(v_j) * (1.0 - 1e-12)
        levels.append(v_j)
        weights.append(w_j)
        achieved.append(a_j)

    space = measure_space(weights)
    basis = tuple(simple_function(space, [levels[j] if j == i else 0.0 for j in range(n)])
                  for i in range(n))
    # re-measure the construction's own constants
    for j, b in enumerate(basis):
        mj = modular(phi, b)
        up = modular(phi, b, scale=1.0 + eta)
        if mj.is_infinite or mj.value > epsilon / 2.0 ** (j + 1) + 1e-15:
            return None, _hnm("T3", "constructed basis misses its modular budget",
                              index=j, modular=mj.value)
        if up.is_finite and up.value < 2.0:
            return None, _hnm("T3", "constructed basis does not jump above the floor",
                              index=j, scaled_modular=up.value)
    witness = LinfEmbeddingWitness(n, basis, epsilon=epsilon, eta=eta, exact=False,
                                   threshold_achieved=min(achieved))

    rng = _rng(seed)
    violations = []
    zs = _z_batch(n, z_samples, rng)
    for z in zs:
        pz = simple_function(space, np.array(levels) * z)
        nz = float(np.max(np.abs(z)))
        hints = (1.0 / nz,) if nz > 0 else ()
        got = _norm_value(phi, p, pz, hints=hints)
        lo_b = nz / (1.0 + eta) - 1e-6
        hi_b = (1.0 + epsilon) * nz + 1e-6
        if not (lo_b <= got <= hi_b):
            violations.append({"kind": "embedding_bounds", **_pack(phi, p, space),
                               "levels": levels, "z": [float(t) for t in z],
                               "norm": got, "lower": lo_b, "upper": hi_b,
                               "epsilon": epsilon, "eta": eta})
    details = {"n": n, "levels": levels, "weights": weights,
               "threshold_requested": threshold, "threshold_achieved": min(achieved)}
    return witness, _passed("T3", len(zs), violations, details)


def _recheck_embedding_bounds(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    z = np.array(rec["z"])
    pz = simple_function(space, np.array(rec["levels"]) * z)
    nz = float(np.max(np.abs(z)))
    hints = (1.0 / nz,) if nz > 0 else ()
    got = _norm_value(phi, p, pz, hints=hints)
    return not (nz / (1.0 + rec["eta"]) - 1e-6 <= got <= (1.0 + rec["epsilon"]) * nz + 1e-6)


# ---------------------------------------------------------------------------
# T5: strict convexity


def suite_strict_convexity(phi, p, space, *, seed: int = 0, budget: int = 200) -> TheoremReport:
    probe = strict_convexity_probe(phi, 512, seed)
    if not probe.strictly_convex:
        return _hnm("T5", "generator is not strictly convex", witness=list(probe.witness))
    if not is_strictly_increasing_on_ray(p):
        return _hnm("T5", "planar norm is flat on the vertical ray through (1, 0)")
    rng = _rng(seed)
    violations = []
    min_gap = math.inf
    trials = 0
    attempts = 0
    while trials < budget and attempts < 8 * budget:
        attempts += 1
        x = _random_function(space, rng, signed=True)
        y = _random_function(space, rng, signed=True)
        rx = generated_norm(phi, p, x)
        ry = generated_norm(phi, p, y)
        if not (rx.attained and ry.attained):
            return _hnm("T5", "attainment unavailable for a sample")
        xh = x.scaled(1.0 / rx.value)
        yh = y.scaled(1.0 / ry.value)
        if max(abs(a - b) for a, b in zip(xh.values, yh.values)) < 0.05:
            continue
        trials += 1
        mid = _norm_value(phi, p, xh.plus(yh).scaled(0.5))
        min_gap = min(min_gap, 1.0 - mid)
        if mid >= 1.0 - 1e-12:
            violations.append({"kind": "midpoint", **_pack(phi, p, space),
                               "x": list(xh.values), "y": list(yh.values), "midpoint_norm": mid})
    return _passed("T5", trials, violations,
                   {"pairs": trials, "min_midpoint_gap": None if trials == 0 else min_gap})


def _recheck_midpoint(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    y = simple_function(space, rec["y"])
    return _norm_value(phi, p, x.plus(y).scaled(0.5)) >= 1.0 - 1e-12


# ---------------------------------------------------------------------------
# T6: strict monotonicity


def suite_strict_monotonicity(phi, p, space, *, seed: int = 0, budget: int = 500) -> TheoremReport:
    a = phi.zero_bound
    rng = _rng(seed)
    if a == 0.0:
        violations = []
        skipped = 0
        for _ in range(budget):
            y = _random_function(space, rng)
            if rng.random() < 0.5:
                frac = rng.uniform(0.0, 0.95, space.n_atoms)
                x = SimpleFunction(space, tuple(f * v for f, v in zip(frac, y.values)))
            else:
                vals = list(y.values)
                j = int(rng.integers(0, space.n_atoms))
                vals[j] *= float(rng.uniform(0.0, 0.9))
                x = SimpleFunction(space, tuple(vals))
            ry = generated_norm(phi, p, y)
            if not ry.attained:
                skipped += 1
                continue
            nx = _norm_value(phi, p, x)
            if nx >= ry.value - 1e-9:
                violations.append({"kind": "strict_monotonicity", **_pack(phi, p, space),
                                   "x": list(x.values), "y": list(y.values),
                                   "norm_x": nx, "norm_y": ry.value})
        if skipped == budget:
            return _hnm("T6", "attainment unavailable for every sample")
        return _passed("T6", budget - skipped, violations,
                       {"pairs": budget - skipped, "skipped": skipped})

    # flat generator: build the explicit norm-preserving enlargement
    fi = list(space.finite_indices)
    if len(fi) < 2:
        # no atom can be left free; fall back to a random flat-pair search
        found = None
        for _ in range(budget):
            x, y = dominated_pair_sample(space, rng)
            if y.is_zero or x.values == y.values:
                continue
            if abs(_norm_value(phi, p, x) - _norm_value(phi, p, y)) <= 1e-9:
                found = {"x": list(x.values), "y": list(y.values)}
                break
        if found is not None:
            return _passed("T6", budget, [], {"fallback": "random-search",
                                              "flat_pair": found})
        return _hnm("T6", "no free finite atom and random search found no flat pair")
    free = fi[-1]
    vals = np.zeros(space.n_atoms)
    vals[fi[:-1]] = rng.uniform(0.5, 1.5, len(fi) - 1)
    y = SimpleFunction(space, tuple(vals))
    ry = generated_norm(phi, p, y)
    y = y.scaled(1.0 / ry.value)
    ry = generated_norm(phi, p, y)
    if not ry.attained or ry.k_star is None:
        return _hnm("T6", "attainment unavailable for the constructed element")
    k = ry.k_star
    zvals = list(y.values)
    zvals[free] = a / k
    z = SimpleFunction(space, tuple(zvals))
    nz = _norm_value(phi, p, z, hints=(k,))
    rec = {"kind": "flat_pair", **_pack(phi, p, space), "y": list(y.values),
           "z": list(z.values), "k": k, "norm_y": ry.value, "norm_z": nz}
    if abs(nz - ry.value) <= 1e-9:
        return _passed("T6", 1, [], {"constructed_flat_pair": rec})
    return _passed("T6", 1, [{**rec, "kind": "flat_pair_mismatch"}],
                   {"constructed_flat_pair": rec})


def _recheck_strict_monotonicity(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    y = simple_function(space, rec["y"])
    return _norm_value(phi, p, x) >= _norm_value(phi, p, y) - 1e-9


def _recheck_flat_pair_mismatch(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    y = simple_function(space, rec["y"])
    z = simple_function(space, rec["z"])
    ny = _norm_value(phi, p, y)
    nz = _norm_value(phi, p, z, hints=(rec["k"],))
    return abs(nz - ny) > 1e-9


# ---------------------------------------------------------------------------
# T7: the norm-difference bound through the planar modulus


def suite_decomposition_estimate(phi, p, space, *, seed: int = 0, budget: int = 500,
                                 table: MonotonicityModulusTable | None = None,
                                 resolution: float = 2e-3) -> TheoremReport:
    ok, wit = strictly_monotone_probe(p, 256, seed)
    if not ok:
        return _hnm("T7", "planar norm is not strictly monotone", witness=wit)
    if table is None:
        table = build_modulus_table(p, resolution=resolution)
    rng = _rng(seed)
    violations = []
    checked = 0
    attempts = 0
    while checked < budget and attempts < 8 * budget:
        attempts += 1
        x, y = dominated_pair_sample(space, rng)
        if y.is_zero:
            continue
        ry = generated_norm(phi, p, y)
        if not math.isfinite(ry.value) or ry.value <= 0.0:
            continue
        s = 1.0 / ry.value
        xs, ys = x.scaled(s), y.scaled(s)
        eps = modular(phi, xs)
        if eps.is_infinite or not (1e-6 < eps.value < 1.0 - 1e-6):
            continue
        checked += 1
        dfloor = table.floor_value(eps.value)
        rhs = 1.0 - dfloor + table.slack + 1e-6
        lhs = _norm_value(phi, p, ys.minus_dominated(xs))
        if lhs > rhs:
            violations.append({"kind": "decomposition", **_pack(phi, p, space),
                               "x": list(xs.values), "y": list(ys.values),
                               "modular_x": eps.value, "lhs": lhs,
                               "delta_floor": dfloor, "slack": table.slack})
    return _passed("T7", checked, violations,
                   {"checked": checked, "table_slack": table.slack,
                    "table_resolution": table.resolution})


def _recheck_decomposition(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    y = simple_function(space, rec["y"])
    lhs = _norm_value(phi, p, y.minus_dominated(x))
    return lhs > 1.0 - rec["delta_floor"] + rec["slack"] + 1e-6


# ---------------------------------------------------------------------------
# T8: lower local uniform monotonicity


def lower_local_um_estimate(phi, p, y: SimpleFunction, epsilon: float, *,
                            samples: int = 200, seed: int = 0,
                            table: MonotonicityModulusTable | None = None,
                            resolution: float = 2e-3):
    """Estimate the smallest modular of dominated pieces of y with norm >=
    epsilon, and check the norm-difference bound on the same samples.
    Returns (delta_hat, report)."""
    if phi.zero_bound != 0.0:
        return 0.0, _hnm("T8", "needs a generator vanishing only at zero")
    if any(v < 0.0 for v in y.values):
        raise DomainError("y must be nonnegative")
    ry = generated_norm(phi, p, y)
    y = y.scaled(1.0 / ry.value)
    if epsilon > 1.0:
        return 0.0, TheoremReport("T8", STATUS_EMPTY, True, 0, [],
                                  {"reason": "no dominated piece can reach the norm level",
                                   "epsilon": epsilon})
    if table is None:
        table = build_modulus_table(p, resolution=resolution)
    rng = _rng(seed)
    kept: list[tuple[SimpleFunction, float]] = []
    attempts = 0
    while len(kept) < samples and attempts < 8 * samples:
        attempts += 1
        base = float(rng.uniform(max(0.0, epsilon - 0.2), 1.0))
        frac = np.minimum(1.0, base + rng.uniform(0.0, 0.3, y.space.n_atoms))
        x = SimpleFunction(y.space, tuple(f * v for f, v in zip(frac, y.values)))
        nx = _norm_value(phi, p, x)
        if nx >= epsilon:
            kept.append((x, nx))
    if not kept:
        return 0.0, TheoremReport("T8", STATUS_EMPTY, True, 0, [],
                                  {"reason": "no sampled dominated piece reached the level",
                                   "epsilon": epsilon})
    delta_hat = min(modular(phi, x).value for x, _ in kept)
    dfloor = table.floor_value(delta_hat)
    rhs = 1.0 - dfloor + table.slack + 1e-6
    violations = []
    for x, nx in kept:
        lhs = _norm_value(phi, p, y.minus_dominated(x))
        if lhs > rhs:
            violations.append({"kind": "lower_local_um", **_pack(phi, p, y.space),
                               "x": list(x.values), "y": list(y.values),
                               "delta_floor": dfloor, "slack": table.slack, "lhs": lhs})
    if delta_hat <= 0.0:
        violations.append({"kind": "delta_hat_nonpositive", **_pack(phi, p, y.space),
                           "y": list(y.values), "epsilon": epsilon, "delta_hat": delta_hat})
    report = _passed("T8", len(kept), violations,
                     {"epsilon": epsilon, "delta_hat": delta_hat, "samples": len(kept)})
    return delta_hat, report


def suite_lower_local_um(phi, p, space, *, seed: int = 0, budget: int = 60,
                         table: MonotonicityModulusTable | None = None,
                         resolution: float = 2e-3) -> TheoremReport:
    if phi.zero_bound != 0.0:
        return _hnm("T8", "needs a generator vanishing only at zero")
    ok, wit = strictly_monotone_probe(p, 256, seed)
    if not ok:
        return _hnm("T8", "planar norm is not strictly monotone", witness=wit)
    if table is None:
        table = build_modulus_table(p, resolution=resolution)
    rng = _rng(seed)
    violations = []
    trials = 0
    deltas = {}
    for i, eps in enumerate((0.3, 0.5, 0.8)):
        y = _random_function(space, rng)
        d, rep = lower_local_um_estimate(phi, p, y, eps, samples=budget,
                                         seed=seed + 101 * i, table=table)
        trials += rep.trials
        violations += rep.violations
        deltas[str(eps)] = d
    return _passed("T8", trials, violations, {"delta_hat": deltas})


def _recheck_lower_local_um(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    y = simple_function(space, rec["y"])
    lhs = _norm_value(phi, p, y.minus_dominated(x))
    return lhs > 1.0 - rec["delta_floor"] + rec["slack"] + 1e-6


def _recheck_delta_hat_nonpositive(rec: dict) -> bool:
    return rec["delta_hat"] <= 0.0


# ---------------------------------------------------------------------------
# T9: uniform monotonicity


def suite_uniform_monotonicity(phi, p, space, *, seed: int = 0, budget: int = 120,
                               epsilon_grid: tuple[float, ...] = (0.25, 0.5, 0.75),
                               table: MonotonicityModulusTable | None = None,
                               resolution: float = 2e-3, n_max: int = 10) -> TheoremReport:
    ok, wit = strictly_monotone_probe(p, 256, seed)
    if not ok:
        return _hnm("T9", "planar norm is not strictly monotone", witness=wit)
    if phi.zero_bound > 0.0:
        return _hnm("T9", "generator has a flat zone; uniform monotonicity is out of reach")
    regime = suitable_delta2_regime(space)
    d2 = delta2_check(phi, regime)
    if d2.holds:
        return _um_positive(phi, p, space, seed=seed, budget=budget,
                            epsilon_grid=epsilon_grid, table=table, resolution=resolution,
                            regime=regime)
    return _um_failure_construction(phi, p, seed=seed, n_max=n_max, regime=regime)


def _um_positive(phi, p, space, *, seed, budget, epsilon_grid, table, resolution, regime):
    if table is None:
        table = build_modulus_table(p, resolution=resolution)
    rng = _rng(seed)
    violations = []
    trials = 0
    empirical = {}
    for eps in epsilon_grid:
        pairs = []
        attempts = 0
        while len(pairs) < budget and attempts < 8 * budget:
            attempts += 1
            x, y = dominated_pair_sample(space, rng)
            if y.is_zero:
                continue
            ry = generated_norm(phi, p, y)
            if not math.isfinite(ry.value) or ry.value <= 0.0:
                continue
            s = 1.0 / ry.value
            xs, ys = x.scaled(s), y.scaled(s)
            if _norm_value(phi, p, xs) >= eps:
                pairs.append((xs, ys))
                if len(pairs) % 16 == 1:
                    # the scaled witness x = eps*y pins the modulus at <= eps
                    pairs.append((ys.scaled(eps), ys))
        if not pairs:
            continue
        delta_hat = min(modular(phi, xs).value for xs, _ in pairs)
        dfloor = table.floor_value(delta_hat)
        rhs = 1.0 - dfloor + table.slack + 1e-6
        worst = 0.0
        for xs, ys in pairs:
            lhs = _norm_value(phi, p, ys.minus_dominated(xs))
            worst = max(worst, lhs)
            trials += 1
            if lhs > rhs:
                violations.append({"kind": "uniform_monotonicity", **_pack(phi, p, space),
                                   "x": list(xs.values), "y": list(ys.values),
                                   "delta_floor": dfloor, "slack": table.slack, "lhs": lhs})
        empirical[f"{eps:g}"] = {"delta_hat_modular": delta_hat,
                                 "empirical_modulus": 1.0 - worst, "pairs": len(pairs)}
    return _passed("T9", trials, violations,
                   {"branch": "positive", "regime": regime, "per_epsilon": empirical})


def _recheck_uniform_monotonicity(rec: dict) -> bool:
    return _recheck_lower_local_um(rec)


def _um_failure_construction(phi, p, *, seed, n_max, regime):
    """Doubling fails: exhibit additive perturbations with norms bounded away
    from zero that barely move the unit vector they are added to."""
    rng = _rng(seed)
    v_star = 0.98 * _finite_phi_top(phi)
    block = 3
    weights = [1.0] * block
    levels = []
    for n_ in range(1, n_max + 1):
        fv = phi.evaluate(v_star)
        if not math.isfinite(fv) or fv <= 0.0:
            return _hnm("T9", "no steep representable level available")
        w = (2.0 ** -n_) / fv * (1.0 - 1e-9)
        if w <= 0.0:
            return _hnm("T9", "steep-atom weight underflowed")
        weights.append(w)
        levels.append(v_star)
    space = measure_space(weights)

    xvals = np.zeros(space.n_atoms)
    xvals[:block] = rng.uniform(0.5, 1.5, block)
    x = SimpleFunction(space, tuple(xvals))
    rx = generated_norm(phi, p, x)
    x = x.scaled(1.0 / rx.value)
    rx = generated_norm(phi, p, x)
    if not rx.attained or rx.k_star is None:
        return _hnm("T9", "attainment unavailable for the constructed unit vector")
    k = rx.k_star
    if k <= 1.0 - 1e-9:
        return _hnm("T9", "constructed unit vector has its minimiser at or below 1")

    violations = []
    measured = []
    for i, n_ in enumerate(range(1, n_max + 1)):
        yvals = np.zeros(space.n_atoms)
        yvals[block + i] = levels[i] / k
        xn = SimpleFunction(space, tuple(yvals))
        mn = modular(phi, xn, scale=k)
        norm_xn = _norm_value(phi, p, xn)
        sum_norm = _norm_value(phi, p, x.plus(xn), hints=(k,))
        floor = 2.0 / (3.0 * k)
        rec = {"kind": "um_failure_construction", **_pack(phi, p, space),
               "x": list(x.values), "x_n": list(xn.values), "k": k, "n": n_,
               "modular_at_k": mn.value, "norm_x_n": norm_xn, "norm_sum": sum_norm,
               "floor": floor, "cap": 1.0 + 2.0 ** -n_}
        measured.append({"n": n_, "norm_x_n": norm_xn, "norm_sum": sum_norm,
                         "modular_at_k": mn.value})
        ok = (mn.is_finite and mn.value <= 2.0 ** -n_ + 1e-12
              and norm_xn >= floor - 1e-9
              and sum_norm <= 1.0 + 2.0 ** -n_ + 1e-9)
        if not ok:
            violations.append(rec)
    return _passed("T9", n_max, violations,
                   {"branch": "failure-construction", "regime": regime, "k": k,
                    "level": v_star, "measured": measured})


def _recheck_um_failure(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    x = simple_function(space, rec["x"])
    xn = simple_function(space, rec["x_n"])
    k, n_ = rec["k"], rec["n"]
    mn = modular(phi, xn, scale=k)
    norm_xn = _norm_value(phi, p, xn)
    sum_norm = _norm_value(phi, p, x.plus(xn), hints=(k,))
    ok = (mn.is_finite and mn.value <= 2.0 ** -n_ + 1e-12
          and norm_xn >= rec["floor"] - 1e-9
          and sum_norm <= rec["cap"] + 1e-9)
    return not ok


# ---------------------------------------------------------------------------
# R2 / R3: order continuity and modular-to-norm convergence


def _steep_tail_element(phi, n_levels: int, v_level: float | None = None):
    """Shrinking-weight atoms with per-atom modular 2^-j; the steep level is
    shared so tails keep a large norm exactly when doubling fails."""
    if v_level is None:
        v_level = 0.98 * _finite_phi_top(phi)
        if phi.kind == "power":  # growth is tame; growing levels keep weights sane
            v_level = None
    levels, weights = [], []
    for j in range(1, n_levels + 1):
        v = v_level if v_level is not None else 2.0 ** j
        fv = phi.evaluate(v)
        if not math.isfinite(fv) or fv <= 0.0:
            raise DomainError("no usable level for the tail construction")
        levels.append(v)
        weights.append((2.0 ** -j) / fv * (1.0 - 1e-9))
    space = measure_space(weights)
    x = simple_function(space, levels)
    return space, x, levels


def suite_order_continuity(phi, p, space, *, seed: int = 0, budget: int = 0,
                           n_max: int = 28) -> TheoremReport:
    regime = suitable_delta2_regime(space)
    d2 = delta2_check(phi, REGIME_INFINITY)
    violations = []
    if d2.holds:
        # dominated tails on a shrinking-weight space must lose their norm
        sp, x, levels = _steep_tail_element(phi, n_max)
        norms = []
        for n_ in range(1, n_max + 1):
            vals = [levels[j] if j >= n_ - 1 else 0.0 for j in range(n_max)]
            xn = simple_function(sp, vals)
            norms.append(_norm_value(phi, p, xn))
        if norms[-1] > 1e-2:
            violations.append({"kind": "order_continuity", **_pack(phi, p, sp),
                               "levels": levels, "tail_norms": norms})
        return _passed("R2", n_max, violations,
                       {"branch": "order-continuous", "tail_norms": norms,
                        "regime": regime})
    sp, x, levels = _steep_tail_element(phi, n_max)
    norms = []
    for n_ in range(1, n_max + 1):
        vals = [levels[j] if j >= n_ - 1 else 0.0 for j in range(n_max)]
        xn = simple_function(sp, vals)
        norms.append(_norm_value(phi, p, xn))
    mod_tail = modular(phi, simple_function(sp, [levels[j] if j >= n_max - 1 else 0.0
                                                 for j in range(n_max)]))
    stuck = min(norms) >= 0.9
    if not stuck:
        violations.append({"kind": "order_continuity_failure", **_pack(phi, p, sp),
                           "levels": levels, "tail_norms": norms})
    return _passed("R2", n_max, violations,
                   {"branch": "not-order-continuous", "tail_norms": norms,
                    "last_tail_modular": mod_tail.value, "regime": regime})


def _recheck_order_continuity(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    sp = space_from_descriptor(rec["space"])
    levels = rec["levels"]
    n_max = len(levels)
    vals = [levels[j] if j >= n_max - 1 else 0.0 for j in range(n_max)]
    last = _norm_value(phi, p, simple_function(sp, vals))
    if rec["kind"] == "order_continuity":
        return last > 1e-2
    return last < 0.9


def suite_modular_norm_equivalence(phi, p, space, *, seed: int = 0, budget: int = 0,
                                   n_max: int = 40, conv_tol: float = 1e-3,
                                   norm_floor: float = 0.9) -> TheoremReport:
    a = phi.zero_bound
    violations = []
    if a > 0.0:
        sp = measure_space([math.inf])
        x = simple_function(sp, [a])
        m = modular(phi, x)
        nx = _norm_value(phi, p, x, hints=(1.0,))
        if not (m.value == 0.0 and abs(nx - 1.0) <= 1e-9):
            violations.append({"kind": "flat_sequence", **_pack(phi, p, sp),
                               "values": list(x.values), "modular": m.value, "norm": nx})
        return _passed("R3", 1, violations,
                       {"branch": "flat-witness", "modular": m.value, "norm": nx})

    regime = suitable_delta2_regime(space)
    d2 = delta2_check(phi, regime)
    if d2.holds:
        rng = _rng(seed)
        base = _random_function(space, rng)
        norms = []
        for n_ in range(1, n_max + 1):
            c = _scale_to_modular(phi, base, 2.0 ** -n_)
            xn = base.scaled(c)
            norms.append(_norm_value(phi, p, xn))
        if norms[-1] > conv_tol:
            violations.append({"kind": "modular_norm_convergence", **_pack(phi, p, space),
                               "base": list(base.values), "norms": norms,
                               "n_max": n_max, "conv_tol": conv_tol})
        return _passed("R3", n_max, violations,
                       {"branch": "convergent", "regime": regime, "norms": norms})

    sp, x, levels = _steep_tail_element(phi, min(n_max, 20))
    norms, mods = [], []
    for j in range(len(levels)):
        vals = [levels[i] if i == j else 0.0 for i in range(len(levels))]
        xn = simple_function(sp, vals)
        m = modular(phi, xn)
        nx = _norm_value(phi, p, xn)
        mods.append(m.value)
        norms.append(nx)
        if not (m.value <= 2.0 ** -(j + 1) + 1e-15 and nx >= norm_floor):
            violations.append({"kind": "steep_sequence", **_pack(phi, p, sp),
                               "n": j + 1, "level": levels[j], "modular": m.value,
                               "norm": nx, "norm_floor": norm_floor})
    return _passed("R3", len(levels), violations,
                   {"branch": "counterexample", "regime": regime,
                    "modulars": mods, "norms": norms})


def _scale_to_modular(phi, x, target: float) -> float:
    """c with modular(c x) = target, by bisection (modulars grow with c)."""
    lo, hi = 0.0, 1.0
    while modular(phi, x, scale=hi).value < target:
        hi *= 2.0
        if hi > 1e18:
            raise DomainError("cannot reach the requested modular level")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if modular(phi, x, scale=mid).value < target:
            lo = mid
        else:
            hi = mid
    return lo


def _recheck_modular_norm_convergence(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    space = space_from_descriptor(rec["space"])
    base = simple_function(space, rec["base"])
    c = _scale_to_modular(phi, base, 2.0 ** -rec["n_max"])
    return _norm_value(phi, p, base.scaled(c)) > rec["conv_tol"]


def _recheck_flat_sequence(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    sp = space_from_descriptor(rec["space"])
    x = simple_function(sp, rec["values"])
    m = modular(phi, x)
    nx = _norm_value(phi, p, x, hints=(1.0,))
    return not (m.value == 0.0 and abs(nx - 1.0) <= 1e-9)


def _recheck_steep_sequence(rec: dict) -> bool:
    phi = orlicz_from_descriptor(rec["phi"])
    p = planar_from_descriptor(rec["p"])
    sp = space_from_descriptor(rec["space"])
    j = rec["n"] - 1
    vals = [rec["level"] if i == j else 0.0 for i in range(sp.n_atoms)]
    xn = simple_function(sp, vals)
    m = modular(phi, xn)
    nx = _norm_value(phi, p, xn)
    return not (m.value <= 2.0 ** -(j + 1) + 1e-15 and nx >= rec["norm_floor"])


# ---------------------------------------------------------------------------
# Registry, runner, replay


_SUITES = {
    "T1": suite_sandwich_ordering,
    "T2": suite_norm_axioms,
    "L1": suite_attainment,
    "L2": suite_unit_ball_bounds,
    "T5": suite_strict_convexity,
    "T6": suite_strict_monotonicity,
    "T7": suite_decomposition_estimate,
    "T8": suite_lower_local_um,
    "T9": suite_uniform_monotonicity,
    "R2": suite_order_continuity,
    "R3": suite_modular_norm_equivalence,
}


def run_suites(ids, phi, p, space, *, seed: int = 0, budget: int = 200) -> list[TheoremReport]:
    """Run the selected suites in registry order with shared inputs."""
    unknown = [i for i in ids if i not in SUITE_IDS]
    if unknown:
        raise DomainError(f"unknown suite ids {unknown}")
    reports = []
    for tid in SUITE_IDS:
        if tid not in ids:
            continue
        if tid == "T3":
            _, rep = build_linf_witness(phi, p, 4, "approximate", z_samples=min(budget, 100),
                                        seed=seed)
        elif tid == "T4":
            _, rep = build_linf_witness(phi, p, 4, "exact", z_samples=min(budget, 100),
                                        seed=seed)
        else:
            rep = _SUITES[tid](phi, p, space, seed=seed, budget=budget)
        reports.append(rep)
    return reports


_REPLAYERS = {
    "sandwich": replay_sandwich_violation,
    "ordering": _recheck_ordering,
    "norm_triangle": _recheck_norm_triangle,
    "norm_homogeneity": _recheck_norm_homogeneity,
    "norm_zero": _recheck_norm_zero,
    "attainment": _recheck_attainment,
    "unit_ball_bounds": _recheck_unit_ball_bounds,
    "embedding_exact": _recheck_embedding_exact,
    "embedding_bounds": _recheck_embedding_bounds,
    "midpoint": _recheck_midpoint,
    "strict_monotonicity": _recheck_strict_monotonicity,
    "flat_pair_mismatch": _recheck_flat_pair_mismatch,
    "decomposition": _recheck_decomposition,
    "lower_local_um": _recheck_lower_local_um,
    "delta_hat_nonpositive": _recheck_delta_hat_nonpositive,
    "uniform_monotonicity": _recheck_uniform_monotonicity,
    "um_failure_construction": _recheck_um_failure,
    "order_continuity": _recheck_order_continuity,
    "order_continuity_failure": _recheck_order_continuity,
    "modular_norm_convergence": _recheck_modular_norm_convergence,
    "flat_sequence": _recheck_flat_sequence,
    "steep_sequence": _recheck_steep_sequence,
}


def replay_violation(record: dict) -> bool:
    """Re-evaluate a violation record from its stored inputs.  Returns True
    when the record still describes a violation."""
    kind = record.get("kind")
    if kind not in _REPLAYERS:
        raise DomainError(f"no replayer for record kind {kind!r}")
    return _REPLAYERS[kind](record)
