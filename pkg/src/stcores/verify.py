"""Verification suites behind the CLI `verify` command.

Each suite re-checks a family of invariants at a configurable scale and
returns (check name, passed, detail) rows.  All randomness flows through a
seeded Random instance, so a fixed --seed reproduces a run exactly.
"""

from __future__ import annotations

import math
import random
from typing import Callable

from . import abacus, affine_actions as act, orbits, partitions as parts
from .abacus import core_from_s_set, q_set, size_from_s_set
from .alcoves import SPoint, alcove_key, origin, rhomboid_points, separating_hyperplanes
from .partitions import Partition

Check = tuple[str, bool, str]


def random_s_core(rng: random.Random, s: int, max_size: int) -> Partition:
    """A random s-core of size at most max_size (walk on s-sets, retry if big)."""
    while True:
        q = q_set(Partition(), s)
        for _ in range(rng.randrange(41)):
            q = act.chi_on_sset(rng.randrange(s), 1, q)
        if size_from_s_set(q) <= max_size:
            return core_from_s_set(q)


def random_s_point(rng: random.Random, s: int, spread: int = 5) -> SPoint:
    """A random s-point: one coordinate per residue class, zero total offset."""
    ks = [rng.randint(-spread, spread) for _ in range(s - 1)]
    ks.append(-sum(ks))
    coords = [r + s * k for r, k in zip(range(s), ks)]
    rng.shuffle(coords)
    return SPoint(tuple(coords))


def _coprime_ts(s: int, candidates=(1, 2, 3, 4, 5, 7)) -> list[int]:
    return [t for t in candidates if math.gcd(s, t) == 1]


def suite_core_oracle(s_max: int, t_max: int, seed: int, trials: int) -> list[Check]:
    size_max = min(16, max(8, trials // 16))
    corpus = list(parts.partitions_up_to(size_max))
    bad_core = []
    bad_flag = []
    bad_beta = []
    for p in corpus:
        if abacus.partition_from_beta_set(abacus.beta_set(p)) != p:
            bad_beta.append(p)
        for s in range(1, s_max + 1):
            if abacus.core(p, s) != parts.brute_core(p, s):
                bad_core.append((p, s))
            hooks_say = parts.is_s_core_by_hooks(p, s)
            if hooks_say != abacus.is_s_core(p, s) or hooks_say != (
                not parts.removable_rim_hooks(p, s)
            ):
                bad_flag.append((p, s))
    scale = f"|p| <= {size_max}, s <= {s_max}"
    return [
        ("core-oracle.bead-slide-vs-brute", not bad_core, f"{scale}: {len(bad_core)} mismatches"),
        ("core-oracle.s-core-tests-agree", not bad_flag, f"{scale}: {len(bad_flag)} mismatches"),
        ("core-oracle.beta-round-trip", not bad_beta, f"{scale}: {len(bad_beta)} mismatches"),
    ]


def _relation_failures(gen: Callable[[int, SPoint], SPoint], s: int, p: SPoint) -> bool:
    for i in range(s):
        if gen(i, gen(i, p)) != p:
            return True
    for i in range(s):
        for j in range(i + 1, s):
            near = (i - j) % s in (1, s - 1)
            if not near:
                if gen(i, gen(j, p)) != gen(j, gen(i, p)):
                    return True
            elif (j + 1) % s != (j - 1) % s:
                if gen(i, gen(j, gen(i, p))) != gen(j, gen(i, gen(j, p))):
                    return True
    return False


def suite_actions(s_max: int, t_max: int, seed: int, trials: int) -> list[Check]:
    rng = random.Random(seed)
    fails = {"psi": 0, "chi": 0, "commute": 0, "agree": 0, "adjacent": 0}
    n_points = 0
    for s in range(2, s_max + 1):
        for t in _coprime_ts(s):
            if t > t_max:
                continue
            for i in range(s):
                if alcove_key(act.psi_gen(i, 1, origin(s))) != alcove_key(act.chi_gen(i, 1, origin(s))):
                    fails["agree"] += 1
            for _ in range(max(1, trials // 10)):
                p = random_s_point(rng, s)
                n_points += 1
                if _relation_failures(lambda i, q: act.psi_gen(i, t, q), s, p):
                    fails["psi"] += 1
                if _relation_failures(lambda i, q: act.chi_gen(i, t, q), s, p):
                    fails["chi"] += 1
                a = rng.randrange(s)
                b = rng.randrange(s)
                left = alcove_key(act.psi_gen(a, t, act.chi_gen(b, t, p)))
                right = alcove_key(act.chi_gen(b, t, act.psi_gen(a, t, p)))
                if left != right:
                    fails["commute"] += 1
                if len(separating_hyperplanes(p, act.chi_gen(rng.randrange(s), 1, p))) != 1:
                    fails["adjacent"] += 1
    detail = f"{n_points} random points, s <= {s_max}"
    return [
        ("actions.relations-psi", fails["psi"] == 0, f"{detail}: {fails['psi']} failures"),
        ("actions.relations-chi", fails["chi"] == 0, f"{detail}: {fails['chi']} failures"),
        ("actions.commutation", fails["commute"] == 0, f"{detail}: {fails['commute']} failures"),
        ("actions.level1-agreement", fails["agree"] == 0, f"origin alcove: {fails['agree']} failures"),
        ("actions.adjacency", fails["adjacent"] == 0, f"{detail}: {fails['adjacent']} failures"),
    ]


def suite_olsson(s_max: int, t_max: int, seed: int, trials: int) -> list[Check]:
    rng = random.Random(seed)
    pairs = [
        (s, t)
        for s in range(2, s_max + 1)
        for t in range(2, t_max + 1)
        if math.gcd(s, t) == 1
    ]
    not_score = 0
    descent_diff = 0
    not_monotone = 0
    for _ in range(trials):
        s, t = rng.choice(pairs)
        lam = random_s_core(rng, s, 200)
        tcore = abacus.core(lam, t)
        if not abacus.is_s_core(tcore, s):
            not_score += 1
        nu, trace = orbits.descend_to_t_core(lam, s, t)
        if nu != tcore:
            descent_diff += 1
        seq = trace.sum_sq_sequence()
        if any(later >= earlier for earlier, later in zip(seq, seq[1:])):
            not_monotone += 1
    detail = f"{trials} random s-cores, s <= {s_max}, t <= {t_max}"
    return [
        ("olsson.t-core-is-s-core", not_score == 0, f"{detail}: {not_score} failures"),
        ("olsson.descent-matches-abacus", descent_diff == 0, f"{detail}: {descent_diff} failures"),
        ("olsson.descent-strictly-decreasing", not_monotone == 0, f"{detail}: {not_monotone} failures"),
    ]


def suite_vandehey(s_max: int, t_max: int, seed: int, trials: int) -> list[Check]:
    kane_bad = []
    count_bad = []
    contain_bad = []
    chain_bad = []
    for s in range(2, s_max + 1):
        for t in range(s + 1, t_max + 1):
            if math.gcd(s, t) != 1:
                continue
            kap = orbits.kappa(s, t)
            if parts.size(kap) != (s * s - 1) * (t * t - 1) // 24:
                kane_bad.append((s, t))
            cores = orbits.enumerate_st_cores(s, t)
            if len(cores) != orbits.anderson_count(s, t):
                count_bad.append((s, t))
            if not all(parts.contains(kap, c) for c in cores):
                contain_bad.append((s, t))
    chain_s_max = min(s_max, 5)
    chain_t_max = min(t_max, 5)
    for s in range(2, chain_s_max + 1):
        for t in range(1, chain_t_max + 1):
            if math.gcd(s, t) != 1:
                continue
            kap = orbits.kappa(s, t)
            for p in rhomboid_points(s, t):
                chain = orbits.containment_chain(p, s, t)
                grows = all(
                    parts.contains(big, small)
                    for small, big in zip(chain.cores, chain.cores[1:])
                )
                if not grows or chain.cores[-1] != kap:
                    chain_bad.append((s, t, p))
    grid = f"coprime s < t, s <= {s_max}, t <= {t_max}"
    chain_grid = f"all rhomboid points, s <= {chain_s_max}, t <= {chain_t_max}"
    return [
        ("vandehey.kane-size", not kane_bad, f"{grid}: {len(kane_bad)} failures"),
        ("vandehey.anderson-count", not count_bad, f"{grid}: {len(count_bad)} failures"),
        ("vandehey.containment", not contain_bad, f"{grid}: {len(contain_bad)} failures"),
        ("vandehey.chains", not chain_bad, f"{chain_grid}: {len(chain_bad)} failures"),
    ]


SUITES: dict[str, Callable[[int, int, int, int], list[Check]]] = {
    "core-oracle": suite_core_oracle,
    "actions": suite_actions,
    "olsson": suite_olsson,
    "vandehey": suite_vandehey,
}


def run_suites(names: list[str], s_max: int, t_max: int, seed: int, trials: int) -> list[Check]:
    checks = []
    for name in names:
        checks.extend(SUITES[name](s_max, t_max, seed, trials))
    return checks
