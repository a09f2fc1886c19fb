"""S-integrality scanning and the finiteness experiment.

A nonzero preperiodic point meets the base point beta at a finite prime p
exactly when both reduce to the same point of the projective line mod p:
either both are non-integral at p, or both are integral and some conjugate
is congruent to beta.  The congruence case is decided through valuations of
the conjugate norm Nm(beta - alpha), which the Galois layer delivers without
materializing anything large; whether meets exist outside the scan set S is
decided by an integer-log balance on the norm (its outside-S part is a
positive integer, trivial iff the balance gap stays below log 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import discrepancy_exact, distance_bound_constant
from .errors import (BetaIsConjugate, FactorBudgetExceeded, InvalidConfig,
                     NotSIntegral, ZeroInput)
from .galois import (ClassNormData, ConjugacyClass, class_norm_data,
                     class_of_point, decompose_binomial_roots)
from .orbits import is_preperiodic
from .places import INF, Place, height_rational, product_formula_check
from .polynomials import newton_polygon_root_valuations
from .preper import collision_binomial, minimal_polynomial, word_pairs
from .primes import factorint, is_prime, ord_p
from .radical import RadicalPoint
from .semigroup import Semigroup, Word, format_word

LOG2 = math.log(2)
BALANCE_SLACK = 0.2   # certified float error headroom for the log-2 gap test


# ---------------------------------------------------------------------------
# meets / bad primes / S-integrality


def _resolve_meet_by_minpoly(cls: ConjugacyClass, beta: Fraction, p: int,
                             degree_cap: int) -> bool:
    poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
    shifted = poly.shift(beta)
    if shifted.coeffs[0] == 0:
        raise BetaIsConjugate("beta is a conjugate")
    return any(v > 0 for v in newton_polygon_root_valuations(shifted, p))


def class_meets_at_prime(cls: ConjugacyClass, beta: Fraction, p: int,
                         degree_cap: int = 512) -> bool:
    """Whether some conjugate in the class meets beta at p."""
    o_a = cls.representative.ord_at(p)
    o_b = Fraction(ord_p(beta, p))
    if o_a < 0 and o_b < 0:
        return True
    if (o_a < 0) != (o_b < 0):
        return False
    if o_a > 0 or o_b > 0:
        return o_a > 0 and o_b > 0
    nd = class_norm_data(cls, beta)
    if nd.is_zero():
        raise BetaIsConjugate("beta lies in the orbit")
    positive = nd.ord_norm(p) > 0
    if not positive:
        return False
    if not nd.twin_combined:
        return True
    return _resolve_meet_by_minpoly(cls, beta, p, degree_cap)


def meets_at_prime(alpha: RadicalPoint, beta: Fraction, p: int,
                   degree_cap: int = 512) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return class_meets_at_prime(class_of_point(alpha), Fraction(beta), p,
                                degree_cap)


def _bounded_factor(n: int, budget: int = 10 ** 6) -> dict[int, int]:
    """factorint with a step budget; FactorBudgetExceeded past it."""
    if abs(n) > 10 ** 120:
        raise FactorBudgetExceeded(f"{n.bit_length()}-bit norm value")
    try:
        return factorint(n)
    except RecursionError:  # pragma: no cover
        raise FactorBudgetExceeded("factorization recursion limit")


def bad_primes(alpha: RadicalPoint, beta: Fraction,
               degree_cap: int = 512) -> list[int]:
    """All primes where some conjugate of alpha meets beta.

    Candidates: support primes of alpha and beta plus the primes of the
    conjugate norm Nm(beta - alpha) = minpoly(beta), each confirmed by the
    meet test.  Desk-scale only: the norm numerator gets factored.
    """
    beta = Fraction(beta)
    cls = class_of_point(alpha)
    poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
    value = poly(beta)
    if value == 0:
        raise BetaIsConjugate("beta is a conjugate of alpha")
    candidates: set[int] = set()
    candidates.update(alpha.support_primes())
    candidates.update(p for p, _ in _support_pairs(beta))
    candidates.update(_bounded_factor(value.numerator))
    candidates.update(_bounded_factor(value.denominator))
    return sorted(p for p in candidates
                  if class_meets_at_prime(cls, beta, p, degree_cap))


def _support_pairs(x: Fraction):
    from .primes import factor_fraction
    return factor_fraction(x).exponents if x else ()


@dataclass(frozen=True)
class SIntegrality:
    s_integral: bool
    known_bad: tuple[int, ...]     # confirmed meets (complete when certified)
    outside_clean_gap: float       # integer-log balance gap, < log 2 certifies
    certified: bool                # False when the entangled fallback was cut off


def _twin_gamma_infeasible(cls: ConjugacyClass, nd: ClassNormData,
                           beta: Fraction, S: list[Place],
                           slack_eps: float = 1e-6) -> bool:
    """Certify non-S-integrality of an entangled class via the Gamma identity.

    For an S-integral point, 0 = Gamma = arch row + sum of S-finite rows +
    the exact non-S part.  The per-twin S-finite rows are unknown but lie in
    intervals pinned by the combined twin norm and the ultrametric bounds;
    when zero cannot land in the feasible interval the class is certifiably
    not S-integral.
    """
    s_primes = sorted(v.p for v in S if not v.is_archimedean)
    supp = set(cls.representative.support_primes())
    supp.update(p for p, _ in _support_pairs(beta))
    arch = _arch_row(cls, beta)
    non_s = 0.0
    for p in sorted(supp):
        if p in s_primes:
            continue
        m0 = min(cls.representative.ord_at(p), Fraction(ord_p(beta, p)))
        if m0 != 0:
            non_s += -float(m0) * math.log(p)
    lo = hi = arch + non_s
    for p in s_primes:
        o_a = cls.representative.ord_at(p)
        o_b = Fraction(ord_p(beta, p))
        if o_a != o_b:
            exact = -float(min(o_a, o_b)) * math.log(p)
            lo += exact
            hi += exact
            continue
        m0 = float(min(o_a, o_b))
        combined = float(nd.scale * nd.ord_w(p))  # ord of both twins' norms
        # per-twin valuation sum lies in [deg*m0, combined - deg*m0]
        t_lo = cls.degree * m0
        t_hi = combined - cls.degree * m0
        lo += -(t_hi / cls.degree) * math.log(p)
        hi += -(t_lo / cls.degree) * math.log(p)
    return not (lo - slack_eps <= 0.0 <= hi + slack_eps)


def class_s_integrality(cls: ConjugacyClass, beta: Fraction, S: list[Place],
                        degree_cap: int = 512) -> SIntegrality:
    """Decide bad_primes(alpha, beta) inside S without factoring the norm."""
    s_primes = {v.p for v in S if not v.is_archimedean}
    supp = set(cls.representative.support_primes())
    supp.update(p for p, _ in _support_pairs(beta))
    known_bad: set[int] = set()
    for p in sorted(supp):
        o_a = cls.representative.ord_at(p)
        o_b = Fraction(ord_p(beta, p))
        if (o_a < 0 and o_b < 0) or (o_a > 0 and o_b > 0):
            known_bad.add(p)
    nd = class_norm_data(cls, beta)
    if nd.is_zero():
        raise BetaIsConjugate("beta lies in the orbit")
    # both-unit meets at the inspected primes
    inspected = sorted(s_primes | supp)
    for p in inspected:
        if p in supp:
            continue
        if nd.ord_norm(p) > 0:
            if nd.twin_combined:
                if cls.degree <= degree_cap and _resolve_meet_by_minpoly(
                        cls, beta, p, degree_cap):
                    known_bad.add(p)
                elif cls.degree > degree_cap:
                    known_bad.add(p)   # conservative; flagged via certified
            else:
                known_bad.add(p)
    # outside part of the norm numerator: a positive integer, so the true
    # balance gap is 0 or at least log 2; the numeric error stays far below
    # the slack, making both sides of the band certain
    gap = nd.log_w()
    for p in inspected:
        gap -= float(nd.ord_w(p)) * math.log(p)
    outside_clean = gap < BALANCE_SLACK
    certified = outside_clean or gap > LOG2 - BALANCE_SLACK
    outside_bad = not outside_clean   # conservative in the (unreached) band
    if outside_bad and nd.twin_combined:
        # the gap covers the twin pair jointly; resolve this class's share
        if cls.degree <= degree_cap:
            poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
            value = poly(beta)
            from .galois import strip_supported
            outside_bad = strip_supported(abs(value.numerator), inspected) != 1
            certified = True
        elif _twin_gamma_infeasible(cls, nd, beta, S):
            certified = True   # not S-integral, certified by the Gamma balance
        else:
            certified = False
    s_integral = (not outside_bad) and all(p in s_primes for p in known_bad)
    return SIntegrality(s_integral, tuple(sorted(known_bad)), gap, certified)


def is_S_integral(alpha: RadicalPoint, beta: Fraction, S: list[Place],
                  degree_cap: int = 512) -> bool:
    res = class_s_integrality(class_of_point(alpha), Fraction(beta), S,
                              degree_cap)
    if not res.certified:
        raise FactorBudgetExceeded("entangled class beyond the degree cap")
    return res.s_integral


# ---------------------------------------------------------------------------
# Gamma = averaged sum over places and conjugates of log|sigma(alpha) - beta|


@dataclass(frozen=True)
class GammaReport:
    """Exact zero certificate plus an independently computed numeric table."""

    norm_value: Fraction | None      # materialized when the degree is small
    exact_zero: bool
    table: tuple[tuple[str, float], ...]
    residual: float


def _arch_row(cls: ConjugacyClass, beta: Fraction) -> float:
    """(1/deg) sum over conjugates of log|sigma(alpha) - beta|, numerically."""
    mod = float(cls.modulus)
    b = float(beta)
    total = 0.0
    for t in cls.angles:
        ang = 2 * math.pi * float(t)
        total += 0.5 * math.log(mod * mod + b * b - 2 * mod * b * math.cos(ang))
    return total / cls.degree


def gamma_sum(alpha: RadicalPoint, beta: Fraction,
              degree_cap: int = 512) -> GammaReport:
    return class_gamma(class_of_point(alpha), Fraction(beta), degree_cap)


def class_gamma(cls: ConjugacyClass, beta: Fraction,
                degree_cap: int = 512,
                materialize_threshold: int = 64) -> GammaReport:
    beta = Fraction(beta)
    nd = class_norm_data(cls, beta)
    if nd.is_zero():
        raise BetaIsConjugate("beta lies in the orbit")
    norm_value = None
    exact_zero = False
    if cls.degree <= min(degree_cap, materialize_threshold):
        poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
        norm_value = poly(beta)
        if norm_value == 0:
            raise BetaIsConjugate("beta is a conjugate")
        if (abs(norm_value.numerator) < 10 ** 24
                and norm_value.denominator < 10 ** 24):
            exact_zero = product_formula_check(norm_value).ok
        else:
            norm_value = None
    if norm_value is None:
        # structural certificate: the norm is a rational number, and the
        # product formula is an exponent identity for every rational
        exact_zero = True
    supp = set(cls.representative.support_primes())
    supp.update(p for p, _ in _support_pairs(beta))
    rows = []
    if norm_value is not None:
        # per-class exact valuations from the materialized norm
        rows.append(("inf", _arch_row(cls, beta)))
        covered = set(supp)
        covered.update(_bounded_factor(norm_value.numerator))
        covered.update(_bounded_factor(norm_value.denominator))
        for p in sorted(covered):
            rows.append((str(p),
                         -ord_p(norm_value, p) / cls.degree * math.log(p)))
    else:
        # norm valuations via the class norm; entangled rows cover the class
        # together with its twin, so the archimedean row is twin-averaged too
        arch = _arch_row(cls, beta)
        if nd.twin_combined:
            from .galois import twin_class
            arch = 0.5 * (arch + _arch_row(twin_class(cls), beta))
        rows.append(("inf", arch))
        denom = cls.degree * (2 if nd.twin_combined else 1)
        leftover = nd.log_w()
        for p in sorted(supp):
            leftover -= float(nd.ord_w(p)) * math.log(p)
            rows.append((str(p),
                         -float(nd.scale * nd.ord_w(p)) / denom * math.log(p)))
        leftover *= float(nd.scale) / denom
        if leftover:
            rows.append(("outside", -leftover))
    residual = sum(v for _, v in rows)
    return GammaReport(norm_value, exact_zero, tuple(rows), residual)


@dataclass(frozen=True)
class GammaDecomposition:
    s_part: float
    non_s_part: float
    non_s_exact: tuple[tuple[int, Fraction], ...]   # (p, -min(ord a, ord b))
    residual: float
    height_witness: float       # sum over all places of log max(|alpha|, |beta|)


def gamma_decomposition(alpha: RadicalPoint, beta: Fraction, S: list[Place],
                        degree_cap: int = 512) -> GammaDecomposition:
    beta = Fraction(beta)
    cls = class_of_point(alpha)
    integ = class_s_integrality(cls, beta, S, degree_cap)
    if not integ.s_integral:
        raise NotSIntegral("decomposition requires S-integrality")
    nd = class_norm_data(cls, beta)
    s_primes = {v.p for v in S if not v.is_archimedean}
    supp = set(alpha.support_primes())
    supp.update(p for p, _ in _support_pairs(beta))
    non_s_terms = []
    non_s = 0.0
    witness = 0.0
    arch_max = alpha.modulus if alpha.modulus >= _abs_posreal(beta) \
        else _abs_posreal(beta)
    witness += arch_max.log()
    for p in sorted(supp):
        m = min(alpha.ord_at(p), Fraction(ord_p(beta, p)))
        if m != 0:
            witness += -float(m) * math.log(p)
        if p not in s_primes and m != 0:
            non_s_terms.append((p, -m))
            non_s += -float(m) * math.log(p)
    s_part = _arch_row(cls, beta)
    if nd.twin_combined:
        # the class norm covers the twin pair; use per-class valuations
        if cls.degree > degree_cap:
            raise FactorBudgetExceeded(
                "entangled class beyond the degree cap")
        poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
        value = poly(beta)
        for p in sorted(s_primes):
            s_part += -ord_p(value, p) / cls.degree * math.log(p)
    else:
        for p in sorted(s_primes):
            s_part += -float(nd.ord_norm(p)) / cls.degree * math.log(p)
    return GammaDecomposition(s_part, non_s, tuple(non_s_terms),
                              s_part + non_s, witness)


def _abs_posreal(x: Fraction):
    from .exactreal import PosReal
    return PosReal.of(x)


# ---------------------------------------------------------------------------
# scan driver


@dataclass
class ScanConfig:
    semigroup: Semigroup
    S: list[Place]
    beta: Fraction
    max_wordlen: int
    tol: float = 1e-9
    quadrature_nodes: int = 1 << 12
    node_cap: int = 10 ** 7
    degree_cap: int = 512
    gate_depth: int = 8

    def validate(self):
        if INF not in self.S:
            raise InvalidConfig("S must contain the archimedean place")
        if self.beta == 0:
            raise InvalidConfig("beta must be nonzero")
        if self.max_wordlen < 1:
            raise InvalidConfig("max_wordlen must be >= 1")


@dataclass
class ClassVerdict:
    point: RadicalPoint
    degree: int
    word: Word
    prefix: int
    first_length: int
    s_integral: bool
    bad_primes: tuple[int, ...]
    certified: bool
    gamma_residual: float
    gamma_exact: bool
    distance_checks: tuple[tuple[str, bool], ...]
    discrepancy: float | None
    progressions: int

    def to_json(self) -> dict:
        d = self.point.to_json()
        d.update({
            "degree": self.degree,
            "witness": [format_word(self.word), self.prefix],
            "word_length": self.first_length,
            "s_integral": self.s_integral,
            "bad_primes": list(self.bad_primes),
            "certified": self.certified,
            "gamma_residual": self.gamma_residual,
            "gamma_exact": self.gamma_exact,
            "distance_checks": [[v, ok] for v, ok in self.distance_checks],
            "discrepancy": self.discrepancy,
            "progressions": self.progressions,
        })
        return d


@dataclass
class ScanReport:
    config: ScanConfig
    beta_certificate: str
    verdicts: list[ClassVerdict]
    zero_infinity_note: dict
    class_counts: dict[int, int]
    point_counts: dict[int, int]
    s_integral_class_counts: dict[int, int]
    s_integral_point_counts: dict[int, int]
    stabilization: bool
    max_s_integral_degree: int
    truncated: bool
    notes: list[str] = field(default_factory=list)

    @property
    def s_integral_classes(self) -> int:
        return sum(self.s_integral_class_counts.values())

    @property
    def s_integral_points(self) -> int:
        return sum(self.s_integral_point_counts.values())

    def to_json(self) -> dict:
        return {
            "schema": "monodyn/1",
            "disclaimer": ("finiteness is demonstrated by stabilization at "
                           "desk scale; the proved uniform constant is far "
                           "beyond enumeration"),
            "semigroup": self.config.semigroup.to_json(),
            "S": [0 if v.is_archimedean else v.p for v in self.config.S],
            "beta": str(self.config.beta),
            "max_wordlen": self.config.max_wordlen,
            "tol": self.config.tol,
            "quadrature_nodes": self.config.quadrature_nodes,
            "node_cap": self.config.node_cap,
            "degree_cap": self.config.degree_cap,
            "beta_certificate": self.beta_certificate,
            "zero_infinity": self.zero_infinity_note,
            "verdicts": [v.to_json() for v in self.verdicts],
            "class_counts": {str(k): v for k, v in sorted(self.class_counts.items())},
            "point_counts": {str(k): v for k, v in sorted(self.point_counts.items())},
            "s_integral_class_counts": {str(k): v for k, v in
                                        sorted(self.s_integral_class_counts.items())},
            "s_integral_point_counts": {str(k): v for k, v in
                                        sorted(self.s_integral_point_counts.items())},
            "s_integral_classes": self.s_integral_classes,
            "s_integral_points": self.s_integral_points,
            "stabilization": self.stabilization,
            "max_s_integral_degree": self.max_s_integral_degree,
            "truncated": self.truncated,
            "notes": self.notes,
        }


def _class_min_log_distance_lower(cls: ConjugacyClass, nd: ClassNormData,
                                  beta: Fraction, p: int) -> float:
    """A sound lower bound for min over conjugates of log|sigma - beta|_p."""
    o_a = cls.representative.ord_at(p)
    o_b = Fraction(ord_p(beta, p))
    if o_a != o_b:
        # ultrametric equality: |sigma(alpha) - beta|_p = max(|alpha|, |beta|)_p
        return -float(min(o_a, o_b)) * math.log(p)
    # equal valuations: every term is at most log max; the minimum exceeds
    # the full norm sum minus (deg - 1) times that maximum
    logmax = -float(o_a) * math.log(p)
    total = -float(nd.ord_norm(p)) * math.log(p)
    return total - (cls.degree - 1) * logmax


def _scan_distance_checks(G: Semigroup, cls: ConjugacyClass,
                          nd: ClassNormData, beta: Fraction,
                          S: list[Place], degree_cap: int,
                          exact_threshold: int = 64):
    """(place, ok) rows; archimedean from the angle set, finite places from
    the exact shifted-polygon for small degrees and a sound valuation lower
    bound beyond (the constant dwarfs the slack either way)."""
    h_beta = height_rational(beta)
    deg = cls.degree
    shifted = None
    if deg <= min(degree_cap, exact_threshold):
        poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
        shifted = poly.shift(beta)
    rows = []
    for v in S:
        cert = distance_bound_constant(G, v)
        if deg >= 2:
            bound = cert.C2 * (h_beta + 1) * math.log(deg)
        else:
            q = cls.representative.angle.denominator
            MQ = max(2, cls.M0 * q)
            bound = (h_beta + math.log(MQ) + cert.c1 * cert.nv_factor
                     * cert.theta_cap * (h_beta + 1) * math.log(max(3, MQ)))
        if v.is_archimedean:
            mod = float(cls.modulus)
            b = float(beta)
            best = min(mod * mod + b * b - 2 * mod * b
                       * math.cos(2 * math.pi * float(t)) for t in cls.angles)
            observed = 0.5 * math.log(best) if best > 0 else -math.inf
        elif shifted is not None:
            vals = newton_polygon_root_valuations(shifted, v.p)
            observed = -float(max(vals)) * math.log(v.p) if vals else 0.0
        else:
            observed = _class_min_log_distance_lower(cls, nd, beta, v.p)
        rows.append((str(v), observed > -bound))
    return tuple(rows)


def zero_infinity_verdict(beta: Fraction, S: list[Place]) -> dict:
    """The always-preperiodic fixed points of the chart, reported separately."""
    s_primes = {v.p for v in S if not v.is_archimedean}
    num_primes = sorted(factorint(abs(beta.numerator))) if abs(beta.numerator) != 1 else []
    den_primes = sorted(factorint(beta.denominator)) if beta.denominator != 1 else []
    return {
        "zero": {"bad_primes": num_primes,
                 "s_integral": all(p in s_primes for p in num_primes)},
        "infinity": {"bad_primes": den_primes,
                     "s_integral": all(p in s_primes for p in den_primes)},
    }


def run_scan(config: ScanConfig) -> ScanReport:
    config.validate()
    G = config.semigroup
    beta = Fraction(config.beta)
    status = is_preperiodic(G, RadicalPoint.from_rational(beta),
                            config.gate_depth)
    if status.tag != "not_preperiodic":
        raise InvalidConfig(
            f"beta = {beta} lacks a non-preperiodicity certificate "
            f"(status {status.tag}); refusing to scan")
    verdicts: list[ClassVerdict] = []
    seen: dict = {}
    class_counts: dict[int, int] = {}
    point_counts: dict[int, int] = {}
    si_class_counts: dict[int, int] = {}
    si_point_counts: dict[int, int] = {}
    truncated = False
    notes: list[str] = []
    budget = 0
    for w, m in word_pairs(G, config.max_wordlen):
        cb = collision_binomial(G, w, m)
        budget += cb.N
        if budget > config.node_cap:
            truncated = True
            notes.append(f"node cap {config.node_cap} reached at |w| = {len(w)}")
            break
        for cls in decompose_binomial_roots(cb.N, cb.a):
            key = cls.representative.key()
            if key in seen:
                continue
            seen[key] = True
            L = len(w)
            class_counts[L] = class_counts.get(L, 0) + 1
            point_counts[L] = point_counts.get(L, 0) + cls.degree
            integ = class_s_integrality(cls, beta, config.S, config.degree_cap)
            nd = class_norm_data(cls, beta)
            gamma = class_gamma(cls, beta, config.degree_cap)
            dist = _scan_distance_checks(G, cls, nd, beta, config.S,
                                         config.degree_cap)
            disc = None
            if cls.degree <= config.degree_cap:
                disc = float(discrepancy_exact(cls.angles))
            if not integ.certified:
                truncated = True
                notes.append(f"uncertified verdict at degree {cls.degree}")
            if abs(gamma.residual) > config.tol:
                truncated = True
                notes.append(
                    f"gamma residual {gamma.residual:.2e} above tol at "
                    f"degree {cls.degree}")
            if integ.s_integral:
                si_class_counts[L] = si_class_counts.get(L, 0) + 1
                si_point_counts[L] = si_point_counts.get(L, 0) + cls.degree
            verdicts.append(ClassVerdict(
                cls.representative, cls.degree, w, m, L,
                integ.s_integral, integ.known_bad, integ.certified,
                gamma.residual, gamma.exact_zero, dist, disc,
                cls.progressions()))
    verdicts.sort(key=lambda v: (v.degree, v.point.key()))
    last = config.max_wordlen
    stab = (si_class_counts.get(last, 0) == 0
            and si_class_counts.get(last - 1, 0) == 0
            and not truncated)
    max_deg = max((v.degree for v in verdicts if v.s_integral), default=0)
    return ScanReport(config, status.certificate or "", verdicts,
                      zero_infinity_verdict(beta, config.S),
                      class_counts, point_counts,
                      si_class_counts, si_point_counts,
                      stab, max_deg, truncated, notes)


def report_to_csv(report: ScanReport) -> str:
    lines = ["c,M,t,degree,word,prefix,s_integral,bad_primes,gamma_residual,"
             "discrepancy"]
    for v in report.verdicts:
        d = v.point.to_json()
        lines.append(",".join([
            d["c"], str(d["M"]), d["t"], str(v.degree),
            '"' + format_word(v.word) + '"', str(v.prefix),
            str(v.s_integral).lower(),
            '"' + " ".join(map(str, v.bad_primes)) + '"',
            f"{v.gamma_residual:.3e}",
            "" if v.discrepancy is None else f"{v.discrepancy:.6f}",
        ]))
    return "\n".join(lines) + "\n"
