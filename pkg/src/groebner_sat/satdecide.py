"""Deciding satisfiability through reduced Gröbner bases.

A formula is unsatisfiable iff the reduced Gröbner basis of its encoding
is exactly ``{1}``. The Nullstellensatz behind that test speaks about
complex zeros, but for these encodings a complex zero is as good as a
Boolean model: each clause product vanishes only if one factor ``z - c``
does, forcing that coordinate to ``c`` in {0, 1}; rounding the remaining
coordinates arbitrarily to 0/1 keeps every clause satisfied.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from enum import Enum

from groebner_sat.buchberger import BuchbergerStats, GroebnerBasis, groebner, is_groebner
from groebner_sat.cnf import Assignment, CnfFormula, Precheck, precheck
from groebner_sat.encoder import EncodingMode, encode_formula
from groebner_sat.polyring import Ideal, MonomialOrder, normal_form

__all__ = [
    "DecideConfig",
    "Decision",
    "Status",
    "decide",
    "extract_solution",
    "verify_unsat_certificate",
]


class Status(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DecideConfig:
    mode: EncodingMode = EncodingMode.BOOLEAN
    order: MonomialOrder = MonomialOrder.GREVLEX
    coprime: bool = True
    chain: bool = True
    use_precheck: bool = True
    extract_model: bool = True
    strategy: str = "normal"
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", EncodingMode(self.mode))
        object.__setattr__(self, "order", MonomialOrder(self.order))

    def gb_options(self) -> dict:
        return {"strategy": self.strategy, "coprime": self.coprime, "chain": self.chain, "budget": self.budget}


@dataclass
class Decision:
    status: Status
    model: Assignment | None = None
    certificate: GroebnerBasis | None = None
    stats: BuchbergerStats = field(default_factory=BuchbergerStats)
    precheck: Precheck = Precheck.UNKNOWN
    decided_by: str = "groebner"

    @property
    def basis_size(self) -> int:
        return len(self.certificate) if self.certificate is not None else 0

    def record(self, *, timing: bool = True) -> dict:
        """Machine-readable result record."""
        return {
            "status": self.status.value,
            "model": self.model.to_literals() if self.model is not None else None,
            "basis_size": self.basis_size,
            "pairs": self.stats.pairs_processed,
            "ms": round(self.stats.elapsed * 1000, 3) if timing else None,
        }


def _groebner(ideal: Ideal, config: DecideConfig, stats: BuchbergerStats) -> GroebnerBasis:
    gb = groebner(ideal, **config.gb_options())
    if gb.stats is not None:
        stats.merge(gb.stats)
    return gb


def decide(f: CnfFormula, config: DecideConfig = DecideConfig()) -> Decision:
    t0 = time.perf_counter()
    stats = BuchbergerStats()
    pre = precheck(f) if config.use_precheck else Precheck.UNKNOWN
    if pre is Precheck.UNSAT:
        stats.elapsed = time.perf_counter() - t0
        return Decision(Status.UNSAT, stats=stats, precheck=pre, decided_by="precheck")
    if pre is Precheck.SAT and not config.extract_model:
        stats.elapsed = time.perf_counter() - t0
        return Decision(Status.SAT, stats=stats, precheck=pre, decided_by="precheck")

    ideal = encode_formula(f, config.mode, config.order)
    cert = _groebner(ideal, config, stats)
    stats.basis_size = len(cert)
    status = Status.UNSAT if cert.is_unit() else Status.SAT
    model = None
    if status is Status.SAT and config.extract_model:
        if config.mode is EncodingMode.BOOLEAN:
            model = _extract(f, config, cert, stats)
        else:
            model = _extract(f, replace(config, mode=EncodingMode.BOOLEAN), None, stats)
    stats.elapsed = time.perf_counter() - t0
    return Decision(status, model=model, certificate=cert, stats=stats, precheck=pre)


def extract_solution(f: CnfFormula, config: DecideConfig = DecideConfig()) -> Assignment:
    """Find a model by fixing ``z_1, ..., z_k`` one at a time.

    For each variable, ``z_i`` (i.e. ``z_i = 0``) is adjoined to the current
    basis; if the reduced basis stays different from ``{1}`` the value is
    False, otherwise ``z_i - 1`` is adjoined instead and the value is True.

    Only boolean mode is supported. With the field polynomials present,
    the augmented ideal is consistent iff the formula restricted by the
    values fixed so far is satisfiable. Without them a variable that occurs
    in no vanishing factor may be fixed to a value that later choices
    cannot accommodate.
    """
    if config.mode is not EncodingMode.BOOLEAN:
        raise ValueError("model extraction requires boolean encoding mode")
    return _extract(f, config, None, BuchbergerStats())


def _extract(f: CnfFormula, config: DecideConfig, start: GroebnerBasis | None, stats: BuchbergerStats):
    ideal = encode_formula(f, EncodingMode.BOOLEAN, config.order)
    ring = ideal.ring
    current = start if start is not None else _groebner(ideal, config, stats)
    if current.is_unit():
        raise ValueError("formula is unsatisfiable; no model to extract")
    values = []
    for i in range(1, ring.nvars + 1):
        z = ring.var(i)
        trial = _groebner(Ideal(ring, (*current.polynomials, z)), config, stats)
        if not trial.is_unit():
            values.append(False)
        else:
            trial = _groebner(Ideal(ring, (*current.polynomials, z - 1)), config, stats)
            if trial.is_unit():
                raise ValueError(f"inconsistent at variable {i}; formula is unsatisfiable")
            values.append(True)
        current = trial
    return Assignment(tuple(values))


def verify_unsat_certificate(
    f: CnfFormula,
    cert: GroebnerBasis,
    config: DecideConfig = DecideConfig(),
    *,
    check_membership: bool = True,
) -> bool:
    """Check ``cert`` as the Gröbner basis of the encoding of ``f``.

    Always checked: ``cert`` passes Buchberger's criterion and every encoded
    generator reduces to 0 modulo it. With ``check_membership`` each element
    of ``cert`` must also reduce to 0 modulo a freshly computed basis of the
    encoding, so ``{1}`` is only accepted for unsatisfiable formulas.
    """
    ideal = encode_formula(f, config.mode, config.order)
    if cert.ring != ideal.ring:
        return False
    polys = list(cert.polynomials)
    if any(not p for p in polys):
        return False
    if not is_groebner(polys):
        return False
    for g in ideal.generators:
        if not polys:
            return False
        if normal_form(g, polys)[1]:
            return False
    if check_membership and polys:
        own = groebner(ideal, **config.gb_options())
        if not own.polynomials:
            return False
        for p in polys:
            if normal_form(p, list(own.polynomials))[1]:
                return False
    return True
