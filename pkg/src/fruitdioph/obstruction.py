"""Per-k certificates that y^2 - k*y*z + z^2 = k^3 - 5 has no integer solution.

``certify`` walks the case analysis and emits either a modulus m (the
equation has no solution mod m) or a prime p dividing k - 2. In the prime
case k = 2 (mod p), so the left side is (y - z)^2 mod p while the right
side is 3 mod p; p = 5 or 7 (mod 12) makes 3 a non-residue.

``check_certificate`` re-verifies a certificate using only residue
membership tables, exhaustive residue enumeration and the arith
primitives. It shares no code with ``classify``/``certify``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .arith import factorize, is_prime, legendre, mod_canon, squares_mod

__all__ = [
    "CaseLabel",
    "Certificate",
    "CertificateFormatError",
    "CheckResult",
    "WitnessNotFound",
    "certify",
    "check_certificate",
    "classify",
    "residues_attained",
    "verify_certificate",
]

MAX_RESIDUE_MODULUS = 10**6
# prime witnesses up to this size also get an exhaustive residue check
ENUMERATION_BOUND = 10**4


class CaseLabel(enum.Enum):
    EvenHalfOdd = "EvenHalfOdd"
    EvenHalfEven = "EvenHalfEven"
    OddThreeMod4 = "OddThreeMod4"
    OneMod12 = "OneMod12"
    NineMod12 = "NineMod12"
    FiveMod12_Mod36Kill = "FiveMod12_Mod36Kill"
    SeventeenMod36 = "SeventeenMod36"


MODULUS_FOR_LABEL = {
    CaseLabel.EvenHalfOdd: 8,
    CaseLabel.EvenHalfEven: 4,
    CaseLabel.OddThreeMod4: 4,
    CaseLabel.OneMod12: 3,
    CaseLabel.FiveMod12_Mod36Kill: 36,
}
PRIME_LABELS = frozenset({CaseLabel.NineMod12, CaseLabel.SeventeenMod36})

# Declarative membership table used by the checker; classify() derives
# the same partition procedurally.
LABEL_RESIDUES = {
    CaseLabel.EvenHalfOdd: (4, frozenset({2})),
    CaseLabel.EvenHalfEven: (4, frozenset({0})),
    CaseLabel.OddThreeMod4: (4, frozenset({3})),
    CaseLabel.OneMod12: (12, frozenset({1})),
    CaseLabel.NineMod12: (12, frozenset({9})),
    CaseLabel.FiveMod12_Mod36Kill: (36, frozenset({5, 29})),
    CaseLabel.SeventeenMod36: (36, frozenset({17})),
}


class WitnessNotFound(RuntimeError):
    """No prime = 5, 7 (mod 12) divides the relevant part of k - 2.

    Cannot happen if the case analysis is right; never caught silently.
    """


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    k: int
    label: CaseLabel
    kind: str  # "modulus" | "prime"
    m: Optional[int] = None
    p: Optional[int] = None

    def to_dict(self) -> dict:
        out = {"k": str(self.k), "label": self.label.value, "kind": self.kind}
        if self.kind == "modulus":
            out["m"] = self.m
        else:
            out["p"] = str(self.p)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> Certificate:
        try:
            kind = obj["kind"]
            if kind == "modulus":
                expected = {"k", "label", "kind", "m"}
            elif kind == "prime":
                expected = {"k", "label", "kind", "p"}
            else:
                raise CertificateFormatError(f"unknown kind {kind!r}")
            if set(obj) != expected:
                raise CertificateFormatError(f"fields {sorted(obj)} != {sorted(expected)}")
            if not isinstance(obj["k"], str):
                raise CertificateFormatError("k must be a decimal string")
            k = int(obj["k"])
            label = CaseLabel(obj["label"])
            if kind == "modulus":
                m = obj["m"]
                if isinstance(m, bool) or not isinstance(m, int):
                    raise CertificateFormatError("m must be an integer")
                return cls(k, label, kind, m=m)
            if not isinstance(obj["p"], str):
                raise CertificateFormatError("p must be a decimal string")
            return cls(k, label, kind, p=int(obj["p"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CertificateFormatError):
                raise
            raise CertificateFormatError(str(exc)) from exc

    @classmethod
    def from_json(cls, line: str) -> Certificate:
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(str(exc)) from exc
        if not isinstance(obj, dict):
            raise CertificateFormatError("certificate must be a JSON object")
        return cls.from_dict(obj)


def classify(k: int) -> CaseLabel:
    if k % 2 == 0:
        return CaseLabel.EvenHalfOdd if (k // 2) % 2 else CaseLabel.EvenHalfEven
    if k % 4 == 3:
        return CaseLabel.OddThreeMod4
    # k = 1 (mod 4)
    r12 = k % 12
    if r12 == 1:
        return CaseLabel.OneMod12
    if r12 == 9:
        return CaseLabel.NineMod12
    # k = 5 (mod 12): k = 12r + 5, and only r = 1 (mod 3) survives mod 3
    r = (k - 5) // 12
    return CaseLabel.SeventeenMod36 if r % 3 == 1 else CaseLabel.FiveMod12_Mod36Kill


def _qualifying_prime(n: int) -> int:
    for p in factorize(n).primes():
        if p % 12 in (5, 7):
            return p
    raise WitnessNotFound(f"no prime = 5, 7 (mod 12) divides {n}")


def certify(k: int) -> Certificate:
    label = classify(k)
    if label in MODULUS_FOR_LABEL:
        return Certificate(k, label, "modulus", m=MODULUS_FOR_LABEL[label])
    try:
        if label is CaseLabel.NineMod12:
            p = _qualifying_prime(abs(k - 2))
        else:
            p = _qualifying_prime(abs(k - 2) // 3)
    except WitnessNotFound as exc:
        raise WitnessNotFound(f"k={k}: {exc}") from exc
    return Certificate(k, label, "prime", p=p)


def _direct_residues(k: int, m: int) -> frozenset[int]:
    return frozenset((y * y - k * y * z + z * z) % m for y in range(m) for z in range(m))


def _prime_residues(k: int, p: int) -> frozenset[int]:
    # Q(y, z) = y^2 - k*y*z + z^2 is homogeneous of degree 2: Q(t*z, z) =
    # z^2 * Q(t, 1), so z != 0 contributes {s * q : s nonzero square, q in
    # Q(., 1)}. Each q * squares* is a full coset, so at most two are built.
    squares = squares_mod(p)
    nonzero_sq = [s for s in squares if s]
    out = set(squares)
    for q in {(t * t - k * t + 1) % p for t in range(p)}:
        if q and q not in out:
            out.update(q * s % p for s in nonzero_sq)
    return frozenset(out)


def _prime_power_parts(m: int) -> list[int]:
    return [p**e for p, e in factorize(m).factors]


@lru_cache(maxsize=4096)
def _residues_cached(kr: int, m: int) -> frozenset[int]:
    parts = _prime_power_parts(m)
    if len(parts) == 1:
        if m > 2 and is_prime(m):
            return _prime_residues(kr, m)
        return _direct_residues(kr, m)
    # CRT: (y, z) mod m splits into independent choices mod each part
    out = {0}
    modulus = 1
    for q in parts:
        sub = _residues_cached(kr % q, q)
        nxt = set()
        inv = pow(modulus, -1, q)
        for a, b in product(out, sub):
            nxt.add(a + modulus * ((b - a) * inv % q))
        out = nxt
        modulus *= q
    return frozenset(out)


def residues_attained(k: int, m: int) -> frozenset[int]:
    """All values of y^2 - k*y*z + z^2 mod m over y, z in [0, m)."""
    if not 2 <= m <= MAX_RESIDUE_MODULUS:
        raise ValueError(f"modulus must lie in [2, {MAX_RESIDUE_MODULUS}], got {m}")
    return _residues_cached(k % m, m)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: Certificate) -> CheckResult:
    """Check ``cert`` and say why it fails, if it does.

    Reason codes: bad-label, label-mismatch, kind-mismatch, missing-field,
    bad-modulus, not-obstructed, bad-prime, prime-class, prime-not-divisor,
    residue.
    """
    if not isinstance(cert.label, CaseLabel):
        return CheckResult(False, "bad-label")
    k = cert.k
    mod, allowed = LABEL_RESIDUES[cert.label]
    if mod_canon(k, mod) not in allowed:
        return CheckResult(False, "label-mismatch")
    target = k**3 - 5

    if cert.kind == "modulus":
        if cert.label in PRIME_LABELS:
            return CheckResult(False, "kind-mismatch")
        if cert.m is None or cert.p is not None:
            return CheckResult(False, "missing-field")
        if cert.m != MODULUS_FOR_LABEL[cert.label]:
            return CheckResult(False, "bad-modulus")
        if mod_canon(target, cert.m) in residues_attained(k, cert.m):
            return CheckResult(False, "not-obstructed")
        return CheckResult(True)

    if cert.kind == "prime":
        if cert.label not in PRIME_LABELS:
            return CheckResult(False, "kind-mismatch")
        if cert.p is None or cert.m is not None:
            return CheckResult(False, "missing-field")
        p = cert.p
        if p <= 2 or not is_prime(p):
            return CheckResult(False, "bad-prime")
        if mod_canon(p, 12) not in (5, 7):
            return CheckResult(False, "prime-class")
        if (k - 2) % p:
            return CheckResult(False, "prime-not-divisor")
        t = mod_canon(target, p)
        # k = 2 (mod p): the left side is (y - z)^2 mod p
        if legendre(t, p) != -1:
            return CheckResult(False, "not-obstructed")
        if p <= ENUMERATION_BOUND and t in residues_attained(k, p):
            return CheckResult(False, "residue")
        return CheckResult(True)

    return CheckResult(False, "kind-mismatch")


def check_certificate(cert: Certificate) -> bool:
    return verify_certificate(cert).ok
