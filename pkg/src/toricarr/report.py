"""Cross-checking pipeline: beta four ways, homology concentration, the Euler
identity, genericity, predictions, and the n = 1 twisted-cochain oracle."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .arrangement import NotEssential, ToricArrangement, essentialize, rank
from .cells import HomologyTable, cellulate, relative_homology
from .delres import DelResTrace, beta_delres
from .fileio import format_rational
from .layers import Layer, beta_poset, euler_complement, layers
from .local_systems import (LocalSystem, UnitScalar, is_generic, predict_group_ring,
                            predict_l2, predict_twisted, twisted_cohomology_1d)

METHODS = ("poset", "chambers", "homology", "delres")


def layer_to_obj(g: Layer) -> dict:
    return {
        "dimension": g.dimension,
        "key_matrix": [list(r) for r in g.key_matrix],
        "offset": [format_rational(c) for c in g.offset],
        "point": [format_rational(c) for c in g.point()] if g.key_matrix else [],
        "supporting_hypertori": list(g.supporting_hypertori),
    }


def _power(u: UnitScalar, k: int) -> UnitScalar:
    return UnitScalar(u.modulus ** k, u.angle * k)


def push_local_system(ls: LocalSystem, S) -> LocalSystem:
    """Transport a local system along the projection ``x -> S x`` onto the
    essentialized torus. Torus loops of the quotient are lifted through a
    fixed integer right inverse of ``S`` (one choice of splitting)."""
    n = len(S[0]) if S else len(ls.torus_monodromies)
    l = len(S)
    if l == 0:
        return LocalSystem(ls.lambdas, ())
    sm = linalg.smith(S, n)
    assert sm.divisors == [1] * l
    # S = U^-1 [I 0] V^-1, so R = V [I 0]^T U satisfies S R = I
    R = [[sum(sm.V[i][k] * sm.U[k][j] for k in range(l)) for j in range(l)] for i in range(n)]
    tor = []
    for j in range(l):
        out = UnitScalar()
        for i in range(n):
            out = out * _power(ls.torus_monodromies[i], R[i][j])
        tor.append(out)
    return LocalSystem(ls.lambdas, tuple(tor))


@dataclass
class VerificationReport:
    dimension: int
    beta_by_method: dict[str, int]
    homology_table: HomologyTable
    euler_complement: int
    f_vector: list[int]
    concentration_ok: bool
    torsion_free_ok: bool
    euler_identity_ok: bool
    f_vector_ok: bool
    betas_agree: bool
    essentialized: bool = False
    coordinate_map: list | None = None
    delres_cases: dict = field(default_factory=dict)
    genericity: tuple[bool, list[Layer]] | None = None
    predictions: list = field(default_factory=list)
    oracle_comparison: dict | None = None

    @property
    def beta(self) -> int:
        return self.beta_by_method["poset"]

    @property
    def passed(self) -> bool:
        ok = (self.betas_agree and self.concentration_ok and self.torsion_free_ok
              and self.euler_identity_ok and self.f_vector_ok)
        if self.oracle_comparison is not None:
            ok = ok and self.oracle_comparison["ok"]
        return ok

    def as_dict(self) -> dict:
        return {
            "status": "PASS" if self.passed else "FAIL",
            "dimension": self.dimension,
            "essentialized": self.essentialized,
            "coordinate_map": self.coordinate_map,
            "beta_by_method": dict(self.beta_by_method),
            "homology_table": self.homology_table.as_dict(),
            "euler_complement": self.euler_complement,
            "f_vector": list(self.f_vector),
            "concentration_ok": self.concentration_ok,
            "torsion_free_ok": self.torsion_free_ok,
            "euler_identity_ok": self.euler_identity_ok,
            "f_vector_ok": self.f_vector_ok,
            "betas_agree": self.betas_agree,
            "delres_cases": dict(self.delres_cases),
            "genericity": None if self.genericity is None else {
                "generic": self.genericity[0],
                "witnesses": [layer_to_obj(g) for g in self.genericity[1]],
            },
            "predictions": [p.as_dict() for p in self.predictions],
            "oracle_comparison": self.oracle_comparison,
        }

    def summary(self) -> str:
        lines = [f"dimension n = {self.dimension}" + ("  (essentialized)" if self.essentialized else "")]
        lines.append("beta: " + ", ".join(f"{m}={b}" for m, b in self.beta_by_method.items()))
        lines.append("homology of (T, Sigma): " + ", ".join(
            f"H{d}=Z^{r}" + (f"+torsion{list(t)}" if t else "")
            for d, (r, t) in enumerate(zip(self.homology_table.ranks, self.homology_table.torsion))))
        lines.append(f"f-vector: {self.f_vector}")
        lines.append(f"e(complement) = {self.euler_complement}")
        checks = [("four beta methods agree", self.betas_agree),
                  ("homology concentrated in degree n", self.concentration_ok),
                  ("homology torsion-free", self.torsion_free_ok),
                  ("(-1)^n beta = e(complement)", self.euler_identity_ok),
                  ("f-vector alternating sum = 0", self.f_vector_ok)]
        for name, ok in checks:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}")
        if self.genericity is not None:
            gen, wit = self.genericity
            lines.append(f"local system generic: {gen}" + ("" if gen else f" ({len(wit)} witness layers)"))
        for p in self.predictions:
            lines.append(f"prediction [{p.theorem}]: {list(p.values)}")
        if self.oracle_comparison is not None:
            oc = self.oracle_comparison
            lines.append(f"  [{'ok' if oc['ok'] else 'FAIL'}] 1d oracle {oc['oracle']} "
                         f"{oc['relation']} prediction {oc['expected']}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def compute_betas(arr: ToricArrangement, methods=METHODS):
    """beta by the requested methods; also returns the intermediate objects."""
    out: dict[str, int] = {}
    extra: dict = {}
    if "poset" in methods:
        poset = layers(arr)
        extra["poset"] = poset
        out["poset"] = beta_poset(arr, poset)
    if "chambers" in methods or "homology" in methods:
        cx = cellulate(arr)
        extra["complex"] = cx
        if "chambers" in methods:
            out["chambers"] = cx.chamber_count
        if "homology" in methods:
            h = relative_homology(arr, cx)
            extra["homology"] = h
            out["homology"] = h.ranks[arr.dimension]
    if "delres" in methods:
        trace = DelResTrace()
        out["delres"] = beta_delres(arr, trace=trace)
        extra["delres_trace"] = trace
    return out, extra


def verify(arr: ToricArrangement, ls: LocalSystem | None = None,
           essentialize_input: bool = False) -> VerificationReport:
    essentialized = False
    coord = None
    r = rank(arr)
    if r < arr.dimension:
        if not essentialize_input:
            raise NotEssential(f"arrangement has rank {r} < dimension {arr.dimension}")
        if ls is not None:
            ls.check(arr)
        arr, S = essentialize(arr)
        coord = S
        essentialized = True
        if ls is not None:
            ls = push_local_system(ls, S)
    if ls is not None:
        ls.check(arr)
    n = arr.dimension
    betas, extra = compute_betas(arr)
    h: HomologyTable = extra["homology"]
    cx = extra["complex"]
    e = euler_complement(arr, extra["poset"])
    beta = betas["poset"]
    trace = extra["delres_trace"]
    report = VerificationReport(
        dimension=n,
        beta_by_method=betas,
        homology_table=h,
        euler_complement=e,
        f_vector=list(cx.f_vector),
        concentration_ok=all(rk == 0 for rk in h.ranks[:n]) and not any(h.torsion),
        torsion_free_ok=not any(h.torsion),
        euler_identity_ok=all((-1) ** n * b == e for b in betas.values()),
        f_vector_ok=cx.euler_characteristic == (1 if n == 0 else 0),
        betas_agree=len(set(betas.values())) == 1,
        essentialized=essentialized,
        coordinate_map=coord,
        delres_cases={"case1": trace.case1, "case2": trace.case2, "memo_hits": trace.memo_hits,
                      "case2_splittings": [
                          {"chi": list(h.chi), "angle": format_rational(h.angle),
                           "basis": [list(row) for row in B]}
                          for h, B in trace.splittings]},
    )
    report.predictions = [predict_l2(arr), predict_group_ring(arr)]
    if ls is not None:
        generic, witnesses = is_generic(ls, arr, extra["poset"])
        report.genericity = (generic, witnesses)
        if generic:
            report.predictions.insert(0, predict_twisted(arr, ls))
        if n == 1:
            oracle = twisted_cohomology_1d(arr, ls)
            expected = (0, beta)
            if generic:
                ok, relation = oracle == expected, "=="
            else:
                ok, relation = oracle[1] >= beta, "H1 >="
            report.oracle_comparison = {"oracle": list(oracle), "expected": list(expected),
                                        "relation": relation, "generic": generic, "ok": ok}
    return report
