import functools
import logging
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, List, Optional

from newton_monodromy.errors import HypothesisError, InputError, MonodromyError
from newton_monodromy.ehrhart.weighted import ehrhart_hstar
from newton_monodromy.lattice.polytope import convex_hull
from newton_monodromy.lattice.volume import normalized_volume
from newton_monodromy.lattice.frame import lattice_frame
from newton_monodromy.newton.polyhedra import INFINITY, LOCAL, MeroPair, all_facet_data, is_convenient, is_properly_contained
from newton_monodromy.newton.polynomial import SparsePolynomial
from newton_monodromy.oracles import oracle_functions as oracles
from newton_monodromy.spectrum.hodge import (
    VIA_EXTREMES,
    VIA_LOCAL_H,
    VIA_WEIGHTS,
    build_weighted_region,
    check_conjugation,
    e_lambda,
    jordan_at_least,
    jordan_counts,
    jordan_extremes,
    jordan_paths,
    lifted_cells_agree,
)
from newton_monodromy.spectrum.spectrum import check_spectrum_paths, lambda_mass, reduced_spectrum
from newton_monodromy.zeta.cyclotomic import CyclotomicProduct, RootOfUnity, roots_dividing
from newton_monodromy.zeta.zeta_functions import (
    chi_complement,
    eigenvalue_multiplicities,
    euler_characteristic,
    lefschetz,
    multiplicity,
    zeta_infinity,
    zeta_local,
)

logger = logging.getLogger(__name__)

ASSUMPTIONS = ("nondegenerate", "isolated", "transversal")

COMMANDS = (
    "zeta-local",
    "zeta-infinity",
    "chi",
    "multiplicity",
    "eigenvalues",
    "lefschetz",
    "e-lambda",
    "jordan",
    "jordan-extremes",
    "spectrum",
    "ehrhart",
    "check",
)

# Commands that do not rely on non-degenerate coefficients.
COMBINATORIAL_COMMANDS = ("ehrhart", "check")
NONDEGENERACY_NOTE = "the formulas assume non-degenerate P and Q; {status}, never verified"


@dataclass
class JobSpec(object):
    """One requested computation: the pair, the mode, the eigenvalues asked for and the asserted hypotheses."""

    command: str
    n: int
    P: SparsePolynomial
    Q: SparsePolynomial
    mode: str = LOCAL
    roots: List[RootOfUnity] = field(default_factory=list)
    all_lambdas: bool = False
    output_format: str = "text"
    assumptions: Dict[str, bool] = field(default_factory=dict)
    m: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}; choose from {', '.join(COMMANDS)}")
        if self.P.n != self.n or self.Q.n != self.n:
            raise InputError(f"P and Q must be polynomials in n={self.n} variables")
        if self.output_format not in ("text", "machine"):
            raise InputError(f"unknown output format {self.output_format!r}")


@dataclass
class Check(object):
    name: str
    passed: bool
    detail: str = ""


class MonodromyJob(object):
    """Runs one command on a pair and collects inputs, hypotheses, results and cross-checks into a report."""

    def __init__(self, spec: JobSpec):
        self.spec = spec
        self.pair = MeroPair(spec.P, spec.Q, spec.mode)
        self.hypotheses = {}
        self.results = {}
        self.checks: List[Check] = []
        self.errors = []

    def _requires_assumptions(func):
        """Decorator refusing to run a Hodge theoretic command unless the undecidable hypotheses were asserted."""

        @functools.wraps(func)
        def wrapper(self, *args, **kwargs):
            missing = [name for name in ASSUMPTIONS if not self.spec.assumptions.get(name)]
            if missing:
                flags = ", ".join(f"--assume-{name}" for name in missing)
                raise HypothesisError(f"{self.spec.command} needs the hypotheses asserted with {flags}", datum=missing)
            logger.warning("using the asserted hypotheses %s without verification", ", ".join(ASSUMPTIONS))
            return func(self, *args, **kwargs)

        return wrapper

    def _requires_mode(mode):
        """Decorator factory pinning a command to local or infinity mode."""

        def decorator(func):
            @functools.wraps(func)
            def wrapper(self, *args, **kwargs):
                if self.spec.mode != mode:
                    raise InputError(f"{self.spec.command} is computed in {mode} mode, not {self.spec.mode}")
                return func(self, *args, **kwargs)

            return wrapper

        return decorator

    def _check(self, name, passed, detail=""):
        """Records one cross-check; a failed one also becomes an error of the run."""

        self.checks.append(Check(name, bool(passed), detail))
        if not passed:
            self.errors.append(f"check {name} failed: {detail}")

    def _record_hypotheses(self):
        """Decides what can be decided (convenience, proper containment) and echoes the asserted flags."""

        mode = self.spec.mode
        self.hypotheses["P convenient"] = is_convenient(self.spec.P, mode)
        self.hypotheses["Q convenient"] = is_convenient(self.spec.Q, mode)
        try:
            containment = is_properly_contained(self.pair)
            self.hypotheses["properly contained"] = containment.holds
            if not containment:
                self.hypotheses["containment witness"] = [list(r) for r in containment.witness or ()]
        except MonodromyError as error:
            self.hypotheses["properly contained"] = f"undecided: {error}"
        for name in ASSUMPTIONS:
            self.hypotheses[name] = "asserted" if self.spec.assumptions.get(name) else "not asserted"
        if self.spec.command not in COMBINATORIAL_COMMANDS:
            status = "asserted by the user" if self.spec.assumptions.get("nondegenerate") else "not asserted"
            self.hypotheses["nondegeneracy"] = NONDEGENERACY_NOTE.format(status=status)

    def _facet_distances(self):
        return [datum.d for datum in all_facet_data(self.pair) if datum.d > 0]

    def _roots(self, distances=None):
        """The eigenvalues to report: those given, or every class of order dividing lcm of the distances."""

        if self.spec.roots:
            return list(self.spec.roots)
        if not self.spec.all_lambdas:
            raise InputError(f"{self.spec.command} needs --lambda k/d or --all-lambdas")
        distances = distances if distances is not None else self._facet_distances()
        lcm = reduce(lambda a, b: a * b // math.gcd(a, b), distances, 1)
        return roots_dividing(lcm)

    def _spectral_roots(self):
        return self._roots(build_weighted_region(self.pair).distances())

    @_requires_mode(LOCAL)
    def zeta_local(self):
        zeta = zeta_local(self.pair)
        self.results["zeta"] = zeta
        self.results["facet data"] = all_facet_data(self.pair)
        self.results["euler characteristic"] = euler_characteristic(zeta)

    @_requires_mode(INFINITY)
    def zeta_infinity(self):
        zeta = zeta_infinity(self.pair)
        self.results["zeta"] = zeta
        self.results["facet data"] = all_facet_data(self.pair)
        self.results["chi"] = chi_complement(self.pair)
        self.results["euler characteristic"] = euler_characteristic(zeta)

    @_requires_mode(INFINITY)
    def chi(self):
        self.results["chi"] = chi_complement(self.pair)

    def multiplicity(self):
        zeta = zeta_infinity(self.pair) if self.spec.mode == INFINITY else zeta_local(self.pair)
        values = {}
        for root in self._roots():
            values[root] = multiplicity(self.pair, root)
            # only the middle degree carries lambda != 1
            order = (-1) ** (self.spec.n - 1) * zeta.order_at(root)
            self._check(f"multiplicity {root} vs zeta", order == values[root],
                        f"signed order of the zeta function at {root} is {order}")
        self.results["multiplicities"] = values

    def eigenvalues(self):
        self.results["multiplicities"] = eigenvalue_multiplicities(self.pair)

    @_requires_mode(LOCAL)
    def lefschetz(self):
        if self.spec.m is None:
            raise InputError("lefschetz needs --m")
        self.results["lefschetz"] = {self.spec.m: lefschetz(self.pair, self.spec.m)}

    @_requires_mode(LOCAL)
    @_requires_assumptions
    def e_lambda(self):
        polynomials = {}
        for root in self._spectral_roots():
            E = e_lambda(self.pair, root)
            polynomials[root] = E
            self._check(f"hodge mass {root}", E.total_mass() == multiplicity(self.pair, root),
                        f"total mass {E.total_mass()}")
            self._check(f"conjugation {root}", check_conjugation(self.pair, root))
        self.results["E"] = polynomials

    @_requires_mode(LOCAL)
    @_requires_assumptions
    def jordan(self):
        tables = {}
        for root in self._spectral_roots():
            paths = jordan_paths(self.pair, root)
            self._check(f"jordan paths {root}", paths[VIA_LOCAL_H] == paths[VIA_WEIGHTS],
                        f"local h {paths[VIA_LOCAL_H]}, weight grading {paths[VIA_WEIGHTS]}")
            counts = jordan_counts(self.pair, root)
            tables[root] = counts
            self._check(f"jordan total {root}", counts.weighted_total() == multiplicity(self.pair, root))
            if self.spec.k is not None:
                self.results.setdefault("blocks at least", {})[root] = jordan_at_least(self.pair, root, self.spec.k)
        self.results["jordan"] = tables

    @_requires_mode(LOCAL)
    @_requires_assumptions
    def jordan_extremes(self):
        n = self.pair.n
        extremes, tables = {}, {}
        for root in self._spectral_roots():
            top, second = jordan_extremes(self.pair, root, verify=False)
            extremes[root] = (top, second)
            counts = jordan_counts(self.pair, root)
            agree = counts[n] == top and (n < 2 or counts[n - 1] == second)
            self._check(f"jordan extremes {root}", agree, f"interior faces give ({top}, {second}), full counts {counts.counts}")
            counts.provenance[n] = VIA_EXTREMES
            if n >= 2:
                counts.provenance[n - 1] = VIA_EXTREMES
            tables[root] = counts
        self.results["jordan extremes"] = extremes
        self.results["jordan"] = tables

    @_requires_mode(LOCAL)
    @_requires_assumptions
    def spectrum(self):
        spectrum = reduced_spectrum(self.pair)
        self.results["spectrum"] = spectrum
        self._check("spectrum symmetry", spectrum.reflected(self.pair.n) == spectrum)
        self._check("spectrum from hodge numbers", check_spectrum_paths(self.pair))
        region = build_weighted_region(self.pair)
        self._check("lifted subdivision", lifted_cells_agree(self.pair), "regular lifting reproduces S_nu")
        for root in roots_dividing(reduce(lambda a, b: a * b // math.gcd(a, b), region.distances(), 1)):
            mass, expected = lambda_mass(spectrum, root), multiplicity(self.pair, root)
            self._check(f"lambda mass {root}", mass == expected, f"{mass} vs multiplicity {expected}")

    def ehrhart(self):
        polytope = convex_hull(self.spec.P.support(), ambient_dim=self.spec.n)
        self.results["hstar"] = ehrhart_hstar(polytope)
        self.results["normalized volume"] = normalized_volume(polytope, lattice_frame(polytope))

    def check(self):
        """Runs the brute force references against the engine on this pair."""

        reports = []
        polytope = convex_hull(self.spec.P.support(), ambient_dim=self.spec.n)
        if polytope.dim == self.spec.n and self.spec.n <= oracles.ORACLE_MAX_DIM:
            reports.append(oracles.OracleReport.compare(
                "normalized volume of conv(supp P)",
                oracles.volume_by_dilation(self.spec.P.support()),
                normalized_volume(polytope, lattice_frame(polytope)),
            ))
        if self.spec.mode == LOCAL and self.spec.n == 2:
            staircase = oracles.zeta_staircase_2d(self.spec.P.support(), self.spec.Q.support())
            reports.append(oracles.OracleReport.compare(
                "local zeta function", staircase, zeta_local(self.pair).as_dict()
            ))
        if self.spec.mode == LOCAL and self.spec.n <= oracles.ORACLE_MAX_DIM and self.hypotheses.get("properly contained") is True \
                and self.hypotheses["P convenient"] and self.hypotheses["Q convenient"]:
            reference = oracles.spectrum_by_definition(self.spec.P.support(), self.spec.Q.support())
            engine = {alpha: c for alpha, c in reduced_spectrum(self.pair).items()}
            reports.append(oracles.OracleReport.compare("reduced spectrum", reference, engine))
        for report in reports:
            self._check(f"oracle {report.quantity}", report.agree, f"oracle {report.oracle_value} engine {report.engine_value}")
        self.results["oracles"] = reports

    def run(self):
        """Dispatches the command; every MonodromyError is captured into the report."""

        self._record_hypotheses()
        method = getattr(self, self.spec.command.replace("-", "_"))
        try:
            method()
        except MonodromyError as error:
            logger.info("%s failed: %s", self.spec.command, error)
            self.errors.append(f"{type(error).__name__}: {error}")
            datum = getattr(error, "datum", None)
            if datum is not None:
                self.results["violating datum"] = datum
        return self.report()

    def report(self):
        return {
            "inputs": {
                "command": self.spec.command,
                "n": self.spec.n,
                "P": str(self.spec.P),
                "Q": str(self.spec.Q),
                "mode": self.spec.mode,
                "lambda": [str(r) for r in self.spec.roots],
                "all_lambdas": self.spec.all_lambdas,
                "assumptions": {name: bool(self.spec.assumptions.get(name)) for name in ASSUMPTIONS},
                "m": self.spec.m,
                "k": self.spec.k,
            },
            "hypotheses": self.hypotheses,
            "results": self.results,
            "checks": self.checks,
            "errors": self.errors,
        }


def run(spec: JobSpec):
    """Runs a job and returns (report, exit status); the status is 0 iff nothing failed."""

    job = MonodromyJob(spec)
    report = job.run()
    return report, 0 if not job.errors else 1
