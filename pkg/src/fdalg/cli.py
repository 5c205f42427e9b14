"""Batch front-end: parse a JSON model file, run computations and
verification suites, emit human-readable and machine-readable reports.

Model files declare a prime, named algebras (quiver presentations,
explicit structure constants, tensor products or opposites of earlier
names), named modules (constructions over those algebras), and a task
list.  Exit status: 0 all verifications passed or were allowed to skip,
1 verification failure, 2 input error, 3 guard violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import DEFAULT_SEED
from .algebra import (
    Quiver,
    QuiverPresentation,
    StructureAlgebra,
    build_path_algebra_quotient,
    opposite_algebra,
    tensor_algebra,
)
from .correspondence import (
    backward_algebra,
    certify_pair,
    forward_pair,
    roundtrip_from_algebra,
    roundtrip_from_pair,
    verify_endoring_characterization,
    verify_functor_identities,
    verify_gproj_equivalence,
    verify_opposite_closure,
    verify_pair_structure,
    verify_tensor_hom_identification,
    verify_torsion_battery,
)
from .errors import (
    ContractViolation,
    FdalgError,
    GuardError,
    HypothesisError,
    NonAdmissibleError,
    SplitRequiredError,
    ValidationError,
)
from .exactla import DEFAULT_PRIME, check_prime
from .homological import ar_translate, higher_translate, min_resolution, syzygy
from .invariants import (
    dominant_dimension,
    injective_dimension_regular,
    minimal_faithful,
    saturate_catalog,
)
from .repmod import (
    Module,
    direct_sum,
    dual_module,
    regular_module,
    rep_context,
)
from .tensorlab import (
    translate_orbit,
    verify_injective_cogenerator,
    verify_tensor_duality,
    verify_tensor_dynkin,
    verify_translate_tensor_formula,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_GUARD_VIOLATION = 3


@dataclass
class ModelFile:
    path: str
    prime: int
    algebras: dict
    quivers: dict  # names declared through a quiver presentation
    modules: dict
    tasks: list


@dataclass
class RunResult:
    tasks: list = field(default_factory=list)
    exit_status: int = EXIT_OK

    def to_dict(self):
        return {"tasks": self.tasks, "exit_status": self.exit_status}


def _parse_quiver(name, spec) -> Quiver:
    try:
        arrows = tuple(
            (arrow["source"] - 1, arrow["target"] - 1, arrow["label"])
            for arrow in spec["arrows"]
        )
        return Quiver(spec["vertices"], arrows)
    except (KeyError, TypeError, ContractViolation) as exc:
        raise ValidationError(f"algebras.{name}.quiver: {exc}") from exc


def _parse_relations(name, quiver: Quiver, spec):
    relations = []
    for r_idx, rel in enumerate(spec):
        terms = []
        for term in rel:
            coeff, labels = term
            try:
                arrows = tuple(quiver.arrow_index(lab) for lab in labels)
            except ContractViolation as exc:
                raise ValidationError(
                    f"algebras.{name}.relations[{r_idx}]: {exc}") from exc
            terms.append((coeff, arrows))
        relations.append(tuple(terms))
    return tuple(relations)


def load(path: str, prime_override: int | None = None) -> ModelFile:
    """Parse and validate a model file; every declared algebra and module
    is axiom-checked before any task runs."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read model file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"model file is not valid JSON (line {exc.lineno}, column {exc.colno})"
        ) from exc
    prime = prime_override or raw.get("prime", DEFAULT_PRIME)
    check_prime(prime)
    algebras: dict = {}
    quivers: dict = {}
    deferred = dict(raw.get("algebras", {}))
    # resolve declarations, allowing tensor/opposite references to earlier
    # names, in several passes
    for _ in range(len(deferred) + 1):
        progressed = False
        for name in list(deferred):
            spec = deferred[name]
            if not isinstance(spec, dict):
                raise ValidationError(f"algebras.{name}: declaration must be an object")
            try:
                if "quiver" in spec:
                    quiver = _parse_quiver(name, spec["quiver"])
                    pres = QuiverPresentation(
                        quiver,
                        _parse_relations(name, quiver, spec.get("relations", [])),
                        spec.get("nilpotency", quiver.vertex_count + 1),
                    )
                    algebras[name] = build_path_algebra_quotient(pres, prime)
                    quivers[name] = quiver
                elif "structure_constants" in spec:
                    algebras[name] = StructureAlgebra(
                        spec["structure_constants"], spec["unit"], p=prime,
                        labels=spec.get("labels"),
                    )
                elif "tensor" in spec:
                    left, right = spec["tensor"]
                    if left not in algebras or right not in algebras:
                        continue
                    algebras[name] = tensor_algebra(algebras[left], algebras[right])
                elif "opposite" in spec:
                    if spec["opposite"] not in algebras:
                        continue
                    algebras[name] = opposite_algebra(algebras[spec["opposite"]])
                else:
                    raise ValidationError(
                        f"algebras.{name}: unknown declaration kind")
            except (ContractViolation, NonAdmissibleError) as exc:
                raise ValidationError(f"algebras.{name}: {exc}") from exc
            del deferred[name]
            progressed = True
        if not deferred:
            break
        if not progressed:
            raise ValidationError(
                f"unresolved algebra references: {sorted(deferred)}")

    modules: dict = {}
    deferred_mods = dict(raw.get("modules", {}))
    for _ in range(len(deferred_mods) + 1):
        progressed = False
        for name in list(deferred_mods):
            spec = deferred_mods[name]
            built = _build_module(name, spec, algebras, modules)
            if built is None:
                continue
            modules[name] = built
            del deferred_mods[name]
            progressed = True
        if not deferred_mods:
            break
        if not progressed:
            raise ValidationError(
                f"unresolved module references: {sorted(deferred_mods)}")

    tasks = raw.get("tasks", [])
    if not isinstance(tasks, list):
        raise ValidationError("tasks must be a list")
    return ModelFile(path, prime, algebras, quivers, modules, tasks)


def _build_module(name, spec, algebras, modules):
    if not isinstance(spec, dict):
        raise ValidationError(f"modules.{name}: declaration must be an object")

    def algebra_of():
        alg_name = spec.get("algebra")
        if alg_name not in algebras:
            raise ValidationError(
                f"modules.{name}: unknown algebra {alg_name!r}")
        return algebras[alg_name]

    try:
        if "action" in spec:
            return Module(algebra_of(), spec["action"], check=True)
        construction = spec.get("construction")
        if construction == "regular":
            return regular_module(algebra_of())
        if isinstance(construction, list) and construction:
            kind = construction[0]
            if kind == "simple":
                return rep_context(algebra_of()).simple(construction[1] - 1)
            if kind == "projective":
                return rep_context(algebra_of()).projective(construction[1] - 1)[0]
            if kind == "injective":
                return rep_context(algebra_of()).injective(construction[1] - 1)
            if kind == "dual":
                ref = construction[1]
                if ref not in modules:
                    return None
                return dual_module(modules[ref])
            if kind == "sum":
                refs = construction[1:]
                if any(r not in modules for r in refs):
                    return None
                return direct_sum([modules[r] for r in refs])[0]
        raise ValidationError(f"modules.{name}: unknown construction")
    except ContractViolation as exc:
        raise ValidationError(f"modules.{name}: {exc}") from exc
    except IndexError as exc:
        raise ValidationError(f"modules.{name}: index out of range") from exc


# ----------------------------------------------------------------------
# task dispatch


def _need(task, key, table, what):
    ref = task.get(key)
    if ref not in table:
        raise ValidationError(f"task references unknown {what} {ref!r}")
    return table[ref]


def _run_task(model: ModelFile, task: dict, options) -> dict:
    kind = task.get("task")
    n = task.get("n", 2)
    bound = task.get("bound", options.bound)
    seed = options.seed

    if kind == "invariants":
        alg = _need(task, "algebra", model.algebras, "algebra")
        dom = dominant_dimension(alg, bound=max(bound, n + 2))
        inj = injective_dimension_regular(alg, bound=max(bound, n + 2))
        payload = {"dominant": dom.as_json(), "injective": inj.as_json()}
        try:
            payload["minimal_faithful_dim"] = minimal_faithful(alg).dim
        except HypothesisError:
            payload["minimal_faithful_dim"] = None
        return {"status": "ok", "payload": payload}
    if kind == "resolve":
        mod = _need(task, "module", model.modules, "module")
        seg = min_resolution(mod, task.get("direction", "injective"),
                             task.get("length", n))
        return {"status": "ok", "payload": {
            "terms": [t.dim for t in seg.terms()],
            "verified": seg.verify()}}
    if kind == "translate":
        mod = _need(task, "module", model.modules, "module")
        op = task.get("kind", "tau")
        if op == "tau":
            out = ar_translate(mod, +1).output
        elif op == "tau_inverse":
            out = ar_translate(mod, -1).output
        elif op == "syzygy":
            out = syzygy(mod, task.get("power", 1))
        elif op == "higher":
            out = higher_translate(mod, task.get("power", 1)).output
        else:
            raise ValidationError(f"unknown translate kind {op!r}")
        return {"status": "ok", "payload": {"dim": out.dim,
                                            "weights": list(out.weights())}}
    if kind == "orbit":
        mod = _need(task, "module", model.modules, "module")
        trace = translate_orbit(mod, bound)
        return {"status": "ok", "payload": trace.to_dict()}
    if kind == "forward_map":
        alg = _need(task, "algebra", model.algebras, "algebra")
        fwd = forward_pair(alg, n, max(bound, n + 2), seed)
        return {"status": "ok", "payload": {
            "base_dim": fwd.pair.base.dim,
            "q_dim": fwd.pair.q.dim,
            "summands": [m.dim for m in fwd.pair.summands],
            "certificates": fwd.pair.certificates}}
    if kind == "backward_map":
        alg = _need(task, "algebra", model.algebras, "algebra")
        mod = _need(task, "module", model.modules, "module")
        pair = certify_pair(alg, mod, n, seed)
        sigma, bundle = backward_algebra(pair, max(bound, n + 2))
        return {"status": "ok", "payload": {
            "sigma_dim": sigma.dim,
            "dominant": bundle.dominant.as_json(),
            "injective": bundle.injective.as_json()}}

    report = None
    if kind == "roundtrip":
        if task.get("direction", "algebra") == "algebra":
            alg = _need(task, "algebra", model.algebras, "algebra")
            report = roundtrip_from_algebra(alg, n, max(bound, n + 2))
        else:
            alg = _need(task, "algebra", model.algebras, "algebra")
            mod = _need(task, "module", model.modules, "module")
            report = roundtrip_from_pair(certify_pair(alg, mod, n, seed),
                                         max(bound, n + 2))
    elif kind == "verify_pair_structure":
        alg = _need(task, "algebra", model.algebras, "algebra")
        report = verify_pair_structure(alg, n, max(bound, n + 2), seed)
    elif kind == "verify_functor_identities":
        alg = _need(task, "algebra", model.algebras, "algebra")
        gen = _need(task, "generator", model.modules, "module")
        catalog = saturate_catalog(alg, seed=seed)
        report = verify_functor_identities(alg, gen, catalog, n, seed)
    elif kind == "verify_gproj_equivalence":
        alg = _need(task, "algebra", model.algebras, "algebra")
        mod = _need(task, "module", model.modules, "module")
        pair = certify_pair(alg, mod, n, seed)
        catalog = saturate_catalog(alg, seed=seed)
        report = verify_gproj_equivalence(pair, catalog, max(bound, n + 2), seed)
    elif kind == "verify_opposite_closure":
        alg = _need(task, "algebra", model.algebras, "algebra")
        mod = _need(task, "module", model.modules, "module")
        report = verify_opposite_closure(certify_pair(alg, mod, n, seed), seed)
    elif kind == "verify_endoring":
        alg = _need(task, "algebra", model.algebras, "algebra")
        catalog = saturate_catalog(alg, seed=seed)
        report = verify_endoring_characterization(alg, n, catalog,
                                                  max(bound, n + 2), seed)
    elif kind == "verify_torsion_battery":
        alg = _need(task, "algebra", model.algebras, "algebra")
        catalog = saturate_catalog(alg, seed=seed)
        report = verify_torsion_battery(alg, catalog, max(bound, n + 2), seed)
    elif kind == "verify_tensor_hom":
        alg = _need(task, "algebra", model.algebras, "algebra")
        catalog = saturate_catalog(alg, seed=seed)
        report = verify_tensor_hom_identification(alg, catalog,
                                                  max(bound, n + 2), seed)
    elif kind == "verify_tensor_dynkin":
        quiver = _need(task, "quiver_of", model.quivers, "quiver")
        alg = _need(task, "selfinjective", model.algebras, "algebra")
        report = verify_tensor_dynkin(quiver, alg, bound,
                                      task.get("dim_limit", 512), seed)
    elif kind == "verify_translate_tensor_formula":
        kq = _need(task, "path_algebra", model.algebras, "algebra")
        alg = _need(task, "selfinjective", model.algebras, "algebra")
        mod = _need(task, "module", model.modules, "module")
        report = verify_translate_tensor_formula(
            kq, alg, mod, task.get("eps", 1) - 1, task.get("steps", 3),
            seed=seed)
    elif kind == "verify_tensor_duality":
        left = _need(task, "left", model.modules, "module")
        right = _need(task, "right", model.modules, "module")
        report = verify_tensor_duality(left, right, seed)
    elif kind == "verify_injective_cogenerator":
        left = _need(task, "left", model.algebras, "algebra")
        right = _need(task, "right", model.algebras, "algebra")
        report = verify_injective_cogenerator(left, right, seed)
    else:
        raise ValidationError(f"unknown task kind {kind!r}")
    return {"status": report.verdict, "payload": report.to_dict()}


def run(model: ModelFile, options) -> RunResult:
    """Execute the model's tasks in order (optionally filtered), recording
    one entry per task."""
    result = RunResult()
    for index, task in enumerate(model.tasks):
        if options.task_filter is not None and \
                task.get("task") != options.task_filter and \
                str(index) != options.task_filter:
            continue
        entry = {"index": index, "task": task.get("task")}
        try:
            entry.update(_run_task(model, task, options))
        except GuardError as exc:
            entry.update({"status": "guard-error", "error": str(exc)})
            result.tasks.append(entry)
            result.exit_status = EXIT_GUARD_VIOLATION
            return result
        except (ValidationError, ContractViolation, NonAdmissibleError,
                SplitRequiredError) as exc:
            entry.update({"status": "input-error", "error": str(exc)})
            result.tasks.append(entry)
            result.exit_status = EXIT_INPUT_ERROR
            return result
        except HypothesisError as exc:
            entry.update({"status": "skipped", "error": str(exc)})
        result.tasks.append(entry)
        if entry["status"] == "fail":
            result.exit_status = EXIT_VERIFICATION_FAILED
            if options.fail_fast:
                return result
    return result


@dataclass
class Options:
    bound: int = 25
    seed: int = DEFAULT_SEED
    fail_fast: bool = False
    task_filter: str | None = None


def _render(result: RunResult, stream):
    for entry in result.tasks:
        status = entry["status"].upper()
        line = f"[{status:7s}] task {entry['index']}: {entry['task']}"
        payload = entry.get("payload")
        if isinstance(payload, dict) and "statement" in payload:
            line += f" -- {payload['statement']}"
        if "error" in entry:
            line += f" ({entry['error']})"
        print(line, file=stream)
    print(f"exit status: {result.exit_status}", file=stream)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fdalg",
        description="batch verifier for finite-dimensional algebra models",
    )
    parser.add_argument("--model", required=True, help="path to a JSON model file")
    parser.add_argument("--prime", type=int, default=None,
                        help="override the model's prime")
    parser.add_argument("--bound", type=int, default=25,
                        help="step bound for orbits and resolutions")
    parser.add_argument("--seed", default=hex(DEFAULT_SEED),
                        help="hex seed for randomized searches")
    parser.add_argument("--fail-fast", action="store_true")
    parser.add_argument("--report", default=None,
                        help="write the machine-readable report here")
    parser.add_argument("--task", default=None,
                        help="run only tasks with this name or index")
    args = parser.parse_args(argv)
    try:
        seed = int(args.seed, 16)
    except ValueError:
        print(f"error: seed {args.seed!r} is not hexadecimal", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        model = load(args.model, prime_override=args.prime)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except GuardError as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return EXIT_GUARD_VIOLATION
    options = Options(bound=args.bound, seed=seed, fail_fast=args.fail_fast,
                      task_filter=args.task)
    try:
        result = run(model, options)
    except FdalgError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_GUARD_VIOLATION
    _render(result, sys.stdout)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump({"model": model.path, "prime": model.prime,
                       "seed": hex(options.seed),
                       **result.to_dict()}, fh, indent=2, sort_keys=True)
    return result.exit_status


if __name__ == "__main__":
    sys.exit(main())
