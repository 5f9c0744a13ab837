"""Command-line front end.

    salemcheeger salem check <coeffs>
    salemcheeger salem enumerate --half-degree n --height H [--jobs k]
    salemcheeger salem geodesic <coeffs> --bits b
    salemcheeger arith plan <coeffs> [--prime-bound N]
    salemcheeger arith inert <coeffs> --bound N
    salemcheeger spec report <graph>
    salemcheeger spec cover <graph> [--verify]
    salemcheeger spec experiment two-cover --vertices N --instances K --seed S --out results.csv

The ``salem``, ``arith`` and ``spec`` console scripts are the same groups
without the leading word. Coefficients are comma separated, constant term
first; put ``--`` before a list that starts with a minus sign.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import arith, salem
from .experiments import EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS, KINDS, ConfigError, ExperimentConfig, run
from .intpoly import IntPolynomial, PolynomialError
from .spectral.cover import cover_spectrum, deck_involution, double_cover, union_spectrum
from .spectral.graph import GraphError, normalized_laplacian
from .spectral.io import read_graph
from .spectral.proofchain import CoverSpectrumNotLower, chain_ok, proof_chain_check, verify_two_cover_bound
from .spectral.report import spectral_report


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "csv" and isinstance(obj, list) and obj and isinstance(obj[0], dict):
        w = csv.DictWriter(sys.stdout, fieldnames=list(obj[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(obj)
        return
    print(json.dumps(obj, indent=2, sort_keys=True))


def _poly(text: str) -> IntPolynomial:
    try:
        return IntPolynomial.parse(text)
    except PolynomialError as exc:
        raise UsageError(str(exc)) from exc


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")


# --- salem ------------------------------------------------------------------------


def _salem_check(a) -> int:
    p = _poly(a.coeffs)
    try:
        cert = salem.certify_salem(p)
    except salem.NotSalem as exc:
        _emit({"p": p.to_text(), "salem": False, "reason": exc.reason.value})
        return 1
    _emit({"salem": True, **salem.certificate_to_json(cert)})
    return 0


def _salem_enumerate(a) -> int:
    certs = salem.enumerate_salem(a.half_degree, a.height, jobs=a.jobs)
    _emit([salem.certificate_to_json(c) for c in certs], a.format)
    return EXIT_OK


def _salem_geodesic(a) -> int:
    p = _poly(a.coeffs)
    try:
        cert = salem.certify_salem(p)
    except salem.NotSalem as exc:
        _emit({"p": p.to_text(), "salem": False, "reason": exc.reason.value})
        return 1
    g = salem.geodesic_length(cert, a.bits)
    _emit(
        {
            "p": p.to_text(),
            "bits": a.bits,
            "geodesic_lo": salem.dyadic_to_decimal(g.lo),
            "geodesic_hi": salem.dyadic_to_decimal(g.hi),
        }
    )
    return EXIT_OK


def _add_salem(sub) -> None:
    c = sub.add_parser("check", help="certify a Salem minimal polynomial")
    c.add_argument("coeffs")
    _common(c)
    c.set_defaults(func=_salem_check)
    e = sub.add_parser("enumerate", help="all Salem numbers with bounded trace polynomial")
    e.add_argument("--half-degree", type=int, required=True)
    e.add_argument("--height", type=int, required=True)
    _common(e)
    e.set_defaults(func=_salem_enumerate)
    g = sub.add_parser("geodesic", help="enclosure of 2 log tau")
    g.add_argument("coeffs")
    g.add_argument("--bits", type=int, default=salem.DEFAULT_BITS)
    _common(g)
    g.set_defaults(func=_salem_geodesic)


# --- arith ------------------------------------------------------------------------


def _cert_or_fail(text: str):
    p = _poly(text)
    try:
        return salem.certify_salem(p), None
    except salem.NotSalem as exc:
        _emit({"p": p.to_text(), "salem": False, "reason": exc.reason.value})
        return None, 1


def _arith_plan(a) -> int:
    cert, code = _cert_or_fail(a.coeffs)
    if cert is None:
        return code
    try:
        plan = arith.ramification_plan(cert, a.prime_bound)
    except salem.NotFound as exc:
        _emit({"error": "NotFound", "message": str(exc)})
        return 1
    tf = arith.trace_field(cert)
    _emit({"q": cert.q.to_text(), "field_degree": str(tf.degree), "disc_q": str(tf.disc_q), **plan.to_json()})
    return EXIT_OK


def _arith_inert(a) -> int:
    cert, code = _cert_or_fail(a.coeffs)
    if cert is None:
        return code
    tf = arith.trace_field(cert)
    if tf.degree % 2:
        _emit({"error": "OddDegree", "message": "no finite ramified prime is needed for odd degree"})
        return 1
    try:
        p, r = arith.find_inert_prime(tf, a.bound)
    except salem.NotFound as exc:
        _emit({"error": "NotFound", "message": str(exc)})
        return 1
    _emit({"p": str(p), "a": str(r)})
    return EXIT_OK


def _add_arith(sub) -> None:
    pl = sub.add_parser("plan", help="ramification set of the quaternion algebra")
    pl.add_argument("coeffs")
    pl.add_argument("--prime-bound", type=int, default=arith.DEFAULT_PRIME_BOUND)
    _common(pl)
    pl.set_defaults(func=_arith_plan)
    inert = sub.add_parser("inert", help="smallest inert degree-one prime")
    inert.add_argument("coeffs")
    inert.add_argument("--bound", type=int, default=arith.DEFAULT_PRIME_BOUND)
    _common(inert)
    inert.set_defaults(func=_arith_inert)


# --- spec -------------------------------------------------------------------------


def _spec_report(a) -> int:
    g, _ = read_graph(a.graph)
    _emit(spectral_report(g).to_json())
    return EXIT_OK


def _spec_cover(a) -> int:
    g, s = read_graph(a.graph)
    if s is None:
        raise UsageError("cover needs a signed graph (fourth column)")
    cover = double_cover(g, s, require_connected=False)
    union = union_spectrum(g, s)
    spec_cover = cover_spectrum(g, s)
    perm = deck_involution(g.vertex_count)
    deck = np.linalg.eigvalsh(normalized_laplacian(cover.permuted(perm)))
    out = {
        "vertices": cover.vertex_count,
        "edges": cover.edge_count,
        "connected": cover.is_connected(),
        "spectrum_union_max_err": float(np.max(np.abs(union - spec_cover))),
        "deck_invariance_max_err": float(np.max(np.abs(np.sort(deck) - spec_cover))),
    }
    code = EXIT_OK
    if a.verify:
        try:
            trace = verify_two_cover_bound(g, s)
        except CoverSpectrumNotLower as exc:
            out["vacuous"] = True
            out["message"] = str(exc)
        except GraphError as exc:
            out["error"] = type(exc).__name__
            out["message"] = str(exc)
            code = 1
        else:
            steps = proof_chain_check(trace)
            out["trace"] = trace.to_json()
            out["steps"] = [st.__dict__ for st in steps]
            out["ratio"] = trace.bound_ratio
            if not chain_ok(steps):
                code = EXIT_VIOLATIONS
    _emit(out)
    return code


def _spec_experiment(a) -> int:
    cfg = ExperimentConfig(
        kind=a.kind,
        seed=a.seed,
        out=a.out,
        jobs=a.jobs,
        vertices=a.vertices,
        min_vertices=a.min_vertices,
        instances=a.instances,
        edge_prob=a.edge_prob,
        h_exact_limit=a.h_exact_limit,
        height=a.height,
        half_degrees=tuple(a.half_degree) if a.half_degree else (2, 3),
        prime_bound=a.prime_bound,
    )
    if a.m_min is not None or a.m_max is not None:
        cfg.m_values = tuple(range(a.m_min or 4, (a.m_max or 64) + 1))
    return run(cfg)


def _add_spec(sub) -> None:
    r = sub.add_parser("report", help="lambda1, Cheeger bounds, Sobolev quotient")
    r.add_argument("graph", type=Path)
    _common(r)
    r.set_defaults(func=_spec_report)
    c = sub.add_parser("cover", help="double cover of a signed graph")
    c.add_argument("graph", type=Path)
    c.add_argument("--verify", action="store_true", help="run the two-cover inequality chain")
    _common(c)
    c.set_defaults(func=_spec_cover)
    e = sub.add_parser("experiment", help="seeded experiment suites")
    e.add_argument("kind", choices=KINDS)
    e.add_argument("--vertices", type=int, default=8)
    e.add_argument("--min-vertices", type=int, default=None)
    e.add_argument("--instances", type=int, default=100)
    e.add_argument("--edge-prob", type=float, default=0.5)
    e.add_argument("--h-exact-limit", type=int, default=12)
    e.add_argument("--m-min", type=int, default=None)
    e.add_argument("--m-max", type=int, default=None)
    e.add_argument("--half-degree", type=int, action="append")
    e.add_argument("--height", type=int, default=2)
    e.add_argument("--prime-bound", type=int, default=arith.DEFAULT_PRIME_BOUND)
    _common(e)
    e.set_defaults(func=_spec_experiment)


GROUPS = {"salem": _add_salem, "arith": _add_arith, "spec": _add_spec}


def _group_parser(name: str, prog: Optional[str] = None) -> argparse.ArgumentParser:
    p = _Parser(prog=prog or name)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    GROUPS[name](sub)
    return p


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="salemcheeger", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("-v", "--verbose", action="store_true")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)
    for name, add in GROUPS.items():
        gp = groups.add_parser(name)
        add(gp.add_subparsers(dest="command", required=True, parser_class=_Parser))
    return p


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except (UsageError, ConfigError, GraphError, PolynomialError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return _dispatch(args)


def _group_main(name: str, argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    return _dispatch(_group_parser(name).parse_args(argv))


def salem_main(argv=None) -> int:
    return _group_main("salem", argv)


def arith_main(argv=None) -> int:
    return _group_main("arith", argv)


def spec_main(argv=None) -> int:
    return _group_main("spec", argv)


if __name__ == "__main__":
    sys.exit(main())
