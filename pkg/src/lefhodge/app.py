"""
CLI entrypoint: weyl, coniveau, symvanish, molien, projectors, beauville, validate.

Every command prints one ReportEnvelope (JSON, or TSV with --tsv) on stdout
and returns the exit code of the error that stopped it, 0 on success.
"""
import argparse
import dataclasses
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from src.lefhodge import __version__
from src.lefhodge.config import EngineSettings, engine_settings, load_config
from src.lefhodge.errors import LefhodgeError
from src.lefhodge.logging_config import setup_logging
from src.lefhodge.report.envelope import ReportEnvelope

logger = logging.getLogger(__name__)

Payload = Tuple[Dict[str, Any], Optional[List[Dict[str, Any]]]]


def _settings(args: argparse.Namespace) -> EngineSettings:
    settings = args.settings
    if args.threads is not None:
        settings = dataclasses.replace(settings, threads=max(1, args.threads))
    return settings


def cmd_weyl(args: argparse.Namespace) -> Payload:
    from src.lefhodge.characters import dominant_weight_for, hodge_specialize, irr_character, weyl_dim
    from src.lefhodge.combinat import Partition
    from src.lefhodge.data.schema import HodgeProfile
    from src.lefhodge.weyl import StandardRep, decomposition_audit, hodge_profile, predicted_vanishing, s_lambda_space

    settings = _settings(args)
    rep = StandardRep(args.kind, args.n)
    lam = Partition.parse(args.lam)
    space = s_lambda_space(rep, lam, settings=settings)
    profile = hodge_profile(rep, space)
    dw = dominant_weight_for(rep.kind, rep.n, lam)
    oracle_dim = weyl_dim(rep.kind, rep.n, dw) if dw is not None else 0
    oracle_profile = hodge_specialize(irr_character(rep.kind, rep.n, dw)) if dw is not None else HodgeProfile()
    result: Dict[str, Any] = {
        "group": rep.name,
        "lambda": str(lam),
        "dim": space.dim,
        "profile": profile.to_dict(),
        "dominant_weight": str(dw) if dw is not None else None,
        "oracle_dim": oracle_dim,
        "oracle_profile": oracle_profile.to_dict(),
        "predicted_vanishing": predicted_vanishing(rep.kind, rep.n, lam),
        "agree": space.dim == oracle_dim and profile == oracle_profile,
    }
    if args.audit:
        result["audit"] = decomposition_audit(rep, lam.size, settings=settings).to_dict()
    rows = [{"p_minus_q": k, "dim": v, "oracle_dim": oracle_profile[k]} for k, v in sorted(profile.dims, reverse=True)]
    return result, rows


def cmd_coniveau(args: argparse.Namespace) -> Payload:
    from src.lefhodge.io.descriptor_loader import load_descriptor
    from src.lefhodge.lefschetz import coniveau_report, hodge_symmetry_audit

    settings = _settings(args)
    desc = load_descriptor(args.descriptor)
    cert = coniveau_report(desc, args.m, args.k, settings=settings)
    result = cert.to_dict()
    result["descriptor"] = desc.to_dict()
    if args.audit:
        result["hodge_symmetric"] = hodge_symmetry_audit(desc, args.m, args.k, settings=settings)
    return result, cert.rows()


def cmd_symvanish(args: argparse.Namespace) -> Payload:
    from src.lefhodge.hodge import first_vanishing_power, sym_vanishing_check, vanishing_threshold

    threshold = vanishing_threshold(args.g, args.i, args.depth)
    n = args.N if args.N is not None else threshold + 1
    vanishes = sym_vanishing_check(args.g, args.i, n, depth=args.depth)
    result = {
        "g": args.g,
        "i": args.i,
        "N": n,
        "depth": args.depth,
        "threshold": threshold,
        "vanishes": vanishes,
        "verdict": "pass" if vanishes or n <= threshold else "fail",
        "first_vanishing_power": first_vanishing_power(args.g, args.i, n, depth=args.depth),
    }
    return result, None


def cmd_molien(args: argparse.Namespace) -> Payload:
    from src.lefhodge.hodge import molien_holomorphic_invariants

    series = molien_holomorphic_invariants(args.g, args.n, settings=_settings(args))
    result = series.to_dict()
    result["odd_coefficients_vanish"] = series.odd_coefficients_vanish()
    return result, [{"k": k, "dim": c} for k, c in enumerate(series.coeffs)]


def cmd_projectors(args: argparse.Namespace) -> Payload:
    from src.lefhodge.hodge import kleiman_projectors, primitive_dim

    family = kleiman_projectors(args.g, settings=_settings(args))
    checks = family.audit()
    ranks = family.ranks()
    result = family.to_dict()
    result.update(checks)
    result["passed"] = all(checks.values()) and all(
        v == primitive_dim(args.g, k - 2 * r) for (k, r), v in ranks.items())
    rows = [{"k": k, "r": r, "rank": v, "primitive_dim": primitive_dim(args.g, k - 2 * r)}
            for (k, r), v in ranks.items()]
    return result, rows


def cmd_beauville(args: argparse.Namespace) -> Payload:
    from src.lefhodge.hodge import beauville_weight

    return beauville_weight(args.i, args.j, args.g).to_dict(), None


def cmd_validate(args: argparse.Namespace) -> Payload:
    from src.lefhodge.io.descriptor_loader import load_descriptor
    from src.lefhodge.lefschetz import lefschetz_group

    desc = load_descriptor(args.descriptor)
    group = lefschetz_group(desc)
    return {"valid": True, "violations": [], "descriptor": desc.to_dict(), "group": group.to_dict()}, \
        [b.to_dict() for b in group.blocks]


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"func", "settings", "config", "tsv", "log_level", "threads", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lefhodge", allow_abbrev=False,
                                     description="Weyl construction, Hodge level and coniveau engine")
    parser.add_argument("--config", "-c", default=None, help="Path to YAML config")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (overrides engine.threads)")
    parser.add_argument("--tsv", action="store_true", help="Render the tabular payload as TSV")
    parser.add_argument("--log-level", default=None, help="Override logging.level")
    sub = parser.add_subparsers(dest="command", required=True)

    weyl_p = sub.add_parser("weyl", help="Build S_<λ>V for Sp_2n / O_2n and compare with characters")
    weyl_p.add_argument("--kind", required=True, help="sp or o")
    weyl_p.add_argument("--n", type=int, required=True)
    weyl_p.add_argument("--lambda", dest="lam", required=True, help="Partition, e.g. 2,1")
    weyl_p.add_argument("--audit", action="store_true", help="Also run the traceless decomposition audit")
    weyl_p.set_defaults(func=cmd_weyl)

    con_p = sub.add_parser("coniveau", help="Coniveau certificate for H^k(A^m)")
    con_p.add_argument("--descriptor", required=True, help="Descriptor JSON file")
    con_p.add_argument("--m", type=int, default=1)
    con_p.add_argument("--k", type=int, required=True)
    con_p.add_argument("--audit", action="store_true", help="Also check numerical Hodge symmetry")
    con_p.set_defaults(func=cmd_coniveau)

    sym_p = sub.add_parser("symvanish", help="Vanishing of the (.,0) row of Sym^N h^{2g-i}(A)")
    sym_p.add_argument("--g", type=int, required=True)
    sym_p.add_argument("--i", type=int, required=True)
    sym_p.add_argument("--N", type=int, default=None, help="Defaults to the threshold + 1")
    sym_p.add_argument("--depth", type=int, default=0, help="Check rows q <= depth")
    sym_p.set_defaults(func=cmd_symvanish)

    mol_p = sub.add_parser("molien", help="Invariant holomorphic forms on A^{n+1}_0 / S_{n+1}")
    mol_p.add_argument("--g", type=int, required=True)
    mol_p.add_argument("--n", type=int, required=True)
    mol_p.set_defaults(func=cmd_molien)

    proj_p = sub.add_parser("projectors", help="Kleiman projector family and its checks")
    proj_p.add_argument("--g", type=int, required=True)
    proj_p.set_defaults(func=cmd_projectors)

    beau_p = sub.add_parser("beauville", help="Eigenvalue exponents on CH^i(A)_(j)")
    beau_p.add_argument("--g", type=int, required=True)
    beau_p.add_argument("--i", type=int, required=True)
    beau_p.add_argument("--j", type=int, required=True)
    beau_p.set_defaults(func=cmd_beauville)

    val_p = sub.add_parser("validate", help="Check a descriptor against the Albert restrictions")
    val_p.add_argument("--descriptor", required=True, help="Descriptor JSON file")
    val_p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = load_config(args.config)
    setup_logging(cfg, level_override=args.log_level)
    args.settings = engine_settings(cfg)
    version = str((cfg.get("report") or {}).get("version", __version__))
    func: Callable[[argparse.Namespace], Payload] = args.func
    inputs = _inputs(args)
    try:
        result, rows = func(args)
        env = ReportEnvelope(args.command, inputs, result=result, version=version, rows=rows)
        code = 0
    except LefhodgeError as e:
        logger.info("%s stopped: [%s] %s", args.command, e.rule, e.message)
        env = ReportEnvelope.from_error(args.command, inputs, e, version=version)
        code = e.exit_code
    sys.stdout.write(env.to_tsv() if args.tsv and env.status == "ok" else env.to_json() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
