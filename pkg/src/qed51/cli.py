"""Command-line surface: every computation as tables/values with unit
conversion, constants configuration, and machine-readable output.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 numeric failure.
stdout carries data; stderr carries diagnostics.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import dirac, hydrogen, processes, propagators, radiative, spinors, wick
from .constants import RunConfig, get_profile
from .errors import DomainError, NumericError, QedError
from .kinematics import FourVector


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


class Table:
    def __init__(self, title, columns, rows, meta=None):
        self.title = title
        self.columns = columns
        self.rows = [[_plain(c) for c in row] for row in rows]
        self.meta = meta or {}


def _plain(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, float) and value == int(value) and abs(value) < 1e15:
        return value
    return value


def _fmt_text(value):
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def emit(table: Table, config: RunConfig, stream=None) -> None:
    stream = stream or sys.stdout
    if config.output_format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([repr(c) if isinstance(c, float) else c for c in row])
        return
    if config.output_format == "json":
        doc = {
            "title": table.title,
            "config": {"constants": config.constants.name,
                       "alpha": config.alpha, "units": config.units},
            "columns": list(table.columns),
            "rows": table.rows,
            "meta": table.meta,
        }
        json.dump(doc, stream, indent=2)
        stream.write("\n")
        return
    stream.write(table.title + "\n")
    widths = [max(len(str(c)), *(len(_fmt_text(r[i])) for r in table.rows), 4)
              if table.rows else len(str(c))
              for i, c in enumerate(table.columns)]
    stream.write("  ".join(str(c).ljust(w) for c, w in zip(table.columns, widths)).rstrip() + "\n")
    for row in table.rows:
        stream.write("  ".join(_fmt_text(c).ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    for key, val in table.meta.items():
        stream.write(f"# {key}: {_fmt_text(val)}\n")


def _theta_grid(spec: str):
    try:
        start, end, count = spec.split(":")
        start, end, count = float(start), float(end), int(count)
    except ValueError:
        raise DomainError(f"bad grid spec {spec!r}; expected start:end:count in degrees")
    if count < 1:
        raise DomainError("grid needs at least one point")
    return np.linspace(start, end, count)


def _xsec_unit(config: RunConfig):
    if config.units == "SI":
        return "cm^2/sr", config.constants.r0_cm ** 2
    return "r0^2/sr", 1.0


def _freq_value(config: RunConfig, value_mc: float):
    if config.units == "SI":
        return "Hz", value_mc * 1e6
    return "Mc", value_mc


# ---------------------------------------------------------------------------
# Subcommand handlers.

def cmd_xsec(args, config: RunConfig) -> Table:
    unit, scale = _xsec_unit(config)
    alpha = config.alpha
    degrees = _theta_grid(args.theta_grid)
    radians = np.radians(degrees)
    if args.process == "moller":
        dist = processes.sample_distribution(
            lambda th: processes.moller_dcs(args.gamma, th, alpha), radians)
        title = f"Moller dsigma/dOmega* (gamma = {args.gamma}) [{unit}]"
        angle_col = "theta_lab_deg"
    elif args.process == "compton":
        if args.unpolarized:
            fn = lambda th: processes.kn_dcs(args.eps, th, unpolarized=True)
            label = "unpolarized"
        else:
            fn = lambda th: processes.kn_dcs(args.eps, th, phi=math.radians(args.phi))
            label = f"phi = {args.phi} deg"
        dist = processes.sample_distribution(fn, radians)
        title = f"Klein-Nishina dsigma/dOmega (eps = {args.eps}, {label}) [{unit}]"
        angle_col = "theta_deg"
    elif args.process == "mott":
        dist = processes.sample_distribution(
            lambda th: processes.mott_dcs(args.energy, th, args.Z, alpha), radians)
        title = f"Mott dsigma/dOmega (E = {args.energy} mc^2, Z = {args.Z}) [{unit}]"
        angle_col = "theta_deg"
    else:
        raise DomainError(f"unknown process {args.process!r}")
    rows = [[deg, val * scale] for deg, val in zip(degrees, dist.value)]
    return Table(title, [angle_col, f"dcs[{unit}]"], rows)


def cmd_annihilate(args, config: RunConfig) -> Table:
    alpha = config.alpha
    if args.which == "positronium":
        tau = processes.positronium_lifetime(config.constants)
        return Table("Positronium 1s singlet two-quantum decay",
                     ["quantity", "value", "unit"],
                     [["lifetime", tau, "s"],
                      ["rate", 1.0 / tau, "1/s"],
                      ["triplet_2gamma", 0.0, "(forbidden)"]])
    rate = processes.annihilation_rate(args.rho, alpha)
    sigma = processes.slow_annihilation_cross_section(args.v) if args.v else None
    rows = [["rate", rate.rate, "mc^2/hbar"], ["lifetime", rate.lifetime, "hbar/mc^2"]]
    if sigma is not None:
        unit, scale = _xsec_unit(config)
        rows.append([f"sigma(v={args.v})", sigma * scale, unit.replace("/sr", "")])
    return Table(f"Singlet annihilation (rho = {args.rho})",
                 ["quantity", "value", "unit"], rows)


def cmd_hydrogen(args, config: RunConfig) -> Table:
    alpha = config.alpha
    if args.which == "levels":
        e_unit, e_scale = ("MeV", config.constants.mc2_mev) \
            if config.units == "MeV" else ("mc^2", 1.0)
        rows = []
        for big_n, n, k, j, label, energy in hydrogen.level_table(args.max_N, alpha):
            row = [label, big_n, n, k, j, (energy - 1.0) * e_scale]
            if args.expand:
                row.append((hydrogen.fine_structure_expansion(big_n, k, alpha) - 1.0)
                           * e_scale)
            rows.append(row)
        cols = ["state", "N", "n", "k", "j", f"E-mc2 [{e_unit}]"]
        if args.expand:
            cols.append(f"series [{e_unit}]")
        return Table(f"Dirac-Coulomb levels (alpha = {alpha})", cols, rows)
    energy = hydrogen.landau_levels(args.B, args.pz, args.M)
    return Table("Uniform-magnetic-field level",
                 ["B [crit]", "p_z [mc]", "M", "E [mc^2]"],
                 [[args.B, args.pz, args.M, energy]])


def _strip_unit(text: str, *suffixes: str) -> float:
    for s in suffixes:
        if text.lower().endswith(s.lower()):
            return float(text[: -len(s)])
    return float(text)


def cmd_o16(args, config: RunConfig) -> Table:
    delta_e = _strip_unit(args.deltaE, "mev")
    r0 = _strip_unit(args.r0, "cm")
    rows = [["lifetime (rounded chain)", processes.o16_lifetime(delta_e, r0, args.Z, "rounded"), "s"],
            ["lifetime (exact inputs)", processes.o16_lifetime(delta_e, r0, args.Z, "exact"), "s"],
            ["total rate", processes.o16_total_rate(delta_e, r0, args.Z), "1/s"]]
    table = Table(f"Monopole pair emission (dE = {delta_e} MeV, r0 = {r0} cm, Z = {args.Z})",
                  ["quantity", "value", "unit"], rows)
    if args.spectrum:
        de_nat = delta_e / 0.511
        grid = np.linspace(0.0, de_nat, 13)[1:-1]
        spec_rows = [[e1, processes.o16_pair_spectrum(e1, math.pi / 3.0, de_nat)]
                     for e1 in grid]
        table = Table("Pair spectrum shape at theta = 60 deg (E1 in mc^2, unnormalized)",
                      ["E1", "w"], spec_rows, meta={"deltaE_mc2": de_nat})
    return table


def cmd_vacpol(args, config: RunConfig) -> Table:
    alpha = config.alpha
    q2s = [args.q2] if args.grid is None else list(_theta_grid(args.grid))
    rows = []
    for q2 in q2s:
        res = radiative.vacuum_polarization(q2, alpha)
        rows.append([q2, res.in_phase, res.out_phase, int(res.threshold_open)])
    return Table("Vacuum polarization (coefficients of the renormalized current)",
                 ["q2/mu2", "in_phase", "out_phase", "threshold_open"], rows)


def cmd_uehling(args, config: RunConfig) -> Table:
    shift = radiative.uehling_shift(args.state, config.constants)
    unit, val = _freq_value(config, shift)
    return Table("Uehling (vacuum polarization) level shift",
                 ["state", f"shift [{unit}]"], [[args.state, val]])


def cmd_lamb(args, config: RunConfig) -> Table:
    eav = _strip_unit(str(args.eav), "ry")
    budget = radiative.lamb_shift_full(eav, config.constants)
    unit, _ = _freq_value(config, 0.0)
    scale = 1e6 if unit == "Hz" else 1.0
    if args.budget:
        rows = [["bethe_term", budget.bethe_term * scale],
                ["moment_term", budget.moment_term * scale],
                ["uehling_term", budget.uehling_term * scale],
                ["total", budget.total * scale]]
        return Table(f"Lamb shift budget, 2s - 2p1/2 [{unit}] "
                     f"((E-E0)av = {eav} Ry)", ["term", f"value [{unit}]"], rows,
                     meta={"experimental_Mc": "1062 +- 5 (reported, not asserted)"})
    return Table(f"Lamb shift 2s - 2p1/2 [{unit}]",
                 ["quantity", f"value [{unit}]"],
                 [["shift", budget.total * scale]],
                 meta={"experimental_Mc": "1062 +- 5 (reported, not asserted)"})


def cmd_moment(args, config: RunConfig) -> Table:
    val = radiative.anomalous_moment(args.order, config.alpha)
    return Table("Anomalous magnetic moment dM/M",
                 ["order", "dM/M"], [[args.order, val]],
                 meta={"experimental": "0.001145 +- 0.000013"})


def _product_from_spec(spec: str):
    key = spec.lower()
    if key in ("two-vertex-current", "current^2", "current2"):
        return wick.OperatorProduct.current_product(2)
    if key in ("second-order-potential", "external-potential-2"):
        return wick.OperatorProduct.external_potential_second_order()
    if key.startswith("current^"):
        return wick.OperatorProduct.current_product(int(key.split("^")[1]))
    if key.startswith("photons:"):
        return wick.OperatorProduct.photons(int(key.split(":")[1]))
    raise DomainError(f"unknown product spec {spec!r}; use two-vertex-current, "
                      "second-order-potential, current^N, or photons:N")


def cmd_wick(args, config: RunConfig) -> Table:
    prod = _product_from_spec(args.product)
    pairings = wick.enumerate_pairings(prod)
    if args.which == "count":
        rows = [["pairings (normal constituents)", len(pairings)]]
        if args.product.lower() in ("second-order-potential", "external-potential-2"):
            rows.append(["order-2 external-potential graphs",
                         wick.count_graphs_order2_external_potential()])
        return Table(f"Factor pairings of {args.product}",
                     ["quantity", "count"], rows)
    graphs = [wick.to_graph(p, prod, s) for p, s in pairings]
    if args.dot:
        with open(args.dot, "w") as fh:
            for i, g in enumerate(graphs):
                fh.write(wick.to_dot(g, name=f"G{i + 1}") + "\n")
    rows = []
    for i, g in enumerate(graphs):
        fermions, photons = g.external_signature()
        rows.append([f"G{i + 1}", g.sign, len(g.electron_lines), len(g.photon_lines),
                     fermions, photons, ",".join(sorted(wick.classify(g)))])
    return Table(f"Graphs for {args.product}" + (f" (DOT written to {args.dot})" if args.dot else ""),
                 ["graph", "sign", "e-lines", "ph-lines", "ext-fermions",
                  "ext-photons", "class"], rows)


def cmd_verify(args, config: RunConfig) -> Table:
    checks = []
    if args.which == "tables":
        convs = [args.convention] if args.convention else [dirac.DYSON, dirac.FEYNMAN]
        for conv in convs:
            rep = dirac.verify_identity_tables(conv)
            checks.append([f"{conv} table ({len(rep.entries)} identities)",
                           rep.max_deviation, "pass" if rep.passed else "FAIL"])
    else:
        checks = _verify_all(config)
    table = Table("Verification", ["check", "max_deviation", "status"], checks)
    if any(row[2] != "pass" for row in checks):
        raise NumericError("verification failed:\n" +
                           "\n".join(str(r) for r in checks if r[2] != "pass"))
    return table


def _verify_all(config: RunConfig):
    from .kinematics import electron_from_energy
    alpha = config.alpha
    rng = np.random.default_rng(20510)
    checks = []

    def add(name, dev, tol):
        checks.append([name, float(dev), "pass" if dev < tol else "FAIL"])

    for conv in (dirac.DYSON, dirac.FEYNMAN):
        rep = dirac.verify_identity_tables(conv)
        add(f"{conv} summary table", rep.max_deviation, 1e-12)

    worst = 0.0
    for _ in range(200):
        vecs = [FourVector(*rng.uniform(-1, 1, size=4)) for _ in range(3)]
        explicit = dirac.contracted_sandwich_explicit(vecs)
        worst = max(worst, float(np.abs(explicit - dirac.contracted_sandwich(vecs)).max()))
    add("contraction identities vs explicit sum", worst, 1e-10)

    worst = 0.0
    for _ in range(100):
        vecs = [FourVector(*rng.uniform(-1, 1, size=4)) for _ in range(5)]
        mats = [dirac.slash(v) for v in vecs]
        prod = mats[0]
        for m in mats[1:]:
            prod = prod @ m
        worst = max(worst, abs(dirac.spur(prod)))
    add("spur of odd products", worst, 1e-10)

    state = electron_from_energy(1.7, (0.3, -0.5, 0.81))
    dev = float(np.abs(spinors.completeness_matrix(state) - np.eye(4)).max())
    add("spinor completeness", dev, 1e-10)

    kn_closed = processes.kn_spin_summed_ksq(1.0, math.pi / 3, *_kn_pols(), alpha)
    kn_trace = processes.kn_spin_summed_ksq(1.0, math.pi / 3, *_kn_pols(), alpha, "trace")
    add("Klein-Nishina trace oracle", abs(kn_trace / kn_closed - 1.0), 1e-8)

    m_closed = processes.moller_dcs(2.0, math.pi / 6, alpha)
    m_brute = processes.moller_dcs_brute(2.0, math.pi / 6, alpha)
    add("Moller spin-sum oracle", abs(m_brute / m_closed - 1.0), 1e-8)

    sf = spinors.mott_spin_factor(1.2, math.pi / 2)
    sfd = spinors.mott_spin_factor_direct(1.2, math.pi / 2)
    add("Mott spin-factor oracle", abs(sfd / sf - 1.0), 1e-10)

    exact = propagators.IEpsilonPolicy.exact_limit()
    add("Feynman formula 1/(ab)",
        abs(propagators.feynman_combine2(2.0, 3.0, exact) - 1.0 / 6.0), 1e-10)
    add("loop integral radial oracle",
        abs(propagators.loop_integral_I_quadrature(1.0)
            - propagators.loop_integral_I(1.0)), 1e-8)

    w1 = radiative.observable_scattering_probability(1e-6, 1e-3, 0.01, alpha)
    w2 = radiative.observable_scattering_probability(1e-4, 1e-3, 0.01, alpha)
    add("infrared split independence", abs(w1 / w2 - 1.0), 1e-12)

    sig = radiative.self_energy_z_integral(3.0)
    add("self-energy z-integral", abs(sig - (-(math.pi**2) * (6.0 * 3.0 + 5.0))), 1e-8)
    return checks


def _kn_pols():
    e = FourVector(0.0, 1.0, 0.0, 0.0)
    th = math.pi / 3
    a = math.sin(math.pi / 4)
    b = math.cos(math.pi / 4)
    ep = FourVector(a * math.cos(th), b, -a * math.sin(th), 0.0)
    return e, ep


# ---------------------------------------------------------------------------
# Parser assembly.

def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS defaults: the options live on the main parser and on every
    # subparser, and a subparser must not overwrite a value already parsed
    # at the top level.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--constants", choices=("1951", "modern"),
                        default=argparse.SUPPRESS)
    common.add_argument("--alpha", type=float, default=argparse.SUPPRESS)
    common.add_argument("--units", choices=("natural", "SI", "MeV", "megacycles"),
                        default=argparse.SUPPRESS)
    return common


def build_parser() -> _Parser:
    common = _common_options()
    parser = _Parser(prog="qed51", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(group, name, **kw):
        return group.add_parser(name, parents=[common], conflict_handler="resolve", **kw)

    xsec = add(sub, "xsec", help="differential cross sections")
    xsub = xsec.add_subparsers(dest="process", required=True)
    m = add(xsub, "moller")
    m.add_argument("--gamma", type=float, required=True)
    m.add_argument("--theta-grid", required=True)
    c = add(xsub, "compton")
    c.add_argument("--eps", type=float, required=True)
    c.add_argument("--theta-grid", required=True)
    c.add_argument("--phi", type=float, default=0.0)
    c.add_argument("--unpolarized", action="store_true")
    mo = add(xsub, "mott")
    mo.add_argument("--energy", type=float, required=True)
    mo.add_argument("--Z", type=float, default=1.0)
    mo.add_argument("--theta-grid", required=True)

    ann = add(sub, "annihilate", help="two-quantum annihilation")
    asub = ann.add_subparsers(dest="which", required=True)
    add(asub, "positronium")
    ar = add(asub, "rate")
    ar.add_argument("--rho", type=float, default=1.0)
    ar.add_argument("--v", type=float, default=None)

    hyd = add(sub, "hydrogen", help="bound-state spectra")
    hsub = hyd.add_subparsers(dest="which", required=True)
    hl = add(hsub, "levels")
    hl.add_argument("--max-N", type=int, default=3)
    hl.add_argument("--expand", action="store_true")
    hb = add(hsub, "landau")
    hb.add_argument("--B", type=float, required=True)
    hb.add_argument("--pz", type=float, default=0.0)
    hb.add_argument("--M", type=int, default=0)

    o16 = add(sub, "o16", help="monopole pair emission")
    o16.add_argument("--deltaE", default="6MeV")
    o16.add_argument("--r0", default="4e-13cm")
    o16.add_argument("--Z", type=float, default=8.0)
    o16.add_argument("--spectrum", action="store_true")

    vp = add(sub, "vacpol", help="vacuum polarization")
    vp.add_argument("--q2", type=float, default=0.0)
    vp.add_argument("--grid", default=None)

    ue = add(sub, "uehling")
    ue.add_argument("--state", default="2s")

    lamb = add(sub, "lamb", help="Lamb shift")
    lamb.add_argument("--eav", default="16.6")
    lamb.add_argument("--budget", action="store_true")

    mom = add(sub, "moment", help="anomalous magnetic moment")
    mom.add_argument("--order", type=int, default=1, choices=(1, 2))

    wk = add(sub, "wick", help="factor-pairing enumeration")
    wsub = wk.add_subparsers(dest="which", required=True)
    wc = add(wsub, "count")
    wc.add_argument("--product", required=True)
    wg = add(wsub, "graphs")
    wg.add_argument("--product", required=True)
    wg.add_argument("--dot", default=None)

    ver = add(sub, "verify", help="identity and oracle suites")
    vsub = ver.add_subparsers(dest="which", required=True)
    vt = add(vsub, "tables")
    vt.add_argument("--convention", choices=(dirac.DYSON, dirac.FEYNMAN), default=None)
    add(vsub, "all")
    return parser


HANDLERS = {
    "xsec": cmd_xsec,
    "annihilate": cmd_annihilate,
    "hydrogen": cmd_hydrogen,
    "o16": cmd_o16,
    "vacpol": cmd_vacpol,
    "uehling": cmd_uehling,
    "lamb": cmd_lamb,
    "moment": cmd_moment,
    "wick": cmd_wick,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        constants = getattr(args, "constants", None)
        profile = get_profile(constants) if constants else None
        config = RunConfig(output_format=getattr(args, "format", "text"),
                           units=getattr(args, "units", "natural"),
                           alpha_override=getattr(args, "alpha", None),
                           **({"constants": profile} if profile else {}))
        table = HANDLERS[args.command](args, config)
        emit(table, config)
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except QedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
