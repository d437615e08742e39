mod args;
mod report;

use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use ellfm_core::rational::render;
use ellfm_core::{
    destabilizer_scan, fm_inverse_ch, fm_transform_ch, remark, slope, threshold_b0, wit1_transform_ch,
    CandidateBox, CoverClass, Polarization, SEquivalenceClass, Side, SurfaceGeometry,
};

use args::{parse_part, parse_rational, Cli, Command, ParseFailure, PolarizationSpec};
use report::{candidate_json, divisor_json, Report};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

enum CliError {
    Parse(ParseFailure),
    Domain(ellfm_core::Error),
    Usage(String),
    /// Verification ran but did not pass; carries the rendered report.
    Failed(String),
}

impl From<ParseFailure> for CliError {
    fn from(e: ParseFailure) -> Self {
        CliError::Parse(e)
    }
}

impl From<ellfm_core::Error> for CliError {
    fn from(e: ellfm_core::Error) -> Self {
        CliError::Domain(e)
    }
}

fn polarization(spec: &PolarizationSpec) -> Result<Polarization, CliError> {
    let a = parse_rational("--a", &spec.a)?;
    let b = parse_rational("--b", &spec.b)?;
    Ok(Polarization::new(a, b)?)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let geo = SurfaceGeometry::new(cli.genus, cli.e);
    let mut rep = Report::new(geo);
    match &cli.command {
        Command::Transform { inverse, wit1, chern } => {
            let default_side = if *inverse { Side::Xhat } else { Side::X };
            let ch = chern.to_chern(default_side)?;
            rep.chern_in("input", &ch);
            let (key, out) = if *inverse {
                ("inverse", fm_inverse_ch(&geo, &ch)?)
            } else if *wit1 {
                ("wit1", wit1_transform_ch(&geo, &ch)?)
            } else {
                ("transform", fm_transform_ch(&geo, &ch)?)
            };
            rep.chern_out(key, &out);
            if !*wit1 {
                rep.diagnostic("alternating sum ch(S^0) - ch(S^1)");
            }
        }
        Command::Cover { n, k, r } => {
            let r = parse_rational("--r", r)?;
            let cover = CoverClass::new(geo, *n, *k)?;
            rep.input("cover", cover.to_string(), divisor_json(&cover.class()))
                .input("r", render(&r), json!(render(&r)));
            let inv = cover.invariants();
            rep.rational_out("chi", &inv.chi).rational_out("p", &inv.p).rational_out("ell", &inv.ell);
            let on_cover = cover.cover_sheaf_ch_on_cover_side(&r);
            let surface = cover.cover_sheaf_to_surface_ch(&r);
            rep.chern_out("ch_on_cover_side", &on_cover).chern_out("surface_ch", &surface);
            let simpson = cover.degree_on_cover(&surface)?;
            rep.rational_out("rank_on_cover", &simpson.rank_on_cover)
                .rational_out("degree_on_cover", &simpson.degree_on_cover)
                .rational_out("slope", &simpson.slope());
        }
        Command::Slope { chern, pol } => {
            let ch = chern.to_chern(Side::X)?;
            let pol = polarization(pol)?;
            rep.chern_in("input", &ch)
                .input("polarization", pol.class().to_string(), divisor_json(&pol.class()));
            rep.rational_out("slope", &slope(&geo, &ch, &pol)?);
        }
        Command::Threshold { chern, a, bound } => {
            let ch = chern.to_chern(Side::X)?;
            let a = parse_rational("--a", a)?;
            let bounds = CandidateBox::symmetric(*bound, *bound);
            rep.chern_in("input", &ch).input("a", render(&a), json!(render(&a))).input(
                "box",
                bounds.to_string(),
                json!({ "c": bounds.c_range(), "d": bounds.d_range() }),
            );
            let t = threshold_b0(&geo, &ch, &a, &bounds)?;
            rep.rational_out("b0", &t.b0);
            match &t.binding {
                Some(c) => rep.output("binding", c.to_string(), candidate_json(c)),
                None => rep.output("binding", "none", Value::Null),
            };
            match &t.rho_used {
                Some(r) => rep.rational_out("rho", r),
                None => rep.output("rho", "none", Value::Null),
            };
            let indep: Vec<_> = t.b_independent.iter().map(candidate_json).collect();
            let text = if t.b_independent.is_empty() {
                "none".to_owned()
            } else {
                t.b_independent.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            };
            rep.output("b_independent", text, Value::Array(indep));
            rep.diagnostic("b0 is exact over the box and a lower bound for the sheaf's threshold");
        }
        Command::Scan { chern, pol, bound } => {
            let ch = chern.to_chern(Side::X)?;
            let pol = polarization(pol)?;
            let bounds = CandidateBox::symmetric(*bound, *bound);
            rep.chern_in("input", &ch)
                .input("polarization", pol.class().to_string(), divisor_json(&pol.class()))
                .input("box", bounds.to_string(), json!({ "c": bounds.c_range(), "d": bounds.d_range() }));
            let hits = destabilizer_scan(&geo, &ch, &pol, &bounds)?;
            rep.output("count", hits.len().to_string(), json!(hits.len()));
            let text: Vec<_> = hits.iter().map(|h| format!("{} margin {}", h.candidate, render(&h.margin))).collect();
            let list: Vec<_> = hits
                .iter()
                .map(|h| json!({ "candidate": candidate_json(&h.candidate), "margin": render(&h.margin) }))
                .collect();
            rep.output("destabilizers", if text.is_empty() { "none".to_owned() } else { text.join("; ") }, Value::Array(list));
        }
        Command::Fitting { parts } => {
            let parsed = parts.iter().map(|p| parse_part(p)).collect::<Result<Vec<_>, _>>()?;
            let cls = SEquivalenceClass::new(parsed)?;
            let fit = cls.fitting_cycle();
            let point = cls.sym_point();
            rep.input("parts", parts.join(" "), json!(parts));
            let cycle_text: Vec<_> = fit.cycle.iter().map(|(p, m)| format!("m_{p}^{m}")).collect();
            let cycle_json: Vec<_> = fit.cycle.iter().map(|(p, m)| json!({ "point": p.0, "exponent": m })).collect();
            rep.output("rank", cls.rank().to_string(), json!(cls.rank()))
                .output("fitting_ideal", cycle_text.join(" "), Value::Array(cycle_json))
                .output("length", fit.length.to_string(), json!(fit.length))
                .output("sym_point", point.to_string(), json!(point.to_string()));
            if fit.length > cls.rank() {
                rep.diagnostic(format!(
                    "length exceeds rank: multiplicity {} at the singular point",
                    cls.singular_multiplicity()
                ));
            }
        }
        Command::VerifyRemark => {
            if cli.genus != 0 {
                return Err(CliError::Usage(format!("verify-remark needs --genus 0, got {}", cli.genus)));
            }
            let r = remark::verify(cli.e)?;
            rep.chern_out("line_bundle_ch", &r.line_bundle_ch)
                .chern_out("bundle", &r.bundle)
                .chern_out("bundle_via_transform", &r.bundle_via_transform)
                .rational_out("line_slope", &r.line_slope)
                .rational_out("line_slope_hilbert", &r.line_slope_via_hilbert)
                .rational_out("sub_slope", &r.sub_slope)
                .rational_out("sub_slope_hilbert", &r.sub_slope_via_hilbert);
            let count = r.destabilized_at.len();
            rep.output(
                "destabilized_by_structure_sheaf",
                format!("{count} of {} sampled polarizations", r.sampled),
                json!({ "destabilized": count, "sampled": r.sampled }),
            );
            if r.on_stable_boundary() {
                rep.diagnostic("stable boundary: no strict destabilizer");
            }
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            rep.output("verdict", verdict, json!(verdict));
            if !r.passed() {
                let mut diff = Vec::new();
                for (what, want, got) in [
                    ("line slope", r.expected_line_slope(), &r.line_slope),
                    ("line slope (Hilbert)", r.expected_line_slope(), &r.line_slope_via_hilbert),
                    ("sub slope", r.expected_sub_slope(), &r.sub_slope),
                    ("sub slope (Hilbert)", r.expected_sub_slope(), &r.sub_slope_via_hilbert),
                ] {
                    if &want != got {
                        diff.push(format!("{what}: expected {}, computed {}", render(&want), render(got)));
                    }
                }
                if r.bundle != r.bundle_via_transform {
                    diff.push(format!("bundle: expected {}, computed {}", r.bundle, r.bundle_via_transform));
                }
                if r.destabilized() != Some(r.e > 0) {
                    diff.push(format!("destabilized: expected {}, computed {count} of {}", r.e > 0, r.sampled));
                }
                for d in diff {
                    rep.diagnostic(d);
                }
                return Err(CliError::Failed(rep.render(cli.format)));
            }
        }
        Command::Todd => {
            for (key, side) in [("todd_X", Side::X), ("todd_Xhat", Side::Xhat)] {
                let t = geo.todd_relative(side);
                rep.output(
                    key,
                    t.to_string(),
                    json!({ "deg0": render(&t.deg0), "deg2": divisor_json(&t.deg2), "deg4": render(&t.deg4) }),
                );
            }
        }
    }
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            print!("{}", rep.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(rendered)) => {
            print!("{rendered}");
            ExitCode::from(EXIT_FAIL)
        }
        Err(CliError::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
