use landau_core::fuchsian::{
    check_corollary1, check_modular_group, check_theorem2, delta_cusp_form, dim_hol, eisenstein, fundamental_area,
    incompleteness_witness, modular_orbit, orbit, poincare_zero_count_exact, Eisenstein, GroupKind, GroupSignature,
    WitnessConfig,
};
use landau_core::hyperbolic::HyperLevelSpec;

use super::{parse_point, Outcome};
use crate::args::{FormName, FuchsianCmd};
use crate::config::RunConfig;
use crate::error::{CliError, EXIT_CHECK_FAILED};
use crate::output::{num, Artifact, Table};

fn signature(s: &str) -> Result<GroupSignature, CliError> {
    Ok(s.parse::<GroupSignature>()?)
}

fn group(s: &str) -> Result<GroupKind, CliError> {
    if s == "modular" {
        return Ok(GroupKind::Modular);
    }
    s.strip_prefix("gamma:")
        .and_then(|n| n.parse::<u32>().ok())
        .filter(|&n| n >= 1)
        .map(GroupKind::Congruence)
        .ok_or_else(|| CliError::usage(format!("expected modular or gamma:N, got {s:?}")))
}

pub fn run(cmd: &FuchsianCmd, cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cmd {
        FuchsianCmd::Area { signature: s } => {
            let sig = signature(s)?;
            let area = fundamental_area(&sig)?;
            let mut t = Table::new(&["area", "value"]);
            t.row(vec![area.to_string(), num(area.value())]);
            t.meta("signature", sig);
            Ok(Outcome::ok(Artifact::Table(t)))
        }
        FuchsianCmd::Dim { signature: s, m } => {
            let sig = signature(s)?;
            fundamental_area(&sig)?;
            let mut t = Table::new(&["m", "dim"]);
            t.row(vec![m.to_string(), dim_hol(*m, &sig).to_string()]);
            t.meta("signature", sig);
            Ok(Outcome::ok(Artifact::Table(t)))
        }
        FuchsianCmd::Zeros { signature: s, m } => {
            let sig = signature(s)?;
            let count = poincare_zero_count_exact(*m, &sig)?;
            let mut t = Table::new(&["m", "zeros"]);
            t.row(vec![m.to_string(), count.to_string()]);
            t.meta("signature", sig);
            Ok(Outcome::ok(Artifact::Table(t)))
        }
        FuchsianCmd::Orbit { group: g, seed, words } => {
            let seed = parse_point(seed)?;
            let mut t = Table::new(&["x", "y", "word"]);
            for p in orbit(group(g)?, seed, *words) {
                t.row(vec![num(p.point.x), num(p.point.y), p.word]);
            }
            t.meta("group", g);
            t.meta("seed", seed);
            t.meta("max_word_length", words);
            Ok(Outcome::ok(Artifact::Table(t)))
        }
        FuchsianCmd::Bounds { b, n, m0, signature: s } => {
            let spec = HyperLevelSpec::new(*b, *n)?;
            let report = match (m0, s) {
                (Some(m0), _) => check_theorem2(spec, *m0)?,
                (None, Some(s)) => check_corollary1(spec, &signature(s)?)?,
                (None, None) => check_modular_group(spec)?,
            };
            Ok(Outcome::ok(Artifact::document(&report)?))
        }
        FuchsianCmd::Witness { b, n, form, zeta0, words, truncation } => {
            let spec = HyperLevelSpec::new(*b, *n)?;
            let f = match form {
                FormName::E4 => eisenstein(Eisenstein::E4, *truncation)?,
                FormName::E6 => eisenstein(Eisenstein::E6, *truncation)?,
                FormName::Delta => delta_cusp_form(*truncation)?,
            };
            let zeta0 = parse_point(zeta0)?;
            let d = WitnessConfig::default();
            let config = WitnessConfig {
                max_word_length: words.unwrap_or(d.max_word_length),
                tolerance: cfg.tolerance("witness"),
                invariance_tolerance: cfg.tolerance("invariance"),
                ..d
            };
            let points = modular_orbit(zeta0, config.max_word_length);
            let report = incompleteness_witness(spec, &f, zeta0, &points, &config)?;
            let code = if report.passed { 0 } else { EXIT_CHECK_FAILED };
            Ok(Outcome { artifact: Artifact::document(&report)?, code })
        }
    }
}
