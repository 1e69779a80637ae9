use landau_core::gabor::{frame_scan, ScanConfig};

use super::{parse_range, Outcome};
use crate::args::{GaborCmd, ScanArgs};
use crate::error::CliError;
use crate::output::{num, Artifact, Table};

pub fn run(cmd: &GaborCmd) -> Result<Outcome, CliError> {
    match cmd {
        GaborCmd::Scan(args) => scan(args),
    }
}

fn scan(a: &ScanArgs) -> Result<Outcome, CliError> {
    let d = ScanConfig::default();
    let cfg = ScanConfig {
        modes: a.modes.unwrap_or(d.modes),
        interior: a.interior.unwrap_or(d.interior),
        radius: a.radius.unwrap_or(d.radius),
        theta_frame: a.theta_frame.unwrap_or(d.theta_frame),
        theta_def: a.theta_def.unwrap_or(d.theta_def),
    };
    let omega2 = parse_range(&a.omega2)?;
    let rows = frame_scan(a.n, &omega2, &cfg)?;
    let mut t = Table::new(&["omega2", "lower", "upper", "modes_used", "interior_modes", "lattice_radius", "classification"]);
    for r in rows {
        t.row(vec![
            num(r.omega2),
            num(r.lower),
            num(r.upper),
            r.modes_used.to_string(),
            r.interior_modes.to_string(),
            r.lattice_radius.to_string(),
            r.classification.to_string(),
        ]);
    }
    t.meta("n", a.n);
    t.meta("theta_frame", num(cfg.theta_frame));
    t.meta("theta_def", num(cfg.theta_def));
    Ok(Outcome::ok(Artifact::Table(t)))
}
